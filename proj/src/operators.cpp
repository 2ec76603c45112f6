#include "htx/operators.hpp"

#include "htx/quadrature.hpp"
#include "htx/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace htx {

Wavenumber::Wavenumber(Complex k) : value(k) {
  if (k.real() < 0.0 || k.imag() < 0.0)
    throw std::invalid_argument("Wavenumber: need Re k >= 0 and Im k >= 0");
  if (k == Complex(0.0, 0.0))
    throw std::invalid_argument("Wavenumber: k = 0 is singular");
}

Complex symbol_p_s(double xi, Complex kappa1) {
  Complex s = std::sqrt(Complex(xi * xi, 0.0) - kappa1 * kappa1);
  if (s.imag() > 0.0) s = -s;
  return 0.5 / s;
}

Complex symbol_p_n(double xi, Complex kappa1) {
  Complex s = std::sqrt(Complex(xi * xi, 0.0) - kappa1 * kappa1);
  if (s.imag() > 0.0) s = -s;
  return -0.5 * s;
}

namespace {

// Shared per-pair kernel data; every boundary operator needs the same Bessel
// evaluations at k*r(i,j).
struct KernelWork {
  const NodeSet& s;
  Complex k;
  LogQuadWeights w;
  double trap;

  KernelWork(const NodeSet& nodes, Complex kk)
      : s(nodes), k(kk), w(log_quad_weights(nodes.n)), trap(kPi / nodes.n) {}
};

double log4sin2(double u) {
  double si = std::sin(0.5 * u);
  return std::log(4.0 * si * si);
}

void fill_all(const KernelWork& kw, CMatrix* S, CMatrix* D, CMatrix* Ds, CMatrix* Nm) {
  const NodeSet& s = kw.s;
  const Complex k = kw.k;
  const int m = s.size();
  const Complex k2 = k * k;

  for (int i = 0; i < m; ++i) {
    const double a = s.jac[i];
    if (S) {
      Complex diag = 0.25 * kI - kEulerGamma / (2 * kPi) -
                     std::log(k * a / 2.0) / (2 * kPi);
      (*S)(i, i) = kw.w.r[0] * (-a / (4 * kPi)) + kw.trap * diag * a;
    }
    if (D || Ds) {
      double dg = s.xpp.col(i).dot(s.normal.col(i)) / (4 * kPi * a);
      if (D) (*D)(i, i) = kw.trap * dg;
      if (Ds) (*Ds)(i, i) = kw.trap * dg;
    }
    if (Nm) {
      const double a2 = a * a;
      const double c1 = s.xp.col(i).dot(s.xpp.col(i));
      const double c2 = s.xpp.col(i).squaredNorm();
      const double c3 = s.xp.col(i).dot(s.xppp.col(i));
      Complex m1 = -k2 * a2 / (8 * kPi);
      Complex m2 = k2 * a2 * (0.125 * kI - (kEulerGamma + std::log(k * a / 2.0)) / (4 * kPi) +
                              1.0 / (8 * kPi)) +
                   (c2 / (8 * a2) + c3 / (12 * a2) - c1 * c1 / (4 * a2 * a2) - 1.0 / 24.0) / kPi;
      (*Nm)(i, i) = kw.w.r[0] * m1 + kw.trap * m2;
    }
  }

  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const Vec2 rho = s.x.col(i) - s.x.col(j);
      const double r = rho.norm();
      const auto b = specfun::bessel01(k * r);
      const double u = s.t[i] - s.t[j];
      const double L = log4sin2(u);
      const double rw = kw.w(i, j); // == (j, i): circulant, even offset

      if (S) {
        // kernel (i/4) H0(kr) |x'|, log factor -(1/(4 pi)) J0(kr) |x'|
        Complex k1_ij = -b.j0 / (4 * kPi);
        Complex k2_ij = 0.25 * kI * b.h0 - k1_ij * L;
        (*S)(i, j) = (rw * k1_ij + kw.trap * k2_ij) * s.jac[j];
        (*S)(j, i) = (rw * k1_ij + kw.trap * k2_ij) * s.jac[i];
      }
      if (D || Ds) {
        // D : (ik/4) H1(kr) (x_i - x_j).n_j / r, density-side Jacobian
        // D*: -(ik/4) H1(kr) (x_i - x_j).n_i / r
        Complex hh = 0.25 * kI * k * b.h1 / r;
        Complex jj = -k * b.j1 / (4 * kPi * r);
        if (D) {
          double dn = rho.dot(s.normal.col(j));
          Complex k1_ij = jj * dn;
          (*D)(i, j) = (rw * k1_ij + kw.trap * (hh * dn - k1_ij * L)) * s.jac[j];
          double dn_ji = -rho.dot(s.normal.col(i));
          Complex k1_ji = jj * dn_ji;
          (*D)(j, i) = (rw * k1_ji + kw.trap * (hh * dn_ji - k1_ji * L)) * s.jac[i];
        }
        if (Ds) {
          double dx = rho.dot(s.normal.col(i));
          Complex k1_ij = -jj * dx;
          (*Ds)(i, j) = (rw * k1_ij + kw.trap * (-hh * dx - k1_ij * L)) * s.jac[j];
          double dx_ji = -rho.dot(s.normal.col(j));
          Complex k1_ji = -jj * dx_ji;
          (*Ds)(j, i) = (rw * k1_ji + kw.trap * (-hh * dx_ji - k1_ji * L)) * s.jac[i];
        }
      }
      if (Nm) {
        const double q = s.xp.col(i).dot(s.xp.col(j));
        const double pi_ = rho.dot(s.xp.col(i));
        const double pj_ = rho.dot(s.xp.col(j));
        const double P = pi_ * pj_ / (r * r);
        const double si = std::sin(0.5 * u);
        Complex A = 0.25 * kI * k2 * b.h0 * q;
        Complex mg = (0.25 * kI * k2 * b.h0 - 0.5 * kI * k * b.h1 / r) * P +
                     0.25 * kI * k * b.h1 * q / r;
        Complex M = A - mg - 1.0 / (8 * kPi * si * si);
        Complex M1 = k2 * b.j0 * (P - q) / (4 * kPi) - k * b.j1 / r * P / (2 * kPi) +
                     k * b.j1 / r * q / (4 * kPi);
        Complex M2 = M - M1 * L;
        // symmetric in (i, j): P, q, r, u^2 all are
        (*Nm)(i, j) = rw * M1 + kw.trap * M2;
        (*Nm)(j, i) = (*Nm)(i, j);
      }
    }
  }

  if (Nm) {
    FourierGrid g = fourier_grid(s.n);
    CMatrix H = hilbert_matrix(g);
    *Nm += H;
    Nm->array().colwise() *= (1.0 / s.jac.array()).matrix().array();
  }
}

} // namespace

OperatorMatrix assemble_single_layer(const NodeSet& nodes, Wavenumber k) {
  KernelWork kw(nodes, k.value);
  CMatrix S(nodes.size(), nodes.size());
  fill_all(kw, &S, nullptr, nullptr, nullptr);
  return {OperatorKind::S, k.value, std::move(S)};
}

OperatorMatrix assemble_double_layer(const NodeSet& nodes, Wavenumber k) {
  KernelWork kw(nodes, k.value);
  CMatrix D(nodes.size(), nodes.size());
  fill_all(kw, nullptr, &D, nullptr, nullptr);
  return {OperatorKind::D, k.value, std::move(D)};
}

OperatorMatrix assemble_adjoint_double_layer(const NodeSet& nodes, Wavenumber k) {
  KernelWork kw(nodes, k.value);
  CMatrix Ds(nodes.size(), nodes.size());
  fill_all(kw, nullptr, nullptr, &Ds, nullptr);
  return {OperatorKind::Dstar, k.value, std::move(Ds)};
}

OperatorMatrix assemble_hypersingular(const NodeSet& nodes, Wavenumber k) {
  KernelWork kw(nodes, k.value);
  CMatrix N(nodes.size(), nodes.size());
  fill_all(kw, nullptr, nullptr, nullptr, &N);
  return {OperatorKind::N, k.value, std::move(N)};
}

OperatorFamily assemble_family(const NodeSet& nodes, Wavenumber k) {
  KernelWork kw(nodes, k.value);
  const int m = nodes.size();
  OperatorFamily f{CMatrix(m, m), CMatrix(m, m), CMatrix(m, m), CMatrix(m, m)};
  fill_all(kw, &f.S, &f.D, &f.Dstar, &f.N);
  return f;
}

OperatorMatrix assemble_sigma(const NodeSet& nodes, OperatorKind kind, Wavenumber kappa1) {
  if (kind != OperatorKind::SigmaS && kind != OperatorKind::SigmaN)
    throw std::invalid_argument("assemble_sigma: kind must be SigmaS or SigmaN");
  if (!(kappa1.value.real() > 0.0) || !(kappa1.value.imag() > 0.0))
    throw std::invalid_argument(
        "assemble_sigma: kappa1 needs strictly positive real and imaginary parts");
  FourierGrid g = fourier_grid(nodes.n);
  const int m = nodes.size();
  CVector sym(m);
  for (int p = 0; p < m; ++p) {
    double xi = double(p - nodes.n);
    sym[p] = (kind == OperatorKind::SigmaS) ? symbol_p_s(xi, kappa1.value)
                                            : symbol_p_n(xi, kappa1.value);
  }
  CMatrix M = multiplier_matrix(g, sym);
  if (kind == OperatorKind::SigmaS) {
    // input weighted by the Jacobian
    M = M * nodes.jac.cast<Complex>().asDiagonal();
  } else {
    // output scaled by 1/|x'|
    M.array().colwise() *= (1.0 / nodes.jac.array()).matrix().array();
  }
  return {kind, kappa1.value, std::move(M)};
}

double operator_difference_decay(const CMatrix& A, const CMatrix& B, int n) {
  const int m = 2 * n;
  if (A.rows() != m || B.rows() != m)
    throw std::invalid_argument("operator_difference_decay: size mismatch");
  CMatrix Dm = A - B;
  std::vector<double> lx, ly;
  for (int mode = std::max(2, n / 8); mode <= n / 2; ++mode) {
    CVector v(m);
    for (int j = 0; j < m; ++j) v[j] = std::polar(1.0, mode * kPi * j / n);
    double nrm = (Dm * v).norm() / std::sqrt(double(m));
    if (nrm <= 0) continue;
    lx.push_back(std::log(double(mode)));
    ly.push_back(std::log(nrm));
  }
  // least squares slope
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double cnt = double(lx.size());
  for (size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  return (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
}

} // namespace htx
