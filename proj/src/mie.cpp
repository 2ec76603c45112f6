#include "htx/mie.hpp"

#include "htx/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace htx {

namespace {

// J'_m and H'_m from the sequences via C'_m = C_{m-1} - (m/z) C_m
Complex deriv(const std::vector<Complex>& c, int m, Complex z) {
  if (m == 0) return -c[1];
  return c[size_t(m) - 1] - double(m) / z * c[size_t(m)];
}

} // namespace

MieSolution mie_solve(double radius, double omega, double eps1, double eps2,
                      double nu, Vec2 direction) {
  if (radius <= 0) throw std::invalid_argument("mie_solve: radius must be positive");
  MieSolution sol;
  sol.radius = radius;
  sol.k1 = omega * std::sqrt(eps1);
  sol.k2 = omega * std::sqrt(eps2);
  sol.nu = nu;
  sol.theta_d = std::atan2(direction.y(), direction.x());

  const Complex z1(sol.k1 * radius, 0.0), z2(sol.k2 * radius, 0.0);
  int M = int(std::ceil(std::abs(z2) + 8.0 * std::cbrt(std::abs(z2) + 1.0) + 12.0));

  for (int attempt = 0; attempt < 6; ++attempt) {
    auto j1s = specfun::bessel_j_seq(M + 1, z1);
    auto j2s = specfun::bessel_j_seq(M + 1, z2);
    auto h1s = specfun::hankel1_seq(M + 1, z1);

    sol.alpha.assign(size_t(M) + 1, Complex(0));
    sol.gamma.assign(size_t(M) + 1, Complex(0));
    sol.mode_condition.assign(size_t(M) + 1, 0.0);

    for (int m = 0; m <= M; ++m) {
      // unknowns (alpha_m, gamma_m):
      //   alpha H1_m(k1 R) - gamma J_m(k2 R)            = -i^m J_m(k1 R)
      //   alpha k1 H1'_m(k1 R) - gamma nu k2 J'_m(k2 R) = -i^m k1 J'_m(k1 R)
      Complex a11 = h1s[size_t(m)];
      Complex a12 = -j2s[size_t(m)];
      Complex a21 = sol.k1 * deriv(h1s, m, z1);
      Complex a22 = -nu * sol.k2 * deriv(j2s, m, z2);
      static const Complex ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      Complex im = ipow[m & 3];
      Complex b1 = -im * j1s[size_t(m)];
      Complex b2 = -im * sol.k1 * deriv(j1s, m, z1);
      // scale rows to keep the large Hankel magnitudes in check
      double s1 = std::max(std::abs(a11), std::abs(a12));
      double s2 = std::max(std::abs(a21), std::abs(a22));
      a11 /= s1; a12 /= s1; b1 /= s1;
      a21 /= s2; a22 /= s2; b2 /= s2;
      Complex det = a11 * a22 - a12 * a21;
      if (std::abs(det) == 0.0)
        throw std::runtime_error("mie_solve: singular per-mode system");
      sol.alpha[size_t(m)] = (b1 * a22 - a12 * b2) / det;
      sol.gamma[size_t(m)] = (a11 * b2 - b1 * a21) / det;
      double fro = std::sqrt(std::norm(a11) + std::norm(a12) + std::norm(a21) + std::norm(a22));
      double fro_inv = std::sqrt(std::norm(a11) + std::norm(a12) + std::norm(a21) + std::norm(a22)) /
                       std::abs(det);
      sol.mode_condition[size_t(m)] = fro * fro_inv;
    }

    // superexponential tail: extend the truncation until the last scattered
    // coefficients are negligible
    double peak = 0;
    for (Complex a : sol.alpha) peak = std::max(peak, std::abs(a));
    double tail = std::max(std::abs(sol.alpha[size_t(M)]), std::abs(sol.alpha[size_t(M) - 1]));
    if (tail <= 1e-14 * peak || M >= 450) break;
    M += 24;
  }
  sol.truncation = M;
  return sol;
}

FarField mie_far_field(const MieSolution& sol, int directions) {
  if (directions < 360)
    throw std::invalid_argument("mie_far_field: need at least 360 directions");
  FarField ff;
  ff.angles.resize(directions);
  ff.amplitude.resize(directions);
  const Complex pref = std::sqrt(2.0 / (kPi * sol.k1)) * std::exp(-0.25 * kI * kPi);
  for (int i = 0; i < directions; ++i) {
    double theta = 2.0 * kPi * i / directions;
    double phi = theta - sol.theta_d;
    Complex acc = sol.alpha[0];
    Complex mi(1.0, 0.0); // (-i)^m
    for (int m = 1; m <= sol.truncation; ++m) {
      mi *= -kI;
      acc += sol.alpha[size_t(m)] * mi * 2.0 * std::cos(m * phi);
    }
    ff.angles[i] = theta;
    ff.amplitude[i] = pref * acc;
  }
  return ff;
}

Complex mie_exterior(const MieSolution& sol, Vec2 point) {
  double rho = point.norm();
  if (rho <= sol.radius)
    throw std::invalid_argument("mie_exterior: point not outside the circle");
  double phi = std::atan2(point.y(), point.x()) - sol.theta_d;
  auto hs = specfun::hankel1_seq(sol.truncation, Complex(sol.k1 * rho, 0.0));
  Complex acc = sol.alpha[0] * hs[0];
  for (int m = 1; m <= sol.truncation; ++m)
    acc += sol.alpha[size_t(m)] * hs[size_t(m)] * 2.0 * std::cos(m * phi);
  return acc;
}

Complex mie_interior(const MieSolution& sol, Vec2 point) {
  double rho = point.norm();
  if (rho >= sol.radius)
    throw std::invalid_argument("mie_interior: point not inside the circle");
  double phi = std::atan2(point.y(), point.x()) - sol.theta_d;
  auto js = specfun::bessel_j_seq(sol.truncation, Complex(sol.k2 * rho, 0.0));
  Complex acc = sol.gamma[0] * js[0];
  for (int m = 1; m <= sol.truncation; ++m)
    acc += sol.gamma[size_t(m)] * js[size_t(m)] * 2.0 * std::cos(m * phi);
  return acc;
}

} // namespace htx
