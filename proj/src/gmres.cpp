#include "htx/gmres.hpp"

#include <cmath>
#include <stdexcept>

namespace htx {

KrylovReport gmres_solve(const MatVec& apply, const CVector& rhs, double tol,
                         int max_iter, bool keep_basis) {
  const int dim = int(rhs.size());
  if (dim == 0) throw std::invalid_argument("gmres: empty system");
  const double bnorm = rhs.norm();
  if (bnorm == 0.0) throw std::invalid_argument("gmres: zero right-hand side");
  if (max_iter < 0 || max_iter > dim) max_iter = dim;

  KrylovReport rep;
  std::vector<CVector> V;
  V.reserve(size_t(max_iter) + 1);
  V.push_back(rhs / bnorm);

  CMatrix H = CMatrix::Zero(max_iter + 1, max_iter);
  const size_t mi = size_t(max_iter);
  std::vector<Complex> cs(mi), sn(mi);
  CVector g = CVector::Zero(max_iter + 1);
  g[0] = bnorm;

  int j = 0;
  for (; j < max_iter; ++j) {
    CVector w = apply(V[size_t(j)]);
    // modified Gram-Schmidt with one reorthogonalization pass
    for (int i = 0; i <= j; ++i) {
      Complex h = V[size_t(i)].dot(w); // conjugated dot
      w -= h * V[size_t(i)];
      H(i, j) = h;
    }
    for (int i = 0; i <= j; ++i) {
      Complex c = V[size_t(i)].dot(w);
      w -= c * V[size_t(i)];
      H(i, j) += c;
    }
    double hnext = w.norm();
    H(j + 1, j) = hnext;

    // apply the accumulated Givens rotations to the new column
    for (int i = 0; i < j; ++i) {
      Complex t = cs[size_t(i)] * H(i, j) + sn[size_t(i)] * H(i + 1, j);
      H(i + 1, j) = -std::conj(sn[size_t(i)]) * H(i, j) + std::conj(cs[size_t(i)]) * H(i + 1, j);
      H(i, j) = t;
    }
    // new rotation annihilating H(j+1, j)
    {
      Complex a = H(j, j);
      double b = hnext;
      double denom = std::sqrt(std::norm(a) + b * b);
      if (denom == 0.0) {
        cs[size_t(j)] = 1.0;
        sn[size_t(j)] = 0.0;
      } else {
        cs[size_t(j)] = std::abs(a) / denom;
        Complex phase = (std::abs(a) == 0.0) ? Complex(1.0) : a / std::abs(a);
        sn[size_t(j)] = phase * b / denom;
        H(j, j) = phase * denom;
      }
      H(j + 1, j) = 0.0;
      g[j + 1] = -std::conj(sn[size_t(j)]) * g[j];
      g[j] = cs[size_t(j)] * g[j];
    }

    double rel = std::abs(g[j + 1]) / bnorm;
    rep.residuals.push_back(rel);

    bool happy = hnext <= 1e-14 * bnorm;
    if (happy) rep.breakdown = true;
    if (rel <= tol || happy) {
      ++j;
      rep.converged = true;
      break;
    }
    V.push_back(w / hnext);
  }

  rep.iterations = j;
  // back substitution on the j x j triangular system
  CVector y = CVector::Zero(j);
  for (int i = j - 1; i >= 0; --i) {
    Complex acc = g[i];
    for (int l = i + 1; l < j; ++l) acc -= H(i, l) * y[l];
    y[i] = acc / H(i, i);
  }
  CVector x = CVector::Zero(dim);
  for (int i = 0; i < j; ++i) x += y[i] * V[size_t(i)];
  rep.solution = std::move(x);
  if (keep_basis) rep.basis = std::move(V);
  return rep;
}

} // namespace htx
