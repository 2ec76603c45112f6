#include "htx/quadrature.hpp"
#include <vector>

#include <cmath>
#include <stdexcept>

namespace htx {

LogQuadWeights log_quad_weights(int n) {
  LogQuadWeights w;
  w.n = n;
  w.r.resize(2 * n);
  for (int d = 0; d < 2 * n; ++d) {
    double td = kPi * d / n;
    double sum = 0.0;
    for (int m = n - 1; m >= 1; --m) sum += std::cos(m * td) / m;
    double sign = (d % 2 == 0) ? 1.0 : -1.0; // cos(n t_d) = cos(pi d)
    w.r[d] = -(2.0 * kPi / n) * sum - (kPi / (n * n)) * sign;
  }
  return w;
}

CVector log_quadrature(const CMatrix& K1, const CMatrix& K2, const CVector& density) {
  const int m = int(density.size());
  if (K1.rows() != m || K1.cols() != m || K2.rows() != m || K2.cols() != m)
    throw std::invalid_argument("log_quadrature: dimension mismatch");
  if (m % 2 != 0) throw std::invalid_argument("log_quadrature: node count must be even");
  const int n = m / 2;
  LogQuadWeights w = log_quad_weights(n);
  CVector out(m);
  const double trap = kPi / n;
  for (int i = 0; i < m; ++i) {
    Complex acc = 0.0;
    for (int j = 0; j < m; ++j) acc += (w(i, j) * K1(i, j) + trap * K2(i, j)) * density[j];
    out[i] = acc;
  }
  return out;
}

FourierGrid fourier_grid(int n) {
  FourierGrid g;
  g.n = n;
  const int m = 2 * n;
  g.fwd.resize(m, m);
  g.inv.resize(m, m);
  // unit roots indexed by the exactly reduced phase (mode * j) mod 2n
  std::vector<Complex> root(m);
  for (int q = 0; q < m; ++q) root[q] = std::polar(1.0, kPi * q / n);
  for (int p = 0; p < m; ++p) {
    long mode = p - n;
    for (int j = 0; j < m; ++j) {
      long q = (mode * j) % m;
      if (q < 0) q += m;
      g.inv(j, p) = root[size_t(q)];
      g.fwd(p, j) = std::conj(root[size_t(q)]) / double(m);
    }
  }
  return g;
}

CVector fourier_coeffs(const FourierGrid& grid, const CVector& values) {
  if (values.size() != grid.fwd.cols())
    throw std::invalid_argument("fourier_coeffs: dimension mismatch");
  return grid.fwd * values;
}

CVector fourier_inverse(const FourierGrid& grid, const CVector& coeffs) {
  if (coeffs.size() != grid.inv.cols())
    throw std::invalid_argument("fourier_inverse: dimension mismatch");
  return grid.inv * coeffs;
}

CMatrix multiplier_matrix(const FourierGrid& grid, const CVector& symbol) {
  if (symbol.size() != grid.fwd.rows())
    throw std::invalid_argument("multiplier_matrix: symbol size mismatch");
  return grid.inv * symbol.asDiagonal() * grid.fwd;
}

CVector hilbert_derivative(const FourierGrid& grid, const CVector& density) {
  CVector c = fourier_coeffs(grid, density);
  for (int p = 0; p < c.size(); ++p) c[p] *= -0.5 * std::abs(double(p - grid.n));
  return fourier_inverse(grid, c);
}

CMatrix hilbert_matrix(const FourierGrid& grid) {
  const int m = 2 * grid.n;
  CVector sym(m);
  for (int p = 0; p < m; ++p) sym[p] = -0.5 * std::abs(double(p - grid.n));
  return multiplier_matrix(grid, sym);
}

} // namespace htx
