#pragma once

#include "htx/types.hpp"

namespace htx {

// Spectrally accurate periodic quadrature on the 2n equispaced nodes
// t_j = pi j / n: the Martensen/Kussmaul log-kernel rule, the Fourier-side
// cotangent convolution, and plain DFTs.  Weight tables are circulant and
// depend only on n.

// R_j(t_i) weights for the log factor, stored by offset d = (i - j) mod 2n:
//   R(d) = -(2 pi / n) sum_{m=1}^{n-1} cos(m pi d / n)/m - (pi / n^2) cos(pi d)
struct LogQuadWeights {
  int n = 0;
  RVector r; // length 2n

  double operator()(int i, int j) const {
    int d = (i - j) % (2 * n);
    if (d < 0) d += 2 * n;
    return r[d];
  }
};

LogQuadWeights log_quad_weights(int n);

// Integrates K1(t,tau) log(4 sin^2((t-tau)/2)) + K2(t,tau) against a density:
// log factor with the circulant weights, smooth part with the trapezoid rule.
// Kernel matrices are sampled on the full grid, diagonal entries included.
CVector log_quadrature(const CMatrix& K1, const CMatrix& K2, const CVector& density);

// Dense DFT matrices for the mode range m = -n .. n-1 (row/col p <-> m = p-n).
struct FourierGrid {
  int n = 0;
  CMatrix fwd; // values -> coefficients, includes the 1/(2n) factor
  CMatrix inv; // coefficients -> values
};

FourierGrid fourier_grid(int n);

// coefficients of a nodal sequence, indexed m = -n..n-1
CVector fourier_coeffs(const FourierGrid& grid, const CVector& values);
CVector fourier_inverse(const FourierGrid& grid, const CVector& coeffs);

// Dense matrix of a Fourier multiplier: inv * diag(symbol(m)) * fwd.
CMatrix multiplier_matrix(const FourierGrid& grid, const CVector& symbol);

// (1/(4 pi)) PV int cot((tau-t)/2) psi'(tau) dtau; Fourier symbol -|m|/2.
CVector hilbert_derivative(const FourierGrid& grid, const CVector& density);
CMatrix hilbert_matrix(const FourierGrid& grid);

} // namespace htx
