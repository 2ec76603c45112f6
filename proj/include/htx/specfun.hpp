#pragma once

#include <complex>
#include <vector>

namespace htx::specfun {

using Complex = std::complex<double>;

// Bessel and Hankel functions of integer order for arguments in the closed
// first quadrant (Re z >= 0, Im z >= 0), the regime produced by wavenumbers
// with nonnegative real and imaginary parts.  Supported range: order <= 500,
// |z| <= 500; outside it a std::domain_error is thrown.

// J_0(z) ... J_nmax(z)
std::vector<Complex> bessel_j_seq(int nmax, Complex z);

// H^(1)_0(z) ... H^(1)_nmax(z); z != 0
std::vector<Complex> hankel1_seq(int nmax, Complex z);

// J0, J1, H^(1)_0, H^(1)_1 in one evaluation; the kernel hot path.
struct Bessel01 {
  Complex j0, j1, h0, h1;
};
Bessel01 bessel01(Complex z);

Complex bessel_j(int order, Complex z);
Complex bessel_y(int order, Complex z);
Complex hankel1(int order, Complex z);

} // namespace htx::specfun
