#include "htx/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace htx::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEulerGamma = 0.57721566490153286061;
constexpr Complex kI{0.0, 1.0};
constexpr int kMaxOrder = 500;
constexpr double kMaxAbs = 500.0;

void check_domain(int order, Complex z) {
  if (order < 0 || order > kMaxOrder)
    throw std::domain_error("specfun: order outside [0, 500]: " + std::to_string(order));
  if (std::abs(z) > kMaxAbs)
    throw std::domain_error("specfun: |z| exceeds 500");
  if (z.real() < 0.0 || z.imag() < 0.0)
    throw std::domain_error("specfun: argument must lie in the closed first quadrant");
}

// Ascending series, adequate for |z| <= 2 where the alternating terms never
// grow large enough to lose digits.
Complex j_series(int n, Complex z) {
  Complex zh = 0.5 * z;
  Complex pref = 1.0;
  for (int m = 1; m <= n; ++m) pref *= zh / double(m);
  Complex zq = -zh * zh;
  Complex term = pref, sum = pref;
  for (int m = 1; m < 200; ++m) {
    term *= zq / (double(m) * double(m + n));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// Y0 and Y1 by their logarithmic series, |z| <= 2.
void y01_series(Complex z, Complex& y0, Complex& y1) {
  Complex zh = 0.5 * z;
  Complex lg = std::log(zh) + kEulerGamma;
  Complex zq = zh * zh;

  // Y0 = (2/pi) [ lg*J0 + sum_{m>=1} (-1)^{m+1} H_m (z^2/4)^m / (m!)^2 ]
  Complex term = 1.0, sum0 = 0.0;
  double harm = 0.0;
  for (int m = 1; m < 200; ++m) {
    term *= -zq / (double(m) * double(m));
    harm += 1.0 / double(m);
    Complex contrib = -term * harm; // (-1)^{m+1} |...|
    sum0 += contrib;
    if (std::abs(contrib) < 1e-18 * (std::abs(sum0) + 1.0)) break;
  }
  Complex j0 = j_series(0, z);
  y0 = (2.0 / kPi) * (lg * j0 + sum0);

  // Y1 = (2/pi) lg J1 - 2/(pi z) - (1/pi) sum_{m>=0} (-1)^m (H_m+H_{m+1}) (z/2)^{2m+1} / (m!(m+1)!)
  Complex j1 = j_series(1, z);
  Complex t = zh, sum1 = t * 1.0; // m=0: H_0 + H_1 = 1
  double hm = 0.0, hm1 = 1.0;
  for (int m = 1; m < 200; ++m) {
    t *= -zq / (double(m) * double(m + 1));
    hm += 1.0 / double(m);
    hm1 += 1.0 / double(m + 1);
    Complex contrib = t * (hm + hm1);
    sum1 += contrib;
    if (std::abs(contrib) < 1e-18 * (std::abs(sum1) + 1.0)) break;
  }
  y1 = (2.0 / kPi) * lg * j1 - 2.0 / (kPi * z) - sum1 / kPi;
}

// Large-argument Hankel expansion, |z| >= 17.
// H^(s)_nu(z) = sqrt(2/(pi z)) exp(s i (z - nu pi/2 - pi/4)) sum_k (s i)^k a_k(nu) / z^k
Complex hankel_asym(int nu, Complex z, int s) {
  Complex iz = Complex(0.0, double(s));
  Complex invz = 1.0 / z;
  double fournu2 = 4.0 * double(nu) * double(nu);
  Complex term = 1.0, sum = 1.0;
  double prev = 1e300;
  for (int k = 1; k <= 60; ++k) {
    double num = fournu2 - double(2 * k - 1) * double(2 * k - 1);
    term *= iz * invz * (num / (8.0 * double(k)));
    double mag = std::abs(term);
    if (mag > prev) break; // divergent tail reached
    sum += term;
    prev = mag;
    if (mag < 1e-18 * std::abs(sum)) break;
  }
  Complex phase = std::exp(Complex(0.0, double(s)) * (z - (0.5 * nu + 0.25) * kPi));
  return std::sqrt(2.0 / (kPi * z)) * phase * sum;
}

// CF2 for r = H1_0'(z)/H1_0(z), |z| >= 2 in the first quadrant (Lentz).
// r = i - 1/(2z) + (i/z) * K(a_k / b_k), a_k = (k-1/2)^2, b_k = 2(z + k i).
Complex cf2_ratio_h0(Complex z) {
  const double tiny = 1e-290;
  Complex b = 2.0 * (z + kI);
  Complex f = b, C = b, D = 0.0;
  if (std::abs(f) < tiny) f = tiny;
  for (int k = 2; k <= 20000; ++k) {
    double a = (double(k) - 0.5) * (double(k) - 0.5);
    b = 2.0 * (z + double(k) * kI);
    D = b + a * D;
    if (std::abs(D) < tiny) D = tiny;
    C = b + a / C;
    if (std::abs(C) < tiny) C = tiny;
    D = 1.0 / D;
    Complex delta = C * D;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) {
      Complex cf = 0.25 / f; // K = a_1 / f with a_1 = 1/4
      return kI - 0.5 / z + kI / z * cf;
    }
  }
  throw std::runtime_error("specfun: CF2 failed to converge");
}

// Backward (Miller) recurrence for J_0..J_nmax, normalized against
// e^{-iz} = J_0 + 2 sum_k (-i)^k J_k.  Start index validated by re-running
// with a longer tail and comparing.
std::vector<Complex> miller_j(int nmax, Complex z) {
  auto attempt = [&](int start) {
    std::vector<Complex> f(size_t(start) + 2, Complex(0.0));
    f[size_t(start) + 1] = 0.0;
    f[size_t(start)] = 1e-280;
    Complex norm = 0.0;
    // (-i)^k cycles with period 4
    for (int k = start; k >= 1; --k) {
      f[size_t(k) - 1] = (2.0 * double(k) / z) * f[size_t(k)] - f[size_t(k) + 1];
      if (std::abs(f[size_t(k) - 1]) > 1e260) {
        for (auto& v : f) v *= 1e-260;
      }
    }
    static const Complex minus_i_pow[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
    norm = f[0];
    for (int k = 1; k <= start; ++k) norm += 2.0 * minus_i_pow[k & 3] * f[size_t(k)];
    Complex scale = std::exp(-kI * z) / norm;
    std::vector<Complex> j(size_t(nmax) + 1);
    for (int k = 0; k <= nmax; ++k) j[size_t(k)] = f[size_t(k)] * scale;
    return j;
  };

  double az = std::abs(z);
  int start = std::max(nmax, int(std::ceil(1.3 * az))) + 40;
  std::vector<Complex> ref = attempt(start);
  for (int pass = 0; pass < 8; ++pass) {
    int bigger = start + std::max(60, start / 4);
    std::vector<Complex> nxt = attempt(bigger);
    double scale = 0.0, diff = 0.0;
    for (int k = 0; k <= nmax; ++k) {
      scale = std::max(scale, std::abs(nxt[size_t(k)]));
      diff = std::max(diff, std::abs(nxt[size_t(k)] - ref[size_t(k)]));
    }
    if (diff <= 1e-14 * std::max(scale, 1e-280)) return nxt;
    start = bigger;
    ref = std::move(nxt);
  }
  return ref;
}

} // namespace

Bessel01 bessel01(Complex z) {
  check_domain(1, z);
  double az = std::abs(z);
  if (az == 0.0) throw std::domain_error("specfun: Hankel function singular at z = 0");
  Bessel01 out;
  if (az < 2.0) {
    out.j0 = j_series(0, z);
    out.j1 = j_series(1, z);
    Complex y0, y1;
    y01_series(z, y0, y1);
    out.h0 = out.j0 + kI * y0;
    out.h1 = out.j1 + kI * y1;
  } else if (az < 17.0) {
    std::vector<Complex> j = miller_j(1, z);
    out.j0 = j[0];
    out.j1 = j[1];
    Complex rho = -cf2_ratio_h0(z); // H1_1 / H1_0
    // Wronskian J_1 H1_0 - J_0 H1_1 = 2i/(pi z)
    out.h0 = (2.0 * kI / (kPi * z)) / (out.j1 - rho * out.j0);
    out.h1 = rho * out.h0;
  } else {
    out.h0 = hankel_asym(0, z, +1);
    out.h1 = hankel_asym(1, z, +1);
    Complex g0 = hankel_asym(0, z, -1);
    Complex g1 = hankel_asym(1, z, -1);
    out.j0 = 0.5 * (out.h0 + g0);
    out.j1 = 0.5 * (out.h1 + g1);
  }
  return out;
}

std::vector<Complex> bessel_j_seq(int nmax, Complex z) {
  check_domain(nmax, z);
  std::vector<Complex> j(size_t(nmax) + 1, Complex(0.0));
  double az = std::abs(z);
  if (az == 0.0) {
    j[0] = 1.0;
    return j;
  }
  if (az < 2.0) {
    for (int n = 0; n <= nmax; ++n) j[size_t(n)] = j_series(n, z);
    return j;
  }
  return miller_j(nmax, z);
}

std::vector<Complex> hankel1_seq(int nmax, Complex z) {
  check_domain(nmax, z);
  Bessel01 b = bessel01(z);
  std::vector<Complex> h(size_t(nmax) + 1);
  h[0] = b.h0;
  if (nmax >= 1) h[1] = b.h1;
  for (int k = 1; k < nmax; ++k)
    h[size_t(k) + 1] = (2.0 * double(k) / z) * h[size_t(k)] - h[size_t(k) - 1];
  return h;
}

Complex bessel_j(int order, Complex z) { return bessel_j_seq(order, z)[size_t(order)]; }

Complex hankel1(int order, Complex z) { return hankel1_seq(order, z)[size_t(order)]; }

Complex bessel_y(int order, Complex z) {
  Complex h = hankel1(order, z);
  Complex j = bessel_j(order, z);
  return (h - j) / kI;
}

} // namespace htx::specfun
