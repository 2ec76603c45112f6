#pragma once

// High-precision Bessel oracle used only by the test suite.  Evaluates the
// ascending series in MPFR complex arithmetic at a precision chosen from |z|,
// so every digit of a double result is trustworthy.  Entirely independent of
// the library implementation.

#include <mpfr.h>

#include <complex>
#include <stdexcept>
#include <vector>

namespace mp {

struct C {
  mpfr_t re, im;
  explicit C(mpfr_prec_t p) {
    mpfr_init2(re, p);
    mpfr_init2(im, p);
    mpfr_set_zero(re, 1);
    mpfr_set_zero(im, 1);
  }
  C(const C&) = delete;
  C& operator=(const C&) = delete;
  ~C() {
    mpfr_clear(re);
    mpfr_clear(im);
  }
  void set(double r, double i) {
    mpfr_set_d(re, r, MPFR_RNDN);
    mpfr_set_d(im, i, MPFR_RNDN);
  }
  void set(const C& o) {
    mpfr_set(re, o.re, MPFR_RNDN);
    mpfr_set(im, o.im, MPFR_RNDN);
  }
  std::complex<double> to_double() const {
    return {mpfr_get_d(re, MPFR_RNDN), mpfr_get_d(im, MPFR_RNDN)};
  }
};

inline void c_add(C& r, const C& a, const C& b) {
  mpfr_add(r.re, a.re, b.re, MPFR_RNDN);
  mpfr_add(r.im, a.im, b.im, MPFR_RNDN);
}

inline void c_sub(C& r, const C& a, const C& b) {
  mpfr_sub(r.re, a.re, b.re, MPFR_RNDN);
  mpfr_sub(r.im, a.im, b.im, MPFR_RNDN);
}

// r = a*b; r may not alias a or b
inline void c_mul(C& r, const C& a, const C& b) {
  mpfr_mul(r.re, a.re, b.re, MPFR_RNDN);
  mpfr_fms(r.re, a.im, b.im, r.re, MPFR_RNDN); // a.im*b.im - re_part
  mpfr_neg(r.re, r.re, MPFR_RNDN);
  mpfr_mul(r.im, a.re, b.im, MPFR_RNDN);
  mpfr_fma(r.im, a.im, b.re, r.im, MPFR_RNDN);
}

inline void c_div_ui(C& r, const C& a, unsigned long d) {
  mpfr_div_ui(r.re, a.re, d, MPFR_RNDN);
  mpfr_div_ui(r.im, a.im, d, MPFR_RNDN);
}

inline void c_mul_si(C& r, const C& a, long s) {
  mpfr_mul_si(r.re, a.re, s, MPFR_RNDN);
  mpfr_mul_si(r.im, a.im, s, MPFR_RNDN);
}

inline double c_abs_approx(const C& a) {
  double x = mpfr_get_d(a.re, MPFR_RNDN), y = mpfr_get_d(a.im, MPFR_RNDN);
  return std::abs(std::complex<double>(x, y));
}

// r = 1/a
inline void c_inv(C& r, const C& a, mpfr_prec_t p) {
  mpfr_t den;
  mpfr_init2(den, p);
  mpfr_sqr(den, a.re, MPFR_RNDN);
  mpfr_fma(den, a.im, a.im, den, MPFR_RNDN);
  mpfr_div(r.re, a.re, den, MPFR_RNDN);
  mpfr_div(r.im, a.im, den, MPFR_RNDN);
  mpfr_neg(r.im, r.im, MPFR_RNDN);
  mpfr_clear(den);
}

// r = log(a), principal branch
inline void c_log(C& r, const C& a, mpfr_prec_t p) {
  mpfr_t mod2, ang;
  mpfr_init2(mod2, p);
  mpfr_init2(ang, p);
  mpfr_sqr(mod2, a.re, MPFR_RNDN);
  mpfr_fma(mod2, a.im, a.im, mod2, MPFR_RNDN);
  mpfr_log(mod2, mod2, MPFR_RNDN);
  mpfr_div_ui(mod2, mod2, 2, MPFR_RNDN);
  mpfr_atan2(ang, a.im, a.re, MPFR_RNDN);
  mpfr_set(r.re, mod2, MPFR_RNDN);
  mpfr_set(r.im, ang, MPFR_RNDN);
  mpfr_clear(mod2);
  mpfr_clear(ang);
}

class BesselOracle {
 public:
  explicit BesselOracle(std::complex<double> z)
      : prec_(mpfr_prec_t(256 + 4.0 * std::abs(z))), z_(prec_), zh2_(prec_) {
    z_.set(z.real(), z.imag());
    C zh(prec_);
    zh.set(z.real() / 2.0, z.imag() / 2.0);
    c_mul(zh2_, zh, zh); // (z/2)^2
  }

  // J_n by the ascending series
  std::complex<double> j(int n) const {
    C sum(prec_);
    j_series(n, sum);
    return sum.to_double();
  }

  std::complex<double> y(int n) const {
    std::vector<C*> ys = y_seq(n);
    std::complex<double> out = ys[size_t(n)]->to_double();
    for (C* c : ys) delete c;
    return out;
  }

  // J + iY formed at working precision; the two parts cancel exponentially
  // for arguments off the real axis.
  std::complex<double> h1(int n) const {
    C jn(prec_);
    j_series(n, jn);
    std::vector<C*> ys = y_seq(n);
    C h(prec_);
    mpfr_sub(h.re, jn.re, ys[size_t(n)]->im, MPFR_RNDN);
    mpfr_add(h.im, jn.im, ys[size_t(n)]->re, MPFR_RNDN);
    std::complex<double> out = h.to_double();
    for (C* c : ys) delete c;
    return out;
  }

 private:
  mpfr_prec_t prec_;
  C z_, zh2_;

  void j_series(int n, C& sum) const {
    // term_0 = (z/2)^n / n!
    C term(prec_);
    term.set(1.0, 0.0);
    C zh(prec_), tmp(prec_);
    mpfr_div_ui(zh.re, z_.re, 2, MPFR_RNDN);
    mpfr_div_ui(zh.im, z_.im, 2, MPFR_RNDN);
    for (int m = 1; m <= n; ++m) {
      c_mul(tmp, term, zh);
      c_div_ui(term, tmp, (unsigned long)m);
    }
    sum.set(term);
    for (int m = 1; m < 100000; ++m) {
      c_mul(tmp, term, zh2_);
      c_mul_si(tmp, tmp, -1);
      c_div_ui(tmp, tmp, (unsigned long)m);
      c_div_ui(term, tmp, (unsigned long)(m + n));
      c_add(sum, sum, term);
      if (c_abs_approx(term) < 1e-200 * (c_abs_approx(sum) + 1e-300) && m > 5) {
        double tol = std::ldexp(1.0, int(-prec_ + 16));
        if (c_abs_approx(term) < tol * (c_abs_approx(sum) + 1e-300)) break;
      }
    }
  }

  // Y_0, Y_1 by the logarithmic series, then upward recurrence.
  std::vector<C*> y_seq(int nmax) const {
    C lg(prec_);
    C zh(prec_);
    mpfr_div_ui(zh.re, z_.re, 2, MPFR_RNDN);
    mpfr_div_ui(zh.im, z_.im, 2, MPFR_RNDN);
    c_log(lg, zh, prec_);
    mpfr_t gamma;
    mpfr_init2(gamma, prec_);
    mpfr_const_euler(gamma, MPFR_RNDN);
    mpfr_add(lg.re, lg.re, gamma, MPFR_RNDN); // log(z/2) + gamma

    mpfr_t pi, harm, harm1, hs;
    mpfr_init2(pi, prec_);
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_init2(harm, prec_);
    mpfr_init2(harm1, prec_);
    mpfr_init2(hs, prec_);

    C j0(prec_), j1(prec_), tmp(prec_), term(prec_), acc(prec_);
    j_series(0, j0);
    j_series(1, j1);

    // Y0 = (2/pi)[ lg*J0 + sum_{m>=1} (-1)^{m+1} H_m (z^2/4)^m/(m!)^2 ]
    C y0(prec_);
    term.set(1.0, 0.0);
    acc.set(0.0, 0.0);
    mpfr_set_zero(harm, 1);
    for (int m = 1; m < 100000; ++m) {
      c_mul(tmp, term, zh2_);
      c_mul_si(tmp, tmp, -1);
      c_div_ui(tmp, tmp, (unsigned long)m);
      c_div_ui(term, tmp, (unsigned long)m);
      mpfr_set_ui(hs, 1, MPFR_RNDN);
      mpfr_div_ui(hs, hs, (unsigned long)m, MPFR_RNDN);
      mpfr_add(harm, harm, hs, MPFR_RNDN);
      // contribution: -term * H_m  (term carries (-1)^m)
      mpfr_mul(tmp.re, term.re, harm, MPFR_RNDN);
      mpfr_mul(tmp.im, term.im, harm, MPFR_RNDN);
      c_mul_si(tmp, tmp, -1);
      c_add(acc, acc, tmp);
      double tol = std::ldexp(1.0, int(-prec_ + 16));
      if (m > 5 && c_abs_approx(tmp) < tol * (c_abs_approx(acc) + 1e-300)) break;
    }
    c_mul(y0, lg, j0);
    c_add(y0, y0, acc);
    mpfr_div(y0.re, y0.re, pi, MPFR_RNDN);
    mpfr_div(y0.im, y0.im, pi, MPFR_RNDN);
    c_mul_si(y0, y0, 2);

    // Y1 = (2/pi) lg J1 - 2/(pi z) - (1/pi) sum_{m>=0} (-1)^m (H_m + H_{m+1}) (z/2)^{2m+1}/(m!(m+1)!)
    C y1(prec_);
    term.set(0.0, 0.0);
    c_add(term, term, zh); // (z/2), m=0 term base
    acc.set(0.0, 0.0);
    mpfr_set_zero(harm, 1);
    mpfr_set_ui(harm1, 1, MPFR_RNDN);
    // m = 0 contribution: (H_0 + H_1) = 1
    c_add(acc, acc, term);
    for (int m = 1; m < 100000; ++m) {
      c_mul(tmp, term, zh2_);
      c_mul_si(tmp, tmp, -1);
      c_div_ui(tmp, tmp, (unsigned long)m);
      c_div_ui(term, tmp, (unsigned long)(m + 1));
      mpfr_set_ui(hs, 1, MPFR_RNDN);
      mpfr_div_ui(hs, hs, (unsigned long)m, MPFR_RNDN);
      mpfr_add(harm, harm, hs, MPFR_RNDN);
      mpfr_set_ui(hs, 1, MPFR_RNDN);
      mpfr_div_ui(hs, hs, (unsigned long)(m + 1), MPFR_RNDN);
      mpfr_add(harm1, harm1, hs, MPFR_RNDN);
      mpfr_add(hs, harm, harm1, MPFR_RNDN);
      mpfr_mul(tmp.re, term.re, hs, MPFR_RNDN);
      mpfr_mul(tmp.im, term.im, hs, MPFR_RNDN);
      c_add(acc, acc, tmp);
      double tol = std::ldexp(1.0, int(-prec_ + 16));
      if (m > 5 && c_abs_approx(tmp) < tol * (c_abs_approx(acc) + 1e-300)) break;
    }
    c_mul(y1, lg, j1);
    c_mul_si(y1, y1, 2);
    C invz(prec_);
    c_inv(invz, z_, prec_);
    c_mul_si(invz, invz, 2);
    c_sub(y1, y1, invz);
    c_sub(y1, y1, acc);
    mpfr_div(y1.re, y1.re, pi, MPFR_RNDN);
    mpfr_div(y1.im, y1.im, pi, MPFR_RNDN);

    std::vector<C*> ys;
    ys.push_back(new C(prec_));
    ys[0]->set(y0);
    if (nmax >= 1) {
      ys.push_back(new C(prec_));
      ys[1]->set(y1);
    }
    C zinv(prec_);
    c_inv(zinv, z_, prec_);
    for (int k = 1; k < nmax; ++k) {
      // Y_{k+1} = (2k/z) Y_k - Y_{k-1}
      C* nxt = new C(prec_);
      c_mul(tmp, *ys[size_t(k)], zinv);
      c_mul_si(tmp, tmp, 2 * k);
      c_sub(*nxt, tmp, *ys[size_t(k) - 1]);
      ys.push_back(nxt);
    }
    mpfr_clear(gamma);
    mpfr_clear(pi);
    mpfr_clear(harm);
    mpfr_clear(harm1);
    mpfr_clear(hs);
    return ys;
  }
};

inline std::complex<double> oracle_j(int n, std::complex<double> z) {
  return BesselOracle(z).j(n);
}
inline std::complex<double> oracle_y(int n, std::complex<double> z) {
  return BesselOracle(z).y(n);
}
inline std::complex<double> oracle_h1(int n, std::complex<double> z) {
  return BesselOracle(z).h1(n);
}

} // namespace mp
