#pragma once

#include "hkt/arith.hpp"

#include <mpfr.h>

#include <cmath>

// Minimal complex arithmetic on MPFR reals at a caller-chosen precision.
namespace hkt::detail {

class PreciseComplex {
 public:
  explicit PreciseComplex(mpfr_prec_t prec) {
    mpfr_init2(re_, prec);
    mpfr_init2(im_, prec);
    mpfr_set_zero(re_, 1);
    mpfr_set_zero(im_, 1);
  }
  PreciseComplex(const PreciseComplex& o) : PreciseComplex(o.precision()) {
    mpfr_set(re_, o.re_, MPFR_RNDN);
    mpfr_set(im_, o.im_, MPFR_RNDN);
  }
  PreciseComplex& operator=(const PreciseComplex& o) {
    if (this != &o) {
      mpfr_set_prec(re_, o.precision());
      mpfr_set_prec(im_, o.precision());
      mpfr_set(re_, o.re_, MPFR_RNDN);
      mpfr_set(im_, o.im_, MPFR_RNDN);
    }
    return *this;
  }
  ~PreciseComplex() {
    mpfr_clear(re_);
    mpfr_clear(im_);
  }

  mpfr_prec_t precision() const { return mpfr_get_prec(re_); }

  // exp(2 pi i * turns)
  static PreciseComplex unit_root(const Rational& turns, mpfr_prec_t prec) {
    PreciseComplex z(prec);
    mpfr_t angle;
    mpfr_init2(angle, prec + 16);
    mpfr_const_pi(angle, MPFR_RNDN);
    mpfr_mul_ui(angle, angle, 2, MPFR_RNDN);
    mpfr_mul_z(angle, angle, turns.get_num_mpz_t(), MPFR_RNDN);
    mpfr_div_z(angle, angle, turns.get_den_mpz_t(), MPFR_RNDN);
    mpfr_sin_cos(z.im_, z.re_, angle, MPFR_RNDN);
    mpfr_clear(angle);
    return z;
  }

  static PreciseComplex real(const Rational& x, mpfr_prec_t prec) {
    PreciseComplex z(prec);
    mpfr_set_q(z.re_, x.get_mpq_t(), MPFR_RNDN);
    return z;
  }

  PreciseComplex& operator+=(const PreciseComplex& o) {
    mpfr_add(re_, re_, o.re_, MPFR_RNDN);
    mpfr_add(im_, im_, o.im_, MPFR_RNDN);
    return *this;
  }
  PreciseComplex& operator-=(const PreciseComplex& o) {
    mpfr_sub(re_, re_, o.re_, MPFR_RNDN);
    mpfr_sub(im_, im_, o.im_, MPFR_RNDN);
    return *this;
  }
  PreciseComplex& scale(const Integer& k) {
    mpfr_mul_z(re_, re_, k.get_mpz_t(), MPFR_RNDN);
    mpfr_mul_z(im_, im_, k.get_mpz_t(), MPFR_RNDN);
    return *this;
  }
  PreciseComplex& scale(const Rational& k) {
    mpfr_mul_q(re_, re_, k.get_mpq_t(), MPFR_RNDN);
    mpfr_mul_q(im_, im_, k.get_mpq_t(), MPFR_RNDN);
    return *this;
  }
  // Divide by sqrt(n).
  PreciseComplex& divide_sqrt(const Integer& n) {
    mpfr_t r;
    mpfr_init2(r, precision());
    mpfr_set_z(r, n.get_mpz_t(), MPFR_RNDN);
    mpfr_sqrt(r, r, MPFR_RNDN);
    mpfr_div(re_, re_, r, MPFR_RNDN);
    mpfr_div(im_, im_, r, MPFR_RNDN);
    mpfr_clear(r);
    return *this;
  }

  friend PreciseComplex operator*(const PreciseComplex& x, const PreciseComplex& y) {
    PreciseComplex z(x.precision());
    mpfr_t t;
    mpfr_init2(t, x.precision());
    mpfr_mul(z.re_, x.re_, y.re_, MPFR_RNDN);
    mpfr_mul(t, x.im_, y.im_, MPFR_RNDN);
    mpfr_sub(z.re_, z.re_, t, MPFR_RNDN);
    mpfr_mul(z.im_, x.re_, y.im_, MPFR_RNDN);
    mpfr_mul(t, x.im_, y.re_, MPFR_RNDN);
    mpfr_add(z.im_, z.im_, t, MPFR_RNDN);
    mpfr_clear(t);
    return z;
  }

  // Argument in units of pi/4, as a double in (-4, 4].
  double argument_eighths() const {
    mpfr_t a, pi;
    mpfr_init2(a, precision());
    mpfr_init2(pi, precision());
    mpfr_atan2(a, im_, re_, MPFR_RNDN);
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_div(a, a, pi, MPFR_RNDN);
    mpfr_mul_ui(a, a, 4, MPFR_RNDN);
    double out = mpfr_get_d(a, MPFR_RNDN);
    mpfr_clear(a);
    mpfr_clear(pi);
    return out;
  }

  double abs_value() const {
    mpfr_t a;
    mpfr_init2(a, precision());
    mpfr_hypot(a, re_, im_, MPFR_RNDN);
    double out = mpfr_get_d(a, MPFR_RNDN);
    mpfr_clear(a);
    return out;
  }

  // Nearest integer to factor * (re or im) / sqrt(root_divisor); the distance
  // to it is written to residual.
  Integer rounded(bool imag, const Rational& factor, unsigned long root_divisor, double& residual) const {
    mpfr_t x, r;
    mpfr_init2(x, precision());
    mpfr_init2(r, precision());
    mpfr_mul_q(x, imag ? im_ : re_, factor.get_mpq_t(), MPFR_RNDN);
    if (root_divisor != 1) {
      mpfr_set_ui(r, root_divisor, MPFR_RNDN);
      mpfr_sqrt(r, r, MPFR_RNDN);
      mpfr_div(x, x, r, MPFR_RNDN);
    }
    mpfr_round(r, x);
    Integer out;
    mpfr_get_z(out.get_mpz_t(), r, MPFR_RNDN);
    mpfr_sub(x, x, r, MPFR_RNDN);
    residual = std::fabs(mpfr_get_d(x, MPFR_RNDN));
    mpfr_clear(x);
    mpfr_clear(r);
    return out;
  }

  double real_part() const { return mpfr_get_d(re_, MPFR_RNDN); }
  double imag_part() const { return mpfr_get_d(im_, MPFR_RNDN); }

 private:
  mpfr_t re_;
  mpfr_t im_;
};

}  // namespace hkt::detail
