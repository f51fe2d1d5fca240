#pragma once
// Minimal RAII wrapper over an MPFR real, enough for the signed sums in the
// normal-ordered coherent-state coefficients. Results take the larger
// precision of their operands.

#include <mpfr.h>

#include <algorithm>
#include <utility>

namespace su2cs::detail {

class MpReal {
 public:
  explicit MpReal(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  MpReal(mpfr_prec_t bits, double x) { mpfr_init2(v_, bits); mpfr_set_d(v_, x, MPFR_RNDN); }
  MpReal(const MpReal& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  MpReal(MpReal&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  MpReal& operator=(const MpReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  MpReal& operator=(MpReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~MpReal() { mpfr_clear(v_); }

  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }
  double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }

  static MpReal factorial(mpfr_prec_t bits, unsigned long n) {
    MpReal r(bits);
    mpfr_fac_ui(r.v_, n, MPFR_RNDN);
    return r;
  }

  MpReal& operator+=(const MpReal& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  MpReal& operator-=(const MpReal& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  MpReal& operator*=(const MpReal& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  MpReal& operator/=(const MpReal& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  MpReal& operator*=(long k) { mpfr_mul_si(v_, v_, k, MPFR_RNDN); return *this; }
  MpReal& operator/=(long k) { mpfr_div_si(v_, v_, k, MPFR_RNDN); return *this; }

  friend MpReal operator+(const MpReal& a, const MpReal& b) { return binary(a, b, mpfr_add); }
  friend MpReal operator-(const MpReal& a, const MpReal& b) { return binary(a, b, mpfr_sub); }
  friend MpReal operator*(const MpReal& a, const MpReal& b) { return binary(a, b, mpfr_mul); }
  friend MpReal operator/(const MpReal& a, const MpReal& b) { return binary(a, b, mpfr_div); }

  friend MpReal sqrt(const MpReal& a) { return unary(a, mpfr_sqrt); }
  friend MpReal tan(const MpReal& a) { return unary(a, mpfr_tan); }
  friend MpReal pow(const MpReal& a, long k) {
    MpReal r(a.precision());
    mpfr_pow_si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
  }

 private:
  using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  using UnaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

  static MpReal binary(const MpReal& a, const MpReal& b, BinaryOp op) {
    MpReal r(std::max(a.precision(), b.precision()));
    op(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  static MpReal unary(const MpReal& a, UnaryOp op) {
    MpReal r(a.precision());
    op(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  mpfr_t v_;
};

}  // namespace su2cs::detail
