#pragma once

// Arbitrary-precision binary floating point on top of MPFR, and complex
// numbers built from pairs of them. Every value carries its own precision;
// binary operations round to the larger precision of the two operands.

#include <mpfr.h>

#include <string>
#include <utility>

#include "m24/exact/rational.hpp"
#include "m24/numfield/gauss.hpp"

namespace m24 {

using Precision = mpfr_prec_t;

class BigFloat {
 public:
  BigFloat() : BigFloat(Precision{64}) {}
  explicit BigFloat(Precision prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  BigFloat(double x, Precision prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  BigFloat(long x, Precision prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  BigFloat(const Rat& x, Precision prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN);
  }
  BigFloat(const Integer& x, Precision prec) {
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN);
  }
  /// Decimal or hexadecimal ("0x1.8p+1") literal.
  BigFloat(const std::string& text, Precision prec);

  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  Precision precision() const { return mpfr_get_prec(v_); }
  /// Copy rounded to another precision.
  BigFloat with_precision(Precision prec) const {
    BigFloat r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Exponent e with 2^(e-1) <= |x| < 2^e; very negative for zero.
  long exponent() const;
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  /// Nearest integer.
  Integer round() const;
  /// Exact value of this binary float as a rational.
  Rat to_rat() const;
  std::string to_string(int digits = 20) const;

  BigFloat operator-() const {
    BigFloat r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator+(const BigFloat& a, const BigFloat& b) { return bin(a, b, mpfr_add); }
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) { return bin(a, b, mpfr_sub); }
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) { return bin(a, b, mpfr_mul); }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) { return bin(a, b, mpfr_div); }
  BigFloat& operator+=(const BigFloat& o) { return inplace(o, mpfr_add); }
  BigFloat& operator-=(const BigFloat& o) { return inplace(o, mpfr_sub); }
  BigFloat& operator*=(const BigFloat& o) { return inplace(o, mpfr_mul); }
  BigFloat& operator/=(const BigFloat& o) { return inplace(o, mpfr_div); }
  BigFloat mul_2si(long k) const {
    BigFloat r(precision());
    mpfr_mul_2si(r.v_, v_, k, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

 private:
  using BinFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  static BigFloat bin(const BigFloat& a, const BigFloat& b, BinFn fn) {
    BigFloat r(std::max(a.precision(), b.precision()));
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  BigFloat& inplace(const BigFloat& o, BinFn fn) {
    if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
    fn(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat hypot(const BigFloat& a, const BigFloat& b);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat log2(const BigFloat& x);
BigFloat pi(Precision prec);
/// x^(1/n) for x >= 0.
BigFloat root(const BigFloat& x, unsigned long n);
const BigFloat& min(const BigFloat& a, const BigFloat& b);
const BigFloat& max(const BigFloat& a, const BigFloat& b);

class BigComplex {
 public:
  BigComplex() = default;
  explicit BigComplex(Precision prec) : re_(prec), im_(prec) {}
  BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
  BigComplex(const Rat& re, Precision prec) : re_(re, prec), im_(prec) {}
  BigComplex(const GaussRat& z, Precision prec) : re_(z.re, prec), im_(z.im, prec) {}
  BigComplex(double re, double im, Precision prec) : re_(re, prec), im_(im, prec) {}

  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  Precision precision() const { return std::max(re_.precision(), im_.precision()); }
  BigComplex with_precision(Precision p) const { return {re_.with_precision(p), im_.with_precision(p)}; }

  BigComplex operator-() const { return {-re_, -im_}; }
  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator*(const BigComplex& a, const BigFloat& b) { return {a.re_ * b, a.im_ * b}; }
  BigComplex& operator+=(const BigComplex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  BigComplex& operator-=(const BigComplex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }
  friend bool operator==(const BigComplex& a, const BigComplex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  BigFloat abs() const { return hypot(re_, im_); }
  BigFloat norm() const { return re_ * re_ + im_ * im_; }
  BigFloat arg() const { return atan2(im_, re_); }
  BigComplex conj() const { return {re_, -im_}; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  std::string to_string(int digits = 20) const;

  /// r * (cos theta + i sin theta)
  static BigComplex polar(const BigFloat& r, const BigFloat& theta);

 private:
  BigFloat re_, im_;
};

inline bool is_zero(const BigComplex& z) { return z.is_zero(); }
inline BigFloat abs(const BigComplex& z) { return z.abs(); }
BigComplex inverse(const BigComplex& z);

/// Horner evaluation of a polynomial with BigComplex coefficients.
BigComplex horner(const std::vector<BigComplex>& coeffs, const BigComplex& z);
/// p(z) and p'(z) together.
std::pair<BigComplex, BigComplex> horner_with_derivative(const std::vector<BigComplex>& coeffs, const BigComplex& z);

}  // namespace m24
