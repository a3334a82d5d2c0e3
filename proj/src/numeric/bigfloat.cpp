#include "m24/numeric/bigfloat.hpp"

#include <stdexcept>
#include <vector>

namespace m24 {

BigFloat::BigFloat(const std::string& text, Precision prec) {
  mpfr_init2(v_, prec);
  if (mpfr_set_str(v_, text.c_str(), 0, MPFR_RNDN) != 0) {
    mpfr_clear(v_);
    throw std::invalid_argument("malformed floating-point literal: '" + text + "'");
  }
}

long BigFloat::exponent() const {
  if (mpfr_zero_p(v_)) return -(1L << 40);
  return mpfr_get_exp(v_);
}

Integer BigFloat::round() const {
  Integer r;
  mpfr_get_z(r.get_mpz_t(), v_, MPFR_RNDN);
  return r;
}

Rat BigFloat::to_rat() const {
  if (!is_finite()) throw std::domain_error("non-finite value has no rational form");
  Integer m;
  const long e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
  Rat r(m);
  if (e >= 0)
    r *= Rat(ipow(Integer(2), static_cast<unsigned long>(e)));
  else
    r /= Rat(ipow(Integer(2), static_cast<unsigned long>(-e)));
  r.canonicalize();
  return r;
}

std::string BigFloat::to_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  return std::string(buf.data());
}

namespace {
using UnFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
BigFloat unary(const BigFloat& x, UnFn fn) {
  BigFloat r(x.precision());
  fn(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
}  // namespace

BigFloat abs(const BigFloat& x) { return unary(x, mpfr_abs); }
BigFloat sqrt(const BigFloat& x) { return unary(x, mpfr_sqrt); }
BigFloat cos(const BigFloat& x) { return unary(x, mpfr_cos); }
BigFloat sin(const BigFloat& x) { return unary(x, mpfr_sin); }
BigFloat log2(const BigFloat& x) { return unary(x, mpfr_log2); }

BigFloat hypot(const BigFloat& a, const BigFloat& b) {
  BigFloat r(std::max(a.precision(), b.precision()));
  mpfr_hypot(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r(std::max(x.precision(), y.precision()));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat pi(Precision prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

BigFloat root(const BigFloat& x, unsigned long n) {
  BigFloat r(x.precision());
  mpfr_rootn_ui(r.raw(), x.raw(), n, MPFR_RNDN);
  return r;
}

const BigFloat& min(const BigFloat& a, const BigFloat& b) { return b < a ? b : a; }
const BigFloat& max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) { return a * inverse(b); }

BigComplex inverse(const BigComplex& z) {
  if (z.is_zero()) throw std::domain_error("complex division by zero");
  const BigFloat n = z.norm();
  return {z.re() / n, -z.im() / n};
}

std::string BigComplex::to_string(int digits) const {
  std::string s = re_.to_string(digits);
  std::string i = im_.to_string(digits);
  if (!i.empty() && i[0] == '-')
    s += " - " + i.substr(1);
  else
    s += " + " + i;
  return s + "*i";
}

BigComplex BigComplex::polar(const BigFloat& r, const BigFloat& theta) { return {r * cos(theta), r * sin(theta)}; }

BigComplex horner(const std::vector<BigComplex>& c, const BigComplex& z) {
  if (c.empty()) return BigComplex(z.precision());
  BigComplex acc = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * z + c[k];
  return acc;
}

std::pair<BigComplex, BigComplex> horner_with_derivative(const std::vector<BigComplex>& c, const BigComplex& z) {
  if (c.empty()) return {BigComplex(z.precision()), BigComplex(z.precision())};
  BigComplex p = c.back();
  BigComplex d(z.precision());
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    d = d * z + p;
    p = p * z + c[k];
  }
  return {p, d};
}

}  // namespace m24
