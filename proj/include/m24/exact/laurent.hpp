#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "m24/exact/poly.hpp"

namespace m24 {

/// Y^valuation * body(Y), with body(0) != 0 unless the value is zero.
template <class R>
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(Poly<R> body, long valuation) : body_(std::move(body)), val_(valuation) { normalize(); }

  static LaurentPoly monomial(R c, long k) { return LaurentPoly(Poly<R>::constant(std::move(c)), k); }

  bool is_zero() const { return body_.is_zero(); }
  long valuation() const { return val_; }
  /// Highest exponent present; the value must be nonzero.
  long top() const { return val_ + static_cast<long>(body_.degree()); }
  const Poly<R>& body() const { return body_; }

  R coeff(long k) const { return k < val_ ? R{} : body_.coeff(static_cast<std::size_t>(k - val_)); }

  /// Multiplies by Y^k and returns the result as an ordinary polynomial;
  /// throws if a negative power would survive.
  Poly<R> times_power(long k) const {
    if (is_zero()) return Poly<R>();
    if (val_ + k < 0) throw std::domain_error("Laurent polynomial has a pole after shifting");
    return body_.shifted(static_cast<std::size_t>(val_ + k));
  }

  LaurentPoly operator-() const { return LaurentPoly(-body_, val_); }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const long v = std::min(a.val_, b.val_);
    return LaurentPoly(a.body_.shifted(static_cast<std::size_t>(a.val_ - v)) +
                           b.body_.shifted(static_cast<std::size_t>(b.val_ - v)),
                       v);
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly();
    return LaurentPoly(a.body_ * b.body_, a.val_ + b.val_);
  }
  LaurentPoly scaled(const R& c) const { return LaurentPoly(body_.scaled(c), val_); }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.body_ == b.body_ && (a.is_zero() || a.val_ == b.val_);
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

 private:
  void normalize() {
    if (body_.is_zero()) {
      val_ = 0;
      return;
    }
    std::size_t k = 0;
    const auto& c = body_.coefficients();
    while (detail::coeff_is_zero(c[k])) ++k;
    if (k > 0) {
      body_ = Poly<R>(std::vector<R>(c.begin() + static_cast<std::ptrdiff_t>(k), c.end()));
      val_ += static_cast<long>(k);
    }
  }

  Poly<R> body_;
  long val_ = 0;
};

template <class R>
bool is_zero(const LaurentPoly<R>& p) {
  return p.is_zero();
}

}  // namespace m24
