#pragma once

// Dense univariate polynomials over an arbitrary commutative coefficient ring.
//
// The coefficient type R must provide +, -, * and a free function
// `is_zero(const R&)` found by ADL. R{} must be the additive identity and R(1)
// the multiplicative identity. Division-based algorithms additionally need a
// free `inverse(const R&)`.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "m24/exact/rational.hpp"

namespace m24 {

template <class R>
class Poly;

template <class R>
bool is_zero(const Poly<R>& p) {
  return p.is_zero();
}

namespace detail {
// Unqualified call so that is_zero overloads for later coefficient types are
// found by argument-dependent lookup.
template <class T>
bool coeff_is_zero(const T& x) {
  return is_zero(x);
}
}  // namespace detail

template <class R>
class Poly {
 public:
  using coefficient_type = R;

  Poly() = default;
  explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<R> coeffs) : c_(coeffs) { trim(); }
  /// Constant polynomial c.
  explicit Poly(int c) : c_{R(c)} { trim(); }

  static Poly constant(R c) { return Poly(std::vector<R>{std::move(c)}); }

  static Poly monomial(R c, std::size_t k) {
    if (detail::coeff_is_zero(c)) return Poly();
    std::vector<R> v(k + 1);
    v[k] = std::move(c);
    return Poly(std::move(v));
  }

  static Poly variable() { return monomial(R(1), 1); }

  bool is_zero() const { return c_.empty(); }

  /// Degree of a nonzero polynomial. The zero polynomial has no degree.
  std::size_t degree() const {
    if (c_.empty()) throw std::domain_error("degree of the zero polynomial");
    return c_.size() - 1;
  }

  /// Number of stored coefficients (degree + 1, or 0 for the zero polynomial).
  std::size_t size() const { return c_.size(); }

  bool is_constant() const { return c_.size() <= 1; }

  R coeff(std::size_t k) const { return k < c_.size() ? c_[k] : R{}; }

  const R& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  const std::vector<R>& coefficients() const { return c_; }

  void set_coeff(std::size_t k, R value) {
    if (k >= c_.size()) {
      if (detail::coeff_is_zero(value)) return;
      c_.resize(k + 1);
    }
    c_[k] = std::move(value);
    trim();
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<R> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::coeff_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }

  /// Multiplication by a coefficient-ring scalar.
  Poly scaled(const R& s) const {
    std::vector<R> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * s;
    return Poly(std::move(out));
  }

  /// Multiplication by X^k.
  Poly shifted(std::size_t k) const {
    if (is_zero()) return Poly();
    std::vector<R> out(c_.size() + k);
    std::copy(c_.begin(), c_.end(), out.begin() + static_cast<std::ptrdiff_t>(k));
    return Poly(std::move(out));
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<R> c_;
};

using QPoly = Poly<Rat>;
using ZPoly = Poly<Integer>;
/// Polynomial in an outer variable (X) whose coefficients are polynomials in
/// an inner variable (s or t).
using BiPoly = Poly<QPoly>;

/// Horner evaluation; coefficients are converted into the argument type.
template <class R, class T>
T evaluate(const Poly<R>& p, const T& x) {
  if (p.is_zero()) return T{};
  const auto& c = p.coefficients();
  T acc = T(c.back());
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    acc = acc * x;
    acc = acc + T(c[k]);
  }
  return acc;
}

template <class R, class F>
auto map_coefficients(const Poly<R>& p, F&& f) {
  using S = std::decay_t<decltype(f(std::declval<const R&>()))>;
  std::vector<S> out;
  out.reserve(p.size());
  for (const auto& c : p.coefficients()) out.push_back(f(c));
  return Poly<S>(std::move(out));
}

template <class R>
R times_int(const R& c, long k) {
  return c * R(k);
}

template <class R>
Poly<R> times_int(const Poly<R>& p, long k) {
  return map_coefficients(p, [k](const R& c) { return times_int(c, k); });
}

template <class R>
Poly<R> derivative(const Poly<R>& p) {
  if (p.size() <= 1) return Poly<R>();
  std::vector<R> out(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) out[k - 1] = times_int(p.coefficients()[k], static_cast<long>(k));
  return Poly<R>(std::move(out));
}

/// p(q(X)).
template <class R>
Poly<R> compose(const Poly<R>& p, const Poly<R>& q) {
  Poly<R> acc;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * q + Poly<R>::constant(p.coefficients()[k]);
  return acc;
}

template <class R>
Poly<R> power(const Poly<R>& p, unsigned n) {
  Poly<R> result = Poly<R>::constant(R(1));
  Poly<R> base = p;
  while (n) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n) base *= base;
  }
  return result;
}

// ---- field algorithms -------------------------------------------------------

template <class R>
struct DivRem {
  Poly<R> quotient;
  Poly<R> remainder;
};

/// Division with remainder; the leading coefficient of b must be invertible.
template <class R>
DivRem<R> divrem(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero() || a.degree() < b.degree()) return {Poly<R>(), a};
  const R inv = inverse(b.leading());
  std::vector<R> rem = a.coefficients();
  const std::size_t db = b.degree();
  std::vector<R> quo(a.degree() - db + 1);
  const auto& bc = b.coefficients();
  for (std::size_t k = a.degree() + 1; k-- > db;) {
    if (detail::coeff_is_zero(rem[k])) continue;
    R q = rem[k] * inv;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * bc[j];
    quo[k - db] = std::move(q);
  }
  rem.resize(db);
  return {Poly<R>(std::move(quo)), Poly<R>(std::move(rem))};
}

/// Quotient of an exact division; throws if the remainder is nonzero.
template <class R>
Poly<R> divide_exact(const Poly<R>& a, const Poly<R>& b) {
  auto qr = divrem(a, b);
  if (!qr.remainder.is_zero()) throw std::domain_error("inexact polynomial division");
  return std::move(qr.quotient);
}

template <class R>
Poly<R> monic(const Poly<R>& p) {
  if (p.is_zero()) return p;
  return p.scaled(inverse(p.leading()));
}

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
template <class R>
Poly<R> gcd(const Poly<R>& a, const Poly<R>& b) {
  Poly<R> x = a, y = b;
  while (!y.is_zero()) {
    Poly<R> r = divrem(x, y).remainder;
    x = std::move(y);
    y = monic(r);
  }
  return monic(x);
}

template <class R>
struct ExtendedGcd {
  Poly<R> gcd;  // monic
  Poly<R> s;    // s*a + t*b = gcd
  Poly<R> t;
};

template <class R>
ExtendedGcd<R> extended_gcd(const Poly<R>& a, const Poly<R>& b) {
  Poly<R> r0 = a, r1 = b;
  Poly<R> s0 = Poly<R>::constant(R(1)), s1;
  Poly<R> t0, t1 = Poly<R>::constant(R(1));
  while (!r1.is_zero()) {
    auto qr = divrem(r0, r1);
    Poly<R> s2 = s0 - qr.quotient * s1;
    Poly<R> t2 = t0 - qr.quotient * t1;
    r0 = std::move(r1);
    r1 = std::move(qr.remainder);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  R inv = inverse(r0.leading());
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

/// Resultant over a field by the Euclidean remainder sequence.
template <class R>
R resultant_euclid(const Poly<R>& a, const Poly<R>& b) {
  if (a.is_zero() || b.is_zero()) throw std::domain_error("resultant of zero polynomial");
  Poly<R> x = a, y = b;
  R acc(1);
  while (true) {
    const std::size_t m = x.degree(), n = y.degree();
    if (n == 0) {
      R r = acc;
      for (std::size_t i = 0; i < m; ++i) r = r * y.leading();
      return r;
    }
    Poly<R> rem = divrem(x, y).remainder;
    if (rem.is_zero()) return R{};
    const std::size_t k = rem.degree();
    if ((m * n) % 2 == 1) acc = -acc;
    for (std::size_t i = 0; i < m - k; ++i) acc = acc * y.leading();
    x = std::move(y);
    y = std::move(rem);
  }
}

}  // namespace m24
