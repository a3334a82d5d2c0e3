#pragma once

// Polynomials over prime fields F_p with p an odd 64-bit prime.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "m24/exact/poly.hpp"

namespace m24 {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

class PrimeField {
 public:
  /// Throws std::invalid_argument unless p is an odd prime.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t r = a + b;
    return r >= p_ || r < a ? r - p_ : r;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + (p_ - b); }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;

  std::uint64_t reduce(const Integer& x) const;
  /// Throws std::domain_error when p divides the denominator.
  std::uint64_t reduce(const Rat& x) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
};

class ModPoly {
 public:
  ModPoly(PrimeField f, std::vector<std::uint64_t> coeffs);
  explicit ModPoly(PrimeField f) : f_(f) {}

  static ModPoly from(const PrimeField& f, const QPoly& p);
  static ModPoly from(const PrimeField& f, const ZPoly& p);
  static ModPoly monomial(const PrimeField& f, std::uint64_t c, std::size_t k);

  const PrimeField& field() const { return f_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  std::size_t degree() const {
    if (c_.empty()) throw std::domain_error("degree of the zero polynomial");
    return c_.size() - 1;
  }
  std::uint64_t leading() const { return c_.back(); }
  std::uint64_t coeff(std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
  const std::vector<std::uint64_t>& coefficients() const { return c_; }

  friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
  ModPoly scaled(std::uint64_t s) const;

  friend bool operator==(const ModPoly& a, const ModPoly& b) { return a.f_ == b.f_ && a.c_ == b.c_; }
  friend bool operator!=(const ModPoly& a, const ModPoly& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  PrimeField f_;
  std::vector<std::uint64_t> c_;
};

struct ModDivRem {
  ModPoly quotient;
  ModPoly remainder;
};

ModDivRem divrem(const ModPoly& a, const ModPoly& b);
ModPoly rem(const ModPoly& a, const ModPoly& m);
ModPoly monic(const ModPoly& a);
ModPoly derivative(const ModPoly& a);
/// Monic gcd; gcd(0, 0) = 0.
ModPoly gcd(const ModPoly& a, const ModPoly& b);
/// base^e mod m, with the exponent given as a big integer.
ModPoly powmod(const ModPoly& base, const Integer& e, const ModPoly& m);
ModPoly powmod(const ModPoly& base, std::uint64_t e, const ModPoly& m);

/// Rabin's test: X^(p^d) = X mod f and gcd(X^(p^(d/q)) - X, f) = 1 for each
/// prime q dividing d = deg f.
bool is_irreducible(const ModPoly& f);

}  // namespace m24
