#pragma once

// Quotient algebras K[T]/(m(T)) over K = Q or Q(i), for small squarefree m.
// The algebra is a field only when m is irreducible; inversion of a zero
// divisor raises ZeroDivisor carrying gcd(representative, m), which lets
// callers split the algebra and continue on each factor.

#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "m24/exact/algorithms.hpp"
#include "m24/numfield/gauss.hpp"

namespace m24 {

template <class K>
struct ZeroDivisor : std::runtime_error {
  explicit ZeroDivisor(Poly<K> f) : std::runtime_error("zero divisor in quotient algebra"), factor(std::move(f)) {}
  Poly<K> factor;  // monic proper divisor of the modulus
};

template <class K>
class NFAlgebra {
 public:
  explicit NFAlgebra(const Poly<K>& m) : modulus_(monic(m)) {
    if (m.is_zero() || m.degree() == 0) throw std::invalid_argument("algebra modulus must have positive degree");
    if (gcd(modulus_, derivative(modulus_)).degree() != 0)
      throw std::invalid_argument("algebra modulus must be squarefree");
  }
  const Poly<K>& modulus() const { return modulus_; }
  std::size_t degree() const { return modulus_.degree(); }

 private:
  Poly<K> modulus_;
};

template <class K>
using AlgebraPtr = std::shared_ptr<const NFAlgebra<K>>;

template <class K>
AlgebraPtr<K> make_algebra(const Poly<K>& m) {
  return std::make_shared<const NFAlgebra<K>>(m);
}

template <class K>
class NFElem {
 public:
  NFElem() = default;
  NFElem(int c) : rep_(Poly<K>::constant(K(c))) {}
  NFElem(K c) : rep_(Poly<K>::constant(std::move(c))) {}
  NFElem(AlgebraPtr<K> alg, Poly<K> rep) : alg_(std::move(alg)), rep_(std::move(rep)) { reduce(); }

  static NFElem generator(const AlgebraPtr<K>& alg) { return NFElem(alg, Poly<K>::variable()); }

  const AlgebraPtr<K>& algebra() const { return alg_; }
  /// Representative of degree < deg m (a constant when no algebra is attached).
  const Poly<K>& rep() const { return rep_; }

  /// Power-basis coordinates 1, w, w^2, ... padded to the algebra degree.
  std::vector<K> coords() const {
    std::vector<K> out(alg_ ? alg_->degree() : 1);
    for (std::size_t k = 0; k < rep_.size(); ++k) out[k] = rep_.coefficients()[k];
    return out;
  }

  bool is_zero() const { return rep_.is_zero(); }

  NFElem operator-() const { return NFElem(alg_, -rep_, raw_tag{}); }
  friend NFElem operator+(const NFElem& a, const NFElem& b) { return NFElem(common(a, b), a.rep_ + b.rep_, raw_tag{}); }
  friend NFElem operator-(const NFElem& a, const NFElem& b) { return NFElem(common(a, b), a.rep_ - b.rep_, raw_tag{}); }
  friend NFElem operator*(const NFElem& a, const NFElem& b) { return NFElem(common(a, b), a.rep_ * b.rep_); }
  NFElem& operator+=(const NFElem& o) { return *this = *this + o; }
  NFElem& operator-=(const NFElem& o) { return *this = *this - o; }
  NFElem& operator*=(const NFElem& o) { return *this = *this * o; }
  friend bool operator==(const NFElem& a, const NFElem& b) { return a.rep_ == b.rep_; }
  friend bool operator!=(const NFElem& a, const NFElem& b) { return !(a == b); }

 private:
  struct raw_tag {};
  NFElem(AlgebraPtr<K> alg, Poly<K> rep, raw_tag) : alg_(std::move(alg)), rep_(std::move(rep)) {}

  static AlgebraPtr<K> common(const NFElem& a, const NFElem& b) {
    if (!a.alg_) return b.alg_;
    if (!b.alg_ || a.alg_ == b.alg_) return a.alg_;
    if (a.alg_->modulus() != b.alg_->modulus()) throw std::invalid_argument("mixing elements of different algebras");
    return a.alg_;
  }

  void reduce() {
    if (alg_ && !rep_.is_zero() && rep_.degree() >= alg_->degree()) rep_ = divrem(rep_, alg_->modulus()).remainder;
  }

  AlgebraPtr<K> alg_;
  Poly<K> rep_;
};

template <class K>
bool is_zero(const NFElem<K>& x) {
  return x.is_zero();
}

/// Inverse via extended Euclid on the representative; throws ZeroDivisor<K>
/// when the representative shares a factor with the modulus.
template <class K>
NFElem<K> inverse(const NFElem<K>& x) {
  if (x.is_zero()) {
    if (x.algebra()) throw ZeroDivisor<K>(x.algebra()->modulus());
    throw std::domain_error("inverse of zero");
  }
  if (!x.algebra()) return NFElem<K>(inverse(x.rep().leading()));
  auto eg = extended_gcd(x.rep(), x.algebra()->modulus());
  if (eg.gcd.degree() > 0) throw ZeroDivisor<K>(eg.gcd);
  return NFElem<K>(x.algebra(), eg.s);
}

template <class K>
NFElem<K> nf_invert(const NFElem<K>& x) {
  return inverse(x);
}

template <class K>
using NFPoly = Poly<NFElem<K>>;

/// Monic gcd over K[T]/(m); meaningful when m is irreducible, otherwise the
/// first zero divisor met surfaces as ZeroDivisor<K>.
template <class K>
NFPoly<K> nf_poly_gcd(const NFPoly<K>& a, const NFPoly<K>& b) {
  return gcd(a, b);
}

/// Lifts a polynomial with coefficients in K into the algebra.
template <class K>
NFPoly<K> lift(const AlgebraPtr<K>& alg, const Poly<K>& p) {
  return map_coefficients(p, [&](const K& c) { return NFElem<K>(alg, Poly<K>::constant(c)); });
}

/// Result of running a computation on each component of a split algebra.
template <class K, class T>
struct Component {
  Poly<K> modulus;  // monic factor of the original modulus
  T value;
};

/// Runs fn(algebra) on K[T]/(m); on ZeroDivisor splits m by the discovered
/// factor and recurses on both parts. Components cover m exactly.
template <class K, class Fn>
auto run_split(const Poly<K>& m, Fn&& fn) -> std::vector<Component<K, decltype(fn(std::declval<AlgebraPtr<K>>()))>> {
  using T = decltype(fn(std::declval<AlgebraPtr<K>>()));
  const Poly<K> mm = monic(m);
  try {
    auto alg = make_algebra(mm);
    std::vector<Component<K, T>> out;
    out.push_back({mm, fn(alg)});
    return out;
  } catch (const ZeroDivisor<K>& z) {
    if (z.factor.degree() == 0 || z.factor.degree() >= mm.degree() || !divrem(mm, z.factor).remainder.is_zero())
      throw;
    auto left = run_split(z.factor, fn);
    auto right = run_split(divide_exact(mm, z.factor), fn);
    for (auto& c : right) left.push_back(std::move(c));
    return left;
  }
}

/// Chinese remaindering: the unique r with deg r < sum deg m_j and
/// r = r_j mod m_j, for pairwise coprime moduli.
template <class K>
Poly<K> crt(const std::vector<std::pair<Poly<K>, Poly<K>>>& residues) {
  if (residues.empty()) throw std::invalid_argument("crt of nothing");
  Poly<K> m = residues[0].first;
  Poly<K> r = divrem(residues[0].second, m).remainder;
  for (std::size_t j = 1; j < residues.size(); ++j) {
    const auto& [mj, rj] = residues[j];
    auto eg = extended_gcd(m, mj);
    if (eg.gcd.degree() != 0) throw std::invalid_argument("crt moduli are not coprime");
    // eg.s * m = 1 mod mj
    Poly<K> lift_term = divrem((rj - r) * eg.s, mj).remainder;
    r = r + m * lift_term;
    m = m * mj;
  }
  return divrem(r, m).remainder;
}

}  // namespace m24
