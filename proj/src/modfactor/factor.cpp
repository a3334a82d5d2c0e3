#include "m24/modfactor/factor.hpp"

#include <algorithm>
#include <optional>
#include <random>

namespace m24 {

namespace {

using Factors = std::vector<std::pair<ModPoly, unsigned>>;

ModPoly pth_root(const ModPoly& c) {
  const std::uint64_t p = c.field().modulus();
  std::vector<std::uint64_t> out(c.degree() / p + 1);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = c.coeff(k * p);
  return ModPoly(c.field(), std::move(out));
}

// Squarefree decomposition of a monic polynomial in characteristic p.
Factors squarefree_mod_p(const ModPoly& f) {
  Factors out;
  ModPoly c = gcd(f, derivative(f));
  ModPoly w = divrem(f, c).quotient;
  for (unsigned i = 1; !w.is_one(); ++i) {
    ModPoly y = gcd(w, c);
    ModPoly z = divrem(w, y).quotient;
    if (z.degree() > 0) out.emplace_back(z, i);
    w = y;
    c = divrem(c, y).quotient;
  }
  if (!c.is_one()) {
    const auto p = static_cast<unsigned>(f.field().modulus());
    for (auto& [g, m] : squarefree_mod_p(pth_root(c))) out.emplace_back(g, m * p);
  }
  return out;
}

// Pairs (product of all irreducible factors of degree d, d).
std::vector<std::pair<ModPoly, std::size_t>> distinct_degree(const ModPoly& f) {
  std::vector<std::pair<ModPoly, std::size_t>> out;
  const PrimeField& F = f.field();
  const ModPoly x = ModPoly::monomial(F, 1, 1);
  ModPoly g = f;
  ModPoly h = rem(x, g);
  for (std::size_t d = 1; g.degree() >= 2 * d; ++d) {
    h = powmod(h, F.modulus(), g);
    ModPoly common = gcd(h - x, g);
    if (common.degree() > 0) {
      out.emplace_back(common, d);
      g = divrem(g, common).quotient;
      h = rem(h, g);
    }
  }
  if (g.degree() > 0) out.emplace_back(g, g.degree());
  return out;
}

void equal_degree(const ModPoly& g, std::size_t d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const PrimeField& F = g.field();
  std::uniform_int_distribution<std::uint64_t> coin(0, F.modulus() - 1);
  Integer e = ipow(Integer(std::to_string(F.modulus())), d);
  e = (e - 1) / 2;
  while (true) {
    std::vector<std::uint64_t> a(g.degree());
    for (auto& c : a) c = coin(rng);
    ModPoly r(F, std::move(a));
    if (r.is_zero() || r.degree() == 0) continue;
    ModPoly b = powmod(r, e, g) - ModPoly(F, {1});
    ModPoly split = gcd(b, g);
    if (split.is_zero() || split.degree() == 0 || split.degree() == g.degree()) continue;
    equal_degree(split, d, rng, out);
    equal_degree(divrem(g, split).quotient, d, rng, out);
    return;
  }
}

bool factor_less(const std::pair<ModPoly, unsigned>& a, const std::pair<ModPoly, unsigned>& b) {
  if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
  const auto& x = a.first.coefficients();
  const auto& y = b.first.coefficients();
  if (x != y) return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
  return a.second < b.second;
}

QPoly specialize(const BiPoly& F, const Rat& t0) {
  std::vector<Rat> c;
  c.reserve(F.size());
  for (const auto& coef : F.coefficients()) c.push_back(evaluate(coef, t0));
  return QPoly(std::move(c));
}

std::vector<bool> subset_sums(const std::vector<std::size_t>& pattern, std::size_t n) {
  std::vector<bool> reach(n + 1, false);
  reach[0] = true;
  for (std::size_t d : pattern)
    for (std::size_t k = n + 1; k-- > d;)
      if (reach[k - d]) reach[k] = true;
  return reach;
}

bool only_trivial(const std::vector<bool>& reach) {
  for (std::size_t k = 1; k + 1 < reach.size(); ++k)
    if (reach[k]) return false;
  return true;
}

std::uint64_t next_odd_prime(std::uint64_t p) {
  do p += 2;
  while (!is_prime_u64(p));
  return p;
}

// Reduction of f mod p when p is unramified for f; nullopt otherwise.
std::optional<ModPoly> unramified_reduction(const QPoly& f, std::uint64_t p) {
  const PrimeField F(p);
  for (const auto& c : f.coefficients())
    if (mpz_divisible_ui_p(c.get_den_mpz_t(), p)) return std::nullopt;
  ModPoly fm = ModPoly::from(F, f);
  if (fm.is_zero() || fm.degree() != f.degree()) return std::nullopt;
  if (!gcd(fm, derivative(fm)).is_one()) return std::nullopt;
  return fm;
}

}  // namespace

ModFactorization factor_mod_p(const ModPoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw std::domain_error("factor_mod_p of the zero polynomial");
  ModFactorization out{f.leading(), {}};
  if (f.degree() == 0) return out;
  std::mt19937_64 rng(seed);
  for (auto& [part, mult] : squarefree_mod_p(monic(f))) {
    for (auto& [block, d] : distinct_degree(part)) {
      std::vector<ModPoly> irreducibles;
      equal_degree(block, d, rng, irreducibles);
      for (auto& g : irreducibles) out.factors.emplace_back(std::move(g), mult);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), factor_less);
  return out;
}

ModPoly expand(const ModFactorization& fac, const PrimeField& field) {
  ModPoly acc(field, {fac.unit});
  for (const auto& [g, m] : fac.factors)
    for (unsigned i = 0; i < m; ++i) acc = acc * g;
  return acc;
}

std::vector<std::size_t> degree_pattern(const ModPoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw std::domain_error("degree_pattern of the zero polynomial");
  if (!gcd(f, derivative(f)).is_one())
    throw NotSquarefree("polynomial is not squarefree mod " + std::to_string(f.field().modulus()));
  std::vector<std::size_t> out;
  for (const auto& [g, m] : factor_mod_p(f, seed).factors) out.push_back(g.degree());
  std::sort(out.begin(), out.end());
  return out;
}

std::variant<IrreducibilityCertificate, Exhausted> irreducibility_certificate(const BiPoly& F,
                                                                             const CertificateSearch& opts) {
  if (F.is_zero() || F.degree() == 0) throw std::invalid_argument("certificate needs positive X-degree");
  if (!F.leading().is_constant()) throw std::invalid_argument("leading X-coefficient must not depend on t");
  const std::size_t n = F.degree();
  std::size_t trials = 0;
  for (long k = 1;; ++k) {
    const Rat t0 = k % 2 ? Rat((k + 1) / 2) : Rat(-(k / 2));
    const QPoly f = specialize(F, t0);
    std::vector<bool> reach(n + 1, true);
    IrreducibilityCertificate cert{t0, {}};
    std::uint64_t p = 1;
    for (std::size_t tried = 0; tried < opts.primes_per_point;) {
      if (trials >= opts.budget) return Exhausted{trials};
      p = next_odd_prime(p);
      ++trials;
      ++tried;
      auto fm = unramified_reduction(f, p);
      if (!fm) continue;
      auto pattern = degree_pattern(*fm, opts.seed);
      auto sums = subset_sums(pattern, n);
      bool useful = false;
      for (std::size_t j = 0; j <= n; ++j)
        if (reach[j] && !sums[j]) {
          reach[j] = false;
          useful = true;
        }
      if (useful) cert.primes.push_back({p, std::move(pattern)});
      if (only_trivial(reach)) return cert;
    }
  }
}

bool check_certificate(const BiPoly& F, const IrreducibilityCertificate& cert, std::uint64_t seed) {
  if (F.is_zero() || !F.leading().is_constant()) return false;
  const std::size_t n = F.degree();
  const QPoly f = specialize(F, cert.t0);
  std::vector<bool> reach(n + 1, true);
  for (const auto& pp : cert.primes) {
    auto fm = unramified_reduction(f, pp.p);
    if (!fm || degree_pattern(*fm, seed) != pp.pattern) return false;
    auto sums = subset_sums(pp.pattern, n);
    for (std::size_t j = 0; j <= n; ++j) reach[j] = reach[j] && sums[j];
  }
  return only_trivial(reach);
}

}  // namespace m24
