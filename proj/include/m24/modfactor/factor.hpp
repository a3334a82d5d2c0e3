#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "m24/exact/poly.hpp"
#include "m24/modfactor/modpoly.hpp"

namespace m24 {

struct ModFactorization {
  std::uint64_t unit;                                // leading coefficient of the input
  std::vector<std::pair<ModPoly, unsigned>> factors;  // monic irreducibles, sorted by (degree, coefficients)
};

/// Complete factorization: squarefree decomposition, distinct-degree
/// splitting, then Cantor-Zassenhaus equal-degree splitting driven by `seed`.
ModFactorization factor_mod_p(const ModPoly& f, std::uint64_t seed);

ModPoly expand(const ModFactorization& fac, const PrimeField& field);

struct NotSquarefree : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Sorted degrees of the irreducible factors of a squarefree f.
std::vector<std::size_t> degree_pattern(const ModPoly& f, std::uint64_t seed);

/// Multiset of factor degrees at one unramified prime.
struct PrimePattern {
  std::uint64_t p;
  std::vector<std::size_t> pattern;
};

/// Irreducibility witness for F(X, t) over Q(t). Every factor of F(X, t0)
/// over Q has a degree that is a subset sum of each pattern; when the subset
/// sums of all patterns share only 0 and deg F, F(X, t0) is irreducible over
/// Q, and since the leading X-coefficient of F is constant in t, F is
/// irreducible over Q(t).
struct IrreducibilityCertificate {
  Rat t0;
  std::vector<PrimePattern> primes;
};

struct Exhausted {
  std::size_t trials;
};

struct CertificateSearch {
  std::size_t budget = 500;           // total (t0, p) trials
  std::size_t primes_per_point = 12;  // unramified primes tried before moving to the next t0
  std::uint64_t seed = 0;
};

/// Grid search over t0 = 1, -1, 2, -2, ... and odd primes 3, 5, 7, ...
/// F is a polynomial in X whose coefficients are polynomials in t.
std::variant<IrreducibilityCertificate, Exhausted> irreducibility_certificate(const BiPoly& F,
                                                                             const CertificateSearch& opts = {});

/// Checks a certificate from scratch.
bool check_certificate(const BiPoly& F, const IrreducibilityCertificate& cert, std::uint64_t seed = 0);

}  // namespace m24
