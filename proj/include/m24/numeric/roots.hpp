#pragma once

// Simultaneous root finding for complex polynomials (Aberth-Ehrlich) with
// inclusion-disc separation bounds.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "m24/exact/poly.hpp"
#include "m24/numeric/bigfloat.hpp"

namespace m24 {

using CPoly = std::vector<BigComplex>;  // index = degree

struct NonSeparated : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoRootConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Fiber {
  std::vector<BigComplex> roots;
  /// Lower bound on the distance between any two true roots, from the
  /// inclusion discs around the approximations.
  BigFloat separation;
  /// Largest inclusion radius n |p(z)/p'(z)|.
  BigFloat max_radius;
  /// max |p(z)| / (sum |a_k|) max(1, |z|)^n over the roots.
  BigFloat max_relative_residual;
};

CPoly to_cpoly(const QPoly& p, Precision prec);
CPoly to_cpoly(const Poly<GaussRat>& p, Precision prec);

/// All roots of p (degree >= 1, nonzero leading coefficient), polished until
/// the relative residual is below 2^(-prec/2). Throws NonSeparated when the
/// inclusion discs of two roots overlap.
Fiber find_roots(const CPoly& p, Precision prec, std::uint64_t seed);

/// Normwise relative residual |p(z)| / (sum |a_k|) max(1, |z|)^n. The
/// componentwise form breaks down at a root 0 with vanishing constant term.
BigFloat relative_residual(const CPoly& p, const BigComplex& z);

/// Newton refinement of given approximations; returns the fiber with
/// updated bounds. Throws NonSeparated as find_roots does.
Fiber polish_roots(const CPoly& p, std::vector<BigComplex> roots, Precision prec);

}  // namespace m24
