#pragma once

// Numerical monodromy of a degree-n cover of the t-line: analytic
// continuation of the fiber roots along loops around the finite branch
// points.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "m24/exact/poly.hpp"
#include "m24/family/family.hpp"
#include "m24/numeric/roots.hpp"
#include "m24/permgrp/permgrp.hpp"

namespace m24 {

/// Polynomial in X whose coefficients are complex polynomials in t.
struct ComplexFamily {
  std::vector<CPoly> coeffs;  // coeffs[k] = coefficient of X^k, as a polynomial in t
  Precision precision = 512;

  CPoly at(const BigComplex& t) const;
  std::size_t degree() const { return coeffs.size() - 1; }
};

ComplexFamily complex_family(const BiPoly& F, Precision prec);
ComplexFamily complex_family(const CoverPolynomial& cover, Precision prec);
/// g(Y) - t Y^mid as a family in Y.
ComplexFamily parametrized_family(const GPoly& g, std::size_t mid, Precision prec);

/// Base fiber with the roots in a canonical order (by real part, then
/// imaginary part), so that permutations do not depend on the root finder's
/// starting values.
struct BaseFiber {
  BigComplex t0;
  Fiber fiber;
};

BaseFiber base_fiber(const ComplexFamily& F, const BigComplex& t0, std::uint64_t seed);

/// Straight segment from the basepoint to the nearest point of the circle
/// |t - center| = radius, one counterclockwise turn, and back.
struct LoopSpec {
  BigComplex basepoint;
  BigComplex center;
  BigFloat radius;
};

struct TrackOptions {
  double max_step_segment = 1.0 / 16;  // fractions of the segment
  double max_step_arc = 1.0 / 64;      // fractions of the full turn
  double move_fraction = 1.0 / 3;      // of the minimal root separation
  std::size_t max_steps = 200000;
  /// Both maximal step sizes halved.
  TrackOptions refined() const;
};

struct TrackingAmbiguity : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TrackResult {
  Perm perm;  // root i of the base fiber ends at root perm(i)
  std::size_t steps = 0;
  std::size_t rejected = 0;
  double min_separation = 0;  // smallest root separation met along the loop
  double match_ratio = 0;     // worst nearest / second-nearest distance at the end
};

TrackResult track_loop(const ComplexFamily& F, const BaseFiber& base, const LoopSpec& loop,
                       const TrackOptions& opts = {});

struct CycleTypeViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LoopConflict : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MonodromyTuple {
  Rat s;
  Precision precision = 0;
  std::uint64_t seed = 0;
  BigComplex basepoint;
  std::vector<BigComplex> branch_points;  // ordered by argument seen from the basepoint
  std::vector<BigFloat> radii;
  std::array<Perm, 3> sigma;
  Perm sigma_inf;  // (sigma[0] sigma[1] sigma[2])^-1
  std::array<TrackResult, 3> tracks;
  BigFloat base_residual;  // max relative residual of the base fiber
};

/// Basepoint centroid + 3 i * (max pairwise distance); loop radius a quarter
/// of the distance to the nearest other branch point.
struct LoopLayout {
  BigComplex basepoint;
  std::vector<BigComplex> centers;
  std::vector<BigFloat> radii;
};
LoopLayout loop_layout(std::vector<BigComplex> branch_points);

/// Monodromy of F_s around its three finite branch points. Tracking
/// ambiguities are retried at doubled precision and then at 3000 bits.
/// Throws CycleTypeViolation unless every sigma has type 2^8 1^8 and
/// sigma_inf has type 12^2.
MonodromyTuple monodromy_tuple(const Rat& s, Precision precision = 512, std::uint64_t seed = 0,
                               const TrackOptions& opts = {});

}  // namespace m24
