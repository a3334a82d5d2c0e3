#pragma once

// Branch locus of the cover F_s: the discriminant in X as a polynomial in t,
// the cubic whose roots are the finite branch points, exact verification of
// the local ramification shape, and the s-degree profile of the cubic.

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "m24/exact/poly.hpp"
#include "m24/family/family.hpp"

namespace m24 {

struct DiscriminantOptions {
  std::size_t nodes = 120;     // integer t-values 0, 1, -1, 2, -2, ...
  std::size_t fit_nodes = 95;  // used for interpolation; the rest are checks
};

struct InterpolationMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

/// disc_X(F_s(X, t0)) for one rational t0, directly.
Rat discriminant_at(const CoverPolynomial& cover, const Rat& t0);

/// disc_X(F_s)(t) by evaluation at integer nodes and interpolation. The
/// nodes beyond fit_nodes must agree with the interpolant, otherwise
/// InterpolationMismatch.
QPoly branch_discriminant(const Rat& s, const DiscriminantOptions& opts = {});
QPoly branch_discriminant(const CoverPolynomial& cover, const DiscriminantOptions& opts = {});

struct Degenerate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BranchCubic {
  Rat s;
  QPoly D;      // monic, degree 3, squarefree
  Rat shift;    // a2 / 3 where D = T^3 + a2 T^2 + a1 T + a0
  Rat p, q;     // D(T - shift) = T^3 + p T + q
  QPoly nodes;  // monic squarefree cofactor: disc = c * D^8 * nodes^2
};

/// Splits the discriminant as c * D^8 * E^2 with D a squarefree cubic and E
/// squarefree and coprime to D; throws Degenerate when the discriminant
/// does not have this shape.
BranchCubic branch_cubic_from_discriminant(const Rat& s, const QPoly& disc);
BranchCubic branch_cubic(const Rat& s, const DiscriminantOptions& opts = {});

/// Distinct rational roots, in increasing order.
std::vector<Rat> rational_roots(const QPoly& f);

struct FiberShape {
  QPoly modulus;  // factor of D (degree 1 for a rational branch point)
  std::size_t gcd_degree = 0;
  std::size_t cofactor_degree = 0;
  bool gcd_squarefree = false;
  bool cofactor_squarefree = false;
  bool coprime = false;
  /// Inertia of cycle type 2^8 1^8.
  bool ok() const {
    return gcd_degree == 8 && cofactor_degree == 8 && gcd_squarefree && cofactor_squarefree && coprime;
  }
};

struct RamificationReport {
  Rat s;
  BranchCubic cubic;
  std::vector<Rat> rational_branch_points;
  std::vector<FiberShape> shapes;  // one per component of Q[T]/(D)
  bool all_ok() const;
};

struct ShapeViolation : std::runtime_error {
  ShapeViolation(const std::string& what, FiberShape shape) : std::runtime_error(what), shape(std::move(shape)) {}
  FiberShape shape;
};

/// Fiber shape of F_s over the root(s) of `factor` (a factor of D or any
/// polynomial in t), computed in Q[T]/(factor) with automatic splitting.
std::vector<FiberShape> fiber_shapes(const CoverPolynomial& cover, const QPoly& factor);

/// Certifies cycle type 2^8 1^8 over every finite branch point; throws
/// ShapeViolation with the offending degrees otherwise.
RamificationReport verify_branch_shape(const Rat& s, const BranchCubic& cubic);

/// Fit of one coefficient function c(s) = N(s) / Q(s), Q monic.
struct CoefficientFit {
  QPoly numerator;
  QPoly denominator;  // 1 when the fit is polynomial
  std::size_t numerator_degree() const { return numerator.is_zero() ? 0 : numerator.degree(); }
  std::size_t denominator_degree() const { return denominator.degree(); }
};

struct FitFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Fits samples (s_i, c_i): polynomial interpolation first, then rational
/// functions with denominator degree 1..max_den_degree; every candidate
/// must reproduce the held-out samples exactly.
CoefficientFit fit_coefficient(const std::vector<std::pair<Rat, Rat>>& training,
                               const std::vector<std::pair<Rat, Rat>>& held_out, std::size_t max_den_degree = 3);

struct DegreeProfile {
  std::vector<Rat> samples;   // s values used (training first, then held out)
  std::size_t held_out = 0;
  std::array<CoefficientFit, 3> fits;  // coefficients of T^2, T^1, T^0
};

/// Parameter values p/q ordered by height max(|p|, q), then q, then |p|,
/// positive first: 0, -1, 2, -2, 1/2, -1/2, 3, -3, 3/2, ... (s = 1 omitted).
std::vector<Rat> small_height_parameters(std::size_t count);

/// Generic profile over any monic-cubic sampler (used with branch_cubic and
/// with synthetic fixtures).
DegreeProfile profile_from_sampler(const std::function<QPoly(const Rat&)>& cubic_at, std::size_t sample_count,
                                   std::size_t held_out = 20);

/// Profile of the branch cubic; needs sample_count >= 140.
DegreeProfile degree_profile(std::size_t sample_count, const DiscriminantOptions& opts = {});

}  // namespace m24
