#pragma once

// Rational points on V^2 = U^3 + a2 U^2 + a4 U + a6 and the map from curve
// points to parameters s whose branch cubic splits over Q.

#include <optional>
#include <stdexcept>
#include <vector>

#include "m24/exact/poly.hpp"

namespace m24 {

struct CurveSpec {
  Rat a2, a4, a6;

  /// Discriminant of U^3 + a2 U^2 + a4 U + a6.
  Rat cubic_discriminant() const;
  Rat rhs(const Rat& u) const;
  /// Throws invalid_argument when the cubic has a repeated root.
  void validate() const;
};

/// V^2 = U^3 - 38 U^2 + 540 U - 2916, whose points parametrize split branch cubics.
CurveSpec branch_curve();

struct ECPoint {
  bool infinity = true;
  Rat u, v;

  static ECPoint at_infinity() { return {}; }
  static ECPoint affine(Rat u, Rat v) { return {false, std::move(u), std::move(v)}; }
  bool is_integral() const { return infinity || (is_integral_rat(u) && is_integral_rat(v)); }
  friend bool operator==(const ECPoint&, const ECPoint&) = default;

 private:
  static bool is_integral_rat(const Rat& x) { return x.get_den() == 1; }
};

/// (30, 78) on branch_curve().
ECPoint branch_curve_generator();

bool on_curve(const CurveSpec& E, const ECPoint& P);
ECPoint ec_negate(const ECPoint& P);
/// Chord-tangent addition with the point at infinity as identity.
ECPoint ec_add(const CurveSpec& E, const ECPoint& P, const ECPoint& Q);
/// nP by repeated addition (n may be negative).
ECPoint ec_multiple(const CurveSpec& E, const ECPoint& P, long n);

struct Inconclusive : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Evidence that P has infinite order. Mazur bounds torsion orders by 12.
struct NonTorsionCertificate {
  // Multiples route: the first n <= 12 with nP non-integral (torsion points
  // are integral), or all nP (n <= 12) integral and finite.
  std::optional<long> first_nonintegral_multiple;
  bool multiples_route = false;
  // Divisibility route: a torsion point with V != 0 has V^2 | disc.
  Integer discriminant;
  bool v_divides_discriminant = false;
  bool v_squared_divides_discriminant = false;
  bool divisibility_route = false;
};

/// Requires integer curve coefficients and an integral affine point; throws
/// Inconclusive when P is a torsion point.
NonTorsionCertificate nagell_lutz_nontorsion(const CurveSpec& E, const ECPoint& P);

struct UOrigin : std::domain_error {
  using std::domain_error::domain_error;
};

struct ParamChain {
  Rat Z, W, s;
};

/// s(Z) = (1 - 2Z)(9Z^2 + 16Z + 21) / (25 (Z^2 + 1)).
Rat s_of_z(const Rat& Z);

/// Z = 30/U - 2, W = 50 V / (3 U^2), s = s_of_z(Z); UOrigin for U = 0 or
/// the point at infinity.
ParamChain chain_to_s(const ECPoint& P);

/// +1 or -1 when 81 W^2 = sign * (Z + 2)(81 Z^3 + 36 Z^2 + 122 Z - 2), else 0.
int quartic_sign(const ParamChain& c);

struct BranchParameter {
  long n;  // multiple of the generator
  ECPoint point;
  ParamChain chain;
  std::vector<Rat> branch_points;  // rational roots of the branch cubic
};

/// nP for n = 1, 2, ... through chain_to_s, skipping U = 0 and repeated s,
/// until `count` parameters are found. Each one is run through the branch
/// cubic computation and must have three rational branch points (otherwise
/// logic_error); Degenerate propagates.
std::vector<BranchParameter> rational_branch_search(std::size_t count);
std::vector<Rat> rational_branch_parameters(std::size_t count);

}  // namespace m24
