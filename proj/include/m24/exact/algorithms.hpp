#pragma once

// Classical algorithms on integer and rational polynomials.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "m24/exact/poly.hpp"

namespace m24 {

// ---- integer polynomials ----------------------------------------------------

/// Nonnegative gcd of the coefficients.
Integer content(const ZPoly& p);

/// p / content(p), normalized to a positive leading coefficient.
ZPoly primitive_part(const ZPoly& p);

/// Remainder of lc(b)^(deg a - deg b + 1) * a divided by b.
ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b);

/// Resultant over Z by the subresultant remainder sequence.
Integer resultant_subresultant(const ZPoly& a, const ZPoly& b);

/// Greatest common divisor over Z (primitive remainder sequence), with a
/// positive leading coefficient.
ZPoly gcd_primitive(const ZPoly& a, const ZPoly& b);

/// p = numerator / denominator with integral numerator and positive denominator.
struct ClearedPoly {
  ZPoly numerator;
  Integer denominator;
};

ClearedPoly clear_denominators(const QPoly& p);
QPoly to_qpoly(const ZPoly& p);

// ---- rational polynomials ---------------------------------------------------

/// Monic gcd over Q; gcd(0, 0) = 0.
QPoly gcd(const QPoly& a, const QPoly& b);

/// Res(a, b); both inputs must be nonzero.
Rat resultant(const QPoly& a, const QPoly& b);

/// (-1)^(n(n-1)/2) Res(a, a') / lc(a); a must have positive degree.
Rat discriminant(const QPoly& a);

/// Monic product of the distinct irreducible factors of a.
QPoly squarefree_part(const QPoly& a);

struct SquarefreeFactor {
  QPoly factor;  // monic, squarefree
  unsigned multiplicity;
};

/// Yun's decomposition a = lc(a) * prod factor_i^multiplicity_i with the
/// factors pairwise coprime. Factors are listed by increasing multiplicity.
std::vector<SquarefreeFactor> squarefree_decomposition(const QPoly& a);

/// Unique polynomial of degree < points.size() through the given points.
QPoly interpolate(std::span<const std::pair<Rat, Rat>> points);

/// r with r^2 = a (positive leading coefficient) or nullopt when a is not a
/// square in Q[X].
std::optional<QPoly> exact_poly_sqrt(const QPoly& a);

}  // namespace m24
