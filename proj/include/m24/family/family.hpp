#pragma once

// The degree-24 family: coefficient data A(s, X), B(s, X), the cover
// F_s(X, t) = (t - A_s(X))^2 + (X^2 + 1) B_s(X)^2 and the rational
// parametrization t = g(Y) / Y^12 over Q(i).

#include <optional>
#include <stdexcept>
#include <string_view>

#include "m24/exact/laurent.hpp"
#include "m24/exact/poly.hpp"
#include "m24/numfield/gauss.hpp"

namespace m24 {

/// Outer variable X, inner variable s.
struct FamilyData {
  BiPoly A;
  BiPoly B;
};

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses the sectioned text format of family_coeffs.txt and checks the
/// structural invariants (degrees, leading and constant terms).
FamilyData parse_family_data(std::string_view text);

/// The embedded coefficient table, parsed and validated on first use.
const FamilyData& family_data();
std::string_view embedded_family_text();

/// A(1, 1) or B(1, 1) from the parsed structure.
Integer structured_checksum(const BiPoly& p);
/// Plain sum of every integer token in one section ("A" or "B") of the raw
/// text, read without any knowledge of the line structure.
Integer token_checksum(std::string_view text, std::string_view section);

struct FamilyMember {
  QPoly A;
  QPoly B;
};

FamilyMember eval_family(const Rat& s);

/// The s = 0 polynomials as printed next to the family (A carries an extra
/// constant term relative to the coefficient table).
const FamilyMember& printed_member_s0();

struct CoverPolynomial {
  BiPoly F;  // outer X, inner t
  Rat s;
};

CoverPolynomial build_cover(const Rat& s);

/// F_s(X, t0) as a polynomial in X.
QPoly specialize(const CoverPolynomial& cover, const Rat& t0);

/// Exchanges the roles of the variables: the result has outer variable t.
BiPoly swap_variables(const BiPoly& p);

enum class Convention {
  SumOfSquares,        // x^2 + z^2 = b, z = (Y - b/Y) / (2i)
  DifferenceOfSquares  // x^2 - z^2 = b, z = (Y - b/Y) / 2
};

const char* to_string(Convention c);

struct ReconstructedCover {
  GPoly g;  // degree 24, t = g(Y) / Y^12
  Convention convention;
  Rat b;  // x^2 +- z^2 = b, fixed to -1
  Rat s;
};

struct NotACover : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// x(Y) = (Y + b/Y) / 2 with b = -1.
LaurentPoly<GaussRat> x_of_y();

/// Substitutes x(Y) and z(Y) into t = A(x) + z B(x), clears Y^12 and checks
/// exactly that F_s(x(Y), g(Y)/Y^12) vanishes. Throws NotACover otherwise.
ReconstructedCover reconstruct_g(const Rat& s, Convention convention);

/// Tries both conventions; returns the one that yields a cover.
ReconstructedCover reconstruct_g(const Rat& s);

/// conj(f)(Y) == f(-1/Y) for f = g / Y^12, checked exactly.
bool check_conj_symmetry(const GPoly& g);

}  // namespace m24
