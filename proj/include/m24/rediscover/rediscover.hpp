#pragma once

// The 49-equation system whose solutions are degree-24 covers with the
// ramification of the family, an exact solution extracted from the family,
// and Gauss-Newton refinement.
//
// Unknowns (50): non-leading coefficients Y^0..Y^7 of the monic degree-8
// polynomials U0 [0..7] and V0 [24..31], coefficients Y^0..Y^7 of U1 [8..15],
// U2 [16..23], V1 [32..39], V2 [40..47], then p [48] and q [49]. With
// A = U0 + w U1 + w^2 U2 and B = V0 + w V1 + w^2 V2 over w^3 + p w + q = 0,
// the equations say that A^2 B + w Y^12 has no w and w^2 part and constant
// term 1.

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "m24/exact/poly.hpp"
#include "m24/numeric/bigfloat.hpp"
#include "m24/numfield/gauss.hpp"

namespace m24 {

inline constexpr std::size_t kUnknowns = 50;
inline constexpr std::size_t kEquations = 49;

using CMatrix = std::vector<std::vector<BigComplex>>;

class ResidualSystem {
 public:
  /// Raw identities: w^1 part of Y^0..Y^24 [0..24], then w^2 part [25..49].
  std::vector<GaussRat> raw_identities(const std::vector<GaussRat>& x) const;
  /// Indices of the raw identities that vanish for every input.
  static std::array<std::size_t, 2> dropped_identities() { return {24, 49}; }

  /// Equations: w^1 part of Y^0..Y^23 [0..23], w^2 part of Y^0..Y^23
  /// [24..47], constant term minus 1 [48].
  std::vector<GaussRat> residual(const std::vector<GaussRat>& x) const;
  std::vector<BigComplex> residual(const std::vector<BigComplex>& x) const;
  /// 49 x 50 Jacobian by forward-mode dual numbers.
  CMatrix jacobian(const std::vector<BigComplex>& x) const;

  std::size_t equation_count() const { return kEquations; }
  std::size_t unknown_count() const { return kUnknowns; }
  std::string equation_label(std::size_t i) const;
};

/// Builds the system and checks, on random rational inputs, that exactly the
/// two dropped identities vanish identically (logic_error otherwise).
ResidualSystem build_residual_system();

struct NormalizationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct KnownSolution {
  Rat s;
  std::vector<GaussRat> x;  // the 50 unknowns
  Rat scale;                // t = scale * w - shift
  Rat shift;
};

/// Normalizes g so that g/lc(g) has constant term 1 and the branch cubic is
/// depressed, factors g - w Y^12 = A^2 B over Q(i)[w]/(w^3 + p w + q)
/// (splitting into components when the cubic is reducible) and reads off
/// the power-basis coordinates.
KnownSolution extract_known_solution(const Rat& s);

std::vector<BigComplex> to_complex(const std::vector<GaussRat>& x, Precision prec);

struct NoConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RankDeficient : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Minimal-norm solution of J dx = b for a full-row-rank J (m <= n), by
/// Householder QR of J^H.
std::vector<BigComplex> min_norm_solve(const CMatrix& J, const std::vector<BigComplex>& b);

struct NewtonResult {
  std::vector<BigComplex> x;
  std::size_t iterations = 0;
  std::vector<BigFloat> residual_history;  // max |r_i| before each step and at the end
  BigFloat residual;                       // final max |r_i|
};

/// Gauss-Newton with minimal-norm steps until max |r_i| < 2^(-precision+64).
NewtonResult newton_refine(const ResidualSystem& sys, std::vector<BigComplex> start, Precision precision,
                           std::size_t max_iterations = 200);

BigFloat max_abs(const std::vector<BigComplex>& v);

}  // namespace m24
