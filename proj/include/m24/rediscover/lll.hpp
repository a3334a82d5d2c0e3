#pragma once

// Exact LLL reduction and integer relation detection.

#include <optional>
#include <vector>

#include "m24/exact/poly.hpp"
#include "m24/numeric/bigfloat.hpp"

namespace m24 {

using IntMatrix = std::vector<std::vector<Integer>>;  // rows are basis vectors

/// LLL with exact rational Gram-Schmidt data; rows must be linearly
/// independent.
IntMatrix lll_reduce(IntMatrix basis, const Rat& delta = Rat(99, 100));

/// Size reduction |mu_ij| <= 1/2 and the Lovasz condition, recomputed from
/// scratch.
bool is_lll_reduced(const IntMatrix& basis, const Rat& delta = Rat(99, 100));

struct LindepOptions {
  /// Largest admissible |c_i|; default 2^(precision / (2 n)).
  std::optional<Integer> max_coefficient;
};

/// Integer vector c with |sum_i c_i v_i[col]| <= 2^(-precision/2) max_i |v_i[col]|
/// in every column, found by LLL on the relation lattice. Several columns
/// ask for a relation that holds simultaneously (real and imaginary parts,
/// or several samples). The first nonzero entry of c is positive.
std::optional<std::vector<Integer>> lindep_columns(const std::vector<std::vector<BigFloat>>& v, Precision precision,
                                                   const LindepOptions& opts = {});
std::optional<std::vector<Integer>> lindep(const std::vector<BigFloat>& v, Precision precision,
                                           const LindepOptions& opts = {});
std::optional<std::vector<Integer>> lindep(const std::vector<BigComplex>& v, Precision precision,
                                           const LindepOptions& opts = {});

/// Lowest-degree integer polynomial (primitive, positive leading coefficient)
/// of degree <= max_degree with a root within 2^(-precision/2) of x.
/// Requires precision >= 64 (max_degree + 1).
std::optional<ZPoly> algdep(const BigComplex& x, std::size_t max_degree, Precision precision);
std::optional<ZPoly> algdep(const BigFloat& x, std::size_t max_degree, Precision precision);

/// Integer relation sum_r a_r x^r = a y holding at every sample (x_j, y_j),
/// with deg <= max_degree; returned as the coefficients (a_0, ..., a_d, -a)
/// of the monomials 1, x, ..., x^d, y.
std::optional<std::vector<Integer>> polynomial_relation(const std::vector<std::pair<BigFloat, BigFloat>>& samples,
                                                        std::size_t max_degree, Precision precision);

}  // namespace m24
