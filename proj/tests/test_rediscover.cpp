#include <doctest.h>

#include <random>

#include "m24/exact/algorithms.hpp"
#include "m24/exact/text.hpp"
#include "m24/family/family.hpp"
#include "m24/numeric/roots.hpp"
#include "m24/ramify/ramify.hpp"
#include "m24/rediscover/lll.hpp"
#include "m24/rediscover/rediscover.hpp"

using namespace m24;

namespace {

const ResidualSystem& system() {
  static const ResidualSystem sys = build_residual_system();
  return sys;
}

const KnownSolution& known_s0() {
  static const KnownSolution ks = extract_known_solution(Rat(0));
  return ks;
}

bool all_zero(const std::vector<GaussRat>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

Rat gram_determinant(const IntMatrix& b) {
  // Product of squared Gram-Schmidt norms, by exact elimination on the Gram matrix.
  const std::size_t n = b.size();
  std::vector<std::vector<Rat>> G(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Integer s = 0;
      for (std::size_t k = 0; k < b[i].size(); ++k) s += b[i][k] * b[j][k];
      G[i][j] = s;
    }
  Rat det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    det *= G[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rat f = G[i][k] / G[k][k];
      for (std::size_t j = k; j < n; ++j) G[i][j] -= f * G[k][j];
    }
  }
  return det;
}

}  // namespace

TEST_CASE("residual system bookkeeping") {
  const ResidualSystem& sys = system();
  CHECK(sys.equation_count() == 49);
  CHECK(sys.unknown_count() == 50);
  CHECK(ResidualSystem::dropped_identities() == std::array<std::size_t, 2>{24, 49});
  // All-zero unknowns: A = B = Y^8, so only w Y^12 and the constant term survive.
  const auto r = sys.residual(std::vector<GaussRat>(kUnknowns, GaussRat(0)));
  REQUIRE(r.size() == 49);
  for (std::size_t i = 0; i < 49; ++i) {
    const GaussRat expected = i == 12 ? GaussRat(1) : i == 48 ? GaussRat(-1) : GaussRat(0);
    CHECK(r[i] == expected);
  }
  CHECK(sys.equation_label(12) == "w^1 coefficient of Y^12");
  CHECK(sys.equation_label(48) == "constant term minus 1");
  CHECK_THROWS_AS(sys.residual(std::vector<GaussRat>(49)), std::invalid_argument);
}

TEST_CASE("Jacobian agrees with finite differences") {
  const ResidualSystem& sys = system();
  const Precision prec = 512;
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> d(-20, 20);
  std::vector<GaussRat> xq(kUnknowns);
  for (auto& v : xq) v = GaussRat(Rat(d(rng), 7), Rat(d(rng), 5));
  const auto x = to_complex(xq, prec);
  const CMatrix J = sys.jacobian(x);
  REQUIRE(J.size() == 49);
  REQUIRE(J[0].size() == 50);
  const auto r0 = sys.residual(x);
  const BigFloat h = BigFloat(1L, prec).mul_2si(-40);
  for (std::size_t j = 0; j < kUnknowns; ++j) {
    auto xp = x;
    xp[j] = xp[j] + BigComplex(h, BigFloat(prec));
    const auto r1 = sys.residual(xp);
    BigFloat err(prec), scale(1L, prec);
    for (std::size_t i = 0; i < 49; ++i) {
      const BigComplex fd = (r1[i] - r0[i]) * (BigFloat(1L, prec) / h);
      err = max(err, (fd - J[i][j]).abs());
      scale = max(scale, J[i][j].abs());
    }
    CHECK(err <= scale.mul_2si(-20));
  }
}

TEST_CASE("known solutions solve the system exactly") {
  const ResidualSystem& sys = system();
  CHECK(all_zero(sys.residual(known_s0().x)));
  CHECK(all_zero(sys.raw_identities(known_s0().x)));
  CHECK(known_s0().scale == 1024);
  for (const Rat& s : {Rat(1, 2), Rat(-1, 2), Rat(21, 25), Rat(2)}) {
    const KnownSolution ks = extract_known_solution(s);
    CHECK(all_zero(sys.residual(ks.x)));
    CHECK(ks.x[48].im == 0);
    CHECK(ks.x[49].im == 0);
    // p and q come from the depressed branch cubic.
    const BranchCubic bc = branch_cubic(s);
    CHECK(ks.x[48].re == bc.p / (ks.scale * ks.scale));
    CHECK(ks.x[49].re == bc.q / (ks.scale * ks.scale * ks.scale));
  }
  CHECK_THROWS_AS(extract_known_solution(Rat(1)), Degenerate);
}

TEST_CASE("Gauss-Newton converges from a perturbed solution") {
  const ResidualSystem& sys = system();
  const Precision prec = 512;
  auto x = to_complex(known_s0().x, prec);
  const BigFloat eps = BigFloat(1L, prec).mul_2si(-33);
  for (auto& v : x) v = v + BigComplex(eps, eps);
  const NewtonResult nr = newton_refine(sys, x, prec);
  CHECK(nr.residual.exponent() < -448);
  CHECK(nr.iterations < 20);
  for (std::size_t k = 1; k < nr.residual_history.size(); ++k) CHECK(nr.residual_history[k] < nr.residual_history[k - 1]);

  const NewtonResult exact = newton_refine(sys, to_complex(known_s0().x, prec), prec);
  CHECK(exact.iterations == 0);
}

TEST_CASE("minimal-norm solve") {
  const Precision prec = 256;
  auto c = [&](long re, long im) { return BigComplex(BigFloat(re, prec), BigFloat(im, prec)); };
  const CMatrix J{{c(1, 0), c(0, 1), c(2, 0)}, {c(0, 0), c(1, 0), c(1, -1)}};
  const std::vector<BigComplex> b{c(3, 1), c(-1, 2)};
  const auto x = min_norm_solve(J, b);
  for (std::size_t i = 0; i < 2; ++i) {
    BigComplex acc(prec);
    for (std::size_t j = 0; j < 3; ++j) acc += J[i][j] * x[j];
    CHECK((acc - b[i]).abs().exponent() < -240);
  }
  // Minimal norm: x is orthogonal to the null space, i.e. x lies in the row space of J^H.
  // The null vector n satisfies J n = 0; check <n, x> = 0.
  const BigComplex n0 = c(0, 1) * c(1, -1) - c(2, 0) * c(1, 0);  // cross product of the rows
  const BigComplex n1 = c(2, 0) * c(0, 0) - c(1, 0) * c(1, -1);
  const BigComplex n2 = c(1, 0) * c(1, 0) - c(0, 1) * c(0, 0);
  const std::vector<BigComplex> nv{n0.conj(), n1.conj(), n2.conj()};
  BigComplex ip(prec);
  for (std::size_t j = 0; j < 3; ++j) ip += nv[j] * x[j];
  CHECK(ip.abs().exponent() < -240);
  CHECK_THROWS_AS(min_norm_solve({{c(1, 0), c(1, 0)}, {c(2, 0), c(2, 0)}}, b), RankDeficient);
}

TEST_CASE("algdep and lindep examples") {
  const auto sq = algdep(sqrt(BigFloat(2L, 256)), 2, 256);
  REQUIRE(sq.has_value());
  CHECK(*sq == ZPoly{Integer(-2), Integer(0), Integer(1)});
  const auto cb = algdep(root(BigFloat(2L, 384), 3), 3, 384);
  REQUIRE(cb.has_value());
  CHECK(*cb == ZPoly{Integer(-2), Integer(0), Integer(0), Integer(1)});
  CHECK_THROWS_AS(algdep(BigFloat(2L, 128), 3, 128), std::invalid_argument);

  // Each root of 5X^3 - 4X + 1 = (X + 1)(5X^2 - 5X + 1).
  const ZPoly f{Integer(1), Integer(-4), Integer(0), Integer(5)};
  const Fiber roots = find_roots(to_cpoly(to_qpoly(f), 384), 384, 0);
  for (const auto& x : roots.roots) {
    const auto p = algdep(x, 3, 384);
    REQUIRE(p.has_value());
    CHECK(divrem(to_qpoly(f), to_qpoly(*p)).remainder.is_zero());
  }

  const BigFloat phi = (BigFloat(1L, 128) + sqrt(BigFloat(5L, 128))) / BigFloat(2L, 128);
  const auto rel = lindep(std::vector<BigFloat>{BigFloat(1L, 128), phi, phi * phi}, 128);
  REQUIRE(rel.has_value());
  CHECK(*rel == std::vector<Integer>{1, 1, -1});
  CHECK_FALSE(lindep(std::vector<BigFloat>{BigFloat(1L, 128), pi(128)}, 128).has_value());
}

TEST_CASE("coefficient relations across the family") {
  // Real part of the Y^23 coefficient of g/lc(g) against the others.
  const Precision prec = 512;
  std::vector<std::pair<BigFloat, BigFloat>> re22, im23;
  std::vector<std::pair<Rat, GPoly>> exact;
  for (const Rat& s : small_height_parameters(10)) {
    const GPoly g = reconstruct_g(s).g;
    const GPoly gn = g.scaled(inverse(g.leading()));
    exact.emplace_back(s, gn);
    re22.emplace_back(BigFloat(gn.coeff(23).re, prec), BigFloat(gn.coeff(22).re, prec));
    im23.emplace_back(BigFloat(gn.coeff(23).re, prec), BigFloat(gn.coeff(23).im, prec));
  }
  const auto rel = polynomial_relation(re22, 4, prec);
  REQUIRE(rel.has_value());
  const auto rel2 = polynomial_relation(im23, 2, prec);
  REQUIRE(rel2.has_value());
  // The relations hold exactly at a fresh parameter.
  const GPoly g = reconstruct_g(Rat(-7, 4)).g;
  const GPoly gn = g.scaled(inverse(g.leading()));
  auto check = [&](const std::vector<Integer>& c, const Rat& x, const Rat& y) {
    Rat acc = 0, pw = 1;
    for (std::size_t d = 0; d + 1 < c.size(); ++d, pw *= x) acc += Rat(c[d]) * pw;
    acc += Rat(c.back()) * y;
    return acc == 0;
  };
  CHECK(check(*rel, gn.coeff(23).re, gn.coeff(22).re));
  CHECK(check(*rel2, gn.coeff(23).re, gn.coeff(23).im));
}

TEST_CASE("property: LLL output is reduced and spans the same lattice") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> dim(2, 6), entry(-1000, 1000);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = static_cast<std::size_t>(dim(rng));
    IntMatrix b(n, std::vector<Integer>(n + 1));
    for (auto& row : b)
      for (auto& x : row) x = entry(rng);
    Rat det;
    try {
      det = gram_determinant(b);
    } catch (...) {
      continue;
    }
    if (sgn(det) == 0) continue;
    const IntMatrix r = lll_reduce(b);
    REQUIRE(is_lll_reduced(r));
    REQUIRE(gram_determinant(r) == det);
  }
}

TEST_CASE("property: algdep recovers random integer polynomials") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> deg(1, 4), coef(-50, 50);
  int exact_hits = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t d = static_cast<std::size_t>(deg(rng));
    std::vector<Integer> c(d + 1);
    for (auto& x : c) x = coef(rng);
    while (sgn(c[d]) == 0) c[d] = coef(rng);
    if (sgn(c[0]) == 0) c[0] = 1;
    const ZPoly f = primitive_part(ZPoly(c));
    const Precision prec = 64 * static_cast<Precision>(d + 1);
    const QPoly fq = to_qpoly(f);
    if (squarefree_part(fq).degree() != fq.degree()) continue;
    const Fiber roots = find_roots(to_cpoly(fq, prec + 64), prec + 64, static_cast<std::uint64_t>(t));
    const auto p = algdep(roots.roots[0], d, prec);
    INFO(format_poly(fq), " root ", roots.roots[0].re().to_string(30), " ", roots.roots[0].im().to_string(30));
    REQUIRE(p.has_value());
    REQUIRE(divrem(fq, to_qpoly(*p)).remainder.is_zero());
    if (*p == f) ++exact_hits;
  }
  CHECK(exact_hits > 500);
}
