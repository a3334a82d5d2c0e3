#include <doctest.h>

#include <random>

#include "m24/exact/algorithms.hpp"
#include "m24/ramify/ramify.hpp"

using namespace m24;

namespace {

QPoly T() { return QPoly::variable(); }
QPoly C(const Rat& c) { return QPoly{c}; }

const BranchCubic& cubic_s0() {
  static const BranchCubic bc = branch_cubic(Rat(0));
  return bc;
}

}  // namespace

TEST_CASE("discriminant at s = 0 is c * D^8 * E^2") {
  const QPoly disc = branch_discriminant(Rat(0));
  CHECK(disc.degree() == 44);
  const BranchCubic& bc = cubic_s0();
  // Factored form computed independently with a computer algebra system.
  const QPoly expected = monic((T().scaled(16) + C(3721329)) *
                               (T() * T().scaled(27) + T().scaled(800382376) + C(Rat(Integer("6028000906231647")))));
  CHECK(bc.D == expected);
  CHECK(bc.nodes.degree() == 10);
  const QPoly shape = power(bc.D, 8) * bc.nodes * bc.nodes;
  CHECK(disc == shape.scaled(disc.leading()));
  CHECK(exact_sqrt(disc.leading()).has_value());
  CHECK(gcd(bc.D, bc.nodes) == C(1));
  CHECK(bc.shift == bc.D.coeff(2) / 3);
  const QPoly depressed = power(T(), 3) + T().scaled(bc.p) + C(bc.q);
  CHECK(compose(bc.D, T() - C(bc.shift)) == depressed);
}

TEST_CASE("interpolated discriminant agrees with direct evaluation at fresh points") {
  const CoverPolynomial cover = build_cover(Rat(2));
  const QPoly disc = branch_discriminant(cover);
  for (const Rat& t0 : {Rat(1, 3), Rat(-7, 5), Rat(1000), Rat(-123, 17)}) CHECK(evaluate(disc, t0) == discriminant_at(cover, t0));
  DiscriminantOptions few;
  few.nodes = 40;
  few.fit_nodes = 30;
  CHECK_THROWS_AS(branch_discriminant(cover, few), InterpolationMismatch);
}

TEST_CASE("s = 1 is degenerate") { CHECK_THROWS_AS(branch_cubic(Rat(1)), Degenerate); }

TEST_CASE("degenerate discriminant shapes are rejected") {
  const QPoly D = power(T(), 3) - C(2);
  CHECK_THROWS_AS(branch_cubic_from_discriminant(Rat(0), QPoly()), Degenerate);
  CHECK_THROWS_AS(branch_cubic_from_discriminant(Rat(0), power(D, 8) * (T() - C(1))), Degenerate);
  CHECK_THROWS_AS(branch_cubic_from_discriminant(Rat(0), power(T() - C(3), 8)), Degenerate);
  const BranchCubic ok = branch_cubic_from_discriminant(Rat(0), power(D, 8).scaled(Rat(4)));
  CHECK(ok.D == D);
  CHECK(ok.nodes == C(1));
}

TEST_CASE("rational roots") {
  const QPoly f = (T().scaled(2) - C(3)) * (T() + C(5)) * (T() * T() + C(2));
  CHECK(rational_roots(f) == std::vector<Rat>{Rat(-5), Rat(3, 2)});
  CHECK(rational_roots(f * f * (T() - C(Rat(1, 7)))) == std::vector<Rat>{Rat(-5), Rat(1, 7), Rat(3, 2)});
  CHECK(rational_roots(T() * T() + C(1)).empty());
  CHECK(rational_roots(C(4)).empty());
}

TEST_CASE("property: rational_roots recovers planted roots") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 12), cnt(0, 4), mult(1, 2);
  for (int i = 0; i < 1000; ++i) {
    std::vector<Rat> planted;
    QPoly f = T() * T() * T() - C(Rat(std::uniform_int_distribution<long>(2, 9)(rng)) * 2 + 1);  // no rational roots
    for (long k = cnt(rng); k > 0; --k) {
      Rat r(num(rng), den(rng));
      r.canonicalize();
      if (std::find(planted.begin(), planted.end(), r) == planted.end()) planted.push_back(r);
      f *= power(T() - C(r), static_cast<unsigned>(mult(rng)));
    }
    std::sort(planted.begin(), planted.end());
    REQUIRE(rational_roots(f.scaled(Rat(num(rng) + 41, 3))) == planted);
  }
}

TEST_CASE("fiber shapes over the branch points") {
  SUBCASE("s = 0: one rational and one quadratic branch point") {
    const RamificationReport rep = verify_branch_shape(Rat(0), cubic_s0());
    CHECK(rep.rational_branch_points == std::vector<Rat>{Rat(-3721329, 16)});
    REQUIRE(rep.shapes.size() == 2);
    CHECK(rep.all_ok());
  }
  SUBCASE("s = 21/25: three rational branch points") {
    const RamificationReport rep = verify_branch_shape(Rat(21, 25), branch_cubic(Rat(21, 25)));
    CHECK(rep.rational_branch_points.size() == 3);
    CHECK(rep.shapes.size() == 3);
    CHECK(rep.all_ok());
  }
  SUBCASE("s = 2: irreducible cubic") {
    const RamificationReport rep = verify_branch_shape(Rat(2), branch_cubic(Rat(2)));
    CHECK(rep.rational_branch_points.empty());
    REQUIRE(rep.shapes.size() == 1);
    CHECK(rep.shapes[0].modulus.degree() == 3);
    CHECK(rep.all_ok());
  }
  SUBCASE("s = -1/2") {
    const RamificationReport rep = verify_branch_shape(Rat(-1, 2), branch_cubic(Rat(-1, 2)));
    CHECK(rep.all_ok());
  }
}

TEST_CASE("fibers away from the branch locus are unramified") {
  const CoverPolynomial cover = build_cover(Rat(0));
  for (const QPoly& m : {T() - C(5), T() * T() + C(1)}) {
    for (const FiberShape& sh : fiber_shapes(cover, m)) {
      CHECK(sh.gcd_degree == 0);
      CHECK(sh.cofactor_degree == 24);
      CHECK_FALSE(sh.ok());
    }
  }
}

TEST_CASE("small height parameters") {
  const auto s = small_height_parameters(10);
  const std::vector<Rat> expected{Rat(0), Rat(-1), Rat(2), Rat(-2), Rat(1, 2), Rat(-1, 2), Rat(3), Rat(-3),
                                  Rat(3, 2), Rat(-3, 2)};
  CHECK(s == expected);
  const auto many = small_height_parameters(500);
  CHECK(many.size() == 500);
  for (std::size_t i = 0; i < many.size(); ++i) {
    CHECK(many[i] != 1);
    for (std::size_t j = 0; j < i; ++j) REQUIRE(many[i] != many[j]);
  }
}

TEST_CASE("degree profile of synthetic cubics") {
  const QPoly a2 = power(T(), 2) + C(1), a1 = power(T(), 3) - T(), a0 = power(T(), 4) + C(2);
  auto sampler = [&](const Rat& s) {
    return power(T(), 3) + T() * T().scaled(evaluate(a2, s)) + T().scaled(evaluate(a1, s)) + C(evaluate(a0, s));
  };
  const DegreeProfile prof = profile_from_sampler(sampler, 12, 4);
  CHECK(prof.samples.size() == 12);
  CHECK(prof.fits[0].numerator == a2);
  CHECK(prof.fits[1].numerator == a1);
  CHECK(prof.fits[2].numerator == a0);
  for (const auto& f : prof.fits) CHECK(f.denominator == C(1));

  // Rational coefficient with a pole away from the samples.
  const QPoly den = T() + C(Rat(9, 4));
  auto rational = [&](const Rat& s) {
    return power(T(), 3) + T() * T() + T() + C(evaluate(a2, s) / evaluate(den, s));
  };
  const DegreeProfile rp = profile_from_sampler(rational, 12, 4);
  CHECK(rp.fits[2].numerator == a2);
  CHECK(rp.fits[2].denominator == den);

  // Degenerate samples are skipped.
  auto skipping = [&](const Rat& s) {
    if (s == 0) throw Degenerate("skip");
    return sampler(s);
  };
  const DegreeProfile sp = profile_from_sampler(skipping, 12, 4);
  CHECK(sp.samples.front() == -1);
  CHECK(sp.fits[2].numerator == a0);
}

TEST_CASE("fit_coefficient rejects data without a low-degree fit") {
  std::vector<std::pair<Rat, Rat>> train, held;
  for (long k = 0; k < 8; ++k) train.emplace_back(Rat(k), Rat(ipow(Integer(3), static_cast<unsigned long>(k * k))));
  for (long k = 8; k < 11; ++k) held.emplace_back(Rat(k), Rat(ipow(Integer(3), static_cast<unsigned long>(k * k))));
  CHECK_THROWS_AS(fit_coefficient(train, held), FitFailure);
}
