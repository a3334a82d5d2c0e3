#include <doctest.h>

#include <algorithm>
#include <numbers>

#include "m24/numeric/roots.hpp"

using namespace m24;

TEST_CASE("BigFloat basics") {
  const BigFloat two(2L, 256);
  const BigFloat r = sqrt(two);
  CHECK(abs(r * r - two).exponent() < -250);
  CHECK(BigFloat(Rat(3, 4), 64).to_rat() == Rat(3, 4));
  CHECK(BigFloat(std::string("0x1.8p+1"), 64).to_rat() == 3);
  CHECK(BigFloat(std::string("2.5"), 64).to_rat() == Rat(5, 2));
  CHECK_THROWS_AS(BigFloat(std::string("abc"), 64), std::invalid_argument);
  CHECK(BigFloat(2.5, 64).round() == 2);
  const BigComplex i(0.0, 1.0, 128);
  CHECK((i * i).re() == BigFloat(-1L, 128));
  CHECK((inverse(i) + i).is_zero());
}

TEST_CASE("find_roots: 24th roots of unity") {
  CPoly p(25, BigComplex(512));
  p[0] = BigComplex(Rat(-1), 512);
  p[24] = BigComplex(Rat(1), 512);
  const Fiber f = find_roots(p, 512, 0);
  REQUIRE(f.roots.size() == 24);
  CHECK(f.separation.sign() > 0);
  std::vector<double> args;
  for (const auto& z : f.roots) {
    CHECK(abs(z.abs() - BigFloat(1L, 512)).exponent() < -500);
    args.push_back(z.arg().to_double());
  }
  std::sort(args.begin(), args.end());
  for (std::size_t k = 1; k < args.size(); ++k) CHECK(args[k] - args[k - 1] == doctest::Approx(std::numbers::pi / 12).epsilon(1e-12));
  CHECK(f.max_relative_residual.exponent() < -256);
}

TEST_CASE("find_roots: double root is reported as non-separated") {
  const QPoly X = QPoly::variable();
  const QPoly p = (X - QPoly{Rat(1)}) * (X - QPoly{Rat(1)}) * (X - QPoly{Rat(2)});
  CHECK_THROWS_AS(find_roots(to_cpoly(p, 64), 64, 0), NonSeparated);
}

TEST_CASE("find_roots: seeds agree and large coefficients are fine") {
  const QPoly X = QPoly::variable();
  QPoly p{Rat(1)};
  for (long k = 1; k <= 12; ++k) p *= X - QPoly{Rat(k * 1000003, 7)};
  p *= X * X + QPoly{Rat(Integer("1000000000000000000000"))};
  const Fiber a = find_roots(to_cpoly(p, 256), 256, 1);
  const Fiber b = find_roots(to_cpoly(p, 256), 256, 2);
  for (const auto& z : a.roots) {
    BigFloat best(1e300, 256);
    for (const auto& w : b.roots) best = min(best, (z - w).abs());
    CHECK(best.exponent() < (z.abs().exponent() - 100));
  }
}
