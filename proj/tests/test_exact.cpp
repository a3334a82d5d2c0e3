#include <doctest.h>

#include <random>

#include "m24/exact/algorithms.hpp"
#include "m24/exact/laurent.hpp"
#include "m24/exact/text.hpp"

using namespace m24;

namespace {

QPoly X() { return QPoly::variable(); }
QPoly C(long c) { return QPoly{Rat(c)}; }

QPoly random_poly(std::mt19937_64& rng, int max_degree, int height = 9) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> num(-height, height);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rat> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) {
    x = Rat(num(rng), den(rng));
    x.canonicalize();
  }
  return QPoly(std::move(c));
}

QPoly random_nonzero(std::mt19937_64& rng, int max_degree) {
  QPoly p;
  while (p.is_zero()) p = random_poly(rng, max_degree);
  return p;
}

// Sylvester determinant by fraction-free Bareiss elimination.
Rat sylvester_resultant(const QPoly& a, const QPoly& b) {
  const std::size_t m = a.degree(), n = b.degree(), N = m + n;
  if (N == 0) return 1;
  std::vector<std::vector<Rat>> M(N, std::vector<Rat>(N));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) M[r][r + k] = a.coeff(m - k);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) M[n + r][r + k] = b.coeff(n - k);
  Rat prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < N; ++k) {
    if (sgn(M[k][k]) == 0) {
      std::size_t piv = k + 1;
      while (piv < N && sgn(M[piv][k]) == 0) ++piv;
      if (piv == N) return 0;
      std::swap(M[k], M[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < N; ++i) {
      for (std::size_t j = k + 1; j < N; ++j) M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
      M[i][k] = 0;
    }
    prev = M[k][k];
  }
  return sign * M[N - 1][N - 1];
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rat("21/25") == Rat(21, 25));
  CHECK(parse_rat("-6/4") == Rat(-3, 2));
  CHECK(to_string(parse_rat(" 10/5 ")) == "2");
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("3x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/-2"), std::invalid_argument);
  CHECK(*exact_sqrt(Rat(9, 49)) == Rat(3, 7));
  CHECK_FALSE(exact_sqrt(Rat(2)).has_value());
  CHECK_FALSE(exact_sqrt(Rat(-4)).has_value());
}

TEST_CASE("poly_gcd") {
  const QPoly a = (X() - C(1)) * (X() - C(1)) * (X() + C(2));
  const QPoly b = (X() - C(1)) * (X() + C(3));
  CHECK(gcd(a, b) == X() - C(1));
  CHECK(gcd(X() * X() - C(2), X() * X() * X()) == C(1));
  CHECK(gcd(QPoly(), QPoly()).is_zero());
  CHECK(gcd(QPoly(), b.scaled(Rat(3))) == b);
}

TEST_CASE("resultant and discriminant") {
  CHECK(resultant(X() * X() - C(1), X() - C(2)) == 3);
  CHECK(resultant(X() * X() + C(1), X() * X() + C(1)) == 0);
  CHECK_THROWS_AS(resultant(QPoly(), X()), std::domain_error);
  CHECK(discriminant(X() * X() - C(2)) == 8);
  CHECK(discriminant((X() - C(1)) * (X() - C(1))) == 0);
  CHECK_THROWS_AS(discriminant(C(5)), std::domain_error);
  // Weierstrass cubic of the parameter curve; value from b^2c^2 - 4c^3 - 4b^3d - 27d^2 + 18bcd.
  const QPoly cubic{Rat(-2916), Rat(540), Rat(-38), Rat(1)};
  const Rat d = discriminant(cubic);
  CHECK(d == -1341360);
  CHECK(d.get_num() % 78 != 0);
}

TEST_CASE("squarefree part and decomposition") {
  const QPoly a = (X() - C(1)) * (X() - C(1)) * (X() + C(2));
  CHECK(squarefree_part(a) == (X() - C(1)) * (X() + C(2)));
  CHECK(squarefree_part(power(X(), 5)) == X());
  const QPoly f = (X() + C(3)) * power(X() - C(1), 2) * power(X() * X() + C(1), 4);
  auto parts = squarefree_decomposition(f.scaled(Rat(7, 2)));
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].factor == X() + C(3));
  CHECK(parts[0].multiplicity == 1);
  CHECK(parts[1].factor == X() - C(1));
  CHECK(parts[1].multiplicity == 2);
  CHECK(parts[2].factor == X() * X() + C(1));
  CHECK(parts[2].multiplicity == 4);
}

TEST_CASE("interpolate") {
  std::vector<std::pair<Rat, Rat>> pts{{0, 1}, {1, 2}, {2, 5}};
  CHECK(interpolate(pts) == X() * X() + C(1));
  pts.push_back({1, 7});
  CHECK_THROWS_AS(interpolate(pts), std::invalid_argument);
}

TEST_CASE("exact_poly_sqrt") {
  CHECK(*exact_poly_sqrt(X() * X() + X().scaled(Rat(2)) + C(1)) == X() + C(1));
  CHECK_FALSE(exact_poly_sqrt(X() * X() + C(1)).has_value());
  CHECK_FALSE(exact_poly_sqrt(power(X(), 3)).has_value());
  CHECK_FALSE(exact_poly_sqrt(C(-4)).has_value());
}

TEST_CASE("text and json forms") {
  const QPoly p{Rat(-1, 2), Rat(0), Rat(3), Rat(-1)};
  CHECK(format_poly(p) == "-1/2 + 3*X^2 - X^3");
  CHECK(parse_poly(format_poly(p)) == p);
  CHECK(parse_poly("X^2 + -3/4*X + 2 - X^2 + X") == QPoly{Rat(2), Rat(1, 4)});
  CHECK(poly_from_json(poly_to_json(p)) == p);
  CHECK(poly_to_json(p).dump() == R"(["-1/2","0","3","-1"])");
  CHECK_THROWS_AS(parse_poly("3*Y"), std::invalid_argument);
}

TEST_CASE("laurent polynomials") {
  using L = LaurentPoly<Rat>;
  const L y = L::monomial(Rat(1), 1), inv = L::monomial(Rat(1), -1);
  const L u = (y + inv) * (y - inv);
  CHECK(u.valuation() == -2);
  CHECK(u.top() == 2);
  CHECK(u.coeff(0) == 0);
  CHECK(u.times_power(2) == power(X(), 4) - C(1));
  CHECK_THROWS_AS(u.times_power(1), std::domain_error);
  CHECK((u - u).is_zero());
}

TEST_CASE("property: ring axioms on Poly and BiPoly") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const QPoly a = random_poly(rng, 8), b = random_poly(rng, 8), c = random_poly(rng, 8);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a + (-a)).is_zero());
    REQUIRE(a * b == b * a);
  }
  for (int i = 0; i < 1000; ++i) {
    auto bi = [&] {
      std::vector<QPoly> c(std::uniform_int_distribution<int>(1, 4)(rng));
      for (auto& x : c) x = random_poly(rng, 3, 5);
      return BiPoly(std::move(c));
    };
    const BiPoly a = bi(), b = bi(), c = bi();
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a - a).is_zero());
  }
}

TEST_CASE("property: divrem and gcd divisibility") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 1000; ++i) {
    const QPoly a = random_poly(rng, 8), b = random_nonzero(rng, 6);
    auto qr = divrem(a, b);
    REQUIRE(qr.quotient * b + qr.remainder == a);
    REQUIRE((qr.remainder.is_zero() || qr.remainder.degree() < b.degree()));
  }
  for (int i = 0; i < 1000; ++i) {
    const QPoly common = random_nonzero(rng, 3);
    const QPoly a = common * random_nonzero(rng, 4), b = common * random_nonzero(rng, 4);
    const QPoly g = gcd(a, b);
    REQUIRE(divrem(a, g).remainder.is_zero());
    REQUIRE(divrem(b, g).remainder.is_zero());
    REQUIRE(divrem(g, monic(common)).remainder.is_zero());
    REQUIRE(g == monic(g));
    REQUIRE(g == gcd(a, b));
  }
}

TEST_CASE("property: resultant against Sylvester and root-difference oracles") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const QPoly a = random_nonzero(rng, 4), b = random_nonzero(rng, 4), c = random_nonzero(rng, 4);
    const Rat rab = resultant(a, b);
    REQUIRE(rab == sylvester_resultant(a, b));
    REQUIRE(rab == resultant_euclid(a, b));
    const long sign = (a.degree() * b.degree()) % 2 ? -1 : 1;
    REQUIRE(resultant(b, a) == sign * rab);
    REQUIRE(resultant(a, b * c) == rab * resultant(a, c));
  }
  std::uniform_int_distribution<int> root(-6, 6), count(1, 4);
  for (int i = 0; i < 1000; ++i) {
    std::vector<int> ra(count(rng)), rb(count(rng));
    QPoly a = C(1), b = C(1);
    for (auto& r : ra) a *= X() - C(r = root(rng));
    for (auto& r : rb) b *= X() - C(r = root(rng));
    Rat expected = 1;
    for (int x : ra)
      for (int y : rb) expected *= x - y;
    REQUIRE(resultant(a, b) == expected);
  }
}

TEST_CASE("property: exact_poly_sqrt of squares and interpolation roundtrip") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 1000; ++i) {
    const QPoly r = random_nonzero(rng, 10);
    auto s = exact_poly_sqrt(r * r);
    REQUIRE(s.has_value());
    REQUIRE((*s == r || *s == -r));
  }
  for (int i = 0; i < 1000; ++i) {
    const QPoly p = random_poly(rng, 8);
    const std::size_t n = p.size() + std::uniform_int_distribution<std::size_t>(0, 2)(rng);
    std::vector<std::pair<Rat, Rat>> pts;
    for (std::size_t k = 0; k < n; ++k) {
      Rat x(static_cast<long>(k) * 3 - 7, 2);
      x.canonicalize();
      pts.emplace_back(x, evaluate(p, x));
    }
    REQUIRE(interpolate(pts) == p);
  }
}
