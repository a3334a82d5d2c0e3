#include <doctest.h>

#include <random>

#include "m24/numfield/nf.hpp"

using namespace m24;

namespace {

QPoly T() { return QPoly::variable(); }
QPoly C(long c) { return QPoly{Rat(c)}; }

GaussRat random_gauss(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-9, 9), den(1, 5);
  Rat re(d(rng), den(rng)), im(d(rng), den(rng));
  re.canonicalize();
  im.canonicalize();
  return {re, im};
}

}  // namespace

TEST_CASE("Gaussian rationals") {
  const GaussRat i = GaussRat::i();
  CHECK(i * i == GaussRat(-1));
  CHECK(inverse(GaussRat(Rat(3), Rat(4))) == GaussRat(Rat(3, 25), Rat(-4, 25)));
  CHECK(to_string(GaussRat(Rat(1, 2), Rat(-3))) == "1/2 - 3*i");
  CHECK(parse_gauss("1/2 - 3*i") == GaussRat(Rat(1, 2), Rat(-3)));
  CHECK(parse_gauss("-i") == GaussRat(Rat(0), Rat(-1)));
  CHECK(parse_gauss("7") == GaussRat(7));
  CHECK_THROWS_AS(inverse(GaussRat()), std::domain_error);
}

TEST_CASE("nf_invert") {
  auto gauss = make_algebra(T() * T() + C(1));
  const auto w = NFElem<Rat>::generator(gauss);
  CHECK(nf_invert(w) == -w);
  auto cube = make_algebra(T() * T() * T() - C(2));
  const auto u = NFElem<Rat>::generator(cube);
  CHECK(nf_invert(u) == NFElem<Rat>(cube, QPoly{Rat(0), Rat(0), Rat(1, 2)}));
  auto split = make_algebra(T() * T() - C(1));
  const auto v = NFElem<Rat>::generator(split) - NFElem<Rat>(1);
  try {
    nf_invert(v);
    FAIL("expected ZeroDivisor");
  } catch (const ZeroDivisor<Rat>& z) {
    CHECK(z.factor == T() - C(1));
  }
  CHECK_THROWS_AS(make_algebra(T() * T()), std::invalid_argument);
}

TEST_CASE("nf_poly_gcd") {
  // Over Q(i) as GaussRat coefficients.
  const GPoly y = GPoly::variable();
  const GPoly a = y * y + GPoly{GaussRat(1)};
  const GPoly b = y - GPoly{GaussRat::i()};
  CHECK(gcd(a, b) == b);

  auto alg = make_algebra(T() * T() * T() - C(2));
  using E = NFElem<Rat>;
  const E w = E::generator(alg);
  const NFPoly<Rat> Y = NFPoly<Rat>::variable();
  const NFPoly<Rat> lin = Y - NFPoly<Rat>{w};
  const NFPoly<Rat> p = lin * lin, q = lin * (Y + NFPoly<Rat>{E(1)});
  CHECK(nf_poly_gcd(p, q) == lin);
}

TEST_CASE("automatic splitting on a zero divisor") {
  // Dividing by (w - 1) Y + 1 needs 1/(w - 1), which fails on the T - 1 component.
  const QPoly m = (T() - C(1)) * (T() - C(2));
  auto parts = run_split(m, [](const AlgebraPtr<Rat>& alg) {
    using E = NFElem<Rat>;
    const NFPoly<Rat> Y = NFPoly<Rat>::variable();
    const NFPoly<Rat> a = Y * NFPoly<Rat>{E::generator(alg) - E(1)} + NFPoly<Rat>{E(1)};
    return nf_poly_gcd(Y, a).degree();
  });
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].modulus == T() - C(1));
  CHECK(parts[1].modulus == T() - C(2));
  CHECK(parts[0].value == 0);
  CHECK(parts[1].value == 0);
}

TEST_CASE("CRT recombination") {
  const QPoly m1 = T() - C(1), m2 = T() + C(1), m3 = T() * T() + C(1);
  const QPoly r = T() * T() * T() + T().scaled(Rat(5)) + C(2);
  std::vector<std::pair<QPoly, QPoly>> res{{m1, divrem(r, m1).remainder},
                                           {m2, divrem(r, m2).remainder},
                                           {m3, divrem(r, m3).remainder}};
  CHECK(crt(res) == r);
}

TEST_CASE("property: inverses, exact division of gcds, conjugation") {
  std::mt19937_64 rng(5);
  auto alg = make_algebra(T() * T() * T() + T().scaled(Rat(3)) + C(7));
  std::uniform_int_distribution<int> d(-9, 9), den(1, 5);
  for (int i = 0; i < 1000; ++i) {
    auto r = [&] {
      Rat v(d(rng), den(rng));
      v.canonicalize();
      return v;
    };
    const NFElem<Rat> x(alg, QPoly{r(), r(), r()});
    if (x.is_zero()) continue;
    REQUIRE(x * nf_invert(x) == NFElem<Rat>(1));
  }
  using E = NFElem<Rat>;
  const E w = E::generator(alg);
  for (int i = 0; i < 200; ++i) {
    auto rnd = [&] { return E(alg, QPoly{Rat(d(rng)), Rat(d(rng)), Rat(d(rng))}); };
    const NFPoly<Rat> Y = NFPoly<Rat>::variable();
    NFPoly<Rat> common = Y - NFPoly<Rat>{rnd()};
    NFPoly<Rat> a = common * (Y * Y + NFPoly<Rat>{rnd()}), b = common * (Y + NFPoly<Rat>{w + rnd()});
    NFPoly<Rat> g = nf_poly_gcd(a, b);
    REQUIRE(g.degree() >= 1);
    REQUIRE(divrem(a, g).remainder.is_zero());
    REQUIRE(divrem(b, g).remainder.is_zero());
  }
  for (int i = 0; i < 1000; ++i) {
    GPoly a{random_gauss(rng), random_gauss(rng), random_gauss(rng)};
    GPoly b{random_gauss(rng), random_gauss(rng)};
    REQUIRE(conj(a * b) == conj(a) * conj(b));
  }
}
