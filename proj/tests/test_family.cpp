#include <doctest.h>

#include <random>

#include "m24/family/family.hpp"

using namespace m24;

namespace {

const QPoly X = QPoly::variable();
const QPoly one{Rat(1)};

std::string replace_once(std::string text, const std::string& from, const std::string& to) {
  text.replace(text.find(from), from.size(), to);
  return text;
}

}  // namespace

TEST_CASE("coefficient table loads and passes its invariants") {
  const auto& d = family_data();
  CHECK(d.A.degree() == 12);
  CHECK(d.B.degree() == 10);
  CHECK(d.A.leading() == QPoly{Rat(4194304)});
  CHECK(d.A.coeff(0).is_zero());
  CHECK(d.B.coeff(0).coeff(0) == 224829);
  CHECK(d.A.coeff(1).degree() == 22);
}

TEST_CASE("dual-entry transcription checksums") {
  const auto text = embedded_family_text();
  const auto& d = family_data();
  CHECK(structured_checksum(d.A) == token_checksum(text, "A"));
  CHECK(structured_checksum(d.B) == token_checksum(text, "B"));
  CHECK(structured_checksum(d.A) != 0);
}

TEST_CASE("malformed tables are rejected") {
  const std::string text(embedded_family_text());
  CHECK_THROWS_AS(parse_family_data(replace_once(text, "12: 4194304", "12: 4194305")), DataError);
  CHECK_THROWS_AS(parse_family_data(replace_once(text, "0: 0", "0: 1")), DataError);
  CHECK_THROWS_AS(parse_family_data(replace_once(text, "12: 4194304", "12: 41943x4")), DataError);
  CHECK_THROWS_AS(parse_family_data(replace_once(text, "[B]", "[C]")), DataError);
  CHECK_THROWS_AS(parse_family_data(replace_once(text, "11: ", "13: ")), DataError);
}

TEST_CASE("eval_family at s = 0 against the printed polynomials") {
  const auto m = eval_family(0);
  const auto& printed = printed_member_s0();
  CHECK(m.B == printed.B);
  for (std::size_t k = 1; k <= 12; ++k) CHECK(m.A.coeff(k) == printed.A.coeff(k));
  CHECK(m.A.coeff(0) == 0);
  CHECK(printed.A.coeff(0) == 9958791);
  CHECK(printed.A - m.A == QPoly{Rat(9958791)});
}

TEST_CASE("degree and leading coefficient of A for any s") {
  for (const Rat s : {Rat(0), Rat(21, 25), Rat(-3), Rat(7, 2), Rat(1)}) {
    const auto m = eval_family(s);
    CHECK(m.A.degree() == 12);
    CHECK(m.A.leading() == 4194304);
  }
}

TEST_CASE("build_cover") {
  const auto cover = build_cover(0);
  CHECK(cover.F.degree() == 24);
  CHECK(cover.F.leading() == QPoly{Rat(Integer("17592186044416"))});
  const auto m = eval_family(0);
  for (std::size_t k = 0; k <= 24; ++k) CHECK(cover.F.coeff(k).coeff(1) == -2 * m.A.coeff(k));
  CHECK(cover.F.coeff(0).coeff(2) == 1);
  for (std::size_t k = 1; k <= 24; ++k) CHECK(cover.F.coeff(k).size() <= 2);
  CHECK(evaluate(specialize(cover, Rat(1)), Rat(0)) == 1 + Rat(224829) * 224829);

  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 9);
  for (const Rat s : {Rat(0), Rat(21, 25), Rat(-1, 2)}) {
    const auto c = build_cover(s);
    const auto ms = eval_family(s);
    for (int i = 0; i < 20; ++i) {
      Rat x(num(rng), den(rng)), t(num(rng), den(rng));
      x.canonicalize();
      t.canonicalize();
      const Rat tma = t - evaluate(ms.A, x);
      const Rat b = evaluate(ms.B, x);
      CHECK(evaluate(specialize(c, t), x) == tma * tma + (x * x + 1) * b * b);
    }
  }
  const BiPoly swapped = swap_variables(cover.F);
  CHECK(swapped.degree() == 2);
  CHECK(swapped.leading() == one);
  CHECK(swap_variables(swapped) == cover.F);
}

TEST_CASE("reconstruct_g: exactly one convention gives the cover") {
  for (const Rat s : {Rat(0), Rat(1, 2), Rat(-1, 2), Rat(2), Rat(21, 25), Rat(-3)}) {
    CAPTURE(to_string(s));
    const auto rc = reconstruct_g(s, Convention::SumOfSquares);
    CHECK(rc.g.degree() == 24);
    CHECK(rc.g.coeff(0) == GaussRat(1024));
    CHECK(rc.g.leading() == GaussRat(1024));
    CHECK(check_conj_symmetry(rc.g));
    CHECK_THROWS_AS(reconstruct_g(s, Convention::DifferenceOfSquares), NotACover);
    CHECK(reconstruct_g(s).convention == Convention::SumOfSquares);
  }
  CHECK_THROWS_AS(reconstruct_g(Rat(1)), std::domain_error);
}

TEST_CASE("reconstructed g at s = 0, top coefficients") {
  const auto rc = reconstruct_g(0);
  const GPoly g = rc.g.scaled(inverse(GaussRat(1024)));
  CHECK(g.coeff(24) == GaussRat(1));
  CHECK(g.coeff(23) == GaussRat(Rat(0), Rat(12)));
  CHECK(g.coeff(22) == GaussRat(Rat(-81), Rat(3, 2)));
  CHECK(g.coeff(21) == GaussRat(Rat(3), Rat(-385)));
  CHECK(g.coeff(20) == GaussRat(Rat(43045, 32), Rat(51)));
}

TEST_CASE("conjugation symmetry detects a perturbation") {
  GPoly g = reconstruct_g(Rat(21, 25)).g;
  CHECK(check_conj_symmetry(g));
  g.set_coeff(5, g.coeff(5) + GaussRat(1));
  CHECK_FALSE(check_conj_symmetry(g));
}
