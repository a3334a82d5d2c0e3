#include <doctest.h>

#include "m24/monodromy/monodromy.hpp"

using namespace m24;

namespace {

const Integer kMathieuOrder(244823040);

const MonodromyTuple& tuple_s0() {
  static const MonodromyTuple mt = monodromy_tuple(Rat(0));
  return mt;
}

std::vector<int> involution_type() {
  std::vector<int> t(8, 2);
  t.insert(t.end(), 8, 1);
  return t;
}

BigComplex centroid(const std::vector<BigComplex>& pts) {
  const Precision prec = pts.front().precision();
  BigComplex c(prec);
  for (const auto& p : pts) c += p;
  const BigFloat n(static_cast<long>(pts.size()), prec);
  return {c.re() / n, c.im() / n};
}

}  // namespace

TEST_CASE("monodromy at s = 0") {
  const MonodromyTuple& mt = tuple_s0();
  for (const auto& sg : mt.sigma) {
    CHECK(sg.cycle_type() == involution_type());
    CHECK((sg * sg).is_identity());
  }
  CHECK(mt.sigma_inf.cycle_type() == std::vector<int>{12, 12});
  CHECK(mt.sigma_inf.order() == 12);
  CHECK((mt.sigma[0] * mt.sigma[1] * mt.sigma[2] * mt.sigma_inf).is_identity());
  const std::vector<Perm> gens(mt.sigma.begin(), mt.sigma.end());
  CHECK(group_order(gens) == kMathieuOrder);
  CHECK(is_k_transitive(gens, 1));
  CHECK(is_k_transitive(gens, 2));
  CHECK(is_k_transitive(gens, 5));
  CHECK(mt.base_residual.exponent() < -256);
  for (const auto& tr : mt.tracks) CHECK(tr.match_ratio < 0.1);
}

TEST_CASE("monodromy is stable under precision, seed and discretization") {
  const MonodromyTuple& mt = tuple_s0();
  const MonodromyTuple hi = monodromy_tuple(Rat(0), 1024, 0);
  const MonodromyTuple other_seed = monodromy_tuple(Rat(0), 512, 7);
  TrackOptions fine;
  fine = fine.refined();
  const MonodromyTuple refined = monodromy_tuple(Rat(0), 512, 0, fine);
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(hi.sigma[j] == mt.sigma[j]);
    CHECK(other_seed.sigma[j] == mt.sigma[j]);
    CHECK(refined.sigma[j] == mt.sigma[j]);
    CHECK(refined.tracks[j].steps > mt.tracks[j].steps);
  }
}

TEST_CASE("loops around nothing and around everything") {
  const MonodromyTuple& mt = tuple_s0();
  const ComplexFamily F = complex_family(build_cover(Rat(0)), 512);
  const BaseFiber base = base_fiber(F, mt.basepoint, 0);
  const BigComplex c = centroid(mt.branch_points);
  BigFloat maxd(512);
  for (const auto& a : mt.branch_points)
    for (const auto& b : mt.branch_points) maxd = max(maxd, (a - b).abs());

  // A small circle far from every branch point.
  const LoopSpec empty{mt.basepoint, BigComplex(c.re() + maxd, c.im() + maxd), maxd.mul_2si(-3)};
  CHECK(track_loop(F, base, empty).perm.is_identity());

  // A circle around all three finite branch points is the product of the
  // three loops in order.
  const LoopSpec all{mt.basepoint, c, maxd * BigFloat(2L, 512)};
  const TrackResult big = track_loop(F, base, all);
  CHECK(big.perm == mt.sigma[0] * mt.sigma[1] * mt.sigma[2]);
  CHECK(big.perm.inverse() == mt.sigma_inf);
}

TEST_CASE("monodromy at s = 21/25") {
  const MonodromyTuple mt = monodromy_tuple(Rat(21, 25));
  for (const auto& sg : mt.sigma) CHECK(sg.cycle_type() == involution_type());
  CHECK(mt.sigma_inf.cycle_type() == std::vector<int>{12, 12});
  for (const auto& b : mt.branch_points) CHECK(b.im().exponent() < -400);  // real, in fact rational
  CHECK(group_order({mt.sigma[0], mt.sigma[1], mt.sigma[2]}) == kMathieuOrder);
}

TEST_CASE("parametrized fiber maps onto the cover fiber") {
  const ReconstructedCover rc = reconstruct_g(Rat(0));
  const Precision prec = 512;
  const BigComplex t(BigFloat(Rat(3), prec), BigFloat(Rat(1, 2), prec));
  const BaseFiber ys = base_fiber(parametrized_family(rc.g, 12, prec), t, 0);
  const BaseFiber xs = base_fiber(complex_family(build_cover(Rat(0)), prec), t, 0);
  REQUIRE(ys.fiber.roots.size() == 24);
  REQUIRE(xs.fiber.roots.size() == 24);
  const BigFloat half(Rat(1, 2), prec);
  const BigFloat tol = BigFloat(1L, prec).mul_2si(-333);  // 10^-100
  std::vector<bool> used(24);
  for (const auto& y : ys.fiber.roots) {
    const BigComplex x = (y - inverse(y)) * half;
    std::size_t best = 0;
    BigFloat bestd = (x - xs.fiber.roots[0]).abs();
    for (std::size_t j = 1; j < 24; ++j) {
      const BigFloat d = (x - xs.fiber.roots[j]).abs();
      if (d < bestd) {
        bestd = d;
        best = j;
      }
    }
    CHECK(bestd < tol * max(BigFloat(1L, prec), x.abs()));
    CHECK_FALSE(used[best]);
    used[best] = true;
  }
}

TEST_CASE("loop layout") {
  const Precision prec = 128;
  std::vector<BigComplex> pts{BigComplex(Rat(0), prec), BigComplex(Rat(4), prec), BigComplex(Rat(-4), prec)};
  const LoopLayout lay = loop_layout(pts);
  CHECK(lay.basepoint.re().is_zero());
  CHECK(lay.basepoint.im() == BigFloat(24L, prec));
  // Sorted by argument seen from the basepoint: -4 (most negative), 0, 4.
  CHECK(lay.centers[0].re() == BigFloat(-4L, prec));
  CHECK(lay.centers[2].re() == BigFloat(4L, prec));
  for (const auto& r : lay.radii) CHECK(r == BigFloat(1L, prec));
  // Collinear with the basepoint: the middle point lies on the outer ray.
  std::vector<BigComplex> bad{BigComplex(BigFloat(0L, prec), BigFloat(1L, prec)), BigComplex(Rat(0), prec),
                              BigComplex(BigFloat(0L, prec), BigFloat(-1L, prec))};
  CHECK_THROWS_AS(loop_layout(bad), LoopConflict);
}
