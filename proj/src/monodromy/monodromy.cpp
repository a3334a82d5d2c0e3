#include "m24/monodromy/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "m24/ramify/ramify.hpp"

namespace m24 {

namespace {

double cabs_d(const BigComplex& z) { return std::hypot(z.re().to_double(), z.im().to_double()); }

double min_separation(const std::vector<BigComplex>& z) {
  std::vector<std::pair<double, double>> d;
  d.reserve(z.size());
  for (const auto& x : z) d.emplace_back(x.re().to_double(), x.im().to_double());
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      best = std::min(best, std::hypot(d[i].first - d[j].first, d[i].second - d[j].second));
  return best;
}

// Distance from p to the segment [a, b].
BigFloat segment_distance(const BigComplex& p, const BigComplex& a, const BigComplex& b) {
  const BigComplex ab = b - a, ap = p - a;
  const BigFloat len2 = ab.norm();
  if (len2.is_zero()) return ap.abs();
  BigFloat tau = (ap.re() * ab.re() + ap.im() * ab.im()) / len2;
  const Precision prec = tau.precision();
  tau = max(BigFloat(0L, prec), min(BigFloat(1L, prec), tau));
  return (ap - ab * tau).abs();
}

struct Piece {
  bool arc;
  BigComplex a, b;   // segment endpoints
  BigComplex center;  // arc
  BigFloat radius, theta0;
  BigComplex at(double tau, Precision prec) const {
    const BigFloat f(tau, prec);
    if (!arc) return a + (b - a) * f;
    const BigFloat theta = theta0 + pi(prec).mul_2si(1) * f;
    return center + BigComplex::polar(radius, theta);
  }
};

}  // namespace

CPoly ComplexFamily::at(const BigComplex& t) const {
  CPoly out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(c.empty() ? BigComplex(precision) : horner(c, t));
  return out;
}

ComplexFamily complex_family(const BiPoly& F, Precision prec) {
  ComplexFamily out;
  out.precision = prec;
  for (const auto& c : F.coefficients()) out.coeffs.push_back(c.is_zero() ? CPoly{} : to_cpoly(c, prec));
  return out;
}

ComplexFamily complex_family(const CoverPolynomial& cover, Precision prec) { return complex_family(cover.F, prec); }

ComplexFamily parametrized_family(const GPoly& g, std::size_t mid, Precision prec) {
  ComplexFamily out;
  out.precision = prec;
  for (std::size_t k = 0; k < g.size(); ++k) {
    CPoly c{BigComplex(g.coeff(k), prec)};
    if (k == mid) c.push_back(BigComplex(Rat(-1), prec));
    out.coeffs.push_back(std::move(c));
  }
  return out;
}

BaseFiber base_fiber(const ComplexFamily& F, const BigComplex& t0, std::uint64_t seed) {
  BaseFiber b{t0, find_roots(F.at(t0), F.precision, seed)};
  std::sort(b.fiber.roots.begin(), b.fiber.roots.end(), [](const BigComplex& x, const BigComplex& y) {
    if (x.re() != y.re()) return x.re() < y.re();
    return x.im() < y.im();
  });
  return b;
}

TrackOptions TrackOptions::refined() const {
  TrackOptions o = *this;
  o.max_step_segment /= 2;
  o.max_step_arc /= 2;
  return o;
}

TrackResult track_loop(const ComplexFamily& F, const BaseFiber& base, const LoopSpec& loop, const TrackOptions& opts) {
  const Precision prec = F.precision;
  const std::size_t n = base.fiber.roots.size();
  const BigComplex d = loop.basepoint - loop.center;
  const BigFloat dist = d.abs();
  if (!(loop.radius < dist)) throw std::invalid_argument("basepoint lies inside the loop circle");
  const BigComplex unit(d.re() / dist, d.im() / dist);
  const BigComplex touch = loop.center + unit * loop.radius;
  const std::array<Piece, 3> pieces{Piece{false, loop.basepoint, touch, {}, {}, {}},
                                    Piece{true, {}, {}, loop.center, loop.radius, d.arg()},
                                    Piece{false, touch, loop.basepoint, {}, {}, {}}};

  TrackResult res;
  std::vector<BigComplex> roots = base.fiber.roots, trial(n);
  double sep = min_separation(roots);
  res.min_separation = sep;
  const long full_shift = -static_cast<long>(3 * prec / 4), half_shift = -static_cast<long>(prec / 2);

  auto attempt = [&](const BigComplex& t) {
    const CPoly p = F.at(t);
    const double limit = opts.move_fraction * sep;
    for (std::size_t i = 0; i < n; ++i) {
      BigComplex x = roots[i];
      bool converged = false;
      long prev = std::numeric_limits<long>::max();
      for (int it = 0; it < 40 && !converged; ++it) {
        auto [v, dv] = horner_with_derivative(p, x);
        if (dv.is_zero()) return false;
        const BigComplex dx = v / dv;
        x -= dx;
        if (cabs_d(x - roots[i]) > limit) return false;
        if (dx.is_zero()) {
          converged = true;
          break;
        }
        // Converged at three quarters of the precision, or once past half
        // precision the corrections stop shrinking (rounding noise).
        const long scale = std::max(0L, x.abs().exponent());
        const long e = dx.abs().exponent() - scale;
        converged = e < full_shift || (e < half_shift && e >= prev - 1);
        prev = e;
      }
      if (!converged) return false;
      trial[i] = std::move(x);
    }
    return true;
  };

  for (const Piece& piece : pieces) {
    const double hmax = piece.arc ? opts.max_step_arc : opts.max_step_segment;
    double tau = 0, h = hmax;
    while (tau < 1) {
      h = std::min(h, 1 - tau);
      if (h < 1e-14)
        throw TrackingAmbiguity("step size underflow while tracking (piece " + std::to_string(&piece - pieces.data()) +
                                ", tau " + std::to_string(tau) + ", separation " + std::to_string(sep) + ")");
      if (res.steps + res.rejected >= opts.max_steps) throw TrackingAmbiguity("step budget exhausted");
      const double next = tau + h >= 1 ? 1.0 : tau + h;
      if (attempt(piece.at(next, prec))) {
        std::swap(roots, trial);
        tau = next;
        ++res.steps;
        sep = min_separation(roots);
        res.min_separation = std::min(res.min_separation, sep);
        h = std::min(2 * h, hmax);
      } else {
        ++res.rejected;
        h /= 2;
      }
    }
  }

  // Match the end values against the base fiber.
  std::vector<int> img(n, -1);
  std::vector<bool> hit(n);
  for (std::size_t i = 0; i < n; ++i) {
    double d1 = std::numeric_limits<double>::infinity(), d2 = d1;
    std::size_t best = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const double dj = cabs_d(roots[i] - base.fiber.roots[j]);
      if (dj < d1) {
        d2 = d1;
        d1 = dj;
        best = j;
      } else if (dj < d2) {
        d2 = dj;
      }
    }
    if (!(10 * d1 < d2)) throw TrackingAmbiguity("end root " + std::to_string(i) + " has no clear nearest base root");
    if (hit[best]) throw TrackingAmbiguity("two end roots match base root " + std::to_string(best));
    hit[best] = true;
    img[i] = static_cast<int>(best);
    res.match_ratio = std::max(res.match_ratio, d2 > 0 ? d1 / d2 : 0.0);
  }
  res.perm = Perm(std::move(img));
  return res;
}

LoopLayout loop_layout(std::vector<BigComplex> bp) {
  if (bp.size() < 2) throw std::invalid_argument("loop_layout needs at least two branch points");
  const Precision prec = bp.front().precision();
  BigComplex c(prec);
  for (const auto& b : bp) c += b;
  const BigFloat count(static_cast<long>(bp.size()), prec);
  c = BigComplex(c.re() / count, c.im() / count);
  BigFloat maxd(prec);
  for (std::size_t i = 0; i < bp.size(); ++i)
    for (std::size_t j = i + 1; j < bp.size(); ++j) maxd = max(maxd, (bp[i] - bp[j]).abs());
  LoopLayout out;
  out.basepoint = BigComplex(c.re(), c.im() + maxd * BigFloat(3L, prec));
  std::sort(bp.begin(), bp.end(), [&](const BigComplex& x, const BigComplex& y) {
    return (x - out.basepoint).arg() < (y - out.basepoint).arg();
  });
  for (std::size_t i = 0; i < bp.size(); ++i) {
    BigFloat nearest(prec);
    bool first = true;
    for (std::size_t j = 0; j < bp.size(); ++j) {
      if (j == i) continue;
      const BigFloat dij = (bp[i] - bp[j]).abs();
      if (first || dij < nearest) nearest = dij;
      first = false;
    }
    out.radii.push_back(nearest.mul_2si(-2));
  }
  out.centers = std::move(bp);
  for (std::size_t i = 0; i < out.centers.size(); ++i)
    for (std::size_t k = 0; k < out.centers.size(); ++k) {
      if (k == i) continue;
      // Rays from a common basepoint never cross, so only closeness to the
      // other branch points matters; a ray may cut through another circle.
      if (!(out.radii[k].mul_2si(-2) < segment_distance(out.centers[k], out.basepoint, out.centers[i])))
        throw LoopConflict("segment to branch point " + std::to_string(i) + " passes near branch point " +
                           std::to_string(k));
    }
  return out;
}

namespace {

std::string type_string(const std::vector<int>& ct) {
  std::string s;
  for (int c : ct) s += (s.empty() ? "" : ",") + std::to_string(c);
  return "[" + s + "]";
}

MonodromyTuple compute_tuple(const Rat& s, const BranchCubic& bc, const CoverPolynomial& cover, Precision prec,
                             std::uint64_t seed, const TrackOptions& opts) {
  MonodromyTuple mt;
  mt.s = s;
  mt.precision = prec;
  mt.seed = seed;
  const LoopLayout layout = loop_layout(find_roots(to_cpoly(bc.D, prec), prec, seed).roots);
  mt.basepoint = layout.basepoint;
  mt.branch_points = layout.centers;
  mt.radii = layout.radii;
  const ComplexFamily F = complex_family(cover, prec);
  const BaseFiber base = base_fiber(F, mt.basepoint, seed);
  mt.base_residual = base.fiber.max_relative_residual;
  for (std::size_t j = 0; j < 3; ++j) {
    mt.tracks[j] = track_loop(F, base, {mt.basepoint, layout.centers[j], layout.radii[j]}, opts);
    mt.sigma[j] = mt.tracks[j].perm;
  }
  mt.sigma_inf = (mt.sigma[0] * mt.sigma[1] * mt.sigma[2]).inverse();
  return mt;
}

}  // namespace

MonodromyTuple monodromy_tuple(const Rat& s, Precision precision, std::uint64_t seed, const TrackOptions& opts) {
  const BranchCubic bc = branch_cubic(s);
  const CoverPolynomial cover = build_cover(s);
  std::vector<Precision> ladder{precision, 2 * precision};
  if (2 * precision < 3000) ladder.push_back(3000);
  MonodromyTuple mt;
  for (std::size_t k = 0;; ++k) {
    try {
      mt = compute_tuple(s, bc, cover, ladder[k], seed, opts);
      break;
    } catch (const TrackingAmbiguity&) {
      if (k + 1 == ladder.size()) throw;
    }
  }
  std::vector<int> finite_type, inf_type{12, 12};
  for (int i = 0; i < 8; ++i) finite_type.push_back(2);
  for (int i = 0; i < 8; ++i) finite_type.push_back(1);
  for (std::size_t j = 0; j < 3; ++j)
    if (mt.sigma[j].cycle_type() != finite_type)
      throw CycleTypeViolation("sigma" + std::to_string(j) + " = " + mt.sigma[j].to_cycles() + " has cycle type " +
                               type_string(mt.sigma[j].cycle_type()));
  if (mt.sigma_inf.cycle_type() != inf_type)
    throw CycleTypeViolation("sigma_inf = " + mt.sigma_inf.to_cycles() + " has cycle type " +
                             type_string(mt.sigma_inf.cycle_type()));
  return mt;
}

}  // namespace m24
