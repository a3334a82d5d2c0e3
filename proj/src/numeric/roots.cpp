#include "m24/numeric/roots.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace m24 {

namespace {

constexpr Precision kCoarse = 128;

CPoly rounded(const CPoly& p, Precision prec) {
  CPoly out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(c.with_precision(prec));
  return out;
}

double log2_abs(const BigComplex& z) {
  if (z.is_zero()) return -HUGE_VAL;
  return log2(z.abs()).to_double();
}

// One Aberth sweep (Gauss-Seidel order). Returns the binary exponent of the
// largest correction relative to max(|z|, 1).
long aberth_sweep(const CPoly& p, std::vector<BigComplex>& z) {
  const std::size_t n = z.size();
  const Precision prec = p.front().precision();
  long worst = -(1L << 40);
  for (std::size_t i = 0; i < n; ++i) {
    auto [pv, dv] = horner_with_derivative(p, z[i]);
    if (pv.is_zero()) continue;
    if (dv.is_zero()) {
      worst = std::max(worst, 0L);
      continue;
    }
    const BigComplex ratio = pv / dv;
    BigComplex acc(prec);
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) acc += inverse(z[i] - z[j]);
    const BigComplex denom = BigComplex(Rat(1), prec) - ratio * acc;
    const BigComplex w = denom.is_zero() ? ratio : ratio / denom;
    z[i] -= w;
    const BigFloat scale = max(z[i].abs(), BigFloat(1L, prec));
    worst = std::max(worst, w.abs().exponent() - scale.exponent());
  }
  return worst;
}

}  // namespace

CPoly to_cpoly(const QPoly& p, Precision prec) {
  CPoly out;
  for (const auto& c : p.coefficients()) out.emplace_back(c, prec);
  return out;
}

CPoly to_cpoly(const Poly<GaussRat>& p, Precision prec) {
  CPoly out;
  for (const auto& c : p.coefficients()) out.emplace_back(c, prec);
  return out;
}

BigFloat relative_residual(const CPoly& p, const BigComplex& z) {
  const BigFloat big = max(z.abs(), BigFloat(1L, z.re().precision()));
  BigFloat scale(p.back().precision());
  for (std::size_t k = p.size(); k-- > 0;) scale = scale * big + p[k].abs();
  const BigFloat r = horner(p, z).abs();
  if (scale.is_zero()) return r;
  return r / scale;
}

Fiber polish_roots(const CPoly& p0, std::vector<BigComplex> z, Precision prec) {
  const Precision work = prec + 32;
  const CPoly p = rounded(p0, work);
  for (auto& r : z) r = r.with_precision(work);
  // Stop at full accuracy, or once past half precision the corrections stop
  // shrinking (rounding noise of an ill-conditioned evaluation).
  const long full = -static_cast<long>(prec) - 8, half = -static_cast<long>(prec / 2);
  long prev = 0;
  for (int it = 0; it < 64; ++it) {
    const long e = aberth_sweep(p, z);
    if (e < full || (e < half && e >= prev - 1)) break;
    prev = e;
  }

  const std::size_t n = z.size();
  const BigFloat nn(static_cast<long>(n), work);
  std::vector<BigFloat> radius;
  Fiber fib;
  fib.max_radius = BigFloat(work);
  fib.max_relative_residual = BigFloat(work);
  for (const auto& r : z) {
    auto [pv, dv] = horner_with_derivative(p, r);
    BigFloat rad = dv.is_zero() ? BigFloat(1e300, work) : nn * (pv / dv).abs();
    fib.max_radius = max(fib.max_radius, rad);
    fib.max_relative_residual = max(fib.max_relative_residual, relative_residual(p, r));
    radius.push_back(std::move(rad));
  }
  bool first = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      BigFloat gap = (z[i] - z[j]).abs() - radius[i] - radius[j];
      if (first || gap < fib.separation) fib.separation = gap;
      first = false;
    }
  if (n == 1) fib.separation = BigFloat(1e300, work);
  if (fib.separation.sign() <= 0)
    throw NonSeparated("inclusion discs of two roots overlap (separation " + fib.separation.to_string(6) + ")");
  if (fib.max_relative_residual.exponent() > -static_cast<long>(prec / 2))
    throw NoRootConvergence("relative residual " + fib.max_relative_residual.to_string(6) + " above 2^(-" +
                            std::to_string(prec / 2) + ")");
  for (auto& r : z) r = r.with_precision(prec);
  fib.roots = std::move(z);
  return fib;
}

Fiber find_roots(const CPoly& p0, Precision prec, std::uint64_t seed) {
  if (p0.size() < 2 || p0.back().is_zero()) throw std::invalid_argument("find_roots needs degree >= 1");
  const std::size_t n = p0.size() - 1;
  const Precision coarse = std::min<Precision>(kCoarse, prec + 32);
  const CPoly p = rounded(p0, coarse);

  // Start on a perturbed circle around the centroid of the roots whose radius
  // is the geometric mean of the root moduli (or a Fujiwara-type bound).
  const BigComplex center = -(p[n - 1] / (p[n] * BigFloat(static_cast<long>(n), coarse)));
  const double la = log2_abs(p[n]);
  double lr = -HUGE_VAL;
  for (std::size_t k = 0; k < n; ++k) lr = std::max(lr, (log2_abs(p[k]) - la) / static_cast<double>(n - k));
  double l0 = p[0].is_zero() ? lr : (log2_abs(p[0]) - la) / static_cast<double>(n);
  if (!std::isfinite(l0)) l0 = 0;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double theta0 = 2 * std::numbers::pi * unit(rng);
  std::vector<BigComplex> z;
  const BigFloat r0 = BigFloat(std::exp2(l0), coarse);
  for (std::size_t k = 0; k < n; ++k) {
    const double th = theta0 + 2 * std::numbers::pi * (static_cast<double>(k) + 0.25 * unit(rng)) / static_cast<double>(n);
    const BigFloat r = r0 * BigFloat(1.0 + 0.05 * unit(rng), coarse);
    z.push_back(center + BigComplex::polar(r, BigFloat(th, coarse)));
  }
  for (int it = 0; it < 2000; ++it)
    if (aberth_sweep(p, z) < -static_cast<long>(coarse / 2)) break;
  return polish_roots(p0, std::move(z), prec);
}

}  // namespace m24
