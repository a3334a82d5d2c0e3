#include "m24/ramify/ramify.hpp"

#include <algorithm>
#include <numeric>

#include "m24/exact/algorithms.hpp"
#include "m24/exact/text.hpp"
#include "m24/numeric/roots.hpp"
#include "m24/numfield/nf.hpp"

namespace m24 {

namespace {

// d * F with integer coefficients in X and t.
struct IntegerCover {
  std::vector<ZPoly> coeffs;  // X^k coefficient as a polynomial in t
  Integer denominator;
};

IntegerCover integer_cover(const CoverPolynomial& cover) {
  Integer d = 1;
  for (const auto& c : cover.F.coefficients())
    for (const auto& x : c.coefficients()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
  IntegerCover out{{}, d};
  for (const auto& c : cover.F.coefficients()) {
    std::vector<Integer> v;
    for (const auto& x : c.coefficients()) v.push_back(x.get_num() * (d / x.get_den()));
    out.coeffs.emplace_back(std::move(v));
  }
  return out;
}

Rat discriminant_at_integer(const IntegerCover& ic, const Integer& t) {
  std::vector<Integer> v;
  v.reserve(ic.coeffs.size());
  for (const auto& c : ic.coeffs) v.push_back(evaluate(c, t));
  const ZPoly f(std::move(v));
  const std::size_t n = f.degree();
  ZPoly df = derivative(f);
  Rat r(resultant_subresultant(f, df));
  r /= Rat(f.leading());
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  r /= Rat(ipow(ic.denominator, 2 * n - 2));
  return r;
}

Integer node(std::size_t k) {
  // 0, 1, -1, 2, -2, ...
  const long m = static_cast<long>((k + 1) / 2);
  return Integer(k % 2 ? m : -m);
}

}  // namespace

Rat discriminant_at(const CoverPolynomial& cover, const Rat& t0) { return discriminant(specialize(cover, t0)); }

QPoly branch_discriminant(const CoverPolynomial& cover, const DiscriminantOptions& opts) {
  if (opts.fit_nodes > opts.nodes || opts.fit_nodes == 0) throw std::invalid_argument("bad node counts");
  const IntegerCover ic = integer_cover(cover);
  std::vector<std::pair<Rat, Rat>> pts;
  pts.reserve(opts.nodes);
  for (std::size_t k = 0; k < opts.nodes; ++k) {
    const Integer t = node(k);
    pts.emplace_back(Rat(t), discriminant_at_integer(ic, t));
  }
  const QPoly disc = interpolate(std::span<const std::pair<Rat, Rat>>(pts.data(), opts.fit_nodes));
  for (std::size_t k = opts.fit_nodes; k < opts.nodes; ++k)
    if (evaluate(disc, pts[k].first) != pts[k].second)
      throw InterpolationMismatch("discriminant interpolant disagrees at t = " + to_string(pts[k].first));
  return disc;
}

QPoly branch_discriminant(const Rat& s, const DiscriminantOptions& opts) {
  return branch_discriminant(build_cover(s), opts);
}

BranchCubic branch_cubic_from_discriminant(const Rat& s, const QPoly& disc) {
  if (disc.is_zero()) throw Degenerate("discriminant vanishes identically");
  if (disc.degree() == 0) throw Degenerate("discriminant is constant in t");
  // Decompose the square root when it exists (cheaper), doubling multiplicities.
  std::vector<SquarefreeFactor> parts;
  if (auto root = exact_poly_sqrt(disc)) {
    parts = squarefree_decomposition(*root);
    for (auto& p : parts) p.multiplicity *= 2;
  } else {
    parts = squarefree_decomposition(disc);
  }
  std::optional<QPoly> cubic;
  QPoly nodes{Rat(1)};
  for (const auto& p : parts) {
    if (p.multiplicity == 8) {
      if (p.factor.degree() != 3)
        throw Degenerate("multiplicity-8 part of the discriminant has degree " + std::to_string(p.factor.degree()));
      cubic = p.factor;
    } else if (p.multiplicity == 2) {
      nodes = p.factor;
    } else {
      throw Degenerate("discriminant has a factor of multiplicity " + std::to_string(p.multiplicity) +
                       " and degree " + std::to_string(p.factor.degree()));
    }
  }
  if (!cubic) throw Degenerate("discriminant has no multiplicity-8 part");
  BranchCubic bc;
  bc.s = s;
  bc.D = *cubic;
  bc.nodes = nodes;
  const Rat a2 = bc.D.coeff(2), a1 = bc.D.coeff(1), a0 = bc.D.coeff(0);
  bc.shift = a2 / 3;
  bc.p = a1 - a2 * a2 / 3;
  bc.q = 2 * a2 * a2 * a2 / 27 - a2 * a1 / 3 + a0;
  return bc;
}

BranchCubic branch_cubic(const Rat& s, const DiscriminantOptions& opts) {
  return branch_cubic_from_discriminant(s, branch_discriminant(s, opts));
}

std::vector<Rat> rational_roots(const QPoly& f0) {
  if (f0.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
  std::vector<Rat> out;
  if (f0.degree() == 0) return out;
  const QPoly f = squarefree_part(f0);
  const ZPoly z = primitive_part(clear_denominators(f).numerator);
  // A rational root a/b of z has b | lc(z), so lc(z) * root is an integer.
  const Integer& lead = z.leading();
  Integer bound = 0;
  for (const auto& c : z.coefficients()) bound = std::max(bound, Integer(abs(c)));
  const auto bits = static_cast<Precision>(mpz_sizeinbase(bound.get_mpz_t(), 2) +
                                           2 * mpz_sizeinbase(lead.get_mpz_t(), 2) + 64);
  if (f.degree() == 1) return {-f.coeff(0) / f.coeff(1)};
  const Fiber fib = find_roots(to_cpoly(f, bits), bits, 0);
  for (const auto& r : fib.roots) {
    const BigFloat scaled = r.re() * BigFloat(lead, bits);
    Rat cand(scaled.round(), lead);
    cand.canonicalize();
    if (sgn(evaluate(f, cand)) == 0 && std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(cand);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool RamificationReport::all_ok() const {
  std::size_t deg = 0;
  for (const auto& s : shapes) {
    if (!s.ok()) return false;
    deg += s.modulus.degree();
  }
  return deg == 3;
}

std::vector<FiberShape> fiber_shapes(const CoverPolynomial& cover, const QPoly& factor) {
  auto parts = run_split(factor, [&](const AlgebraPtr<Rat>& alg) {
    using E = NFElem<Rat>;
    std::vector<E> c;
    c.reserve(cover.F.size());
    for (const auto& ck : cover.F.coefficients()) c.emplace_back(alg, ck);
    const NFPoly<Rat> f(std::move(c));
    FiberShape sh;
    const NFPoly<Rat> g = nf_poly_gcd(f, derivative(f));
    sh.gcd_degree = g.degree();
    sh.gcd_squarefree = g.degree() == 0 || nf_poly_gcd(g, derivative(g)).degree() == 0;
    const NFPoly<Rat> h = divide_exact(f, g * g);
    sh.cofactor_degree = h.degree();
    sh.cofactor_squarefree = nf_poly_gcd(h, derivative(h)).degree() == 0;
    sh.coprime = nf_poly_gcd(g, h).degree() == 0;
    return sh;
  });
  std::vector<FiberShape> out;
  for (auto& p : parts) {
    p.value.modulus = p.modulus;
    out.push_back(std::move(p.value));
  }
  return out;
}

RamificationReport verify_branch_shape(const Rat& s, const BranchCubic& cubic) {
  const CoverPolynomial cover = build_cover(s);
  RamificationReport rep;
  rep.s = s;
  rep.cubic = cubic;
  rep.rational_branch_points = rational_roots(cubic.D);
  QPoly rest = cubic.D;
  std::vector<QPoly> factors;
  for (const auto& r : rep.rational_branch_points) {
    const QPoly lin{-r, Rat(1)};
    factors.push_back(lin);
    rest = divide_exact(rest, lin);
  }
  if (rest.degree() > 0) factors.push_back(rest);
  for (const auto& f : factors)
    for (auto& sh : fiber_shapes(cover, f)) rep.shapes.push_back(std::move(sh));
  for (const auto& sh : rep.shapes)
    if (!sh.ok())
      throw ShapeViolation("fiber over a root of " + format_poly(sh.modulus, "T") + ": gcd degree " +
                               std::to_string(sh.gcd_degree) + ", cofactor degree " +
                               std::to_string(sh.cofactor_degree),
                           sh);
  return rep;
}

namespace {

// N / Q with deg N <= num_bound from the interpolant P through the points
// (roots of M), by the extended Euclidean algorithm.
std::optional<CoefficientFit> rational_reconstruction(const QPoly& M, const QPoly& P, std::size_t num_bound) {
  QPoly r0 = M, r1 = P, t0, t1{Rat(1)};
  while (!r1.is_zero() && r1.degree() > num_bound) {
    auto qr = divrem(r0, r1);
    QPoly t2 = t0 - qr.quotient * t1;
    r0 = std::move(r1);
    r1 = std::move(qr.remainder);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1.is_zero()) return std::nullopt;
  const Rat lc = t1.leading();
  CoefficientFit fit{r1.scaled(inverse(lc)), t1.scaled(inverse(lc))};
  const QPoly g = gcd(fit.numerator, fit.denominator);
  if (!g.is_zero() && g.degree() > 0) {
    fit.numerator = divide_exact(fit.numerator, g);
    fit.denominator = divide_exact(fit.denominator, g);
  }
  return fit;
}

bool reproduces(const CoefficientFit& fit, const std::vector<std::pair<Rat, Rat>>& pts) {
  for (const auto& [s, c] : pts) {
    const Rat den = evaluate(fit.denominator, s);
    if (sgn(den) == 0 || evaluate(fit.numerator, s) != c * den) return false;
  }
  return true;
}

}  // namespace

CoefficientFit fit_coefficient(const std::vector<std::pair<Rat, Rat>>& training,
                               const std::vector<std::pair<Rat, Rat>>& held_out, std::size_t max_den_degree) {
  if (training.empty()) throw std::invalid_argument("fit_coefficient needs samples");
  const QPoly P = interpolate(training);
  CoefficientFit poly_fit{P, QPoly{Rat(1)}};
  if (reproduces(poly_fit, held_out)) return poly_fit;
  QPoly M{Rat(1)};
  for (const auto& [s, c] : training) M *= QPoly{-s, Rat(1)};
  const std::size_t n = training.size();
  for (std::size_t k = 1; k <= max_den_degree && k + 1 < n; ++k) {
    auto fit = rational_reconstruction(M, P, n - 1 - k);
    if (fit && fit->denominator.degree() <= k && reproduces(*fit, training) && reproduces(*fit, held_out))
      return *fit;
  }
  throw FitFailure("no polynomial or rational fit with denominator degree <= " + std::to_string(max_den_degree) +
                   " reproduces the held-out samples");
}

std::vector<Rat> small_height_parameters(std::size_t count) {
  std::vector<Rat> out;
  for (long h = 0; out.size() < count; ++h) {
    for (long q = 1; q <= std::max(h, 1L) && out.size() < count; ++q) {
      for (long p = 0; p <= h && out.size() < count; ++p) {
        if (std::max(p, q) != std::max(h, 1L) && !(h == 0 && p == 0)) continue;
        if (std::gcd(p, q) != 1 && !(p == 0 && q == 1)) continue;
        for (long sign : {1L, -1L}) {
          if (p == 0 && sign < 0) continue;
          Rat s(sign * p, q);
          if (s == 1 || out.size() >= count) continue;
          if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
        }
      }
    }
  }
  return out;
}

DegreeProfile profile_from_sampler(const std::function<QPoly(const Rat&)>& cubic_at, std::size_t sample_count,
                                   std::size_t held_out) {
  if (held_out >= sample_count) throw std::invalid_argument("held-out set must be smaller than the sample");
  DegreeProfile prof;
  prof.held_out = held_out;
  std::array<std::vector<std::pair<Rat, Rat>>, 3> pts;
  std::size_t tried = 0;
  for (std::size_t batch = sample_count; prof.samples.size() < sample_count; batch *= 2) {
    const auto candidates = small_height_parameters(batch);
    for (; tried < candidates.size() && prof.samples.size() < sample_count; ++tried) {
      const Rat& s = candidates[tried];
      QPoly D;
      try {
        D = cubic_at(s);
      } catch (const Degenerate&) {
        continue;
      }
      if (D.degree() != 3 || D.leading() != 1) throw std::logic_error("sampler must return a monic cubic");
      prof.samples.push_back(s);
      for (std::size_t j = 0; j < 3; ++j) pts[j].emplace_back(s, D.coeff(2 - j));
    }
  }
  const std::size_t train = sample_count - held_out;
  for (std::size_t j = 0; j < 3; ++j) {
    std::vector<std::pair<Rat, Rat>> a(pts[j].begin(), pts[j].begin() + static_cast<std::ptrdiff_t>(train));
    std::vector<std::pair<Rat, Rat>> b(pts[j].begin() + static_cast<std::ptrdiff_t>(train), pts[j].end());
    prof.fits[j] = fit_coefficient(a, b);
  }
  return prof;
}

DegreeProfile degree_profile(std::size_t sample_count, const DiscriminantOptions& opts) {
  if (sample_count < 140) throw std::invalid_argument("degree_profile needs at least 140 samples");
  return profile_from_sampler([&](const Rat& s) { return branch_cubic(s, opts).D; }, sample_count);
}

}  // namespace m24
