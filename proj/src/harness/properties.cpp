#include <random>

#include "detail.hpp"
#include "m24/ecurve/ecurve.hpp"
#include "m24/exact/algorithms.hpp"
#include "m24/permgrp/permgrp.hpp"

namespace m24 {

namespace {

QPoly random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree), num(-9, 9), den(1, 4);
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

// Case and failure counts for one property.
struct Tally {
  std::size_t cases = 0, failures = 0;
  void record(bool ok) {
    ++cases;
    if (!ok) ++failures;
  }
  nlohmann::json json() const { return {{"cases", cases}, {"failures", failures}}; }
};

const char* kM24Generators[2] = {
    "(0 3)(1 6)(2 16)(4 12)(5 8)(7 14)(9 18)(10 17)(11 20)(13 15)(19 23)(21 22)",
    "(0 3 5)(1 20 13)(2 8 14)(4 17 9)(12 16 15)(18 23 22)",
};

}  // namespace

VerificationReport claim_property_suites(std::uint64_t seed, std::size_t cases) {
  VerificationReport r = detail::make_report("10-property-suites", "exactcore",
      "Randomized exact-arithmetic properties: ring axioms, resultant multiplicativity, gcd "
      "divisibility, interpolation roundtrip, elliptic-curve associativity and stabilizer-chain "
      "membership.");
  r.inputs = {{"seed", seed}, {"cases", cases}};
  return detail::run_claim(std::move(r), [&](VerificationReport& r, std::string& stage) {
    std::mt19937_64 rng(seed);

    stage = "ring axioms";
    Tally ring;
    for (std::size_t i = 0; i < cases; ++i) {
      const QPoly a = random_poly(rng, 8), b = random_poly(rng, 8), c = random_poly(rng, 8);
      ring.record((a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c && a * b == b * a && (a - a).is_zero());
    }

    stage = "resultant multiplicativity";
    Tally res;
    for (std::size_t i = 0; i < cases; ++i) {
      const QPoly a = random_nonzero(rng, 4), b = random_nonzero(rng, 4), c = random_nonzero(rng, 4);
      res.record(resultant(a, b * c) == resultant(a, b) * resultant(a, c));
    }

    stage = "gcd divisibility";
    Tally gcds;
    for (std::size_t i = 0; i < cases; ++i) {
      const QPoly common = random_nonzero(rng, 3);
      const QPoly a = common * random_nonzero(rng, 4), b = common * random_nonzero(rng, 4);
      const QPoly g = gcd(a, b);
      gcds.record(divrem(a, g).remainder.is_zero() && divrem(b, g).remainder.is_zero() &&
                  divrem(g, monic(common)).remainder.is_zero());
    }

    stage = "interpolation roundtrip";
    Tally interp;
    for (std::size_t i = 0; i < cases; ++i) {
      const QPoly p = random_poly(rng, 8);
      std::vector<std::pair<Rat, Rat>> pts;
      for (std::size_t k = 0; k < p.size(); ++k) {
        Rat x(static_cast<long>(k) * 3 - 7, 2);
        x.canonicalize();
        pts.emplace_back(x, evaluate(p, x));
      }
      interp.record(interpolate(pts) == p);
    }

    stage = "elliptic-curve associativity";
    Tally assoc;
    {
      const CurveSpec E = branch_curve();
      std::vector<ECPoint> pool;
      for (long n = -6; n <= 6; ++n) pool.push_back(ec_multiple(E, branch_curve_generator(), n));
      const CurveSpec E2{0, 0, 17};
      std::vector<ECPoint> pool2;
      for (long n = -5; n <= 5; ++n) pool2.push_back(ec_multiple(E2, ECPoint::affine(-2, 3), n));
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1), pick2(0, pool2.size() - 1);
      for (std::size_t i = 0; i < cases; ++i) {
        const bool first = i % 2 == 0;
        const CurveSpec& C = first ? E : E2;
        const auto& P = first ? pool : pool2;
        auto& which = first ? pick : pick2;
        const ECPoint &a = P[which(rng)], &b = P[which(rng)], &c = P[which(rng)];
        const ECPoint lhs = ec_add(C, ec_add(C, a, b), c), rhs = ec_add(C, a, ec_add(C, b, c));
        assoc.record(lhs == rhs && on_curve(C, lhs));
      }
    }

    stage = "membership";
    Tally member;
    {
      const std::vector<Perm> gens{Perm::from_cycles(24, kM24Generators[0]), Perm::from_cycles(24, kM24Generators[1])};
      const BSGS G(gens, seed);
      std::uniform_int_distribution<std::size_t> pick(0, 1);
      std::vector<int> images(24);
      for (std::size_t i = 0; i < cases; ++i) {
        if (i % 2 == 0) {
          // Random word in the generators: a member.
          Perm w = Perm::identity(24);
          for (int k = 0; k < 40; ++k) w = w * gens[pick(rng)];
          member.record(G.contains(w));
        } else {
          // Uniform element of S24: a member with probability below 1e-15.
          for (int k = 0; k < 24; ++k) images[static_cast<std::size_t>(k)] = k;
          std::shuffle(images.begin(), images.end(), rng);
          member.record(!G.contains(Perm(images)));
        }
      }
      r.evidence["m24_order"] = to_string(G.order());
    }

    r.evidence["ring_axioms"] = ring.json();
    r.evidence["resultant_multiplicativity"] = res.json();
    r.evidence["gcd_divisibility"] = gcds.json();
    r.evidence["interpolation_roundtrip"] = interp.json();
    r.evidence["ec_associativity"] = assoc.json();
    r.evidence["bsgs_membership"] = member.json();
    const std::size_t failures =
        ring.failures + res.failures + gcds.failures + interp.failures + assoc.failures + member.failures;
    r.verdict = detail::verdict_of(failures == 0);
  });
}

}  // namespace m24
