#include <algorithm>
#include <variant>

#include "detail.hpp"
#include "m24/exact/algorithms.hpp"
#include "m24/exact/text.hpp"
#include "m24/family/family.hpp"
#include "m24/modfactor/factor.hpp"
#include "m24/monodromy/monodromy.hpp"
#include "m24/permgrp/permgrp.hpp"
#include "m24/ramify/ramify.hpp"

namespace m24 {

using nlohmann::json;

namespace {

// Degree pattern of F(X, t0) mod p when F(X, t0) stays squarefree of full
// degree; nullopt otherwise.
std::optional<std::vector<std::size_t>> try_pattern(const QPoly& f, std::uint64_t p, std::uint64_t seed) {
  for (const auto& c : f.coefficients())
    if (c.get_den() % p == 0) return std::nullopt;
  const ModPoly fm = ModPoly::from(PrimeField(p), f);
  if (fm.is_zero() || fm.degree() != f.degree()) return std::nullopt;
  try {
    return degree_pattern(fm, seed);
  } catch (const NotSquarefree&) {
    return std::nullopt;
  }
}

}  // namespace

VerificationReport verify_m24(const Rat& s, Precision precision, std::uint64_t seed, const DedekindChoice& dedekind) {
  VerificationReport r = detail::make_report("verify-galois", "harness",
      "Evidence chain for Galois group M24 of F_s over Q(t): irreducibility, a Frobenius cycle type, "
      "square discriminant, branch shape, and the monodromy group order with double transitivity.");
  r.inputs = {{"s", rat_json(s)}, {"precision_bits", precision}, {"seed", seed}};
  if (s == 1) {
    r.verdict = Verdict::Fail;
    r.error_stage = "precondition";
    r.error_message = "s = 1 is excluded: the branch cubic degenerates";
    return r;
  }
  return detail::run_claim(std::move(r), [&](VerificationReport& r, std::string& stage) {
    stage = "build_cover";
    const CoverPolynomial cover = build_cover(s);

    stage = "irreducibility_certificate";
    const auto cert = irreducibility_certificate(cover.F, CertificateSearch{.seed = seed});
    bool irreducible = false;
    if (const auto* c = std::get_if<IrreducibilityCertificate>(&cert)) {
      irreducible = check_certificate(cover.F, *c, seed);
      json primes = json::array();
      for (const auto& pp : c->primes) {
        json pat = json::array();
        for (auto d : pp.pattern) pat.push_back(d);
        primes.push_back({{"p", pp.p}, {"pattern", pat}});
      }
      r.evidence["irreducibility"] = {{"t0", rat_json(c->t0)}, {"primes", primes}, {"checked", irreducible}};
    } else {
      r.evidence["irreducibility"] = {{"exhausted_trials", std::get<Exhausted>(cert).trials}};
    }

    stage = "degree_pattern";
    // The requested specialization first, then t0 = 1, -1, 2, ... with small primes.
    std::optional<std::vector<std::size_t>> pattern;
    Rat t_used = dedekind.t0;
    std::uint64_t p_used = dedekind.p;
    pattern = try_pattern(specialize(cover, t_used), p_used, seed);
    for (long k = 1; !pattern && k <= 20; ++k) {
      t_used = k % 2 ? Rat((k + 1) / 2) : Rat(-k / 2);
      const QPoly f = specialize(cover, t_used);
      for (std::uint64_t p : {7, 11, 13, 17, 19, 23, 29, 31}) {
        pattern = try_pattern(f, p, seed);
        if (pattern) {
          p_used = p;
          break;
        }
      }
    }
    if (!pattern) throw std::runtime_error("no unramified specialization found");
    std::vector<int> type(pattern->begin(), pattern->end());
    std::sort(type.rbegin(), type.rend());
    const auto& types = m24_cycle_types();
    const bool frobenius_ok = std::find(types.begin(), types.end(), type) != types.end();
    r.evidence["dedekind"] = {
        {"t0", rat_json(t_used)}, {"p", p_used}, {"pattern", *pattern}, {"is_m24_cycle_type", frobenius_ok}};

    stage = "branch_discriminant";
    const QPoly disc = branch_discriminant(cover);
    const bool square = exact_poly_sqrt(disc).has_value();
    r.evidence["discriminant"] = {{"degree", disc.degree()}, {"is_square", square}};

    stage = "branch_cubic";
    const BranchCubic bc = branch_cubic_from_discriminant(s, disc);
    stage = "verify_branch_shape";
    const RamificationReport shape = verify_branch_shape(s, bc);
    json rational = json::array();
    for (const auto& t : shape.rational_branch_points) rational.push_back(rat_json(t));
    r.evidence["branch"] = {
        {"cubic", format_poly(bc.D, "T")}, {"rational_branch_points", rational}, {"shape_ok", shape.all_ok()}};

    stage = "monodromy_tuple";
    const MonodromyTuple mt = monodromy_tuple(s, precision, seed);
    const std::vector<Perm> gens(mt.sigma.begin(), mt.sigma.end());
    stage = "group_order";
    const Integer order = group_order(gens, seed);
    stage = "is_k_transitive";
    const bool two = is_k_transitive(gens, 2);
    json sig = json::array();
    for (const auto& p : mt.sigma) sig.push_back(p.to_cycles());
    r.evidence["monodromy"] = {{"sigma", sig},
                               {"sigma_inf", mt.sigma_inf.to_cycles()},
                               {"group_order", to_string(order)},
                               {"two_transitive", two}};

    r.verdict = detail::verdict_of(irreducible && frobenius_ok && square && shape.all_ok() && order == kM24Order &&
                                   two);
  });
}

const std::vector<std::string>& claim_modules() {
  static const std::vector<std::string> mods{"family", "modfactor", "ramify", "ecurve", "monodromy", "rediscover",
                                             "exactcore"};
  return mods;
}

std::vector<VerificationReport> run_all(const RunConfig& cfg) {
  if (cfg.only && std::find(claim_modules().begin(), claim_modules().end(), *cfg.only) == claim_modules().end())
    throw std::invalid_argument("unknown module for --only: " + *cfg.only);
  auto wanted = [&](const char* module) { return !cfg.only || *cfg.only == module; };
  std::vector<VerificationReport> out;
  if (wanted("family")) out.push_back(claim_family_fidelity());
  if (wanted("modfactor")) out.push_back(claim_dedekind(0, 1, 7, cfg.seed));
  if (wanted("ramify")) {
    out.push_back(claim_disc_square(0));
    out.push_back(claim_branch_structure({Rat(0), Rat(21, 25), Rat(2), Rat(-1, 2)}));
  }
  if (wanted("ecurve")) {
    out.push_back(claim_rational_branch(4));
    out.push_back(claim_nontorsion());
  }
  if (wanted("monodromy")) out.push_back(claim_monodromy(0, cfg.precision, cfg.seed, true));
  if (wanted("ramify")) out.push_back(claim_degree_profile(cfg.profile_samples));
  if (wanted("rediscover")) out.push_back(claim_rediscover(cfg.precision));
  if (wanted("exactcore")) out.push_back(claim_property_suites(cfg.seed, cfg.property_cases));
  std::stable_sort(out.begin(), out.end(),
                   [](const VerificationReport& a, const VerificationReport& b) { return a.claim < b.claim; });
  return out;
}

}  // namespace m24
