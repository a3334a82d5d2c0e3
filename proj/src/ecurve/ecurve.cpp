#include "m24/ecurve/ecurve.hpp"

#include <algorithm>

#include "m24/ramify/ramify.hpp"

namespace m24 {

Rat CurveSpec::cubic_discriminant() const {
  return a2 * a2 * a4 * a4 - 4 * a4 * a4 * a4 - 4 * a2 * a2 * a2 * a6 - 27 * a6 * a6 + 18 * a2 * a4 * a6;
}

Rat CurveSpec::rhs(const Rat& u) const { return ((u + a2) * u + a4) * u + a6; }

void CurveSpec::validate() const {
  if (sgn(cubic_discriminant()) == 0) throw std::invalid_argument("singular cubic");
}

CurveSpec branch_curve() { return {Rat(-38), Rat(540), Rat(-2916)}; }

ECPoint branch_curve_generator() { return ECPoint::affine(Rat(30), Rat(78)); }

bool on_curve(const CurveSpec& E, const ECPoint& P) { return P.infinity || P.v * P.v == E.rhs(P.u); }

ECPoint ec_negate(const ECPoint& P) {
  if (P.infinity) return P;
  return ECPoint::affine(P.u, -P.v);
}

ECPoint ec_add(const CurveSpec& E, const ECPoint& P, const ECPoint& Q) {
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  Rat lambda;
  if (P.u == Q.u) {
    if (P.v != Q.v || sgn(P.v) == 0) return ECPoint::at_infinity();
    lambda = (3 * P.u * P.u + 2 * E.a2 * P.u + E.a4) / (2 * P.v);
  } else {
    lambda = (Q.v - P.v) / (Q.u - P.u);
  }
  Rat u = lambda * lambda - E.a2 - P.u - Q.u;
  Rat v = lambda * (P.u - u) - P.v;
  return ECPoint::affine(std::move(u), std::move(v));
}

ECPoint ec_multiple(const CurveSpec& E, const ECPoint& P, long n) {
  const ECPoint base = n < 0 ? ec_negate(P) : P;
  ECPoint acc = ECPoint::at_infinity();
  for (long k = 0; k < std::abs(n); ++k) acc = ec_add(E, acc, base);
  return acc;
}

NonTorsionCertificate nagell_lutz_nontorsion(const CurveSpec& E, const ECPoint& P) {
  for (const Rat* c : {&E.a2, &E.a4, &E.a6})
    if (c->get_den() != 1) throw std::invalid_argument("Nagell-Lutz needs integer curve coefficients");
  if (P.infinity || !P.is_integral()) throw std::invalid_argument("Nagell-Lutz needs an integral affine point");
  if (!on_curve(E, P)) throw std::invalid_argument("point is not on the curve");
  E.validate();
  NonTorsionCertificate cert;
  ECPoint Q = P;
  for (long n = 1; n <= 12; ++n) {
    if (Q.infinity) throw Inconclusive("P has order " + std::to_string(n));
    if (!Q.is_integral()) {
      cert.first_nonintegral_multiple = n;
      break;
    }
    Q = ec_add(E, Q, P);
  }
  // With every multiple up to 12 integral and finite, Mazur's bound rules
  // out torsion as well.
  cert.multiples_route = true;
  cert.discriminant = E.cubic_discriminant().get_num();
  const Integer v = P.v.get_num();
  if (sgn(v) != 0) {
    cert.v_divides_discriminant = mpz_divisible_p(cert.discriminant.get_mpz_t(), v.get_mpz_t()) != 0;
    const Integer v2 = v * v;
    cert.v_squared_divides_discriminant = mpz_divisible_p(cert.discriminant.get_mpz_t(), v2.get_mpz_t()) != 0;
    cert.divisibility_route = !cert.v_squared_divides_discriminant;
  }
  return cert;
}

Rat s_of_z(const Rat& Z) { return (1 - 2 * Z) * (9 * Z * Z + 16 * Z + 21) / (25 * (Z * Z + 1)); }

ParamChain chain_to_s(const ECPoint& P) {
  if (P.infinity) throw UOrigin("point at infinity has no affine coordinates");
  if (sgn(P.u) == 0) throw UOrigin("U = 0");
  ParamChain c;
  c.Z = 30 / P.u - 2;
  c.W = 50 * P.v / (3 * P.u * P.u);
  c.s = s_of_z(c.Z);
  return c;
}

int quartic_sign(const ParamChain& c) {
  const Rat lhs = 81 * c.W * c.W;
  const Rat rhs = (c.Z + 2) * (((81 * c.Z + 36) * c.Z + 122) * c.Z - 2);
  if (lhs == rhs) return 1;
  if (lhs == -rhs) return -1;
  return 0;
}

std::vector<BranchParameter> rational_branch_search(std::size_t count) {
  const CurveSpec E = branch_curve();
  const ECPoint P = branch_curve_generator();
  std::vector<BranchParameter> out;
  ECPoint Q = ECPoint::at_infinity();
  for (long n = 1; out.size() < count; ++n) {
    Q = ec_add(E, Q, P);
    if (Q.infinity) throw std::logic_error("generator has finite order");
    if (sgn(Q.u) == 0) continue;
    const ParamChain chain = chain_to_s(Q);
    if (std::any_of(out.begin(), out.end(), [&](const BranchParameter& b) { return b.chain.s == chain.s; })) continue;
    const BranchCubic bc = branch_cubic(chain.s);
    BranchParameter bp{n, Q, chain, rational_roots(bc.D)};
    if (bp.branch_points.size() != 3)
      throw std::logic_error("s = " + to_string(chain.s) + " has " + std::to_string(bp.branch_points.size()) +
                             " rational branch points");
    out.push_back(std::move(bp));
  }
  return out;
}

std::vector<Rat> rational_branch_parameters(std::size_t count) {
  std::vector<Rat> out;
  for (auto& b : rational_branch_search(count)) out.push_back(b.chain.s);
  return out;
}

}  // namespace m24
