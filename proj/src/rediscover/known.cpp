#include "m24/family/family.hpp"
#include "m24/numfield/nf.hpp"
#include "m24/ramify/ramify.hpp"
#include "m24/rediscover/rediscover.hpp"

namespace m24 {

KnownSolution extract_known_solution(const Rat& s) {
  const BranchCubic bc = branch_cubic(s);
  const ReconstructedCover rc = reconstruct_g(s);
  const GaussRat lead = rc.g.leading();
  if (sgn(lead.im) != 0 || sgn(lead.re) == 0) throw NormalizationFailure("leading coefficient of g is not a nonzero rational");
  const Rat c = lead.re;
  if (rc.g.coeff(0) != lead) throw NormalizationFailure("g(0) differs from the leading coefficient");

  // t = c w - shift turns D into the depressed cubic c^3 (w^3 + p' w + q').
  KnownSolution out;
  out.s = s;
  out.scale = c;
  out.shift = bc.shift;
  const Rat p = bc.p / (c * c), q = bc.q / (c * c * c);
  GPoly gn = rc.g;
  gn.set_coeff(12, gn.coeff(12) + GaussRat(bc.shift));
  gn = gn.scaled(GaussRat(inverse(c)));

  const GPoly modulus{GaussRat(q), GaussRat(p), GaussRat(0), GaussRat(1)};
  using E = NFElem<GaussRat>;
  struct Factors {
    std::vector<E> A, B;
  };
  auto parts = run_split(modulus, [&](const AlgebraPtr<GaussRat>& alg) {
    std::vector<E> coeffs;
    for (std::size_t k = 0; k < gn.size(); ++k) coeffs.emplace_back(alg, GPoly{gn.coeff(k)});
    coeffs[12] -= E::generator(alg);
    const NFPoly<GaussRat> f(std::move(coeffs));
    const NFPoly<GaussRat> A = nf_poly_gcd(f, derivative(f));
    if (A.degree() != 8) throw NormalizationFailure("square part has degree " + std::to_string(A.degree()));
    const NFPoly<GaussRat> B = divide_exact(f, A * A);
    if (B.degree() != 8 || B.leading() != E(alg, GPoly{GaussRat(1)}))
      throw NormalizationFailure("cofactor is not monic of degree 8");
    return Factors{A.coefficients(), B.coefficients()};
  });

  // Reassemble each coefficient over the full cubic and read coordinates.
  auto coordinates = [&](bool is_a, std::size_t k) {
    std::vector<std::pair<GPoly, GPoly>> residues;
    for (const auto& part : parts) {
      const auto& v = is_a ? part.value.A : part.value.B;
      residues.emplace_back(part.modulus, v[k].rep());
    }
    const GPoly r = crt(residues);
    return std::array<GaussRat, 3>{r.coeff(0), r.coeff(1), r.coeff(2)};
  };
  out.x.assign(kUnknowns, GaussRat(0));
  for (std::size_t k = 0; k < 8; ++k) {
    const auto a = coordinates(true, k), b = coordinates(false, k);
    for (std::size_t c3 = 0; c3 < 3; ++c3) {
      out.x[8 * c3 + k] = a[c3];
      out.x[24 + 8 * c3 + k] = b[c3];
    }
  }
  out.x[48] = GaussRat(p);
  out.x[49] = GaussRat(q);
  return out;
}

}  // namespace m24
