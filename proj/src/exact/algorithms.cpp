#include "m24/exact/algorithms.hpp"

#include <stdexcept>

namespace m24 {

Integer content(const ZPoly& p) {
  Integer g = 0;
  for (const auto& c : p.coefficients()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive_part(const ZPoly& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  if (sgn(p.leading()) < 0) g = -g;
  if (g == 1) return p;
  std::vector<Integer> out(p.coefficients());
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return ZPoly(std::move(out));
}

ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
  if (a.is_zero() || a.degree() < b.degree()) return a;
  std::vector<Integer> r(a.coefficients());
  const auto& bc = b.coefficients();
  const std::size_t db = b.degree();
  const Integer& lb = b.leading();
  std::size_t pending = a.degree() - db + 1;
  Integer top;
  for (std::size_t k = a.degree() + 1; k-- > db;) {
    if (sgn(r[k]) == 0) continue;
    top = r[k];
    for (std::size_t i = 0; i < k; ++i) r[i] *= lb;
    for (std::size_t j = 0; j < db; ++j) r[k - db + j] -= top * bc[j];
    r[k] = 0;
    --pending;
  }
  r.resize(db);
  if (pending > 0) {
    Integer f = ipow(lb, pending);
    for (auto& c : r) c *= f;
  }
  return ZPoly(std::move(r));
}

Integer resultant_subresultant(const ZPoly& a0, const ZPoly& b0) {
  if (a0.is_zero() || b0.is_zero()) throw std::domain_error("resultant of zero polynomial");
  const Integer ca = content(a0), cb = content(b0);
  ZPoly a = a0, b = b0;
  {
    std::vector<Integer> va(a.coefficients()), vb(b.coefficients());
    for (auto& c : va) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), ca.get_mpz_t());
    for (auto& c : vb) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), cb.get_mpz_t());
    a = ZPoly(std::move(va));
    b = ZPoly(std::move(vb));
  }
  Integer t = ipow(ca, b.degree()) * ipow(cb, a.degree());
  int sign = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -1;
  }
  Integer g = 1, h = 1;
  while (b.degree() > 0) {
    const std::size_t delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -sign;
    ZPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return 0;
    Integer divisor = g * ipow(h, delta);
    std::vector<Integer> rv(r.coefficients());
    for (auto& c : rv) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
    b = ZPoly(std::move(rv));
    g = a.leading();
    if (delta > 0) {
      Integer num = ipow(g, delta);
      Integer den = ipow(h, delta - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
  const std::size_t da = a.degree();
  if (da >= 1) {
    Integer num = ipow(b.leading(), da);
    Integer den = ipow(h, da - 1);
    mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  }
  Integer result = t * h;
  if (sign < 0) result = -result;
  return result;
}

ZPoly gcd_primitive(const ZPoly& a0, const ZPoly& b0) {
  if (a0.is_zero()) return primitive_part(b0);
  if (b0.is_zero()) return primitive_part(a0);
  Integer c;
  mpz_gcd(c.get_mpz_t(), content(a0).get_mpz_t(), content(b0).get_mpz_t());
  ZPoly a = primitive_part(a0), b = primitive_part(b0);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree() == 0) {
      a = ZPoly{Integer(1)};
      break;
    }
    ZPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  return primitive_part(a).scaled(c);
}

ClearedPoly clear_denominators(const QPoly& p) {
  Integer d = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(p.size());
  for (const auto& c : p.coefficients()) {
    Integer v = d / c.get_den();
    v *= c.get_num();
    out.push_back(std::move(v));
  }
  return {ZPoly(std::move(out)), d};
}

QPoly to_qpoly(const ZPoly& p) {
  std::vector<Rat> out;
  out.reserve(p.size());
  for (const auto& c : p.coefficients()) out.emplace_back(c);
  return QPoly(std::move(out));
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero() && b.is_zero()) return QPoly();
  ZPoly g = gcd_primitive(clear_denominators(a).numerator, clear_denominators(b).numerator);
  return monic(to_qpoly(g));
}

Rat resultant(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) throw std::domain_error("resultant of zero polynomial");
  auto ca = clear_denominators(a);
  auto cb = clear_denominators(b);
  Integer r = resultant_subresultant(ca.numerator, cb.numerator);
  Rat out(r, ipow(ca.denominator, b.degree()) * ipow(cb.denominator, a.degree()));
  out.canonicalize();
  return out;
}

Rat discriminant(const QPoly& a) {
  if (a.is_zero() || a.degree() == 0) throw std::domain_error("discriminant of a constant polynomial");
  const std::size_t n = a.degree();
  Rat r = resultant(a, derivative(a)) / a.leading();
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

QPoly squarefree_part(const QPoly& a) {
  if (a.is_zero()) return a;
  if (a.degree() == 0) return QPoly{Rat(1)};
  return monic(divide_exact(a, gcd(a, derivative(a))));
}

std::vector<SquarefreeFactor> squarefree_decomposition(const QPoly& a) {
  std::vector<SquarefreeFactor> out;
  if (a.is_zero() || a.degree() == 0) return out;
  const QPoly da = derivative(a);
  const QPoly c = gcd(a, da);
  QPoly w = divide_exact(a, c);
  QPoly y = divide_exact(da, c);
  QPoly z = y - derivative(w);
  for (unsigned i = 1; w.degree() > 0; ++i) {
    QPoly g = gcd(w, z);
    if (g.degree() > 0) out.push_back({g, i});
    w = divide_exact(w, g);
    y = divide_exact(z, g);
    z = y - derivative(w);
  }
  return out;
}

QPoly interpolate(std::span<const std::pair<Rat, Rat>> points) {
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (points[i].first == points[j].first)
        throw std::invalid_argument("interpolate: duplicate abscissa " + to_string(points[i].first));
  // Newton divided differences.
  std::vector<Rat> coef(n);
  for (std::size_t i = 0; i < n; ++i) coef[i] = points[i].second;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n; i-- > j;) {
      coef[i] -= coef[i - 1];
      coef[i] /= points[i].first - points[i - j].first;
    }
  std::vector<Rat> acc;  // monomial coefficients, built by Horner on the Newton form
  for (std::size_t i = n; i-- > 0;) {
    acc.insert(acc.begin(), Rat(0));
    for (std::size_t k = 0; k + 1 < acc.size(); ++k) acc[k] -= acc[k + 1] * points[i].first;
    acc[0] += coef[i];
  }
  return QPoly(std::move(acc));
}

std::optional<QPoly> exact_poly_sqrt(const QPoly& a) {
  if (a.is_zero()) throw std::domain_error("exact_poly_sqrt of the zero polynomial");
  if (a.degree() % 2 == 1) return std::nullopt;
  const std::size_t m = a.degree() / 2;
  auto top = exact_sqrt(a.leading());
  if (!top) return std::nullopt;
  std::vector<Rat> r(m + 1);
  r[m] = *top;
  const Rat twice_top = 2 * r[m];
  for (std::size_t k = 1; k <= m; ++k) {
    // Coefficient of X^(2m-k) fixes r[m-k].
    Rat acc = a.coeff(2 * m - k);
    for (std::size_t i = m - k + 1; i < m; ++i) {
      const std::size_t j = 2 * m - k - i;
      if (j > m - k && j < m) acc -= r[i] * r[j];
    }
    r[m - k] = acc / twice_top;
  }
  QPoly root(std::move(r));
  if (root * root != a) return std::nullopt;
  return root;
}

}  // namespace m24
