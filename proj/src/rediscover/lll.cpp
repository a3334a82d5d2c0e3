#include "m24/rediscover/lll.hpp"

#include <stdexcept>

#include "m24/exact/algorithms.hpp"

namespace m24 {

namespace {

Rat dot(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return Rat(s);
}

Integer round_rat(const Rat& x) {
  // floor(x + 1/2)
  Rat y = x + Rat(1, 2);
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
  return r;
}

struct GramSchmidt {
  std::vector<std::vector<Rat>> mu;
  std::vector<Rat> B;  // |b*_i|^2
};

GramSchmidt gram_schmidt(const IntMatrix& b) {
  const std::size_t n = b.size();
  GramSchmidt gs{std::vector<std::vector<Rat>>(n, std::vector<Rat>(n)), std::vector<Rat>(n)};
  // Inner products <b_i, b*_j> through the mu recursion.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Rat r = dot(b[i], b[j]);
      for (std::size_t k = 0; k < j; ++k) r -= gs.mu[j][k] * gs.mu[i][k] * gs.B[k];
      gs.mu[i][j] = r / gs.B[j];
    }
    Rat bi = dot(b[i], b[i]);
    for (std::size_t k = 0; k < i; ++k) bi -= gs.mu[i][k] * gs.mu[i][k] * gs.B[k];
    if (sgn(bi) == 0) throw std::invalid_argument("lattice basis is linearly dependent");
    gs.B[i] = bi;
  }
  return gs;
}

}  // namespace

IntMatrix lll_reduce(IntMatrix b, const Rat& delta) {
  const std::size_t n = b.size();
  if (n <= 1) return b;
  GramSchmidt gs = gram_schmidt(b);
  auto& mu = gs.mu;
  auto& B = gs.B;
  auto size_reduce = [&](std::size_t k, std::size_t l) {
    const Integer r = round_rat(mu[k][l]);
    if (sgn(r) == 0) return;
    for (std::size_t i = 0; i < b[k].size(); ++i) b[k][i] -= r * b[l][i];
    const Rat rr(r);
    for (std::size_t j = 0; j < l; ++j) mu[k][j] -= rr * mu[l][j];
    mu[k][l] -= rr;
  };
  std::size_t k = 1;
  while (k < n) {
    size_reduce(k, k - 1);
    if (B[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
      for (std::size_t l = k - 1; l-- > 0;) size_reduce(k, l);
      ++k;
      continue;
    }
    // Swap b_k and b_{k-1}, updating the Gram-Schmidt data.
    const Rat m = mu[k][k - 1];
    const Rat Bn = B[k] + m * m * B[k - 1];
    mu[k][k - 1] = m * B[k - 1] / Bn;
    B[k] = B[k - 1] * B[k] / Bn;
    B[k - 1] = Bn;
    std::swap(b[k], b[k - 1]);
    for (std::size_t j = 0; j + 1 < k; ++j) std::swap(mu[k][j], mu[k - 1][j]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rat t = mu[i][k];
      mu[i][k] = mu[i][k - 1] - m * t;
      mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k];
    }
    if (k > 1) --k;
  }
  return b;
}

bool is_lll_reduced(const IntMatrix& b, const Rat& delta) {
  if (b.size() <= 1) return true;
  const GramSchmidt gs = gram_schmidt(b);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (abs(gs.mu[i][j]) > Rat(1, 2)) return false;
  for (std::size_t k = 1; k < b.size(); ++k)
    if (gs.B[k] < (delta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.B[k - 1]) return false;
  return true;
}

std::optional<std::vector<Integer>> lindep_columns(const std::vector<std::vector<BigFloat>>& v, Precision precision,
                                                   const LindepOptions& opts) {
  const std::size_t n = v.size();
  if (n < 2) throw std::invalid_argument("lindep needs at least two values");
  const std::size_t cols = v[0].size();
  for (const auto& row : v)
    if (row.size() != cols || cols == 0) throw std::invalid_argument("lindep: ragged input");
  const Precision work = precision + 64;

  // Column scales: the largest magnitude in each column.
  std::vector<long> scale(cols);
  std::vector<BigFloat> colmax;
  for (std::size_t c = 0; c < cols; ++c) {
    BigFloat m(work);
    for (const auto& row : v) m = max(m, abs(row[c]));
    colmax.push_back(m);
    scale[c] = m.is_zero() ? 0 : m.exponent();
  }
  IntMatrix basis(n, std::vector<Integer>(n + cols));
  for (std::size_t i = 0; i < n; ++i) {
    basis[i][i] = 1;
    for (std::size_t c = 0; c < cols; ++c)
      basis[i][n + c] = v[i][c].with_precision(work).mul_2si(static_cast<long>(precision) - scale[c]).round();
  }
  const IntMatrix red = lll_reduce(std::move(basis));

  Integer bound;
  if (opts.max_coefficient) {
    bound = *opts.max_coefficient;
  } else {
    bound = 1;
    bound <<= static_cast<mp_bitcnt_t>(precision / (2 * n));
  }
  for (const auto& row : red) {
    std::vector<Integer> c(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(n));
    bool zero = true, small = true;
    for (const auto& x : c) {
      if (sgn(x) != 0) zero = false;
      if (abs(x) > bound) small = false;
    }
    if (zero || !small) continue;
    bool ok = true;
    for (std::size_t col = 0; col < cols && ok; ++col) {
      BigFloat acc(work);
      for (std::size_t i = 0; i < n; ++i) acc += BigFloat(c[i], work) * v[i][col];
      ok = abs(acc) <= colmax[col].mul_2si(-static_cast<long>(precision / 2));
    }
    if (!ok) continue;
    for (const auto& x : c)
      if (sgn(x) != 0) {
        if (sgn(x) < 0)
          for (auto& y : c) y = -y;
        break;
      }
    return c;
  }
  return std::nullopt;
}

std::optional<std::vector<Integer>> lindep(const std::vector<BigFloat>& v, Precision precision,
                                           const LindepOptions& opts) {
  std::vector<std::vector<BigFloat>> cols;
  for (const auto& x : v) cols.push_back({x});
  return lindep_columns(cols, precision, opts);
}

std::optional<std::vector<Integer>> lindep(const std::vector<BigComplex>& v, Precision precision,
                                           const LindepOptions& opts) {
  // Imaginary parts below the working accuracy are rounding noise; a column of
  // them would be rescaled to full size and hide every relation.
  BigFloat top(precision), imag(precision);
  for (const auto& z : v) {
    top = max(top, z.abs());
    imag = max(imag, abs(z.im()));
  }
  const bool real = imag <= top.mul_2si(-static_cast<long>(precision));
  std::vector<std::vector<BigFloat>> cols;
  for (const auto& z : v) cols.push_back(real ? std::vector<BigFloat>{z.re()} : std::vector<BigFloat>{z.re(), z.im()});
  return lindep_columns(cols, precision, opts);
}

std::optional<ZPoly> algdep(const BigComplex& x, std::size_t max_degree, Precision precision) {
  if (max_degree == 0) throw std::invalid_argument("algdep needs max_degree >= 1");
  if (precision < 64 * static_cast<Precision>(max_degree + 1))
    throw std::invalid_argument("algdep needs precision >= 64 (max_degree + 1)");
  const Precision work = precision + 32;
  const BigComplex xw = x.with_precision(work);
  std::vector<BigComplex> powers{BigComplex(Rat(1), work)};
  for (std::size_t d = 1; d <= max_degree; ++d) {
    powers.push_back(powers.back() * xw);
    auto rel = lindep(powers, precision);
    if (!rel || sgn(rel->back()) == 0) continue;
    ZPoly p = primitive_part(ZPoly(*rel));
    // The root nearest x must lie within 2^(-precision/2) of it.
    std::vector<BigComplex> cp;
    for (const auto& c : p.coefficients()) cp.emplace_back(BigFloat(c, work), BigFloat(work));
    auto [val, der] = horner_with_derivative(cp, xw);
    if (der.is_zero()) continue;
    const BigFloat step = (val / der).abs();
    const BigFloat tol = max(BigFloat(1L, work), xw.abs()).mul_2si(-static_cast<long>(precision / 2));
    if (step * BigFloat(static_cast<long>(d), work) <= tol) return p;
  }
  return std::nullopt;
}

std::optional<ZPoly> algdep(const BigFloat& x, std::size_t max_degree, Precision precision) {
  return algdep(BigComplex(x, BigFloat(x.precision())), max_degree, precision);
}

std::optional<std::vector<Integer>> polynomial_relation(const std::vector<std::pair<BigFloat, BigFloat>>& samples,
                                                        std::size_t max_degree, Precision precision) {
  if (samples.empty()) throw std::invalid_argument("polynomial_relation needs samples");
  const Precision work = precision + 32;
  std::vector<std::vector<BigFloat>> rows(max_degree + 2);
  for (const auto& [x, y] : samples) {
    BigFloat pw(1L, work);
    for (std::size_t d = 0; d <= max_degree; ++d) {
      rows[d].push_back(pw);
      pw = pw * x;
    }
    rows[max_degree + 1].push_back(y.with_precision(work));
  }
  LindepOptions opts;
  opts.max_coefficient = Integer(1);
  *opts.max_coefficient <<= static_cast<mp_bitcnt_t>(precision / 4);
  auto rel = lindep_columns(rows, precision, opts);
  if (!rel || sgn(rel->back()) == 0) return std::nullopt;
  return rel;
}

}  // namespace m24
