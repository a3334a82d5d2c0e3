#include "m24/rediscover/rediscover.hpp"

#include <limits>

namespace m24 {

std::vector<BigComplex> min_norm_solve(const CMatrix& J, const std::vector<BigComplex>& b) {
  const std::size_t m = J.size();
  if (m == 0 || b.size() != m) throw std::invalid_argument("min_norm_solve: shape mismatch");
  const std::size_t n = J[0].size();
  if (m > n) throw std::invalid_argument("min_norm_solve needs at least as many unknowns as equations");
  const Precision prec = J[0][0].precision();

  // M = J^H (n x m), reduced in place to R by Householder reflections.
  CMatrix M(n, std::vector<BigComplex>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) M[j][i] = J[i][j].conj();
  std::vector<std::vector<BigComplex>> vs;
  std::vector<BigFloat> vnorm2;
  for (std::size_t k = 0; k < m; ++k) {
    BigFloat norm2(prec);
    for (std::size_t i = k; i < n; ++i) norm2 += M[i][k].norm();
    const BigFloat nrm = sqrt(norm2);
    const BigFloat ax = M[k][k].abs();
    // alpha = -e^{i arg x0} ||x||
    BigComplex alpha = ax.is_zero() ? BigComplex(-nrm, BigFloat(prec))
                                     : BigComplex(-(M[k][k].re() / ax) * nrm, -(M[k][k].im() / ax) * nrm);
    std::vector<BigComplex> v(n - k);
    for (std::size_t i = k; i < n; ++i) v[i - k] = M[i][k];
    v[0] = v[0] - alpha;
    BigFloat vv(prec);
    for (const auto& z : v) vv += z.norm();
    if (!vv.is_zero()) {
      for (std::size_t j = k; j < m; ++j) {
        BigComplex dot(prec);
        for (std::size_t i = k; i < n; ++i) dot += v[i - k].conj() * M[i][j];
        const BigComplex f = dot * (BigFloat(2L, prec) / vv);
        for (std::size_t i = k; i < n; ++i) M[i][j] -= v[i - k] * f;
      }
    }
    vs.push_back(std::move(v));
    vnorm2.push_back(std::move(vv));
  }
  BigFloat rmax(prec);
  for (std::size_t k = 0; k < m; ++k) rmax = max(rmax, M[k][k].abs());
  for (std::size_t k = 0; k < m; ++k)
    if (M[k][k].abs() <= rmax.mul_2si(-static_cast<long>(prec / 2)))
      throw RankDeficient("Jacobian is rank deficient at column " + std::to_string(k));

  // J = R^H Q^H: solve R^H y = b, then dx = Q (y, 0).
  std::vector<BigComplex> z(n, BigComplex(prec));
  for (std::size_t i = 0; i < m; ++i) {
    BigComplex acc = b[i];
    for (std::size_t j = 0; j < i; ++j) acc -= M[j][i].conj() * z[j];
    z[i] = acc / M[i][i].conj();
  }
  for (std::size_t k = m; k-- > 0;) {
    if (vnorm2[k].is_zero()) continue;
    const auto& v = vs[k];
    BigComplex dot(prec);
    for (std::size_t i = k; i < n; ++i) dot += v[i - k].conj() * z[i];
    const BigComplex f = dot * (BigFloat(2L, prec) / vnorm2[k]);
    for (std::size_t i = k; i < n; ++i) z[i] -= v[i - k] * f;
  }
  return z;
}

NewtonResult newton_refine(const ResidualSystem& sys, std::vector<BigComplex> start, Precision precision,
                           std::size_t max_iterations) {
  NewtonResult res;
  res.x.reserve(start.size());
  for (auto& z : start) res.x.push_back(z.with_precision(precision));
  const long target = 64 - static_cast<long>(precision);
  for (;;) {
    const auto r = sys.residual(res.x);
    res.residual = max_abs(r);
    const long e = res.residual.is_zero() ? std::numeric_limits<long>::min() : res.residual.exponent();
    res.residual_history.push_back(res.residual);
    if (e < target) return res;
    if (res.iterations == max_iterations)
      throw NoConvergence("no convergence after " + std::to_string(max_iterations) + " iterations (residual 2^" +
                          std::to_string(e) + ")");
    std::vector<BigComplex> rhs;
    rhs.reserve(r.size());
    for (const auto& v : r) rhs.push_back(-v);
    const auto dx = min_norm_solve(sys.jacobian(res.x), rhs);
    for (std::size_t i = 0; i < res.x.size(); ++i) res.x[i] += dx[i];
    ++res.iterations;
  }
}

}  // namespace m24
