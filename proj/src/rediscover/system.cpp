#include <random>

#include "m24/rediscover/rediscover.hpp"

namespace m24 {

namespace {

template <class T>
struct Dual {
  T v, d;
  friend Dual operator+(const Dual& a, const Dual& b) { return {a.v + b.v, a.d + b.d}; }
  friend Dual operator-(const Dual& a, const Dual& b) { return {a.v - b.v, a.d - b.d}; }
  friend Dual operator*(const Dual& a, const Dual& b) { return {a.v * b.v, a.v * b.d + a.d * b.v}; }
};

template <class T>
using Triple = std::array<T, 3>;  // c0 + c1 w + c2 w^2

template <class T>
using TPoly = std::vector<Triple<T>>;  // index = power of Y

// Product in K[w]/(w^3 + p w + q).
template <class T>
Triple<T> mul(const Triple<T>& a, const Triple<T>& b, const T& p, const T& q) {
  const T c0 = a[0] * b[0];
  const T c1 = a[0] * b[1] + a[1] * b[0];
  const T c2 = a[0] * b[2] + a[1] * b[1] + a[2] * b[0];
  const T c3 = a[1] * b[2] + a[2] * b[1];
  const T c4 = a[2] * b[2];
  return {c0 - q * c3, c1 - p * c3 - q * c4, c2 - p * c4};
}

template <class T>
TPoly<T> mul(const TPoly<T>& a, const TPoly<T>& b, const T& p, const T& q, const T& zero) {
  TPoly<T> out(a.size() + b.size() - 1, Triple<T>{zero, zero, zero});
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Triple<T> t = mul(a[i], b[j], p, q);
      for (std::size_t k = 0; k < 3; ++k) out[i + j][k] = out[i + j][k] + t[k];
    }
  return out;
}

// A^2 B + w Y^12 for the unknown vector x.
template <class T>
TPoly<T> combined(const std::vector<T>& x, const T& zero, const T& one) {
  if (x.size() != kUnknowns) throw std::invalid_argument("expected 50 unknowns");
  auto build = [&](std::size_t off) {
    TPoly<T> P(9, Triple<T>{zero, zero, zero});
    for (std::size_t k = 0; k < 8; ++k)
      for (std::size_t c = 0; c < 3; ++c) P[k][c] = x[off + 8 * c + k];
    P[8][0] = one;
    return P;
  };
  const TPoly<T> A = build(0), B = build(24);
  const T& p = x[48];
  const T& q = x[49];
  TPoly<T> R = mul(mul(A, A, p, q, zero), B, p, q, zero);
  R[12][1] = R[12][1] + one;
  return R;
}

template <class T>
std::vector<T> equations(const TPoly<T>& R, const T& one) {
  std::vector<T> out;
  out.reserve(kEquations);
  for (std::size_t c = 1; c <= 2; ++c)
    for (std::size_t k = 0; k < 24; ++k) out.push_back(R[k][c]);
  out.push_back(R[0][0] - one);
  return out;
}

Precision common_precision(const std::vector<BigComplex>& x) {
  Precision p = 2;
  for (const auto& z : x) p = std::max(p, z.precision());
  return p;
}

}  // namespace

std::vector<GaussRat> ResidualSystem::raw_identities(const std::vector<GaussRat>& x) const {
  const auto R = combined<GaussRat>(x, GaussRat(0), GaussRat(1));
  std::vector<GaussRat> out;
  for (std::size_t c = 1; c <= 2; ++c)
    for (std::size_t k = 0; k <= 24; ++k) out.push_back(R[k][c]);
  return out;
}

std::vector<GaussRat> ResidualSystem::residual(const std::vector<GaussRat>& x) const {
  return equations(combined<GaussRat>(x, GaussRat(0), GaussRat(1)), GaussRat(1));
}

std::vector<BigComplex> ResidualSystem::residual(const std::vector<BigComplex>& x) const {
  const Precision prec = common_precision(x);
  const BigComplex zero(prec), one(Rat(1), prec);
  return equations(combined<BigComplex>(x, zero, one), one);
}

CMatrix ResidualSystem::jacobian(const std::vector<BigComplex>& x) const {
  const Precision prec = common_precision(x);
  const BigComplex zero(prec), one(Rat(1), prec);
  using D = Dual<BigComplex>;
  CMatrix J(kEquations, std::vector<BigComplex>(kUnknowns, zero));
  std::vector<D> dx;
  dx.reserve(kUnknowns);
  for (const auto& v : x) dx.push_back({v, zero});
  for (std::size_t j = 0; j < kUnknowns; ++j) {
    dx[j].d = one;
    const auto r = equations(combined<D>(dx, D{zero, zero}, D{one, zero}), D{one, zero});
    for (std::size_t i = 0; i < kEquations; ++i) J[i][j] = r[i].d;
    dx[j].d = zero;
  }
  return J;
}

std::string ResidualSystem::equation_label(std::size_t i) const {
  if (i < 24) return "w^1 coefficient of Y^" + std::to_string(i);
  if (i < 48) return "w^2 coefficient of Y^" + std::to_string(i - 24);
  if (i == 48) return "constant term minus 1";
  throw std::out_of_range("equation index");
}

ResidualSystem build_residual_system() {
  ResidualSystem sys;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<GaussRat> x(kUnknowns);
    for (auto& v : x) v = GaussRat(Rat(d(rng)), Rat(d(rng)));
    const auto raw = sys.raw_identities(x);
    if (raw.size() != 50) throw std::logic_error("expected 50 raw identities");
    std::size_t vanishing = 0;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      const bool dropped = i == 24 || i == 49;
      if (dropped && !is_zero(raw[i])) throw std::logic_error("dropped identity " + std::to_string(i) + " is not identically zero");
      if (is_zero(raw[i])) ++vanishing;
    }
    if (vanishing != 2) throw std::logic_error("unexpected vanishing identities");
    if (sys.residual(x).size() != 49) throw std::logic_error("equation count is not 49");
  }
  return sys;
}

std::vector<BigComplex> to_complex(const std::vector<GaussRat>& x, Precision prec) {
  std::vector<BigComplex> out;
  out.reserve(x.size());
  for (const auto& v : x) out.emplace_back(v, prec);
  return out;
}

BigFloat max_abs(const std::vector<BigComplex>& v) {
  BigFloat m(common_precision(v));
  for (const auto& z : v) m = max(m, z.abs());
  return m;
}

}  // namespace m24
