#include "m24/modfactor/modpoly.hpp"

#include <sstream>

namespace m24 {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1U) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1U;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  static const std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto q : small) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++r;
  }
  for (auto a : small) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p == 2 || !is_prime_u64(p)) throw std::invalid_argument("not an odd prime: " + std::to_string(p));
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const { return powmod_u64(a, e, p_); }

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero mod " + std::to_string(p_));
  return pow(a, p_ - 2);
}

std::uint64_t PrimeField::reduce(const Integer& x) const {
  return mpz_fdiv_ui(x.get_mpz_t(), p_);
}

std::uint64_t PrimeField::reduce(const Rat& x) const {
  const std::uint64_t d = mpz_fdiv_ui(x.get_den_mpz_t(), p_);
  if (d == 0) throw std::domain_error("denominator divisible by " + std::to_string(p_));
  return mul(mpz_fdiv_ui(x.get_num_mpz_t(), p_), inv(d));
}

ModPoly::ModPoly(PrimeField f, std::vector<std::uint64_t> coeffs) : f_(f), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= f_.modulus();
  trim();
}

ModPoly ModPoly::from(const PrimeField& f, const QPoly& p) {
  std::vector<std::uint64_t> c;
  c.reserve(p.size());
  for (const auto& x : p.coefficients()) c.push_back(f.reduce(x));
  return ModPoly(f, std::move(c));
}

ModPoly ModPoly::from(const PrimeField& f, const ZPoly& p) {
  std::vector<std::uint64_t> c;
  c.reserve(p.size());
  for (const auto& x : p.coefficients()) c.push_back(f.reduce(x));
  return ModPoly(f, std::move(c));
}

ModPoly ModPoly::monomial(const PrimeField& f, std::uint64_t c, std::size_t k) {
  std::vector<std::uint64_t> v(k + 1);
  v[k] = c;
  return ModPoly(f, std::move(v));
}

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
  std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.f_.add(a.coeff(i), b.coeff(i));
  return ModPoly(a.f_, std::move(c));
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
  std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.f_.sub(a.coeff(i), b.coeff(i));
  return ModPoly(a.f_, std::move(c));
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
  if (a.is_zero() || b.is_zero()) return ModPoly(a.f_);
  const std::uint64_t p = a.f_.modulus();
  std::vector<unsigned __int128> acc(a.c_.size() + b.c_.size() - 1);
  // Below 2^30 the products stay under 2^60 and can be summed without reduction.
  const bool small = p < (1ULL << 30);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      acc[i + j] += static_cast<unsigned __int128>(a.c_[i]) * b.c_[j];
      if (!small) acc[i + j] %= p;
    }
  }
  std::vector<std::uint64_t> c(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) c[k] = static_cast<std::uint64_t>(acc[k] % p);
  return ModPoly(a.f_, std::move(c));
}

ModPoly ModPoly::scaled(std::uint64_t s) const {
  std::vector<std::uint64_t> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = f_.mul(c_[i], s);
  return ModPoly(f_, std::move(c));
}

std::string ModPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0 || c_[k] != 1) os << c_[k];
    if (k > 0) os << (c_[k] != 1 ? "*X" : "X");
    if (k > 1) os << "^" << k;
  }
  os << " (mod " << f_.modulus() << ")";
  return os.str();
}

ModDivRem divrem(const ModPoly& a, const ModPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const PrimeField& f = a.field();
  if (a.is_zero() || a.degree() < b.degree()) return {ModPoly(f), a};
  std::vector<std::uint64_t> r = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = b.degree();
  const std::uint64_t inv = f.inv(b.leading());
  std::vector<std::uint64_t> q(a.degree() - db + 1);
  for (std::size_t k = a.degree() + 1; k-- > db;) {
    if (r[k] == 0) continue;
    const std::uint64_t c = f.mul(r[k], inv);
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] = f.sub(r[k - db + j], f.mul(c, bc[j]));
  }
  r.resize(db);
  return {ModPoly(f, std::move(q)), ModPoly(f, std::move(r))};
}

ModPoly rem(const ModPoly& a, const ModPoly& m) { return divrem(a, m).remainder; }

ModPoly monic(const ModPoly& a) {
  if (a.is_zero()) return a;
  return a.scaled(a.field().inv(a.leading()));
}

ModPoly derivative(const ModPoly& a) {
  if (a.is_zero()) return a;
  std::vector<std::uint64_t> c(a.degree());
  for (std::size_t k = 1; k <= a.degree(); ++k) c[k - 1] = a.field().mul(a.coeff(k), k % a.field().modulus());
  return ModPoly(a.field(), std::move(c));
}

ModPoly gcd(const ModPoly& a, const ModPoly& b) {
  ModPoly x = a, y = b;
  while (!y.is_zero()) {
    ModPoly r = rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

ModPoly powmod(const ModPoly& base, const Integer& e, const ModPoly& m) {
  ModPoly result = rem(ModPoly(m.field(), {1}), m);
  ModPoly b = rem(base, m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(result * result, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(result * b, m);
  }
  return result;
}

ModPoly powmod(const ModPoly& base, std::uint64_t e, const ModPoly& m) {
  return powmod(base, Integer(std::to_string(e)), m);
}

bool is_irreducible(const ModPoly& f0) {
  if (f0.is_zero() || f0.degree() == 0) return false;
  const ModPoly f = monic(f0);
  const std::size_t d = f.degree();
  if (d == 1) return true;
  const PrimeField& F = f.field();
  const ModPoly x = ModPoly::monomial(F, 1, 1);
  // frob[k] = X^(p^k) mod f
  std::vector<ModPoly> frob{rem(x, f)};
  for (std::size_t k = 1; k <= d; ++k) frob.push_back(powmod(frob.back(), F.modulus(), f));
  if (frob[d] != rem(x, f)) return false;
  std::size_t n = d;
  for (std::size_t q = 2; q <= n; ++q) {
    if (n % q) continue;
    while (n % q == 0) n /= q;
    if (!gcd(frob[d / q] - x, f).is_one()) return false;
  }
  return true;
}

}  // namespace m24
