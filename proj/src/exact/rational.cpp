#include "m24/exact/rational.hpp"

#include <cctype>

namespace m24 {

namespace {

bool valid_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer_literal(num) || !valid_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  if (num.front() == '+') num.remove_prefix(1);
  Integer p(std::string(num), 10), q(std::string(den), 10);
  if (q == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& x) { return x.get_str(10); }

std::string to_string(const Integer& x) { return x.get_str(10); }

std::optional<Rat> exact_sqrt(const Rat& x) {
  if (sgn(x) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t())) return std::nullopt;
  Integer n = sqrt(x.get_num());
  Integer d = sqrt(x.get_den());
  return Rat(n, d);
}

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rat rpow(const Rat& base, long exponent) {
  if (exponent < 0) return rpow(inverse(base), -exponent);
  Rat r(ipow(base.get_num(), static_cast<unsigned long>(exponent)),
        ipow(base.get_den(), static_cast<unsigned long>(exponent)));
  return r;
}

long bit_height(const Rat& x) {
  if (sgn(x) == 0) return 0;
  return static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 2)) -
         static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 2));
}

}  // namespace m24
