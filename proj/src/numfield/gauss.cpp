#include "m24/numfield/gauss.hpp"

#include <stdexcept>

namespace m24 {

GaussRat inverse(const GaussRat& x) {
  if (is_zero(x)) throw std::domain_error("inverse of zero in Q(i)");
  const Rat n = x.norm();
  return {x.re / n, -x.im / n};
}

GaussRat operator/(const GaussRat& a, const GaussRat& b) { return a * inverse(b); }

std::string to_string(const GaussRat& x) {
  if (sgn(x.im) == 0) return to_string(x.re);
  std::string im = to_string(Rat(abs(x.im))) + "*i";
  if (sgn(x.re) == 0) return (sgn(x.im) < 0 ? "-" : "") + im;
  return to_string(x.re) + (sgn(x.im) < 0 ? " - " : " + ") + im;
}

GaussRat parse_gauss(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s += ch;
  if (s.empty()) throw std::invalid_argument("empty Gaussian rational");
  if (s.back() != 'i') return GaussRat(parse_rat(s));
  s.pop_back();
  if (!s.empty() && s.back() == '*') s.pop_back();
  // Split at the last sign that is not leading.
  std::size_t cut = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;)
    if (s[k] == '+' || s[k] == '-') {
      cut = k;
      break;
    }
  auto coef = [](std::string c) {
    if (c.empty() || c == "+") return Rat(1);
    if (c == "-") return Rat(-1);
    return parse_rat(c);
  };
  if (cut == std::string::npos) return {Rat(0), coef(s)};
  return {parse_rat(s.substr(0, cut)), coef(s.substr(cut))};
}

GPoly to_gpoly(const QPoly& p) {
  return map_coefficients(p, [](const Rat& c) { return GaussRat(c); });
}

GPoly conj(const GPoly& p) {
  return map_coefficients(p, [](const GaussRat& c) { return conj(c); });
}

}  // namespace m24
