#include "m24/exact/text.hpp"

#include <cctype>
#include <stdexcept>

namespace m24 {

std::string format_poly(const QPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (sgn(c[k]) == 0) continue;
    std::string mag = to_string(Rat(abs(c[k])));
    if (out.empty())
      out += sgn(c[k]) < 0 ? "-" : "";
    else
      out += sgn(c[k]) < 0 ? " - " : " + ";
    if (k == 0) {
      out += mag;
      continue;
    }
    if (mag != "1") out += mag + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

void add_term(std::vector<Rat>& acc, std::string_view term, bool negative, std::string_view var,
              std::string_view whole) {
  term = strip(term);
  if (term.empty()) throw std::invalid_argument("empty term in polynomial: '" + std::string(whole) + "'");
  Rat coef = 1;
  std::size_t power = 0;
  const auto at = term.find(var);
  if (at == std::string_view::npos) {
    coef = parse_rat(term);
  } else {
    std::string_view head = strip(term.substr(0, at));
    std::string_view tail = strip(term.substr(at + var.size()));
    if (!head.empty()) {
      if (head.back() != '*') throw std::invalid_argument("expected '*' before variable in '" + std::string(term) + "'");
      head.remove_suffix(1);
      coef = parse_rat(head);
    }
    power = 1;
    if (!tail.empty()) {
      if (tail.front() != '^') throw std::invalid_argument("expected '^' after variable in '" + std::string(term) + "'");
      tail = strip(tail.substr(1));
      if (tail.empty()) throw std::invalid_argument("missing exponent in '" + std::string(term) + "'");
      for (char ch : tail)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          throw std::invalid_argument("bad exponent in '" + std::string(term) + "'");
      power = std::stoul(std::string(tail));
    }
  }
  if (negative) coef = -coef;
  if (acc.size() <= power) acc.resize(power + 1);
  acc[power] += coef;
}

}  // namespace

QPoly parse_poly(std::string_view text, std::string_view var) {
  std::vector<Rat> acc;
  std::string_view rest = strip(text);
  if (rest.empty()) throw std::invalid_argument("empty polynomial text");
  bool negative = false;
  if (rest.front() == '-' || rest.front() == '+') {
    negative = rest.front() == '-';
    rest = strip(rest.substr(1));
  }
  std::size_t start = 0;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    if (rest[i] != '+' && rest[i] != '-') continue;
    // A sign opening a term or following '^', '*', '/' belongs to the literal.
    std::string_view before = strip(rest.substr(start, i - start));
    if (before.empty() || before.back() == '^' || before.back() == '*' || before.back() == '/') continue;
    add_term(acc, rest.substr(start, i - start), negative, var, text);
    negative = rest[i] == '-';
    start = i + 1;
  }
  add_term(acc, rest.substr(start), negative, var, text);
  return QPoly(std::move(acc));
}

nlohmann::json poly_to_json(const QPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

QPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array of strings");
  std::vector<Rat> out;
  for (const auto& e : j) {
    if (e.is_string())
      out.push_back(parse_rat(e.get<std::string>()));
    else if (e.is_number_integer())
      out.emplace_back(Integer(std::to_string(e.get<long long>())));
    else
      throw std::invalid_argument("polynomial JSON entries must be rational strings");
  }
  return QPoly(std::move(out));
}

}  // namespace m24
