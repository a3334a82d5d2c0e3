#include "m24/family/family.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <string>

namespace m24 {

namespace detail {
extern const std::string_view kFamilyCoeffs;
extern const std::string_view kPrintedS0;
}  // namespace detail

namespace {

constexpr long kLeadA = 4194304;
constexpr long kBConstant = 224829;

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    std::size_t start = 0;
    while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start]))) ++start;
    if (start < line.size()) out.push_back(line.substr(start));
  }
  return out;
}

// Tokens after "label:" read as integers, highest power first; returns
// coefficients lowest power first.
std::vector<Rat> read_row(const std::string& rest, const std::string& where) {
  std::istringstream in(rest);
  std::vector<Rat> high_first;
  for (std::string tok; in >> tok;) {
    try {
      Rat v = parse_rat(tok);
      if (!is_integral(v)) throw std::invalid_argument("non-integer");
      high_first.push_back(v);
    } catch (const std::invalid_argument&) {
      throw DataError("bad coefficient '" + tok + "' in " + where);
    }
  }
  if (high_first.empty()) throw DataError("empty row in " + where);
  return std::vector<Rat>(high_first.rbegin(), high_first.rend());
}

BiPoly assemble(const std::map<std::size_t, QPoly>& rows, const std::string& name) {
  if (rows.empty()) throw DataError("section [" + name + "] is empty");
  const std::size_t deg = rows.rbegin()->first;
  std::vector<QPoly> c(deg + 1);
  for (std::size_t k = 0; k <= deg; ++k) {
    auto it = rows.find(k);
    if (it == rows.end()) throw DataError("section [" + name + "] lacks the row for X^" + std::to_string(k));
    c[k] = it->second;
  }
  return BiPoly(std::move(c));
}

void validate(const FamilyData& d) {
  if (d.A.size() != 13) throw DataError("A must have X-degree 12");
  if (d.B.size() != 11) throw DataError("B must have X-degree 10");
  if (d.A.leading() != QPoly{Rat(kLeadA)}) throw DataError("leading X-coefficient of A must be the constant 4194304");
  if (!d.A.coeff(0).is_zero()) throw DataError("X^0 coefficient of A must vanish");
  if (d.B.coeff(0).coeff(0) != kBConstant) throw DataError("constant term of B must be 224829");
  for (const auto* p : {&d.A, &d.B})
    for (const auto& c : p->coefficients())
      if (c.size() > 23) throw DataError("s-degree above 22");
}

GaussRat gauss(long re, long im) { return {Rat(re), Rat(im)}; }

using GLaurent = LaurentPoly<GaussRat>;

GLaurent evaluate_laurent(const QPoly& p, const GLaurent& x) {
  GLaurent acc;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + GLaurent::monomial(GaussRat(p.coefficients()[k]), 0);
  return acc;
}

}  // namespace

FamilyData parse_family_data(std::string_view text) {
  std::map<std::string, std::map<std::size_t, QPoly>> sections;
  std::string current;
  for (const auto& line : split_lines(text)) {
    if (line.front() == '[') {
      if (line.back() != ']') throw DataError("malformed section header: " + line);
      current = line.substr(1, line.size() - 2);
      if (sections.count(current)) throw DataError("duplicate section [" + current + "]");
      sections[current];
      continue;
    }
    if (current.empty()) throw DataError("data before the first section header");
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw DataError("row without ':' in [" + current + "]: " + line);
    std::size_t k = 0;
    try {
      k = std::stoul(line.substr(0, colon));
    } catch (const std::exception&) {
      throw DataError("bad X-power label in [" + current + "]: " + line);
    }
    const std::string where = "[" + current + "] X^" + std::to_string(k);
    auto& rows = sections[current];
    if (rows.count(k)) throw DataError("duplicate row " + where);
    rows[k] = QPoly(read_row(line.substr(colon + 1), where));
  }
  if (sections.size() != 2 || !sections.count("A") || !sections.count("B"))
    throw DataError("expected exactly the sections [A] and [B]");
  FamilyData d{assemble(sections["A"], "A"), assemble(sections["B"], "B")};
  validate(d);
  return d;
}

std::string_view embedded_family_text() { return detail::kFamilyCoeffs; }

const FamilyData& family_data() {
  static const FamilyData data = parse_family_data(detail::kFamilyCoeffs);
  return data;
}

Integer structured_checksum(const BiPoly& p) {
  Rat v = evaluate(evaluate(p, QPoly{Rat(1)}), Rat(1));
  return v.get_num();
}

Integer token_checksum(std::string_view text, std::string_view section) {
  Integer sum = 0;
  bool inside = false;
  std::string tok;
  const std::string header = "[" + std::string(section) + "]";
  for (const auto& line : split_lines(text)) {
    if (line.front() == '[') {
      inside = line == header;
      continue;
    }
    if (!inside) continue;
    // Skip the label up to ':' and add every remaining whitespace-separated number.
    std::istringstream in(line.substr(line.find(':') + 1));
    while (in >> tok) sum += Integer(tok);
  }
  return sum;
}

FamilyMember eval_family(const Rat& s) {
  const auto& d = family_data();
  auto at = [&](const BiPoly& p) { return map_coefficients(p, [&](const QPoly& c) { return evaluate(c, s); }); };
  return {at(d.A), at(d.B)};
}

const FamilyMember& printed_member_s0() {
  static const FamilyMember member = [] {
    FamilyMember m;
    for (const auto& line : split_lines(detail::kPrintedS0)) {
      const auto colon = line.find(':');
      const std::string label = line.substr(0, colon);
      QPoly p(read_row(line.substr(colon + 1), label));
      if (label == "A0")
        m.A = p;
      else if (label == "B0")
        m.B = p;
      else
        throw DataError("unknown row " + label);
    }
    return m;
  }();
  return member;
}

CoverPolynomial build_cover(const Rat& s) {
  const auto [A, B] = eval_family(s);
  const QPoly X = QPoly::variable();
  const QPoly rest = A * A + (X * X + QPoly{Rat(1)}) * B * B;
  std::vector<QPoly> c(rest.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = QPoly{rest.coeff(k), Rat(-2) * A.coeff(k)};
  c[0].set_coeff(2, Rat(1));
  return {BiPoly(std::move(c)), s};
}

QPoly specialize(const CoverPolynomial& cover, const Rat& t0) {
  return map_coefficients(cover.F, [&](const QPoly& c) { return evaluate(c, t0); });
}

BiPoly swap_variables(const BiPoly& p) {
  std::size_t inner = 0;
  for (const auto& c : p.coefficients()) inner = std::max(inner, c.size());
  std::vector<std::vector<Rat>> out(inner, std::vector<Rat>(p.size()));
  for (std::size_t k = 0; k < p.size(); ++k)
    for (std::size_t j = 0; j < p.coefficients()[k].size(); ++j) out[j][k] = p.coefficients()[k].coefficients()[j];
  std::vector<QPoly> c;
  c.reserve(inner);
  for (auto& v : out) c.emplace_back(std::move(v));
  return BiPoly(std::move(c));
}

const char* to_string(Convention c) {
  return c == Convention::SumOfSquares ? "x^2+z^2=b" : "x^2-z^2=b";
}

LaurentPoly<GaussRat> x_of_y() {
  // (Y - 1/Y) / 2
  return GLaurent::monomial(GaussRat(Rat(1, 2)), 1) + GLaurent::monomial(GaussRat(Rat(-1, 2)), -1);
}

ReconstructedCover reconstruct_g(const Rat& s, Convention convention) {
  if (s == 1) throw std::domain_error("s = 1 is excluded from the family");
  const Rat b = -1;
  const auto [A, B] = eval_family(s);
  const GLaurent x = x_of_y();
  // (Y - b/Y) / 2, divided by i for the sum-of-squares convention.
  const GLaurent w = GLaurent::monomial(GaussRat(Rat(1, 2)), 1) + GLaurent::monomial(GaussRat(-b / 2), -1);
  const GLaurent z = convention == Convention::SumOfSquares ? w.scaled(gauss(0, -1)) : w;
  const GLaurent ax = evaluate_laurent(A, x), bx = evaluate_laurent(B, x);
  const GLaurent t = ax + z * bx;
  if (t.is_zero() || t.valuation() < -12 || t.top() > 12)
    throw NotACover(std::string("Y^12 * t is not a polynomial under ") + to_string(convention));
  GPoly g = t.times_power(12);
  if (g.degree() != 24 || is_zero(g.coeff(0)))
    throw NotACover(std::string("Y^12 * t does not have degree 24 with g(0) != 0 under ") + to_string(convention));
  const GLaurent one = GLaurent::monomial(GaussRat(1), 0);
  const GLaurent diff = t - ax;
  const GLaurent residual = diff * diff + (x * x + one) * bx * bx;
  if (!residual.is_zero())
    throw NotACover(std::string("F(x(Y), g(Y)/Y^12) does not vanish under ") + to_string(convention));
  return {std::move(g), convention, b, s};
}

ReconstructedCover reconstruct_g(const Rat& s) {
  try {
    return reconstruct_g(s, Convention::SumOfSquares);
  } catch (const NotACover&) {
    return reconstruct_g(s, Convention::DifferenceOfSquares);
  }
}

bool check_conj_symmetry(const GPoly& g) {
  if (g.is_zero()) return false;
  const long top = static_cast<long>(g.degree());
  if (top != 24) return false;
  // f = sum_k g_{k+12} Y^k; f(-1/Y) has coefficient (-1)^j f_{-j} at Y^j.
  for (long j = -12; j <= 12; ++j) {
    GaussRat lhs = conj(g.coeff(static_cast<std::size_t>(j + 12)));
    GaussRat rhs = g.coeff(static_cast<std::size_t>(-j + 12));
    if (j % 2) rhs = -rhs;
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace m24
