#include "m24/permgrp/permgrp.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace m24 {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size());
  for (int x : img_) {
    if (x < 0 || static_cast<std::size_t>(x) >= img_.size() || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("not a permutation");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return Perm(std::move(v));
}

Perm Perm::from_cycles(int n, std::string_view text) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(n));
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("cycle notation: expected '('");
    ++i;
    std::vector<int> cyc;
    for (skip(); i < text.size() && text[i] != ')'; skip()) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) throw std::invalid_argument("cycle notation: expected a point");
      const int x = std::stoi(std::string(text.substr(i, j - i)));
      if (x >= n || used[static_cast<std::size_t>(x)]) throw std::invalid_argument("cycle notation: bad point");
      used[static_cast<std::size_t>(x)] = true;
      cyc.push_back(x);
      i = j;
    }
    if (i == text.size()) throw std::invalid_argument("cycle notation: unclosed cycle");
    ++i;
    for (std::size_t k = 0; k < cyc.size(); ++k) img[static_cast<std::size_t>(cyc[k])] = cyc[(k + 1) % cyc.size()];
    skip();
  }
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<int> v(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) v[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
  Perm p;
  p.img_ = std::move(v);
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i)) return false;
  return true;
}

bool Perm::is_even() const {
  int transpositions = 0;
  for (int len : cycle_type()) transpositions += len - 1;
  return transpositions % 2 == 0;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> out;
  std::vector<bool> seen(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(img_[j])) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

Integer Perm::order() const {
  Integer l = 1;
  for (int len : cycle_type()) mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(len));
  return l;
}

std::string Perm::to_cycles() const {
  std::ostringstream os;
  std::vector<bool> seen(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == static_cast<int>(i)) continue;
    os << '(';
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(img_[j])) {
      if (j != i) os << ' ';
      os << j;
      seen[j] = true;
    }
    os << ')';
  }
  const std::string s = os.str();
  return s.empty() ? "()" : s;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.img_.size() != b.img_.size()) throw std::invalid_argument("permutations of different degrees");
  Perm p;
  p.img_.resize(a.img_.size());
  for (std::size_t i = 0; i < a.img_.size(); ++i) p.img_[i] = b.img_[static_cast<std::size_t>(a.img_[i])];
  return p;
}

Perm power(const Perm& p, long k) {
  Perm base = k < 0 ? p.inverse() : p;
  Perm acc = Perm::identity(p.degree());
  for (unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k); e; e >>= 1) {
    if (e & 1) acc = acc * base;
    base = base * base;
  }
  return acc;
}

// ---- Schreier-Sims -----------------------------------------------------------

BSGS::BSGS(std::vector<Perm> gens, std::uint64_t seed) {
  if (gens.empty()) throw std::invalid_argument("BSGS needs at least one generator");
  n_ = gens.front().degree();
  for (const auto& g : gens)
    if (g.degree() != n_) throw std::invalid_argument("generators of different degrees");

  for (const auto& g : gens) {
    Sifted s = sift(g);
    if (!s.residue.is_identity()) add_strong(s.residue, s.level);
  }

  // Random elements by product replacement; stop after 20 consecutive
  // elements sift through.
  std::mt19937_64 rng(seed);
  std::vector<Perm> slots = gens;
  while (slots.size() < 10) slots.push_back(gens[slots.size() % gens.size()]);
  Perm acc = Perm::identity(n_);
  std::uniform_int_distribution<std::size_t> pick(0, slots.size() - 1);
  auto next_random = [&] {
    std::size_t i = pick(rng), j = pick(rng);
    while (j == i) j = pick(rng);
    slots[i] = (rng() & 1) ? slots[i] * slots[j] : slots[i] * slots[j].inverse();
    acc = acc * slots[i];
    return acc;
  };
  for (int k = 0; k < 50; ++k) next_random();
  for (int quiet = 0; quiet < 20;) {
    Sifted s = sift(next_random());
    if (s.residue.is_identity()) {
      ++quiet;
    } else {
      add_strong(s.residue, s.level);
      quiet = 0;
    }
  }
  while (!verify_once()) {
  }
}

BSGS::Sifted BSGS::sift(Perm g, std::size_t from) const {
  for (std::size_t i = from; i < base_.size(); ++i) {
    const int x = g(base_[i]);
    const auto& u = transversal_[i][static_cast<std::size_t>(x)];
    if (!u) return {std::move(g), i};
    g = g * u->inverse();
  }
  return {std::move(g), base_.size()};
}

void BSGS::add_strong(const Perm& h, std::size_t level) {
  strong_.push_back(h);
  if (level == base_.size()) {
    int moved = 0;
    while (h(moved) == moved) ++moved;
    base_.push_back(moved);
    transversal_.emplace_back();
    orbit_.emplace_back();
  }
  for (std::size_t i = 0; i <= level; ++i) rebuild(i);
}

void BSGS::rebuild(std::size_t level) {
  std::vector<const Perm*> gens;
  for (const auto& s : strong_) {
    bool fixes = true;
    for (std::size_t j = 0; j < level && fixes; ++j) fixes = s(base_[j]) == base_[j];
    if (fixes) gens.push_back(&s);
  }
  auto& tr = transversal_[level];
  auto& orb = orbit_[level];
  tr.assign(static_cast<std::size_t>(n_), std::nullopt);
  orb.clear();
  const int b = base_[level];
  tr[static_cast<std::size_t>(b)] = Perm::identity(n_);
  orb.push_back(b);
  for (std::size_t k = 0; k < orb.size(); ++k) {
    const int x = orb[k];
    for (const Perm* s : gens) {
      const int y = (*s)(x);
      if (tr[static_cast<std::size_t>(y)]) continue;
      tr[static_cast<std::size_t>(y)] = *tr[static_cast<std::size_t>(x)] * *s;
      orb.push_back(y);
    }
  }
}

bool BSGS::verify_once() {
  for (std::size_t i = base_.size(); i-- > 0;) {
    std::vector<Perm> gens;
    for (const auto& s : strong_) {
      bool fixes = true;
      for (std::size_t j = 0; j < i && fixes; ++j) fixes = s(base_[j]) == base_[j];
      if (fixes) gens.push_back(s);
    }
    for (int x : orbit_[i]) {
      const Perm& ux = *transversal_[i][static_cast<std::size_t>(x)];
      for (const auto& s : gens) {
        const Perm& uy = *transversal_[i][static_cast<std::size_t>(s(x))];
        Sifted r = sift(ux * s * uy.inverse(), i + 1);
        if (!r.residue.is_identity()) {
          add_strong(r.residue, r.level);
          return false;
        }
      }
    }
  }
  return true;
}

Integer BSGS::order() const {
  Integer o = 1;
  for (const auto& orb : orbit_) o *= static_cast<unsigned long>(orb.size());
  return o;
}

bool BSGS::contains(const Perm& g) const {
  if (g.degree() != n_) return false;
  return sift(g).residue.is_identity();
}

std::vector<std::size_t> BSGS::orbit_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& orb : orbit_) out.push_back(orb.size());
  return out;
}

Integer group_order(const std::vector<Perm>& gens, std::uint64_t seed) { return BSGS(gens, seed).order(); }

bool is_k_transitive(const std::vector<Perm>& gens, int k) {
  if (k < 1 || k > 5) throw std::invalid_argument("is_k_transitive needs 1 <= k <= 5");
  if (gens.empty()) throw std::invalid_argument("is_k_transitive needs generators");
  const int n = gens.front().degree();
  if (k > n) return false;
  std::uint64_t space = 1, expected = 1;
  for (int i = 0; i < k; ++i) {
    space *= static_cast<std::uint64_t>(n);
    expected *= static_cast<std::uint64_t>(n - i);
  }
  auto encode = [&](const std::array<int, 5>& t) {
    std::uint64_t c = 0;
    for (int i = 0; i < k; ++i) c = c * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(t[static_cast<std::size_t>(i)]);
    return c;
  };
  std::vector<bool> seen(space);
  std::deque<std::array<int, 5>> queue;
  std::array<int, 5> start{0, 1, 2, 3, 4};
  seen[encode(start)] = true;
  queue.push_back(start);
  std::uint64_t count = 1;
  while (!queue.empty()) {
    const auto t = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      std::array<int, 5> u{};
      for (int i = 0; i < k; ++i) u[static_cast<std::size_t>(i)] = g(t[static_cast<std::size_t>(i)]);
      const std::uint64_t c = encode(u);
      if (seen[c]) continue;
      seen[c] = true;
      ++count;
      queue.push_back(u);
    }
  }
  return count == expected;
}

}  // namespace m24
