#pragma once

// Permutation groups of small degree: cycle types, Schreier-Sims, orders
// and k-transitivity.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "m24/exact/rational.hpp"

namespace m24 {

/// Permutation of {0, ..., n-1}. Products act left to right: (a * b)(x) =
/// b(a(x)), so a * b means "first a, then b".
class Perm {
 public:
  Perm() = default;
  /// Throws invalid_argument unless images is a bijection of [0, n).
  explicit Perm(std::vector<int> images);
  static Perm identity(int n);
  /// Parses cycle notation such as "(0 1 2)(3 4)" on n points; "()" is the
  /// identity.
  static Perm from_cycles(int n, std::string_view text);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return img_; }

  Perm inverse() const;
  bool is_identity() const;
  bool is_even() const;
  /// Cycle lengths (fixed points included), in decreasing order.
  std::vector<int> cycle_type() const;
  /// lcm of the cycle lengths.
  Integer order() const;
  /// Cycle notation without fixed points; "()" for the identity.
  std::string to_cycles() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> img_;
};

Perm power(const Perm& p, long k);

/// Base and strong generating set.
class BSGS {
 public:
  /// Randomized Schreier-Sims followed by a deterministic pass in which
  /// every Schreier generator must sift to the identity.
  BSGS(std::vector<Perm> gens, std::uint64_t seed = 0);

  Integer order() const;
  bool contains(const Perm& g) const;
  const std::vector<int>& base() const { return base_; }
  const std::vector<Perm>& strong_generators() const { return strong_; }
  std::vector<std::size_t> orbit_lengths() const;
  int degree() const { return n_; }

 private:
  struct Sifted {
    Perm residue;
    std::size_t level;
  };
  Sifted sift(Perm g, std::size_t from = 0) const;
  void add_strong(const Perm& h, std::size_t level);
  void rebuild(std::size_t level);
  bool verify_once();

  int n_;
  std::vector<int> base_;
  std::vector<Perm> strong_;
  // transversal_[i][x]: element mapping base_[i] to x, built from the strong
  // generators that fix base_[0..i-1].
  std::vector<std::vector<std::optional<Perm>>> transversal_;
  std::vector<std::vector<int>> orbit_;
};

Integer group_order(const std::vector<Perm>& gens, std::uint64_t seed = 0);

/// Orbit of (0, 1, ..., k-1) on ordered k-tuples of distinct points has
/// size n (n-1) ... (n-k+1). Requires 1 <= k <= 5.
bool is_k_transitive(const std::vector<Perm>& gens, int k);

}  // namespace m24
