#pragma once

#include "satake/linalg.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace satake {

/// x -> linear * x + translation, acting on rational points.
struct AffineMap {
  IntMatrix linear;
  IntVector translation;

  static AffineMap identity(std::size_t dim);
  AffineMap operator*(const AffineMap& rhs) const;  // composition, rhs first
  RatVector apply(const RatVector& x) const;
  IntVector apply(const IntVector& x) const;

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
  friend auto operator<=>(const AffineMap&, const AffineMap&) = default;
};

/// Subsets of generators are bitmasks over generator indices.
using GenMask = std::uint32_t;

/// A finite Coxeter group realized by affine reflections. Elements are
/// indexed 0..size()-1 with 0 the identity; lengths and reduced words come
/// from a breadth-first closure, so generators must be simple reflections.
class FiniteCoxeterGroup {
 public:
  using Elem = std::size_t;

  FiniteCoxeterGroup() = default;
  explicit FiniteCoxeterGroup(std::vector<AffineMap> generators, std::size_t max_order = 2000);

  std::size_t size() const { return maps_.size(); }
  std::size_t num_generators() const { return gens_.size(); }
  Elem identity() const { return 0; }
  Elem generator(int i) const { return gens_.at(static_cast<std::size_t>(i)); }

  Elem mul(Elem a, Elem b) const { return table_[a * size() + b]; }
  Elem inverse(Elem a) const { return inv_[a]; }
  int length(Elem a) const { return len_[a]; }
  /// A reduced word in generator indices, built by right multiplication.
  const std::vector<int>& word(Elem a) const { return words_[a]; }
  const AffineMap& map(Elem a) const { return maps_[a]; }
  Elem longest() const { return longest_; }

  std::optional<Elem> find(const AffineMap& m) const;
  Elem from_word(const std::vector<int>& w) const;
  bool is_reduced(const std::vector<int>& w) const;

  bool right_descent(Elem w, int s) const { return length(mul(w, generator(s))) < length(w); }
  bool left_descent(Elem w, int s) const { return length(mul(generator(s), w)) < length(w); }

  bool bruhat_leq(Elem x, Elem y) const { return bruhat_[x][y]; }

  /// Elements of the standard parabolic subgroup W_J.
  std::vector<Elem> parabolic(GenMask j) const;
  /// Longest element of W_J.
  Elem parabolic_longest(GenMask j) const;
  /// Minimal length element of w W_J.
  Elem min_right_rep(Elem w, GenMask j) const;
  /// Minimal length element of W_I w.
  Elem min_left_rep(Elem w, GenMask i) const;
  /// Minimal length element of W_I w W_J.
  Elem min_double_rep(Elem w, GenMask i, GenMask j) const;
  /// All minimal representatives of W / W_J, in index order.
  std::vector<Elem> min_right_reps(GenMask j) const;
  bool is_min_right_rep(Elem w, GenMask j) const { return min_right_rep(w, j) == w; }

  GenMask all_generators() const { return static_cast<GenMask>((1ull << gens_.size()) - 1); }

 private:
  std::vector<AffineMap> gen_maps_;
  std::vector<Elem> gens_;
  std::vector<AffineMap> maps_;
  std::map<AffineMap, Elem> index_;
  std::vector<Elem> table_;
  std::vector<Elem> inv_;
  std::vector<int> len_;
  std::vector<std::vector<int>> words_;
  std::vector<std::vector<bool>> bruhat_;
  Elem longest_ = 0;
};

}  // namespace satake
