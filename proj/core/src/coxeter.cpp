#include "satake/coxeter.hpp"

#include "satake/error.hpp"

#include <algorithm>
#include <deque>

namespace satake {

AffineMap AffineMap::identity(std::size_t dim) {
  return {IntMatrix::identity(dim), IntVector(dim, 0)};
}

AffineMap AffineMap::operator*(const AffineMap& rhs) const {
  return {linear * rhs.linear, linear * rhs.translation + translation};
}

RatVector AffineMap::apply(const RatVector& x) const {
  RatVector y = linear * x;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += translation[i];
  return y;
}

IntVector AffineMap::apply(const IntVector& x) const { return linear * x + translation; }

FiniteCoxeterGroup::FiniteCoxeterGroup(std::vector<AffineMap> generators, std::size_t max_order)
    : gen_maps_(std::move(generators)) {
  if (gen_maps_.size() > 31) throw ValidationError("too many Coxeter generators");
  const std::size_t dim = gen_maps_.empty() ? 0 : gen_maps_.front().translation.size();
  maps_.push_back(AffineMap::identity(dim));
  index_.emplace(maps_.back(), 0);
  words_.push_back({});
  len_.push_back(0);

  // breadth-first closure under right multiplication by generators
  std::deque<Elem> queue{0};
  while (!queue.empty()) {
    const Elem w = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < gen_maps_.size(); ++s) {
      AffineMap m = maps_[w] * gen_maps_[s];
      if (index_.count(m)) continue;
      if (maps_.size() >= max_order) throw BudgetExceeded("Coxeter group larger than " + std::to_string(max_order));
      const Elem id = maps_.size();
      index_.emplace(m, id);
      maps_.push_back(std::move(m));
      auto word = words_[w];
      word.push_back(static_cast<int>(s));
      words_.push_back(std::move(word));
      len_.push_back(len_[w] + 1);
      queue.push_back(id);
    }
  }

  for (const auto& g : gen_maps_) gens_.push_back(index_.at(g));

  const std::size_t n = maps_.size();
  table_.assign(n * n, 0);
  inv_.assign(n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem c = index_.at(maps_[a] * maps_[b]);
      table_[a * n + b] = c;
      if (c == 0) inv_[a] = b;
    }
  longest_ = static_cast<Elem>(std::max_element(len_.begin(), len_.end()) - len_.begin());

  // Bruhat order by the lifting property, processing y in order of length
  std::vector<Elem> order(n);
  for (Elem i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) { return len_[a] < len_[b]; });
  bruhat_.assign(n, std::vector<bool>(n, false));
  for (Elem y : order) {
    if (y == 0) {
      bruhat_[0][0] = true;
      continue;
    }
    const int s = words_[y].back();
    const Elem ys = mul(y, gens_[static_cast<std::size_t>(s)]);
    for (Elem x = 0; x < n; ++x) {
      const Elem xs = mul(x, gens_[static_cast<std::size_t>(s)]);
      bruhat_[x][y] = len_[xs] < len_[x] ? bruhat_[xs][ys] : bruhat_[x][ys];
    }
  }
}

std::optional<FiniteCoxeterGroup::Elem> FiniteCoxeterGroup::find(const AffineMap& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FiniteCoxeterGroup::Elem FiniteCoxeterGroup::from_word(const std::vector<int>& w) const {
  Elem e = 0;
  for (int s : w) {
    if (s < 0 || static_cast<std::size_t>(s) >= gens_.size())
      throw ValidationError("generator index out of range: " + std::to_string(s));
    e = mul(e, gens_[static_cast<std::size_t>(s)]);
  }
  return e;
}

bool FiniteCoxeterGroup::is_reduced(const std::vector<int>& w) const {
  return length(from_word(w)) == static_cast<int>(w.size());
}

std::vector<FiniteCoxeterGroup::Elem> FiniteCoxeterGroup::parabolic(GenMask j) const {
  std::vector<Elem> out{0};
  std::vector<bool> seen(size(), false);
  seen[0] = true;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (std::size_t s = 0; s < gens_.size(); ++s) {
      if (!(j >> s & 1u)) continue;
      const Elem e = mul(out[k], gens_[s]);
      if (!seen[e]) {
        seen[e] = true;
        out.push_back(e);
      }
    }
  return out;
}

FiniteCoxeterGroup::Elem FiniteCoxeterGroup::parabolic_longest(GenMask j) const {
  Elem best = 0;
  for (Elem e : parabolic(j))
    if (len_[e] > len_[best]) best = e;
  return best;
}

FiniteCoxeterGroup::Elem FiniteCoxeterGroup::min_right_rep(Elem w, GenMask j) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < gens_.size(); ++s)
      if ((j >> s & 1u) && right_descent(w, static_cast<int>(s))) {
        w = mul(w, gens_[s]);
        changed = true;
      }
  }
  return w;
}

FiniteCoxeterGroup::Elem FiniteCoxeterGroup::min_left_rep(Elem w, GenMask i) const {
  return inverse(min_right_rep(inverse(w), i));
}

FiniteCoxeterGroup::Elem FiniteCoxeterGroup::min_double_rep(Elem w, GenMask i, GenMask j) const {
  Elem prev;
  do {
    prev = w;
    w = min_left_rep(min_right_rep(w, j), i);
  } while (w != prev);
  return w;
}

std::vector<FiniteCoxeterGroup::Elem> FiniteCoxeterGroup::min_right_reps(GenMask j) const {
  std::vector<Elem> out;
  for (Elem w = 0; w < size(); ++w)
    if (is_min_right_rep(w, j)) out.push_back(w);
  return out;
}

}  // namespace satake
