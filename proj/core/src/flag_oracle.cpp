#include "satake/flag_oracle.hpp"

#include "satake/error.hpp"

#include <functional>
#include <set>

namespace satake {

bool FlagOracle::supported(const RootDatum& g) {
  return g.name() == "SL2" || g.name() == "SL3" || g.name() == "Sp4";
}

FlagOracle::FlagOracle(const RootDatum& g, int q) : weyl_(g.weyl()), field_(q) {
  if (!supported(g)) throw ValidationError("flag oracle supports SL2, SL3 and Sp4 only, not " + g.name());
  std::vector<std::vector<std::pair<int, int>>> gen_swaps;
  if (g.name() == "Sp4") {
    n_ = 4;
    symplectic_ = true;
    gen_swaps = {{{0, 1}, {2, 3}}, {{1, 2}}};
  } else {
    n_ = g.name() == "SL2" ? 2 : 3;
    for (int i = 0; i + 1 < n_; ++i) gen_swaps.push_back({{i, i + 1}});
  }
  for (Elem w = 0; w < weyl_.size(); ++w) {
    std::vector<int> p(static_cast<std::size_t>(n_));
    for (int k = 0; k < n_; ++k) p[static_cast<std::size_t>(k)] = k;
    for (int letter : weyl_.word(w)) {
      std::vector<int> t = p;
      for (auto [a, b] : gen_swaps[static_cast<std::size_t>(letter)]) {
        t[static_cast<std::size_t>(a)] = p[static_cast<std::size_t>(b)];
        t[static_cast<std::size_t>(b)] = p[static_cast<std::size_t>(a)];
      }
      p = t;
    }
    perm_to_elem_.emplace(p, w);
  }

  const int top = symplectic_ ? 2 : n_ - 1;
  auto omega = [&](const Vec& x, const Vec& y) {
    FiniteField::Elt acc = 0;
    for (int i = 0; i < 4; ++i) {
      const auto term = field_.mul(x[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(3 - i)]);
      acc = i < 2 ? field_.add(acc, term) : field_.sub(acc, term);
    }
    return acc;
  };
  std::vector<Subspace> chain;
  std::function<void(const Subspace&)> grow = [&](const Subspace& cur) {
    if (static_cast<int>(cur.size()) == top) {
      Flag f;
      f.chain = chain;
      classify(f);
      flags_.push_back(std::move(f));
      return;
    }
    for (const auto& v : canonical_lines(cur)) {
      if (symplectic_ && !cur.empty() && omega(chain.front().front(), v) != 0) continue;
      Subspace next = cur;
      next.push_back(v);
      next = rref(std::move(next));
      chain.push_back(next);
      grow(next);
      chain.pop_back();
    }
  };
  grow({});
  for (const auto& f : flags_) ++counts_[{f.pos, f.opp}];
}

FlagOracle::Subspace FlagOracle::rref(Subspace rows) const {
  Subspace out;
  std::size_t r = 0;
  for (int c = 0; c < n_ && r < rows.size(); ++c) {
    const auto uc = static_cast<std::size_t>(c);
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][uc] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const auto inv = field_.inv(rows[r][uc]);
    for (auto& x : rows[r]) x = field_.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][uc] == 0) continue;
      const auto factor = rows[i][uc];
      for (int k = 0; k < n_; ++k) {
        const auto uk = static_cast<std::size_t>(k);
        rows[i][uk] = field_.sub(rows[i][uk], field_.mul(factor, rows[r][uk]));
      }
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::vector<FlagOracle::Vec> FlagOracle::canonical_lines(const Subspace& mod) const {
  // one vector per line of F^n / mod: zero in the pivot columns of mod,
  // leading entry 1
  std::vector<bool> pivot(static_cast<std::size_t>(n_), false);
  for (const auto& row : mod)
    for (int c = 0; c < n_; ++c)
      if (row[static_cast<std::size_t>(c)] != 0) {
        pivot[static_cast<std::size_t>(c)] = true;
        break;
      }
  std::vector<Vec> out;
  const int q = field_.order();
  for (int lead = 0; lead < n_; ++lead) {
    if (pivot[static_cast<std::size_t>(lead)]) continue;
    std::vector<int> free;
    for (int c = lead + 1; c < n_; ++c)
      if (!pivot[static_cast<std::size_t>(c)]) free.push_back(c);
    std::vector<int> digits(free.size(), 0);
    while (true) {
      Vec v(static_cast<std::size_t>(n_), 0);
      v[static_cast<std::size_t>(lead)] = 1;
      for (std::size_t i = 0; i < free.size(); ++i) v[static_cast<std::size_t>(free[i])] = digits[i];
      out.push_back(std::move(v));
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == q) digits[i++] = 0;
      if (i == digits.size()) break;
    }
  }
  return out;
}

int FlagOracle::dim_meet_first(const Subspace& v, int j) const {
  // dim(V cap span(e_1..e_j)) = dim V - rank of the projection to the other coordinates
  Subspace proj = v;
  for (auto& row : proj)
    for (int c = 0; c < j; ++c) row[static_cast<std::size_t>(c)] = 0;
  return static_cast<int>(v.size()) - static_cast<int>(rref(proj).size());
}

int FlagOracle::dim_meet_last(const Subspace& v, int j) const {
  Subspace proj = v;
  for (auto& row : proj)
    for (int c = n_ - j; c < n_; ++c) row[static_cast<std::size_t>(c)] = 0;
  return static_cast<int>(v.size()) - static_cast<int>(rref(proj).size());
}

FlagOracle::Elem FlagOracle::position(const std::vector<std::vector<int>>& ranks, bool opposite) const {
  std::vector<int> perm(static_cast<std::size_t>(n_));
  for (int i = 1; i <= n_; ++i) {
    int j = 1;
    while (ranks[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
               ranks[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] != 1)
      ++j;
    perm[static_cast<std::size_t>(i - 1)] = opposite ? n_ - j : j - 1;
  }
  auto it = perm_to_elem_.find(perm);
  if (it == perm_to_elem_.end()) throw std::logic_error("flag position outside the Weyl group");
  return it->second;
}

void FlagOracle::classify(Flag& f) const {
  for (bool opposite : {false, true}) {
    std::vector<std::vector<int>> ranks(static_cast<std::size_t>(n_ + 1), std::vector<int>(static_cast<std::size_t>(n_ + 1), 0));
    auto meet = [&](const Subspace& v, int j) { return opposite ? dim_meet_last(v, j) : dim_meet_first(v, j); };
    for (int j = 0; j <= n_; ++j) {
      for (std::size_t d = 0; d < f.chain.size(); ++d) ranks[d + 1][static_cast<std::size_t>(j)] = meet(f.chain[d], j);
      if (symplectic_)  // V3 = V1^perp and E_j^perp = E_{4-j}
        ranks[3][static_cast<std::size_t>(j)] = j - 1 + meet(f.chain[0], 4 - j);
      ranks[static_cast<std::size_t>(n_)][static_cast<std::size_t>(j)] = j;
    }
    (opposite ? f.opp : f.pos) = position(ranks, opposite);
  }
}

Int FlagOracle::richardson_count(Elem x, Elem y) const {
  auto it = counts_.find({y, x});
  return it == counts_.end() ? 0 : it->second;
}

Int FlagOracle::partial_richardson_count(GenMask j, Elem v, Elem w) const {
  v = weyl_.min_right_rep(v, j);
  w = weyl_.min_right_rep(w, j);
  // stored subspaces that a P_J-flag remembers
  std::vector<std::size_t> keep;
  if (symplectic_) {
    if (!(j & 1u)) keep.push_back(0);
    if (!(j & 2u)) keep.push_back(1);
  } else {
    for (int i = 0; i + 1 < n_; ++i)
      if (!(j & (1u << i))) keep.push_back(static_cast<std::size_t>(i));
  }
  std::set<std::vector<Subspace>> seen;
  for (const auto& f : flags_) {
    if (weyl_.min_right_rep(f.pos, j) != v || weyl_.min_right_rep(f.opp, j) != w) continue;
    std::vector<Subspace> key;
    for (auto d : keep) key.push_back(f.chain[d]);
    seen.insert(std::move(key));
  }
  return static_cast<Int>(seen.size());
}

}  // namespace satake
