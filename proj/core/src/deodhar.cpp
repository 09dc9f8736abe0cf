#include "satake/deodhar.hpp"

#include "satake/error.hpp"

#include <iterator>

namespace satake {

using Elem = FiniteCoxeterGroup::Elem;

namespace {

void check_reduced(const FiniteCoxeterGroup& w, const std::vector<int>& word) {
  for (int s : word)
    if (s < 0 || static_cast<std::size_t>(s) >= w.num_generators())
      throw ValidationError("generator index out of range: " + std::to_string(s));
  if (!w.is_reduced(word)) throw ValidationError("word is not reduced");
}

}  // namespace

std::vector<Subexpression> distinguished_subexpressions(const FiniteCoxeterGroup& w, const std::vector<int>& word) {
  check_reduced(w, word);
  std::vector<Subexpression> out;
  Subexpression cur;
  cur.sigma.push_back(w.identity());
  // depth-first: stay / ascend when sigma s > sigma, forced descent otherwise
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == word.size()) {
      out.push_back(cur);
      return;
    }
    const Elem prev = cur.sigma.back();
    const Elem moved = w.mul(prev, w.generator(word[j]));
    if (w.length(moved) > w.length(prev)) {
      cur.sigma.push_back(prev);
      self(self, j + 1);
      cur.sigma.back() = moved;
      self(self, j + 1);
      cur.sigma.pop_back();
    } else {
      cur.sigma.push_back(moved);
      self(self, j + 1);
      cur.sigma.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<DeodharCell> deodhar_cells(const FiniteCoxeterGroup& w, const std::vector<int>& word, Elem x) {
  std::vector<DeodharCell> out;
  for (auto& sub : distinguished_subexpressions(w, word)) {
    if (sub.endpoint() != x) continue;
    DeodharCell c;
    for (std::size_t j = 1; j < sub.sigma.size(); ++j) {
      const Elem a = sub.sigma[j - 1], b = sub.sigma[j];
      if (a == b) ++c.n;
      else if (w.length(a) > w.length(b)) ++c.m;
    }
    c.sub = std::move(sub);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<DeodharCell> deodhar_cells(const RootDatum& g, const std::vector<int>& word, Elem x) {
  return deodhar_cells(g.weyl(), word, x);
}

LaurentPoly cell_poly(const std::vector<Cell>& cells) {
  LaurentPoly p;
  for (const auto& c : cells) p += cell_polynomial(c.a, c.b);
  return p;
}

LaurentPoly cell_poly(const std::vector<DeodharCell>& cells) {
  LaurentPoly p;
  for (const auto& c : cells) p += cell_polynomial(c.m, c.n);
  return p;
}

LaurentPoly richardson_poly(const FiniteCoxeterGroup& w, const std::vector<int>& word, Elem x) {
  return cell_poly(deodhar_cells(w, word, x));
}

Int richardson_count(const FiniteCoxeterGroup& w, const std::vector<int>& word, Elem x, Int q) {
  return richardson_poly(w, word, x).evaluate_int(q);
}

std::vector<DeodharCell> parabolic_reduce(const FiniteCoxeterGroup& w, GenMask p, Elem v, Elem x) {
  if (!w.is_min_right_rep(v, p) || !w.is_min_right_rep(x, p))
    throw ValidationError("parabolic reduction needs minimal coset representatives");
  // B v B/B maps isomorphically onto B v P/P, and the preimage of B^- x P/P
  // is the union of B^- x u B/B over u in W_P
  std::vector<DeodharCell> out;
  for (Elem u : w.parabolic(p)) {
    auto part = deodhar_cells(w, w.word(v), w.mul(x, u));
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<WalkBranch> position_walk(const FiniteCoxeterGroup& w, const std::vector<int>& word, Elem start,
                                      GenMask left) {
  std::vector<WalkBranch> states{{w.min_left_rep(start, left), {0, 0}}};
  for (int s : word) {
    const Elem gen = w.generator(s);
    std::vector<WalkBranch> next;
    next.reserve(states.size() * 2);
    for (const auto& st : states) {
      const Elem moved = w.mul(st.end, gen);
      if (w.length(moved) > w.length(st.end)) {
        next.push_back({w.min_left_rep(moved, left), {st.cell.a + 1, st.cell.b}});
      } else {
        next.push_back({moved, st.cell});
        next.push_back({st.end, {st.cell.a, st.cell.b + 1}});
      }
    }
    states = std::move(next);
  }
  return states;
}

}  // namespace satake
