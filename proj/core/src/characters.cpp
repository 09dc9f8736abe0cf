#include "satake/characters.hpp"

#include "satake/error.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace satake {

namespace {

// The invariant form sum over all roots of <beta, x><beta, y>.
Int form(const RootDatum& g, const IntVector& x, const IntVector& y) {
  Int s = 0;
  for (const auto& beta : g.positive_roots()) s += 2 * dot(beta, x) * dot(beta, y);
  return s;
}

std::set<Coweight> saturated_weights(const RootDatum& g, const Coweight& mu) {
  std::set<Coweight> weights{mu};
  std::deque<Coweight> queue{mu};
  const auto& roots = g.positive_roots();
  const auto& coroots = g.positive_coroots();
  while (!queue.empty()) {
    const Coweight lam = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < roots.size(); ++k) {
      const Int n = dot(roots[k], lam);
      for (Int j = 1; j <= n; ++j) {
        Coweight next = lam - scale(j, coroots[k]);
        if (weights.insert(next).second) queue.push_back(std::move(next));
      }
      // the string is symmetric, so descend from negative pairings too
      for (Int j = 1; j <= -n; ++j) {
        Coweight next = lam + scale(j, coroots[k]);
        if (weights.insert(next).second) queue.push_back(std::move(next));
      }
    }
  }
  return weights;
}

}  // namespace

Character weyl_character(const RootDatum& g, const Coweight& mu) {
  if (!g.is_dominant(mu)) throw ValidationError("highest weight must be dominant: " + to_string(mu));
  const auto weight_set = saturated_weights(g, mu);
  std::vector<Coweight> weights(weight_set.begin(), weight_set.end());
  std::stable_sort(weights.begin(), weights.end(),
                   [&](const Coweight& a, const Coweight& b) { return g.height2(a) > g.height2(b); });
  const IntVector two_rho = g.two_rho_dual();
  const IntVector top = scale(2, mu) + two_rho;
  const Int top_norm = form(g, top, top);

  Character mult;
  for (const auto& lam : weights) {
    if (lam == mu) {
      mult[lam] = 1;
      continue;
    }
    // m(lam) (|mu+rho|^2 - |lam+rho|^2) = 2 sum_{alpha>0, k>=1} m(lam+k alpha) (lam+k alpha, alpha)
    Int numer = 0;
    for (const auto& alpha : g.positive_coroots()) {
      for (Int k = 1;; ++k) {
        const Coweight up = lam + scale(k, alpha);
        if (!weight_set.count(up)) break;
        auto it = mult.find(up);
        if (it != mult.end()) numer += it->second * form(g, up, alpha);
      }
    }
    const IntVector shifted = scale(2, lam) + two_rho;
    const Int denom = top_norm - form(g, shifted, shifted);
    // doubled coordinates scale the norms by 4
    numer *= 8;
    if (denom <= 0 || numer % denom != 0) throw std::logic_error("Freudenthal recursion is not integral");
    const Int m = numer / denom;
    if (m != 0) mult[lam] = m;
  }
  return mult;
}

Int weyl_dimension(const RootDatum& g, const Coweight& mu) {
  const IntVector shifted = scale(2, mu) + g.two_rho_dual();
  Rational d = 1;
  for (const auto& beta : g.positive_roots()) d *= Rational(dot(beta, shifted), dot(beta, g.two_rho_dual()));
  if (d.denominator() != 1) throw std::logic_error("Weyl dimension is not an integer");
  return d.numerator();
}

Character character_product(const Character& a, const Character& b) {
  Character out;
  for (const auto& [x, m] : a)
    for (const auto& [y, n] : b) out[x + y] += m * n;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Character character_add(const Character& a, const Character& b, Int scale_b) {
  Character out = a;
  for (const auto& [x, m] : b) out[x] += scale_b * m;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::map<Coweight, Int> decompose_character(const RootDatum& g, Character c) {
  std::map<Coweight, Int> out;
  while (!c.empty()) {
    const Coweight* best = nullptr;
    for (const auto& [x, m] : c)
      if (g.is_dominant(x) && (!best || g.height2(x) > g.height2(*best))) best = &x;
    if (!best) throw ValidationError("character is not Weyl-invariant");
    const Coweight hw = *best;
    const Int m = c.at(hw);
    out[hw] += m;
    c = character_add(c, weyl_character(g, hw), -m);
  }
  return out;
}

std::map<Coweight, Int> tensor_decomposition(const RootDatum& g, const Coweight& mu, const Coweight& lambda) {
  return decompose_character(g, character_product(weyl_character(g, mu), weyl_character(g, lambda)));
}

Int tensor_multiplicity(const RootDatum& g, const Coweight& mu, const Coweight& lambda, const Coweight& nu) {
  if (!g.is_dominant(nu)) throw ValidationError("nu must be dominant");
  const auto dec = tensor_decomposition(g, mu, lambda);
  auto it = dec.find(nu);
  return it == dec.end() ? 0 : it->second;
}

LaurentPoly q_kostant_partition(const RootDatum& g, const Coweight& beta) {
  const auto c = g.coroot_coords(beta);
  if (!c) return {};
  for (Int v : *c)
    if (v < 0) return {};
  const std::size_t l = c->size();
  // dp over the box 0 <= v <= c, adding one positive coroot at a time
  std::vector<IntVector> box;
  IntVector v(l, 0);
  while (true) {
    box.push_back(v);
    std::size_t k = 0;
    while (k < l && v[k] == (*c)[k]) v[k++] = 0;
    if (k == l) break;
    ++v[k];
  }
  std::map<IntVector, LaurentPoly> dp;
  dp[IntVector(l, 0)] = LaurentPoly(1);
  for (const auto& alpha : g.positive_coroots_simple()) {
    // x - alpha precedes x in box order, so alpha may be used repeatedly
    for (const auto& x : box) {
      const IntVector prev = x - alpha;
      if (std::any_of(prev.begin(), prev.end(), [](Int t) { return t < 0; })) continue;
      auto it = dp.find(prev);
      if (it == dp.end()) continue;
      dp[x] += LaurentPoly::q() * it->second;
    }
  }
  auto it = dp.find(*c);
  return it == dp.end() ? LaurentPoly() : it->second;
}

LaurentPoly lusztig_q_analog(const RootDatum& g, const Coweight& mu, const Coweight& lambda) {
  const auto& w = g.weyl();
  const IntVector top = scale(2, mu) + g.two_rho_dual();
  const IntVector base = scale(2, lambda) + g.two_rho_dual();
  LaurentPoly out;
  for (FiniteCoxeterGroup::Elem e = 0; e < w.size(); ++e) {
    const IntVector doubled = g.act(e, top) - base;
    bool even = true;
    for (Int x : doubled) even = even && x % 2 == 0;
    if (!even) continue;
    IntVector diff(doubled.size());
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = doubled[i] / 2;
    const LaurentPoly p = q_kostant_partition(g, diff);
    if (w.length(e) % 2 == 0) out += p;
    else out -= p;
  }
  return out;
}

}  // namespace satake
