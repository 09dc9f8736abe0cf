#include "satake/vinberg.hpp"

#include "satake/characters.hpp"
#include "satake/error.hpp"

namespace satake {

namespace {

void add_entry(std::map<std::pair<Coweight, Int>, Int>& m, const Coweight& x, Int n, Int c) {
  if (c == 0) return;
  auto [it, inserted] = m.try_emplace({x, n}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

}  // namespace

GradedCharacter ic_class(const RootDatum& g, const Coweight& mu, Int n) {
  if (mu.size() != g.rank() || !g.is_dominant(mu)) throw ValidationError("mu must be a dominant coweight: " + to_string(mu));
  if (n < 0) throw ValidationError("IC_mu(-n) needs n >= 0");
  GradedCharacter out;
  const Int m = g.height2(mu) + 2 * n;
  for (const auto& [nu, mult] : weyl_character(g, mu)) add_entry(out, nu, m, mult);
  return out;
}

GradedCharacter tate_twist(const GradedCharacter& c, Int k) {
  GradedCharacter out;
  for (const auto& [key, mult] : c) out[{key.first, key.second - 2 * k}] = mult;
  return out;
}

VinbergCheck extends_to_vinberg(const RootDatum& g, const GradedCharacter& c) {
  for (const auto& [key, mult] : c)
    for (const auto& x : g.weyl_orbit(key.first)) {
      auto it = c.find({x, key.second});
      if (it == c.end() || it->second != mult)
        throw ValidationError("graded character is not Weyl-invariant at " + to_string(key.first));
    }
  VinbergCheck out;
  for (const auto& [key, mult] : c) {
    const auto& [lambda, m] = key;
    const bool parity = (g.height2(lambda) - m) % 2 == 0;
    const bool bound = g.height2(g.antidominant_rep(lambda)) >= -m;
    if (parity && bound) continue;
    if (out.extends || (!g.is_dominant(out.witness->first) && g.is_dominant(lambda))) out.witness = key;
    out.extends = false;
  }
  return out;
}

VinbergClass psi(const RootDatum& g, const HeckeElement& t) {
  VinbergClass out;
  const HeckeElement f = to_f_basis(g, t);
  for (const auto& [mu, c] : f.terms()) {
    if (!c.is_polynomial()) throw ValidationError("psi needs coefficients in Z[q]: " + c.to_string());
    const auto cs = c.coeffs();
    for (std::size_t n = 0; n < cs.size(); ++n) add_entry(out, mu, static_cast<Int>(n), cs[n]);
  }
  return out;
}

HeckeElement psi_inverse(const RootDatum& g, const VinbergClass& v) {
  HeckeElement f;
  for (const auto& [key, c] : v) {
    if (key.second < 0) throw ValidationError("IC_mu(-n) needs n >= 0");
    f.add(key.first, LaurentPoly::q_power(static_cast<int>(key.second), c));
  }
  return from_f_basis(g, f);
}

GradedCharacter character(const RootDatum& g, const VinbergClass& v) {
  GradedCharacter out;
  for (const auto& [key, c] : v)
    for (const auto& [wk, mult] : ic_class(g, key.first, key.second)) add_entry(out, wk.first, wk.second, c * mult);
  return out;
}

GradedCharacter graded_product(const GradedCharacter& a, const GradedCharacter& b) {
  GradedCharacter out;
  for (const auto& [ka, ma] : a)
    for (const auto& [kb, mb] : b) add_entry(out, ka.first + kb.first, ka.second + kb.second, ma * mb);
  return out;
}

SphericalFunction graded_to_spherical(const GradedCharacter& c) {
  SphericalFunction out;
  for (const auto& [key, mult] : c) out[key.first] += LaurentPoly::half_power(static_cast<int>(key.second), mult);
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

bool check_diagram(const RootDatum& g, const HeckeElement& t, Int q0) {
  // specialize first, then the classical transform
  std::map<Coweight, SurdValue> left;
  for (const auto& [mu, c] : t.terms()) {
    const SurdValue coeff = c.evaluate(q0);
    for (const auto& [nu, v] : specialize(satake_from_cells(g, HeckeElement::basis(mu)), q0)) {
      auto [it, inserted] = left.try_emplace(nu, SurdValue::from_rational(0, q0));
      it->second = it->second + coeff * v;
    }
  }
  std::erase_if(left, [](const auto& kv) { return kv.second.is_zero(); });
  const auto right = specialize(graded_to_spherical(character(g, psi(g, t))), q0);
  return left == right;
}

}  // namespace satake
