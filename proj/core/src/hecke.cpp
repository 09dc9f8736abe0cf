#include "satake/hecke.hpp"

#include "satake/characters.hpp"
#include "satake/error.hpp"
#include "satake/interpolation.hpp"
#include "satake/lattice_oracle.hpp"
#include "satake/mvcells.hpp"
#include "satake/deodhar.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <sstream>

namespace satake {

namespace {

void check_dominant(const RootDatum& g, const Coweight& mu) {
  if (mu.size() != g.rank()) throw ValidationError("coweight " + to_string(mu) + " has the wrong rank");
  if (!g.is_dominant(mu)) throw ValidationError("coweight " + to_string(mu) + " is not dominant");
}

std::vector<Coweight> dominant_weights_below(const RootDatum& g, const Coweight& mu) {
  std::vector<Coweight> out;
  for (const auto& [nu, m] : weyl_character(g, mu))
    if (g.is_dominant(nu)) out.push_back(nu);
  // highest first
  std::sort(out.begin(), out.end(), [&](const Coweight& a, const Coweight& b) {
    const Int ha = g.height2(a), hb = g.height2(b);
    return ha != hb ? ha > hb : a < b;
  });
  return out;
}

// q^{<rho, x>} for x with <2rho, x> = h2.
LaurentPoly rho_power(Int h2) { return LaurentPoly::half_power(static_cast<int>(h2)); }

const Coweight& highest(const RootDatum& g, const std::map<Coweight, LaurentPoly>& terms) {
  auto best = terms.begin();
  for (auto it = terms.begin(); it != terms.end(); ++it)
    if (g.height2(it->first) > g.height2(best->first)) best = it;
  return best->first;
}

}  // namespace

HeckeElement HeckeElement::basis(const Coweight& mu, LaurentPoly coeff) {
  HeckeElement h;
  h.add(mu, coeff);
  return h;
}

LaurentPoly HeckeElement::coeff(const Coweight& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void HeckeElement::add(const Coweight& mu, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mu, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
  HeckeElement r = *this;
  for (const auto& [mu, c] : o.terms_) r.add(mu, c);
  return r;
}

HeckeElement HeckeElement::operator-(const HeckeElement& o) const {
  HeckeElement r = *this;
  for (const auto& [mu, c] : o.terms_) r.add(mu, -c);
  return r;
}

HeckeElement HeckeElement::operator*(const LaurentPoly& c) const {
  HeckeElement r;
  for (const auto& [mu, x] : terms_) r.add(mu, x * c);
  return r;
}

std::string HeckeElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mu, c] : terms_) {
    os << (first ? "" : " + ") << "(" << c.to_string() << ")*T" << satake::to_string(mu);
    first = false;
  }
  return os.str();
}

std::map<Coweight, LaurentPoly> phi_basis_product(const RootDatum& g, const Coweight& mu, const Coweight& lambda) {
  check_dominant(g, mu);
  check_dominant(g, lambda);
  std::map<Coweight, LaurentPoly> out;
  for (const auto& [nu, c] : tensor_decomposition(g, mu, lambda)) {
    const Int h2 = g.height2(mu + lambda - nu);
    if (h2 < 0 || h2 % 2 != 0) throw std::logic_error("tensor product weight outside the root cone");
    out[nu] = LaurentPoly::q_power(static_cast<int>(h2 / 2), c);
  }
  return out;
}

const std::map<Coweight, LaurentPoly>& change_of_basis(const RootDatum& g, const Coweight& mu) {
  check_dominant(g, mu);
  using Key = std::pair<std::string, Coweight>;
  static std::shared_mutex mutex;
  static std::map<Key, std::map<Coweight, LaurentPoly>> memo;
  Key key{g.to_json(), mu};
  {
    std::shared_lock lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  std::map<Coweight, LaurentPoly> d;
  for (const auto& lambda : dominant_weights_below(g, mu)) {
    const LaurentPoly k = lusztig_q_analog(g, mu, lambda);
    const LaurentPoly value = k.invert_variable().shift_half(static_cast<int>(g.height2(mu - lambda)));
    if (!value.is_polynomial())
      throw std::logic_error("change of basis coefficient is not a polynomial: " + value.to_string());
    if (!value.is_zero()) d[lambda] = value;
  }
  std::unique_lock lock(mutex);
  return memo.emplace(std::move(key), std::move(d)).first->second;
}

std::map<Coweight, LaurentPoly> change_of_basis_oracle(const RootDatum& g, const Coweight& mu,
                                                       const std::vector<int>& samples) {
  check_dominant(g, mu);
  if (!lattice_group(g)) throw ValidationError("no finite-field oracle for " + g.name());
  const auto lambdas = dominant_weights_below(g, mu);
  const auto mult = weyl_character(g, mu);
  // values[lambda][i] = d_{mu,lambda}(samples[i])
  std::map<Coweight, std::vector<Int>> values;
  std::size_t needed = 0;
  for (const auto& l : lambdas) needed = std::max(needed, static_cast<std::size_t>(g.height2(mu - l) / 2 + 2));
  if (samples.size() < needed) throw BudgetExceeded("not enough sample points for the degree bound");
  for (std::size_t i = 0; i < needed; ++i) {
    const int q = samples[i];
    const LatticeOracle oracle(g, q);
    std::map<Coweight, Rational> d;
    for (const auto& l : lambdas) {
      // sum_{l'} d_{l'} #(S^+_l cap Gr^{l'}) = q^{<rho, mu + l>} m_mu(l)
      Rational rhs = Rational(rho_power(g.height2(mu + l)).evaluate_int(q) * mult.at(l));
      for (const auto& [lp, dv] : d) rhs -= dv * Rational(oracle.semiinfinite_count(lp, l, 1));
      const Int diag = oracle.semiinfinite_count(l, l, 1);
      d[l] = rhs / Rational(diag);
    }
    for (const auto& [l, v] : d) {
      if (v.denominator() != 1) throw ValidationError("oracle change of basis is not integral at q = " + std::to_string(q));
      values[l].push_back(v.numerator());
    }
  }
  std::map<Coweight, LaurentPoly> out;
  for (const auto& [l, ys] : values) {
    const int deg = static_cast<int>(g.height2(mu - l) / 2);
    const auto n = static_cast<std::size_t>(deg + 2);
    const std::vector<Int> xs(samples.begin(), samples.begin() + static_cast<std::ptrdiff_t>(n));
    const std::vector<Int> yv(ys.begin(), ys.begin() + static_cast<std::ptrdiff_t>(n));
    const auto p = interpolate_checked(xs, yv, deg);
    if (!p) throw ValidationError("interpolation of d_{mu,lambda} did not stabilize at lambda = " + to_string(l));
    const LaurentPoly poly = LaurentPoly::from_coeffs(*p);
    if (!poly.is_zero()) out[l] = poly;
  }
  return out;
}

HeckeElement to_f_basis(const RootDatum& g, const HeckeElement& t) {
  HeckeElement rest = t, out;
  while (!rest.is_zero()) {
    const Coweight mu = highest(g, rest.terms());
    const LaurentPoly c = rest.coeff(mu);
    out.add(mu, c);
    for (const auto& [l, d] : change_of_basis(g, mu)) rest.add(l, -(c * d));
  }
  return out;
}

HeckeElement from_f_basis(const RootDatum& g, const HeckeElement& f) {
  HeckeElement out;
  for (const auto& [mu, c] : f.terms())
    for (const auto& [l, d] : change_of_basis(g, mu)) out.add(l, c * d);
  return out;
}

HeckeElement hecke_multiply(const RootDatum& g, const HeckeElement& a, const HeckeElement& b) {
  for (const auto* h : {&a, &b})
    for (const auto& [mu, c] : h->terms()) {
      check_dominant(g, mu);
      if (!c.is_polynomial()) throw ValidationError("Hecke coefficients must be polynomials in q: " + c.to_string());
    }
  const HeckeElement fa = to_f_basis(g, a), fb = to_f_basis(g, b);
  HeckeElement prod;
  for (const auto& [mu, ca] : fa.terms())
    for (const auto& [lambda, cb] : fb.terms())
      for (const auto& [nu, c] : phi_basis_product(g, mu, lambda)) prod.add(nu, ca * cb * c);
  return from_f_basis(g, prod);
}

LaurentPoly structure_constant(const RootDatum& g, const Coweight& mu, const Coweight& lambda, const Coweight& nu) {
  return hecke_multiply(g, HeckeElement::basis(mu), HeckeElement::basis(lambda)).coeff(nu);
}

SphericalFunction satake_classical(const RootDatum& g, const HeckeElement& t) {
  SphericalFunction out;
  const HeckeElement f = to_f_basis(g, t);
  for (const auto& [mu, c] : f.terms()) {
    const LaurentPoly scale = c * rho_power(g.height2(mu));
    for (const auto& [nu, m] : weyl_character(g, mu)) {
      auto& slot = out[nu];
      slot += scale * LaurentPoly(m);
      if (slot.is_zero()) out.erase(nu);
    }
  }
  return out;
}

SphericalFunction satake_from_cells(const RootDatum& g, const HeckeElement& t) {
  SphericalFunction out;
  for (const auto& [mu, c] : t.terms()) {
    check_dominant(g, mu);
    for (const auto& [nu, cells] : *mv_cells_all(g, mu)) {
      auto& slot = out[nu];
      slot += c * cell_poly(cells) * rho_power(-g.height2(nu));
      if (slot.is_zero()) out.erase(nu);
    }
  }
  return out;
}

std::optional<std::map<Coweight, int>> gallery_bridge_exponents(const RootDatum& g, const Coweight& mu) {
  const auto psi = satake_classical(g, HeckeElement::basis(mu));
  std::map<Coweight, int> out;
  for (const auto& [nu, c] : psi) {
    const LaurentPoly p = point_count_poly(g, mu, nu, Orbit::Plus);
    if (p.is_zero()) return std::nullopt;
    const int e = c.min_half_degree() - p.min_half_degree();
    if (p.shift_half(e) != c) return std::nullopt;
    out[nu] = e;
  }
  return out;
}

SphericalFunction spherical_product(const SphericalFunction& a, const SphericalFunction& b) {
  SphericalFunction out;
  for (const auto& [x, ca] : a)
    for (const auto& [y, cb] : b) out[x + y] += ca * cb;
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

std::map<Coweight, SurdValue> specialize(const SphericalFunction& f, Int q0) {
  std::map<Coweight, SurdValue> out;
  for (const auto& [nu, c] : f) {
    const SurdValue v = c.evaluate(q0);
    if (!v.is_zero()) out.emplace(nu, v);
  }
  return out;
}

std::map<Coweight, SurdValue> satake_specialized(const RootDatum& g, const HeckeElement& t, Int q0) {
  return specialize(satake_classical(g, t), q0);
}

}  // namespace satake
