#include "satake/lattice_oracle.hpp"

#include "satake/error.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace satake {

namespace {

int valuation(const FqLaurent& f) { return f.empty() ? std::numeric_limits<int>::max() : f.begin()->first; }

void add_term(const FiniteField& k, FqLaurent& f, int e, FiniteField::Elt c) {
  if (c == 0) return;
  auto [it, inserted] = f.try_emplace(e, c);
  if (!inserted) {
    it->second = k.add(it->second, c);
    if (it->second == 0) f.erase(it);
  }
}

FqLaurent sub(const FiniteField& k, const FqLaurent& x, const FqLaurent& y) {
  FqLaurent r = x;
  for (const auto& [e, c] : y) add_term(k, r, e, k.neg(c));
  return r;
}

FqLaurent shift(const FqLaurent& x, int s) {
  FqLaurent r;
  for (const auto& [e, c] : x) r.emplace(e + s, c);
  return r;
}

// Product with every exponent >= cutoff dropped.
FqLaurent mul(const FiniteField& k, const FqLaurent& x, const FqLaurent& y, int cutoff) {
  FqLaurent r;
  for (const auto& [e1, c1] : x)
    for (const auto& [e2, c2] : y)
      if (e1 + e2 < cutoff) add_term(k, r, e1 + e2, k.mul(c1, c2));
  return r;
}

// t^{-v} / x for v = val(x), to `terms` terms.
FqLaurent unit_inverse(const FiniteField& k, const FqLaurent& x, int terms) {
  const int v = valuation(x);
  std::vector<FiniteField::Elt> a(static_cast<std::size_t>(terms), 0), inv(static_cast<std::size_t>(terms), 0);
  for (const auto& [e, c] : x)
    if (e - v < terms) a[static_cast<std::size_t>(e - v)] = c;
  inv[0] = k.inv(a[0]);
  for (int n = 1; n < terms; ++n) {
    FiniteField::Elt acc = 0;
    for (int i = 1; i <= n; ++i)
      acc = k.add(acc, k.mul(a[static_cast<std::size_t>(i)], inv[static_cast<std::size_t>(n - i)]));
    inv[static_cast<std::size_t>(n)] = k.neg(k.mul(acc, inv[0]));
  }
  FqLaurent r;
  for (int n = 0; n < terms; ++n)
    if (inv[static_cast<std::size_t>(n)] != 0) r.emplace(n, inv[static_cast<std::size_t>(n)]);
  return r;
}

LatticeGroup group_from_name(const std::string& name) {
  if (name == "GL2") return LatticeGroup::GL2;
  if (name == "SL2") return LatticeGroup::SL2;
  if (name == "PGL2") return LatticeGroup::PGL2;
  throw ValidationError("lattice oracle supports GL2, SL2 and PGL2 only, not " + name);
}

}  // namespace

std::optional<LatticeGroup> lattice_group(const RootDatum& g) {
  if (g.name() == "GL2") return LatticeGroup::GL2;
  if (g.name() == "SL2") return LatticeGroup::SL2;
  if (g.name() == "PGL2") return LatticeGroup::PGL2;
  return std::nullopt;
}

LatticeOracle::LatticeOracle(LatticeGroup group, int q, std::size_t max_points)
    : group_(group), field_(q), max_points_(max_points) {}

LatticeOracle::LatticeOracle(const RootDatum& g, int q, std::size_t max_points)
    : group_(group_from_name(g.name())), field_(q), max_points_(max_points) {}

std::pair<Int, Int> LatticeOracle::lift(const Coweight& x) const {
  switch (group_) {
    case LatticeGroup::GL2:
      if (x.size() != 2) throw ValidationError("GL2 coweights have two coordinates");
      return {x[0], x[1]};
    case LatticeGroup::SL2:
      if (x.size() != 1) throw ValidationError("SL2 coweights have one coordinate");
      return {x[0], -x[0]};
    case LatticeGroup::PGL2:
      if (x.size() != 1) throw ValidationError("PGL2 coweights have one coordinate");
      return {x[0], 0};
  }
  return {};
}

Coweight LatticeOracle::unlift(std::pair<Int, Int> x) const {
  switch (group_) {
    case LatticeGroup::GL2: return {x.first, x.second};
    case LatticeGroup::SL2: return {x.first};
    case LatticeGroup::PGL2: return {x.first - x.second};
  }
  return {};
}

std::vector<Gl2Lattice> LatticeOracle::enumerate_schubert(const Coweight& mu) const {
  const auto [m1, m2] = lift(mu);
  if (m1 < m2) throw ValidationError("coweight is not dominant");
  const int q = field_.order();
  // |Gr^mu| < 2 q^{m1 - m2}
  double estimate = 2;
  for (Int i = m2; i < m1; ++i) estimate *= q;
  if (estimate > static_cast<double>(max_points_) * 2)
    throw BudgetExceeded("Gr^" + to_string(mu) + " over F_" + std::to_string(q) + " exceeds the point budget");
  std::vector<Gl2Lattice> out;
  for (Int a = m2; a <= m1; ++a) {
    const Int b = m1 + m2 - a;
    const int free = static_cast<int>(a - m2);
    // f ranges over coefficient vectors at exponents m2 .. a-1
    std::vector<int> digits(static_cast<std::size_t>(free), 0);
    while (true) {
      const bool min_attained = a == m2 || b == m2 || (free > 0 && digits[0] != 0);
      if (min_attained) {
        Gl2Lattice l{static_cast<int>(a), static_cast<int>(b), {}};
        for (int i = 0; i < free; ++i)
          if (digits[static_cast<std::size_t>(i)] != 0)
            l.f.emplace(static_cast<int>(m2) + i, digits[static_cast<std::size_t>(i)]);
        out.push_back(std::move(l));
      }
      int i = 0;
      while (i < free && ++digits[static_cast<std::size_t>(i)] == q) digits[static_cast<std::size_t>(i++)] = 0;
      if (i == free) break;
    }
  }
  return out;
}

std::pair<Int, Int> LatticeOracle::relative_type(const Gl2Lattice& x, const Gl2Lattice& y) const {
  // x^{-1} y = [[t^{c-a}, t^{-a} g - f t^{d-a-b}], [0, t^{d-b}]]
  const FqLaurent off = sub(field_, shift(y.f, -x.a), shift(x.f, y.b - x.a - x.b));
  const Int m = std::min({static_cast<Int>(y.a - x.a), static_cast<Int>(y.b - x.b),
                          off.empty() ? std::numeric_limits<Int>::max() : static_cast<Int>(valuation(off))});
  const Int det = y.a + y.b - x.a - x.b;
  return {det - m, m};
}

Gl2Lattice LatticeOracle::random_point(std::pair<Int, Int> nu, unsigned seed) const {
  if (seed == 0) return Gl2Lattice{static_cast<int>(nu.first), static_cast<int>(nu.second), {}};
  const auto pts = LatticeOracle(LatticeGroup::GL2, field_.order(), max_points_).enumerate_schubert({nu.first, nu.second});
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
  return pts[pick(rng)];
}

Int LatticeOracle::convolution_count(const Coweight& mu, const Coweight& lambda, const Coweight& nu,
                                     unsigned seed) const {
  auto [l1, l2] = lift(lambda);
  auto [m1, m2] = lift(mu);
  auto [n1, n2] = lift(nu);
  if (group_ == LatticeGroup::PGL2) {
    // pick the lift of nu with the determinant of mu + lambda
    const Int total = m1 + m2 + l1 + l2;
    const Int diff = n1 - n2;
    if ((total + diff) % 2 != 0) return 0;
    n1 = (total + diff) / 2;
    n2 = (total - diff) / 2;
  }
  if (n1 + n2 != m1 + m2 + l1 + l2) return 0;
  const Gl2Lattice y = random_point({n1, n2}, seed);
  Int count = 0;
  for (const auto& x : enumerate_schubert(mu))
    if (relative_type(x, y) == std::pair<Int, Int>{l1, l2}) ++count;
  return count;
}

std::map<Coweight, Int> LatticeOracle::convolution_counts(const Coweight& mu, const Coweight& lambda) const {
  const auto [m1, m2] = lift(mu);
  const auto [l1, l2] = lift(lambda);
  std::map<Coweight, Int> out;
  const Int total = m1 + m2 + l1 + l2;
  for (Int n1 = m1 + l1; 2 * n1 >= total; --n1) {
    const Int n2 = total - n1;
    const Coweight nu = unlift({n1, n2});
    const Int c = convolution_count(mu, lambda, nu);
    if (c != 0) out[nu] = c;
  }
  return out;
}

Gl2Lattice LatticeOracle::normalize(const FqLaurent& p0, const FqLaurent& r0, const FqLaurent& s0,
                                    const FqLaurent& u0, int precision) const {
  FqLaurent p = p0, r = r0, s = s0, u = u0;
  if (s.empty() && u.empty()) throw ValidationError("singular matrix");
  if (valuation(s) < valuation(u)) {
    std::swap(p, r);
    std::swap(s, u);
  }
  const int vu = valuation(u);
  const int lo = std::min({valuation(p), valuation(r), valuation(s), vu});
  const int cutoff = lo + precision;
  const FqLaurent uinv = shift(unit_inverse(field_, u, precision), -vu);
  // col1 -= (s / u) col2
  const FqLaurent ratio = mul(field_, s, uinv, cutoff);
  p = sub(field_, p, mul(field_, ratio, r, cutoff));
  if (p.empty()) throw ValidationError("singular matrix or precision too low");
  // scale col2 so its bottom entry is t^{vu}; scale col1 so its top entry is a power of t
  r = mul(field_, r, shift(uinv, vu), cutoff);
  const int a = valuation(p);
  Gl2Lattice out{a, vu, {}};
  for (const auto& [e, c] : r)
    if (e < a) out.f.emplace(e, c);
  return out;
}

Int LatticeOracle::semiinfinite_count(const Coweight& mu, const Coweight& nu, int sign) const {
  if (sign != 1 && sign != -1) throw ValidationError("sign must be +1 or -1");
  auto [n1, n2] = lift(nu);
  const auto [m1, m2] = lift(mu);
  if (group_ == LatticeGroup::PGL2) {
    const Int diff = n1 - n2;
    if ((m1 + m2 + diff) % 2 != 0) return 0;
    n1 = (m1 + m2 + diff) / 2;
    n2 = (m1 + m2 - diff) / 2;
  }
  const auto pts = enumerate_schubert(mu);
  if (sign == 1)
    return static_cast<Int>(std::count_if(pts.begin(), pts.end(), [&](const Gl2Lattice& l) {
      return l.a == n1 && l.b == n2;
    }));
  // U^- t^nu K: swapping the rows turns U^- into U and nu into w0 nu
  const int precision = static_cast<int>(2 * (m1 - m2) + 4);
  Int count = 0;
  for (const auto& l : pts) {
    const FqLaurent ta{{l.a, 1}}, tb{{l.b, 1}}, zero;
    const Gl2Lattice n = normalize(zero, tb, ta, l.f, precision);
    if (n != normalize(zero, tb, ta, l.f, 2 * precision))
      throw std::logic_error("lattice normal form not stable under doubling the precision");
    if (n.a == n2 && n.b == n1) ++count;
  }
  return count;
}

}  // namespace satake
