#include "satake/interpolation.hpp"

#include "satake/error.hpp"

namespace satake {

std::optional<IntVector> interpolate_integer_poly(const std::vector<Int>& xs,
                                                  const std::vector<Int>& ys) {
  if (xs.size() != ys.size()) throw ValidationError("interpolation: size mismatch");
  const std::size_t n = xs.size();
  // Newton divided differences, then expand into the monomial basis.
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) {
      const Int den = xs[i] - xs[i - k];
      if (den == 0) throw ValidationError("interpolation: repeated sample point");
      dd[i] = (dd[i] - dd[i - 1]) / Rational(den);
    }
  std::vector<Rational> poly(n, Rational(0));
  for (std::size_t k = n; k-- > 0;) {
    // poly = poly * (x - xs[k]) + dd[k]
    std::vector<Rational> next(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (i + 1 < n) next[i + 1] += poly[i];
      next[i] -= poly[i] * Rational(xs[k]);
    }
    next[0] += dd[k];
    poly = std::move(next);
  }
  IntVector out;
  for (const auto& c : poly) {
    if (c.denominator() != 1) return std::nullopt;
    out.push_back(c.numerator());
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::optional<IntVector> interpolate_checked(const std::vector<Int>& xs, const std::vector<Int>& ys,
                                             int max_degree) {
  if (static_cast<int>(xs.size()) < max_degree + 2)
    throw ValidationError("interpolation: need at least one sample beyond the degree bound");
  auto p = interpolate_integer_poly(xs, ys);
  if (!p || static_cast<int>(p->size()) > max_degree + 1) return std::nullopt;
  return p;
}

}  // namespace satake
