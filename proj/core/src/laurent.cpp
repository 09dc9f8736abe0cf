#include "satake/laurent.hpp"

#include "satake/error.hpp"

#include <cmath>
#include <sstream>

namespace satake {

namespace {

// Exact integer square root when n is a perfect square.
std::optional<Int> exact_sqrt(Int n) {
  if (n < 0) return std::nullopt;
  Int r = static_cast<Int>(std::llround(std::sqrt(static_cast<long double>(n))));
  for (Int d = r - 1; d <= r + 1; ++d)
    if (d >= 0 && d * d == n) return d;
  return std::nullopt;
}

Rational rational_pow(Int base, int exp) {
  Rational r = 1;
  const Rational b = exp >= 0 ? Rational(base) : Rational(1, base);
  for (int i = 0; i < std::abs(exp); ++i) r *= b;
  return r;
}

}  // namespace

SurdValue SurdValue::from_rational(Rational r, Int base) {
  SurdValue v;
  v.rational = r;
  v.base = base;
  return v;
}

SurdValue SurdValue::operator+(const SurdValue& o) const {
  SurdValue v = *this;
  v.rational += o.rational;
  v.irrational += o.irrational;
  return v;
}

SurdValue SurdValue::operator-(const SurdValue& o) const {
  SurdValue v = *this;
  v.rational -= o.rational;
  v.irrational -= o.irrational;
  return v;
}

SurdValue SurdValue::operator*(const SurdValue& o) const {
  SurdValue v;
  v.base = base;
  v.rational = rational * o.rational + irrational * o.irrational * Rational(base);
  v.irrational = rational * o.irrational + irrational * o.rational;
  if (auto s = exact_sqrt(base)) {
    v.rational += v.irrational * Rational(*s);
    v.irrational = 0;
  }
  return v;
}

bool SurdValue::operator==(const SurdValue& o) const {
  return rational == o.rational && irrational == o.irrational;
}

std::string SurdValue::to_string() const {
  std::ostringstream os;
  os << rational;
  if (irrational.numerator() != 0) os << " + " << irrational << "*sqrt(" << base << ")";
  return os.str();
}

LaurentPoly::LaurentPoly(Int constant) { add_term(0, constant); }

LaurentPoly LaurentPoly::half_power(int half_exponent, Int coeff) {
  LaurentPoly p;
  p.add_term(half_exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(const std::vector<Int>& coeffs) {
  LaurentPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(2 * static_cast<int>(i), coeffs[i]);
  return p;
}

void LaurentPoly::add_term(int e, Int c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool LaurentPoly::has_integral_exponents() const {
  for (const auto& [e, c] : terms_)
    if (e % 2 != 0) return false;
  return true;
}

bool LaurentPoly::is_polynomial() const {
  return has_integral_exponents() && (terms_.empty() || terms_.begin()->first >= 0);
}

std::vector<Int> LaurentPoly::coeffs() const {
  if (!is_polynomial()) throw ValidationError("not a polynomial in q: " + to_string());
  if (terms_.empty()) return {};
  std::vector<Int> out(static_cast<std::size_t>(terms_.rbegin()->first / 2 + 1), 0);
  for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(e / 2)] = c;
  return out;
}

Int LaurentPoly::coeff_half(int half_exponent) const {
  auto it = terms_.find(half_exponent);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly::max_half_degree() const { return terms_.rbegin()->first; }
int LaurentPoly::min_half_degree() const { return terms_.begin()->first; }

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::shift_half(int half_exponent) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + half_exponent, c);
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly r(1);
  for (unsigned i = 0; i < n; ++i) r *= *this;
  return r;
}

LaurentPoly LaurentPoly::invert_variable() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

SurdValue LaurentPoly::evaluate(Int c) const {
  if (c <= 0) throw ValidationError("specialization point must be positive");
  SurdValue v = SurdValue::from_rational(0, c);
  const auto root = exact_sqrt(c);
  for (const auto& [e, coeff] : terms_) {
    // q^{e/2} = c^{floor(e/2)} * sqrt(c)^{e mod 2}
    const int whole = (e >= 0) ? e / 2 : -((-e + 1) / 2);
    const bool odd = (e - 2 * whole) != 0;
    const Rational term = Rational(coeff) * rational_pow(c, whole);
    if (!odd) {
      v.rational += term;
    } else if (root) {
      v.rational += term * Rational(*root);
    } else {
      v.irrational += term;
    }
  }
  return v;
}

Int LaurentPoly::evaluate_int(Int c) const {
  if (!is_polynomial()) throw ValidationError("cannot evaluate to an integer: " + to_string());
  Int acc = 0;
  const auto cs = coeffs();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * c + *it;
  return acc;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [e, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const Int a = c < 0 ? -c : c;
    if (e == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    os << "q";
    if (e != 2) {
      if (e % 2 == 0) os << "^" << e / 2;
      else os << "^(" << e << "/2)";
    }
  }
  return os.str();
}

LaurentPoly cell_polynomial(int affine_dim, int torus_dim) {
  const LaurentPoly gm = LaurentPoly::q() - LaurentPoly(1);
  return LaurentPoly::q_power(affine_dim) * gm.pow(static_cast<unsigned>(torus_dim));
}

}  // namespace satake
