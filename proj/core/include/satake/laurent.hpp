#pragma once

#include "satake/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace satake {

/// An exact value a + b*sqrt(base) with rational a, b. Specializing q^{1/2}
/// at a non-square integer lands here; for square bases b is folded into a.
struct SurdValue {
  Rational rational = 0;
  Rational irrational = 0;
  Int base = 1;

  static SurdValue from_rational(Rational r, Int base);

  SurdValue operator+(const SurdValue& o) const;
  SurdValue operator-(const SurdValue& o) const;
  SurdValue operator*(const SurdValue& o) const;
  bool operator==(const SurdValue& o) const;
  bool is_zero() const { return rational.numerator() == 0 && irrational.numerator() == 0; }
  std::string to_string() const;
};

/// Element of Z[q^{1/2}, q^{-1/2}]. Exponents are stored in units of q^{1/2}:
/// the key 3 means q^{3/2}. No zero coefficients are stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(Int constant);  // NOLINT(google-explicit-constructor): ring embedding

  static LaurentPoly half_power(int half_exponent, Int coeff = 1);
  static LaurentPoly q_power(int exponent, Int coeff = 1) { return half_power(2 * exponent, coeff); }
  /// c0 + c1 q + c2 q^2 + ...
  static LaurentPoly from_coeffs(const std::vector<Int>& coeffs);
  static LaurentPoly q() { return q_power(1); }

  const std::map<int, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Only integer powers of q.
  bool has_integral_exponents() const;
  /// Integer powers of q, none negative.
  bool is_polynomial() const;
  /// Coefficients c0, c1, ... of a polynomial in q; throws if !is_polynomial().
  std::vector<Int> coeffs() const;
  Int coeff_half(int half_exponent) const;
  /// Largest / smallest half exponent; requires !is_zero().
  int max_half_degree() const;
  int min_half_degree() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  bool operator==(const LaurentPoly& o) const = default;

  LaurentPoly shift_half(int half_exponent) const;
  LaurentPoly pow(unsigned n) const;
  /// q -> q^{-1}
  LaurentPoly invert_variable() const;

  /// Exact value at q = c > 0 (q^{1/2} -> sqrt(c)).
  SurdValue evaluate(Int c) const;
  /// Integer value at q = c; throws if a half-integral or negative power occurs.
  Int evaluate_int(Int c) const;

  std::string to_string() const;

 private:
  void add_term(int e, Int c);
  std::map<int, Int> terms_;
};

/// (q - 1)^b * q^a as a polynomial.
LaurentPoly cell_polynomial(int affine_dim, int torus_dim);

}  // namespace satake
