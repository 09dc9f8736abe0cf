#pragma once

#include <cstdint>
#include <vector>

namespace satake {

/// F_q by lookup tables. Elements are 0..q-1; for q = p^k an element encodes
/// the coefficients of a polynomial in the generator, base p, and arithmetic
/// is modulo a fixed Conway polynomial.
class FiniteField {
 public:
  using Elt = int;

  /// Supports primes below 64 and q in {4, 8, 9, 16, 25, 27}.
  explicit FiniteField(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }

  Elt add(Elt a, Elt b) const { return add_[static_cast<std::size_t>(a * q_ + b)]; }
  Elt mul(Elt a, Elt b) const { return mul_[static_cast<std::size_t>(a * q_ + b)]; }
  Elt neg(Elt a) const { return neg_[static_cast<std::size_t>(a)]; }
  Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
  /// Throws std::domain_error on zero.
  Elt inv(Elt a) const;
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }

  static bool supported(int q);

 private:
  int q_, p_, k_;
  std::vector<Elt> add_, mul_, neg_, inv_;
};

}  // namespace satake
