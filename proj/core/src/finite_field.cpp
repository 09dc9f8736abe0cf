#include "satake/finite_field.hpp"

#include "satake/error.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace satake {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Conway polynomials x^k + c_{k-1} x^{k-1} + ... + c_0, listed as c_0..c_{k-1}.
const std::map<int, std::pair<int, std::vector<int>>>& conway() {
  static const std::map<int, std::pair<int, std::vector<int>>> table = {
      {4, {2, {1, 1}}},        // x^2 + x + 1
      {8, {2, {1, 1, 0}}},     // x^3 + x + 1
      {16, {2, {1, 1, 0, 0}}}, // x^4 + x + 1
      {9, {3, {2, 2}}},        // x^2 + 2x + 2
      {27, {3, {1, 2, 0}}},    // x^3 + 2x + 1
      {25, {5, {2, 4}}},       // x^2 + 4x + 2
  };
  return table;
}

}  // namespace

bool FiniteField::supported(int q) { return (is_prime(q) && q < 64) || conway().count(q) > 0; }

FiniteField::FiniteField(int q) : q_(q) {
  if (!supported(q)) throw ValidationError("unsupported field order " + std::to_string(q));
  std::vector<int> modulus;
  if (is_prime(q)) {
    p_ = q;
    k_ = 1;
  } else {
    const auto& [p, coeffs] = conway().at(q);
    p_ = p;
    k_ = static_cast<int>(coeffs.size());
    modulus = coeffs;
  }
  const auto uq = static_cast<std::size_t>(q);
  auto digits = [&](int a) {
    std::vector<int> d(static_cast<std::size_t>(k_));
    for (auto& x : d) {
      x = a % p_;
      a /= p_;
    }
    return d;
  };
  auto encode = [&](const std::vector<int>& d) {
    int a = 0;
    for (int i = k_ - 1; i >= 0; --i) a = a * p_ + d[static_cast<std::size_t>(i)];
    return a;
  };
  add_.resize(uq * uq);
  mul_.resize(uq * uq);
  neg_.resize(uq);
  inv_.assign(uq, 0);
  for (int a = 0; a < q; ++a) {
    const auto da = digits(a);
    std::vector<int> dn(da.size());
    for (std::size_t i = 0; i < da.size(); ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[static_cast<std::size_t>(a)] = encode(dn);
    for (int b = 0; b < q; ++b) {
      const auto db = digits(b);
      std::vector<int> s(da.size());
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = (da[i] + db[i]) % p_;
      add_[static_cast<std::size_t>(a * q + b)] = encode(s);
      // schoolbook product, then reduce by the modulus from the top degree down
      std::vector<int> prod(static_cast<std::size_t>(2 * k_ - 1), 0);
      for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j)
          prod[static_cast<std::size_t>(i + j)] =
              (prod[static_cast<std::size_t>(i + j)] + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p_;
      for (int deg = 2 * k_ - 2; deg >= k_; --deg) {
        const int c = prod[static_cast<std::size_t>(deg)];
        if (c == 0) continue;
        prod[static_cast<std::size_t>(deg)] = 0;
        for (int i = 0; i < k_; ++i) {
          auto& t = prod[static_cast<std::size_t>(deg - k_ + i)];
          t = ((t - c * modulus[static_cast<std::size_t>(i)]) % p_ + p_) % p_;
        }
      }
      prod.resize(static_cast<std::size_t>(k_));
      mul_[static_cast<std::size_t>(a * q + b)] = encode(prod);
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (mul(a, b) == 1) inv_[static_cast<std::size_t>(a)] = b;
  for (int a = 1; a < q; ++a)
    if (inv_[static_cast<std::size_t>(a)] == 0) throw std::logic_error("field table is not a field for q=" + std::to_string(q));
}

FiniteField::Elt FiniteField::inv(Elt a) const {
  if (a == 0) throw std::domain_error("division by zero in F_q");
  return inv_[static_cast<std::size_t>(a)];
}

}  // namespace satake
