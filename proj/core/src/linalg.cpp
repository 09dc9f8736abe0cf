#include "satake/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace satake {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  if (rows.empty()) return {};
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r].at(c);
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  IntVector out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) out[i] += (*this)(i, k) * v[k];
  return out;
}

RatVector IntMatrix::operator*(const RatVector& v) const {
  RatVector out(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) out[i] += Rational((*this)(i, k)) * v[k];
  return out;
}

Int dot(const IntVector& a, const IntVector& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const IntVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

IntVector operator+(const IntVector& a, const IntVector& b) {
  IntVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
  IntVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

IntVector operator-(const IntVector& a) {
  IntVector r(a);
  for (auto& x : r) x = -x;
  return r;
}

IntVector scale(Int k, const IntVector& a) {
  IntVector r(a);
  for (auto& x : r) x *= k;
  return r;
}

RatVector to_rational(const IntVector& v) {
  RatVector r;
  r.reserve(v.size());
  for (Int x : v) r.emplace_back(x);
  return r;
}

RatVector operator+(const RatVector& a, const RatVector& b) {
  RatVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
  RatVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

RatVector scale(Rational k, const RatVector& a) {
  RatVector r(a);
  for (auto& x : r) x *= k;
  return r;
}

namespace {

// Gauss-Jordan on an augmented rational matrix; returns false if singular.
bool gauss_jordan(std::vector<RatVector>& m, std::size_t n) {
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].numerator() == 0) ++piv;
    if (piv == n) return false;
    std::swap(m[piv], m[col]);
    const Rational inv = Rational(1) / m[col][col];
    for (auto& x : m[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].numerator() == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[col][c];
    }
  }
  return true;
}

}  // namespace

std::optional<RatVector> solve(const IntMatrix& a, const RatVector& b) {
  const std::size_t n = a.rows();
  std::vector<RatVector> m(n, RatVector(n + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m[r][c] = a(r, c);
    m[r][n] = b[r];
  }
  if (!gauss_jordan(m, n)) return std::nullopt;
  RatVector x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = m[r][n];
  return x;
}

std::optional<std::vector<RatVector>> inverse(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<RatVector> m(n, RatVector(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m[r][c] = a(r, c);
    m[r][n + r] = 1;
  }
  if (!gauss_jordan(m, n)) return std::nullopt;
  std::vector<RatVector> inv(n, RatVector(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv[r][c] = m[r][n + c];
  return inv;
}

std::size_t rank(const std::vector<RatVector>& rows_in) {
  auto rows = rows_in;
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < rows.size(); ++c) {
    std::size_t piv = rk;
    while (piv < rows.size() && rows[piv][c].numerator() == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rk]);
    for (std::size_t r = rk + 1; r < rows.size(); ++r) {
      if (rows[r][c].numerator() == 0) continue;
      const Rational f = rows[r][c] / rows[rk][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rk][k];
    }
    ++rk;
  }
  return rk;
}

std::vector<Int> smith_invariants(const IntMatrix& in) {
  std::vector<IntVector> a(in.rows(), IntVector(in.cols()));
  for (std::size_t r = 0; r < in.rows(); ++r)
    for (std::size_t c = 0; c < in.cols(); ++c) a[r][c] = in(r, c);
  const std::size_t rows = in.rows(), cols = in.cols();
  std::vector<Int> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // pick the smallest nonzero entry in the remaining block as pivot
    std::size_t pr = rows, pc = cols;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c)
        if (a[r][c] != 0 && (pr == rows || std::llabs(a[r][c]) < std::llabs(a[pr][pc]))) {
          pr = r;
          pc = c;
        }
    if (pr == rows) break;
    std::swap(a[t], a[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        const Int q = a[r][t] / a[t][t];
        for (std::size_t c = t; c < cols; ++c) a[r][c] -= q * a[t][c];
        if (a[r][t] != 0) {
          std::swap(a[t], a[r]);
          clean = false;
        }
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        const Int q = a[t][c] / a[t][t];
        for (std::size_t r = t; r < rows; ++r) a[r][c] -= q * a[r][t];
        if (a[t][c] != 0) {
          for (auto& row : a) std::swap(row[t], row[c]);
          clean = false;
        }
      }
      if (clean) {
        // enforce divisibility of the rest of the block
        for (std::size_t r = t + 1; r < rows && clean; ++r)
          for (std::size_t c = t + 1; c < cols && clean; ++c)
            if (a[r][c] % a[t][t] != 0) {
              for (std::size_t k = t; k < cols; ++k) a[t][k] += a[r][k];
              clean = false;
            }
      }
    }
    diag.push_back(std::llabs(a[t][t]));
    ++t;
  }
  std::vector<Int> out;
  for (Int d : diag)
    if (d != 1) out.push_back(d);
  for (std::size_t k = diag.size(); k < rows; ++k) out.push_back(0);
  return out;
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string to_string(const RatVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace satake
