#pragma once

// Small exact linear algebra over Z and Q. Everything here is sized for rank
// at most a handful, so dense row-major storage and naive algorithms suffice.

#include <boost/rational.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace satake {

using Int = long long;
using Rational = boost::rational<Int>;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rational>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, Int fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector col(std::size_t c) const;
  IntMatrix transpose() const;

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntVector operator*(const IntVector& v) const;
  RatVector operator*(const RatVector& v) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix& a, const IntMatrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return a.data_ <=> b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

Int dot(const IntVector& a, const IntVector& b);
Rational dot(const IntVector& a, const RatVector& b);

IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a);
IntVector scale(Int k, const IntVector& a);

RatVector to_rational(const IntVector& v);
RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector scale(Rational k, const RatVector& a);

/// Solves A x = b over Q for square invertible A; nullopt if singular.
std::optional<RatVector> solve(const IntMatrix& a, const RatVector& b);

/// Inverse over Q; nullopt if singular.
std::optional<std::vector<RatVector>> inverse(const IntMatrix& a);

/// Rank over Q.
std::size_t rank(const std::vector<RatVector>& rows);

/// Diagonal entries (excluding units) of the Smith normal form of an integer
/// matrix, followed by zeros for the free part. Used to describe X/Y for a
/// sublattice Y spanned by the columns.
std::vector<Int> smith_invariants(const IntMatrix& m);

std::string to_string(const IntVector& v);
std::string to_string(const RatVector& v);

}  // namespace satake
