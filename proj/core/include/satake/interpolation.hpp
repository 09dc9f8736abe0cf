#pragma once

#include "satake/linalg.hpp"

#include <optional>
#include <vector>

namespace satake {

/// Coefficients c0..cd of the unique polynomial of degree < xs.size() through
/// the points, if all are integers. Throws ValidationError on repeated xs.
std::optional<IntVector> interpolate_integer_poly(const std::vector<Int>& xs,
                                                  const std::vector<Int>& ys);

/// Like interpolate_integer_poly, but additionally requires degree <= max_degree
/// and fails if fewer than max_degree + 2 samples are given, so at least one
/// sample is a consistency check.
std::optional<IntVector> interpolate_checked(const std::vector<Int>& xs, const std::vector<Int>& ys,
                                             int max_degree);

}  // namespace satake
