#pragma once

#include "satake/root_datum.hpp"

#include <filesystem>
#include <map>
#include <optional>

namespace satake {

/// Bumped whenever the on-disk format or the meaning of cached counts changes;
/// files with another version are ignored and overwritten.
inline constexpr int kOracleCacheVersion = 1;

/// Directory named by SATAKE_CACHE_DIR, if set and non-empty.
std::optional<std::filesystem::path> oracle_cache_dir();

/// LatticeOracle::convolution_counts memoized in memory and, when
/// SATAKE_CACHE_DIR is set, in one JSON file per (group, q, mu, lambda).
std::map<Coweight, Int> cached_convolution_counts(const RootDatum& g, int q, const Coweight& mu,
                                                  const Coweight& lambda);

}  // namespace satake
