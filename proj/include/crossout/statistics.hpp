#pragma once

#include <cstdint>

#include "crossout/permutation.hpp"

namespace crossout {

/// Inversion statistics relative to the crossout marking of w.
struct StatBundle {
  std::int64_t aa = 0;
  std::int64_t ab = 0;
  std::int64_t ba = 0;
  std::int64_t bb = 0;
  std::int64_t z = 0;    // only meaningful for even length
  std::int64_t inv = 0;  // all inversions

  friend bool operator==(const StatBundle&, const StatBundle&) = default;
};

/// #{i < j : w(i) > w(j), i marked x, j marked y}.
std::int64_t xy_inversions(const Permutation& w, Mark x, Mark y);

/// #{i < j : w(i) < w(j), i marked B}. Throws ValidationError for odd |w|.
std::int64_t z_stat(const Permutation& w);

/// Total inversion count.
std::int64_t inversions(const Permutation& w);

/// All statistics in one pass over the pairs. z is computed for even |w|
/// and left at 0 for odd |w|.
StatBundle stat_bundle(const Permutation& w);

}  // namespace crossout
