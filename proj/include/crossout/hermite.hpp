#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "crossout/dyck_path.hpp"
#include "crossout/numbers.hpp"

namespace crossout {

/// Perfect matching of {1,...,2n}: pairs (i, j) with i < j, sorted by j.
class Matching {
 public:
  /// Throws ValidationError unless the pairs partition {1,...,2n}.
  explicit Matching(std::vector<std::pair<int, int>> pairs);

  int size() const noexcept { return 2 * static_cast<int>(pairs_.size()); }
  std::span<const std::pair<int, int>> pairs() const noexcept { return pairs_; }
  /// The element matched with `x`.
  int partner(int x) const { return partner_[x - 1]; }

  friend bool operator==(const Matching& a, const Matching& b) { return a.pairs_ == b.pairs_; }
  friend auto operator<=>(const Matching& a, const Matching& b) { return a.pairs_ <=> b.pairs_; }

 private:
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> partner_;
};

/// Scans left to right; a down step labeled L is matched with the L-th
/// still-unmatched up step counting leftward from the down step (nearest
/// first). Requires a plain Hermite history.
Matching hermite_to_matching(const LabeledDyckPath& history);

/// Inverse of hermite_to_matching.
LabeledDyckPath matching_to_hermite(const Matching& m);

/// Visits all (2n-1)!! perfect matchings of {1,...,2n}.
void for_each_matching(int two_n, const std::function<void(const Matching&)>& fn);

/// Probability that Alice eats every morsel of ranks k_1 < ... < k_m when w
/// is uniform over S_{2n}: prod_i (k_i - 2i + 1) / (2n - 2i + 1), clamped to
/// zero once a numerator factor is non-positive.
Rational alice_probability(int n, std::span<const int> ranks);

}  // namespace crossout
