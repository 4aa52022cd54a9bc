#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace crossout {

/// A permutation of {1,...,N} in one-line notation. Positions and values are
/// both 1-based: `at(i)` is w(i), `position_of(k)` is w^{-1}(k).
class Permutation {
 public:
  /// Throws ValidationError unless `values` is a permutation of 1..N, N >= 1.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int size);
  /// Parses whitespace- or comma-separated one-line notation.
  static Permutation parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  int at(int position) const { return values_[position - 1]; }
  int position_of(int value) const { return inverse_[value - 1]; }
  std::span<const int> values() const noexcept { return values_; }

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.values_ <=> b.values_;
  }

 private:
  std::vector<int> values_;
  std::vector<int> inverse_;
};

enum class Mark : char { A = 'A', B = 'B' };

inline char to_char(Mark m) { return static_cast<char>(m); }
/// Accepts 'A' or 'B'; throws ValidationError otherwise.
Mark mark_from_char(char c);

/// Result of the crossout procedure: who eventually eats each position.
struct Marking {
  std::vector<Mark> marks;       // marks[i-1] is the mark of position i
  std::vector<int> mark_order;   // positions in the order they were marked

  Mark at(int position) const { return marks[position - 1]; }
  /// Positions carrying mark `m`, increasing.
  std::vector<int> positions(Mark m) const;
  std::string to_string() const;  // e.g. "AABBB..."

  friend bool operator==(const Marking&, const Marking&) = default;
};

/// Alternately mark B below the smallest unmarked value and A below the
/// leftmost unmarked position, starting with B, until every position is
/// marked. Works for both parities.
Marking crossout_mark(const Permutation& w);

/// Visits every permutation of 1..size in lexicographic order. Refuses
/// size > kMaxSweepSize unless `force` is set.
void for_each_permutation(int size, const std::function<void(const Permutation&)>& fn,
                          bool force = false);

/// Largest N for which exhaustive sweeps over S_N run without `force`.
inline constexpr int kMaxSweepSize = 10;

/// Throws GuardLimitError when size > kMaxSweepSize and !force.
void check_sweep_guard(int size, bool force);

}  // namespace crossout
