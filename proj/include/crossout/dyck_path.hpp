#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace crossout {

enum class Step : char { Up = 'U', Down = 'D' };

/// Down-step heights, both indexed by down-step order.
struct Heights {
  std::vector<int> h;       // level just before the i-th down step
  std::vector<int> h_star;  // h_i - 1 if no up step follows that down step, else h_i
};

/// A lattice path of up/down steps from (0,0) back to the axis that never
/// goes below it. Steps are 1-based when referred to by position.
class DyckPath {
 public:
  DyckPath() = default;

  /// Throws ValidationError if `steps` is not a Dyck path.
  explicit DyckPath(std::vector<Step> steps);

  /// Parses "UUDD..."; the empty string is the empty path.
  static DyckPath parse(std::string_view text);
  /// Path of the given length whose down steps are exactly `down_steps`
  /// (1-based, any order).
  static DyckPath from_down_steps(int length, std::span<const int> down_steps);

  int length() const noexcept { return static_cast<int>(steps_.size()); }
  int semilength() const noexcept { return length() / 2; }
  Step step(int position) const { return steps_[position - 1]; }
  std::span<const Step> steps() const noexcept { return steps_; }
  bool is_down(int position) const { return steps_[position - 1] == Step::Down; }

  /// D(p): the positions of the down steps, increasing.
  std::vector<int> down_steps() const;
  Heights heights() const;
  std::string to_string() const;

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend auto operator<=>(const DyckPath& a, const DyckPath& b) {
    return a.to_string() <=> b.to_string();
  }

 private:
  std::vector<Step> steps_;
};

/// Lexicographic successor (U < D) among Dyck paths of the same length.
std::optional<DyckPath> next_dyck_path(const DyckPath& p);

/// Visits every Dyck path of `length` once, lexicographically with U < D.
/// Throws ValidationError for odd or negative lengths.
void for_each_dyck_path(int length, const std::function<void(const DyckPath&)>& fn);
std::vector<DyckPath> enumerate_dyck(int length);

/// Upper bounds for the labels of `p`. Plain form: h_i for every down step.
/// Starred form: h*_i for every down step but the last, which is unlabeled.
std::vector<int> label_bounds(const DyckPath& p, bool starred);

/// Visits every label vector with 1 <= label_i <= bound_i (lexicographic).
/// Nothing is visited if any bound is zero.
void for_each_labeling(std::span<const int> bounds,
                       const std::function<void(const std::vector<int>&)>& fn);

/// All label vectors of `p` under `label_bounds(p, starred)`.
std::vector<std::vector<int>> enumerate_hermite(const DyckPath& p, bool starred);

/// A Dyck path with one label per labeled down step. Plain histories
/// (Hermite histories) label every down step with 1 <= label <= h_i;
/// starred ones label all but the last with 1 <= label <= h*_i.
struct LabeledDyckPath {
  DyckPath path;
  std::vector<int> labels;

  /// Throws ConstraintViolation naming the first out-of-bound label, or
  /// ValidationError when the label count is wrong.
  void validate(bool starred) const;

  friend bool operator==(const LabeledDyckPath&, const LabeledDyckPath&) = default;
  friend auto operator<=>(const LabeledDyckPath&, const LabeledDyckPath&) = default;
};

}  // namespace crossout
