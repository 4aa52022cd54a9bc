#include "crossout/dyck_path.hpp"

#include <algorithm>

#include "crossout/errors.hpp"

namespace crossout {

DyckPath::DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {
  int level = 0;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    level += steps_[i] == Step::Up ? 1 : -1;
    if (level < 0)
      throw ValidationError("path goes below the axis at step " + std::to_string(i + 1));
  }
  if (level != 0) throw ValidationError("path does not return to the axis");
}

DyckPath DyckPath::parse(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (char c : text) {
    if (c == 'U' || c == 'u')
      steps.push_back(Step::Up);
    else if (c == 'D' || c == 'd')
      steps.push_back(Step::Down);
    else
      throw ValidationError(std::string("unexpected character '") + c + "' in Dyck path");
  }
  return DyckPath(std::move(steps));
}

DyckPath DyckPath::from_down_steps(int length, std::span<const int> down_steps) {
  if (length < 0 || length % 2 != 0)
    throw ValidationError("Dyck path length must be even and non-negative");
  std::vector<Step> steps(length, Step::Up);
  for (int d : down_steps) {
    if (d < 1 || d > length)
      throw ValidationError("down step " + std::to_string(d) + " outside 1.." +
                            std::to_string(length));
    if (steps[d - 1] == Step::Down)
      throw ValidationError("down step " + std::to_string(d) + " repeated");
    steps[d - 1] = Step::Down;
  }
  return DyckPath(std::move(steps));
}

std::vector<int> DyckPath::down_steps() const {
  std::vector<int> out;
  for (int i = 0; i < length(); ++i)
    if (steps_[i] == Step::Down) out.push_back(i + 1);
  return out;
}

Heights DyckPath::heights() const {
  Heights result;
  int level = 0;
  int last_up = 0;  // 1-based position of the last up step, 0 if none
  for (int i = 0; i < length(); ++i)
    if (steps_[i] == Step::Up) last_up = i + 1;
  for (int i = 0; i < length(); ++i) {
    if (steps_[i] == Step::Up) {
      ++level;
    } else {
      result.h.push_back(level);
      result.h_star.push_back(i + 1 > last_up ? level - 1 : level);
      --level;
    }
  }
  return result;
}

std::string DyckPath::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out += static_cast<char>(s);
  return out;
}

std::optional<DyckPath> next_dyck_path(const DyckPath& p) {
  std::vector<Step> steps(p.steps().begin(), p.steps().end());
  const int len = static_cast<int>(steps.size());
  std::vector<int> level_before(len + 1, 0);
  for (int i = 0; i < len; ++i)
    level_before[i + 1] = level_before[i] + (steps[i] == Step::Up ? 1 : -1);
  // Rightmost up step that can become a down step; the suffix is then
  // refilled with the lexicographically smallest completion.
  for (int i = len - 1; i >= 0; --i) {
    if (steps[i] != Step::Up || level_before[i] < 1) continue;
    const int level = level_before[i] - 1;
    const int rest = len - i - 1;
    const int ups = (rest - level) / 2;
    steps[i] = Step::Down;
    std::fill(steps.begin() + i + 1, steps.begin() + i + 1 + ups, Step::Up);
    std::fill(steps.begin() + i + 1 + ups, steps.end(), Step::Down);
    return DyckPath(std::move(steps));
  }
  return std::nullopt;
}

void for_each_dyck_path(int length, const std::function<void(const DyckPath&)>& fn) {
  if (length < 0 || length % 2 != 0)
    throw ValidationError("Dyck path length must be even and non-negative, got " +
                          std::to_string(length));
  std::vector<Step> first(length / 2, Step::Up);
  first.resize(length, Step::Down);
  std::optional<DyckPath> p = DyckPath(std::move(first));
  while (p) {
    fn(*p);
    p = next_dyck_path(*p);
  }
}

std::vector<DyckPath> enumerate_dyck(int length) {
  std::vector<DyckPath> out;
  for_each_dyck_path(length, [&](const DyckPath& p) { out.push_back(p); });
  return out;
}

std::vector<int> label_bounds(const DyckPath& p, bool starred) {
  Heights hs = p.heights();
  if (!starred) return hs.h;
  if (!hs.h_star.empty()) hs.h_star.pop_back();
  return hs.h_star;
}

void for_each_labeling(std::span<const int> bounds,
                       const std::function<void(const std::vector<int>&)>& fn) {
  if (std::any_of(bounds.begin(), bounds.end(), [](int b) { return b < 1; })) return;
  std::vector<int> labels(bounds.size(), 1);
  while (true) {
    fn(labels);
    int i = static_cast<int>(labels.size()) - 1;
    while (i >= 0 && labels[i] == bounds[i]) labels[i--] = 1;
    if (i < 0) return;
    ++labels[i];
  }
}

std::vector<std::vector<int>> enumerate_hermite(const DyckPath& p, bool starred) {
  std::vector<std::vector<int>> out;
  const std::vector<int> bounds = label_bounds(p, starred);
  for_each_labeling(bounds, [&](const std::vector<int>& l) { out.push_back(l); });
  return out;
}

void LabeledDyckPath::validate(bool starred) const {
  const std::vector<int> bounds = label_bounds(path, starred);
  if (labels.size() != bounds.size())
    throw ValidationError("expected " + std::to_string(bounds.size()) + " labels, got " +
                          std::to_string(labels.size()));
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    if (labels[i] < 1 || labels[i] > bounds[i])
      throw ConstraintViolation("label " + std::to_string(i + 1) + " = " +
                                    std::to_string(labels[i]) + " outside 1.." +
                                    std::to_string(bounds[i]) + (starred ? " (h*)" : " (h)"),
                                static_cast<int>(i) + 1);
  }
}

}  // namespace crossout
