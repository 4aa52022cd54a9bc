#include "crossout/hermite.hpp"

#include <algorithm>

#include "crossout/errors.hpp"

namespace crossout {

Matching::Matching(std::vector<std::pair<int, int>> pairs) : pairs_(std::move(pairs)) {
  const int n = size();
  partner_.assign(n, 0);
  for (auto& [i, j] : pairs_) {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > n || i == j)
      throw ValidationError("matching pair (" + std::to_string(i) + ", " + std::to_string(j) +
                            ") invalid for [" + std::to_string(n) + "]");
    if (partner_[i - 1] != 0 || partner_[j - 1] != 0)
      throw ValidationError("matching pairs overlap");
    partner_[i - 1] = j;
    partner_[j - 1] = i;
  }
  std::sort(pairs_.begin(), pairs_.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
}

Matching hermite_to_matching(const LabeledDyckPath& history) {
  history.validate(false);
  std::vector<int> open;  // unmatched up steps, nearest last
  std::vector<std::pair<int, int>> pairs;
  std::size_t label_index = 0;
  for (int pos = 1; pos <= history.path.length(); ++pos) {
    if (!history.path.is_down(pos)) {
      open.push_back(pos);
      continue;
    }
    const int label = history.labels[label_index++];
    if (label > static_cast<int>(open.size()))
      throw ConstraintViolation("label exceeds unmatched up steps", static_cast<int>(label_index));
    const auto it = open.end() - label;
    pairs.emplace_back(*it, pos);
    open.erase(it);
  }
  return Matching(std::move(pairs));
}

LabeledDyckPath matching_to_hermite(const Matching& m) {
  const int n = m.size();
  std::vector<Step> steps(n);
  for (int x = 1; x <= n; ++x) steps[x - 1] = m.partner(x) > x ? Step::Up : Step::Down;
  LabeledDyckPath out{DyckPath(std::move(steps)), {}};
  std::vector<int> open;
  for (int pos = 1; pos <= n; ++pos) {
    if (!out.path.is_down(pos)) {
      open.push_back(pos);
      continue;
    }
    const auto it = std::find(open.begin(), open.end(), m.partner(pos));
    out.labels.push_back(static_cast<int>(open.end() - it));
    open.erase(it);
  }
  return out;
}

namespace {

void matchings_rec(std::vector<int>& free, std::vector<std::pair<int, int>>& acc,
                   const std::function<void(const Matching&)>& fn) {
  if (free.empty()) {
    fn(Matching(acc));
    return;
  }
  const int first = free.front();
  for (std::size_t k = 1; k < free.size(); ++k) {
    const int other = free[k];
    std::vector<int> rest;
    rest.reserve(free.size() - 2);
    for (std::size_t i = 1; i < free.size(); ++i)
      if (i != k) rest.push_back(free[i]);
    acc.emplace_back(first, other);
    matchings_rec(rest, acc, fn);
    acc.pop_back();
  }
}

}  // namespace

void for_each_matching(int two_n, const std::function<void(const Matching&)>& fn) {
  if (two_n < 0 || two_n % 2 != 0) throw ValidationError("matching size must be even");
  std::vector<int> free(two_n);
  for (int i = 0; i < two_n; ++i) free[i] = i + 1;
  std::vector<std::pair<int, int>> acc;
  matchings_rec(free, acc, fn);
}

Rational alice_probability(int n, std::span<const int> ranks) {
  const int m = static_cast<int>(ranks.size());
  if (n < 1) throw ValidationError("n must be at least 1");
  if (m < 1 || m > n)
    throw ValidationError("number of ranks must be between 1 and " + std::to_string(n));
  for (int i = 0; i < m; ++i) {
    if (ranks[i] < 1 || ranks[i] > 2 * n)
      throw ValidationError("rank " + std::to_string(ranks[i]) + " outside 1.." +
                            std::to_string(2 * n));
    if (i > 0 && ranks[i] <= ranks[i - 1])
      throw ValidationError("ranks must be strictly increasing");
  }
  Rational p = 1;
  for (int i = 1; i <= m; ++i) {
    const int num = ranks[i - 1] - 2 * i + 1;
    if (num <= 0) return 0;
    p *= Rational(num, 2 * n - 2 * i + 1);
  }
  return p;
}

}  // namespace crossout
