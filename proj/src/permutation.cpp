#include "crossout/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "crossout/errors.hpp"

namespace crossout {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  if (n < 1) throw ValidationError("permutation must have at least one entry");
  inverse_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    const int v = values_[i];
    if (v < 1 || v > n)
      throw ValidationError("permutation value " + std::to_string(v) + " outside 1.." +
                            std::to_string(n));
    if (inverse_[v - 1] != 0)
      throw ValidationError("permutation value " + std::to_string(v) + " repeated");
    inverse_[v - 1] = i + 1;
  }
}

Permutation Permutation::identity(int size) {
  if (size < 1) throw ValidationError("permutation size must be at least 1");
  std::vector<int> v(size);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == ',' || c == '\t' || c == '\n' || c == '[' || c == ']') {
      ++i;
      continue;
    }
    int v = 0;
    auto [end, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc())
      throw ValidationError("cannot parse permutation near '" + std::string(text.substr(i)) +
                            "'");
    values.push_back(v);
    i = static_cast<std::size_t>(end - text.data());
  }
  return Permutation(std::move(values));
}

std::string Permutation::to_string() const {
  std::string out;
  for (int v : values_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

Mark mark_from_char(char c) {
  if (c == 'A') return Mark::A;
  if (c == 'B') return Mark::B;
  throw ValidationError(std::string("unknown mark '") + c + "'");
}

std::vector<int> Marking::positions(Mark m) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(marks.size()); ++i)
    if (marks[i] == m) out.push_back(i + 1);
  return out;
}

std::string Marking::to_string() const {
  std::string out;
  for (Mark m : marks) out += to_char(m);
  return out;
}

Marking crossout_mark(const Permutation& w) {
  const int n = w.size();
  Marking result;
  result.marks.assign(n, Mark::A);
  result.mark_order.reserve(n);
  std::vector<bool> marked(n + 1, false);
  int next_value = 1;     // smallest value that may still be unmarked
  int next_position = 1;  // leftmost position that may still be unmarked
  Mark turn = Mark::B;
  for (int step = 0; step < n; ++step) {
    int pos;
    if (turn == Mark::B) {
      while (marked[w.position_of(next_value)]) ++next_value;
      pos = w.position_of(next_value);
    } else {
      while (marked[next_position]) ++next_position;
      pos = next_position;
    }
    marked[pos] = true;
    result.marks[pos - 1] = turn;
    result.mark_order.push_back(pos);
    turn = turn == Mark::B ? Mark::A : Mark::B;
  }
  return result;
}

void check_sweep_guard(int size, bool force) {
  if (size > kMaxSweepSize && !force)
    throw GuardLimitError("exhaustive sweep over S_" + std::to_string(size) +
                          " exceeds the limit N <= " + std::to_string(kMaxSweepSize) +
                          "; pass force to override");
}

void for_each_permutation(int size, const std::function<void(const Permutation&)>& fn,
                          bool force) {
  if (size < 1) throw ValidationError("permutation size must be at least 1");
  check_sweep_guard(size, force);
  std::vector<int> v(size);
  std::iota(v.begin(), v.end(), 1);
  do {
    fn(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

}  // namespace crossout
