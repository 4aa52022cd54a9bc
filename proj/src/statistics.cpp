#include "crossout/statistics.hpp"

#include "crossout/errors.hpp"

namespace crossout {

std::int64_t xy_inversions(const Permutation& w, Mark x, Mark y) {
  const Marking marking = crossout_mark(w);
  const int n = w.size();
  std::int64_t count = 0;
  for (int i = 1; i <= n; ++i) {
    if (marking.at(i) != x) continue;
    for (int j = i + 1; j <= n; ++j)
      if (marking.at(j) == y && w.at(i) > w.at(j)) ++count;
  }
  return count;
}

std::int64_t z_stat(const Permutation& w) {
  if (w.size() % 2 != 0) throw ValidationError("z is defined for even length only");
  const Marking marking = crossout_mark(w);
  const int n = w.size();
  std::int64_t count = 0;
  for (int i = 1; i <= n; ++i) {
    if (marking.at(i) != Mark::B) continue;
    for (int j = i + 1; j <= n; ++j)
      if (w.at(i) < w.at(j)) ++count;
  }
  return count;
}

std::int64_t inversions(const Permutation& w) {
  std::int64_t count = 0;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w.at(i) > w.at(j)) ++count;
  return count;
}

StatBundle stat_bundle(const Permutation& w) {
  const Marking marking = crossout_mark(w);
  const int n = w.size();
  const bool even = n % 2 == 0;
  StatBundle s;
  for (int i = 1; i <= n; ++i) {
    const Mark mi = marking.at(i);
    for (int j = i + 1; j <= n; ++j) {
      if (w.at(i) < w.at(j)) {
        if (even && mi == Mark::B) ++s.z;
        continue;
      }
      ++s.inv;
      const Mark mj = marking.at(j);
      if (mi == Mark::A)
        ++(mj == Mark::A ? s.aa : s.ab);
      else
        ++(mj == Mark::A ? s.ba : s.bb);
    }
  }
  return s;
}

}  // namespace crossout
