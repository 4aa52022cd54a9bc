#include <doctest.h>

#include <numeric>

#include "crossout/errors.hpp"
#include "crossout/permutation.hpp"
#include "oracles.hpp"

using namespace crossout;

namespace {
const std::vector<int> kExample = {2, 6, 4, 1, 3, 11, 5, 7, 10, 12, 9, 8};
}

TEST_CASE("permutation validation") {
  CHECK_THROWS_AS(Permutation({}), ValidationError);
  CHECK_THROWS_AS(Permutation({1, 1}), ValidationError);
  CHECK_THROWS_AS(Permutation({0, 1}), ValidationError);
  CHECK_THROWS_AS(Permutation({1, 3}), ValidationError);
  CHECK_THROWS_AS(Permutation::parse("1 x 2"), ValidationError);

  const Permutation w = Permutation::parse("2, 6 4 1 3 11 5 7 10 12 9 8");
  CHECK(w.size() == 12);
  CHECK(w.at(6) == 11);
  CHECK(w.position_of(12) == 10);
  CHECK(w.to_string() == "2 6 4 1 3 11 5 7 10 12 9 8");
}

TEST_CASE("crossout marking examples") {
  CHECK(crossout_mark(Permutation(kExample)).to_string() == "AABBBABAAABB");
  CHECK(crossout_mark(Permutation({1, 2})).to_string() == "BA");
  CHECK(crossout_mark(Permutation({2, 1})).to_string() == "AB");
  CHECK(crossout_mark(Permutation({1})).to_string() == "B");

  const Marking m = crossout_mark(Permutation(kExample));
  CHECK(m.mark_order == std::vector<int>{4, 1, 5, 2, 3, 6, 7, 8, 12, 9, 11, 10});
  CHECK(m.positions(Mark::A) == std::vector<int>{1, 2, 6, 8, 9, 10});
}

TEST_CASE("marking invariants hold for every permutation up to N = 8") {
  for (int n = 1; n <= 8; ++n) {
    for_each_permutation(n, [&](const Permutation& w) {
      const std::vector<int> values(w.values().begin(), w.values().end());
      const Marking m = crossout_mark(w);
      REQUIRE(m.to_string() == oracle::mark(values));

      const auto a = m.positions(Mark::A).size();
      const auto b = m.positions(Mark::B).size();
      CHECK(b == static_cast<std::size_t>((n + 1) / 2));
      CHECK(a == static_cast<std::size_t>(n / 2));

      int last_a = 0;
      int last_b_value = 0;
      for (std::size_t k = 0; k < m.mark_order.size(); ++k) {
        const int pos = m.mark_order[k];
        const Mark expected = k % 2 == 0 ? Mark::B : Mark::A;
        REQUIRE(m.at(pos) == expected);
        if (expected == Mark::A) {
          CHECK(pos > last_a);
          last_a = pos;
        } else {
          CHECK(w.at(pos) > last_b_value);
          last_b_value = w.at(pos);
        }
      }
    });
  }
}

TEST_CASE("permutation sweeps are lexicographic and guarded") {
  std::vector<std::vector<int>> seen;
  for_each_permutation(3, [&](const Permutation& w) {
    seen.emplace_back(w.values().begin(), w.values().end());
  });
  CHECK(seen.size() == 6);
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  CHECK_THROWS_AS(for_each_permutation(11, [](const Permutation&) {}), GuardLimitError);
  CHECK_NOTHROW(check_sweep_guard(11, true));
}
