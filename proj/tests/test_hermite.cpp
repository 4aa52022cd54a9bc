#include <doctest.h>

#include <set>

#include "crossout/errors.hpp"
#include "crossout/hermite.hpp"
#include "crossout/permutation.hpp"
#include "crossout/correspondence.hpp"
#include "oracles.hpp"

using namespace crossout;

namespace {
using Pairs = std::vector<std::pair<int, int>>;

Pairs pairs_of(const Matching& m) { return Pairs(m.pairs().begin(), m.pairs().end()); }
}  // namespace

TEST_CASE("history to matching, nearest unmatched up step first") {
  CHECK(pairs_of(hermite_to_matching({DyckPath::parse("UD"), {1}})) == Pairs{{1, 2}});
  CHECK(pairs_of(hermite_to_matching({DyckPath::parse("UUDD"), {1, 1}})) ==
        Pairs{{2, 3}, {1, 4}});
  CHECK(pairs_of(hermite_to_matching({DyckPath::parse("UUDD"), {2, 1}})) ==
        Pairs{{1, 3}, {2, 4}});
  CHECK_THROWS_AS(hermite_to_matching({DyckPath::parse("UUDD"), {1, 2}}), ConstraintViolation);
}

TEST_CASE("matching validation") {
  CHECK_THROWS_AS(Matching(Pairs{{1, 2}, {2, 3}}), ValidationError);
  CHECK_THROWS_AS(Matching(Pairs{{1, 5}, {2, 3}}), ValidationError);
  CHECK_THROWS_AS(Matching(Pairs{{1, 1}}), ValidationError);
  CHECK(Matching(Pairs{{4, 1}, {3, 2}}).partner(1) == 4);
}

TEST_CASE("history and matching bijections are mutually inverse for 2n <= 8") {
  for (int n = 1; n <= 4; ++n) {
    std::set<Matching> images;
    long long histories = 0;
    for (const DyckPath& p : enumerate_dyck(2 * n))
      for (const auto& labels : enumerate_hermite(p, false)) {
        const LabeledDyckPath h{p, labels};
        const Matching m = hermite_to_matching(h);
        REQUIRE(matching_to_hermite(m) == h);
        // Every down step is matched with an earlier up step.
        for (const auto& [i, j] : m.pairs()) CHECK(p.is_down(j));
        images.insert(m);
        ++histories;
      }
    CHECK(histories == oracle::odd_double_factorial(n));
    CHECK(static_cast<long long>(images.size()) == histories);

    long long matchings = 0;
    for_each_matching(2 * n, [&](const Matching& m) {
      REQUIRE(hermite_to_matching(matching_to_hermite(m)) == m);
      ++matchings;
    });
    CHECK(matchings == oracle::odd_double_factorial(n));
  }
  CHECK(oracle::odd_double_factorial(3) == 15);
}

TEST_CASE("Alice probability closed form") {
  for (int n = 1; n <= 4; ++n) {
    const std::vector<int> top = {2 * n};
    CHECK(alice_probability(n, top) == 1);
    const std::vector<int> bottom = {1};
    CHECK(alice_probability(n, bottom) == 0);
  }
  CHECK(alice_probability(2, std::vector<int>{3, 4}) == Rational(2, 3));
  CHECK(alice_probability(2, std::vector<int>{2}) == Rational(1, 3));
  CHECK(alice_probability(3, std::vector<int>{1, 6}) == 0);

  CHECK_THROWS_AS(alice_probability(2, std::vector<int>{}), ValidationError);
  CHECK_THROWS_AS(alice_probability(2, std::vector<int>{5}), ValidationError);
  CHECK_THROWS_AS(alice_probability(2, std::vector<int>{3, 3}), ValidationError);
  CHECK_THROWS_AS(alice_probability(2, std::vector<int>{1, 2, 3}), ValidationError);
}

TEST_CASE("single-rank probability equals brute-force frequency for n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<long long> eaten(2 * n + 1, 0);
    for_each_permutation(2 * n, [&](const Permutation& w) {
      const std::string marks =
          oracle::mark(std::vector<int>(w.values().begin(), w.values().end()));
      for (int pos = 1; pos <= 2 * n; ++pos)
        if (marks[pos - 1] == 'A') ++eaten[w.at(pos)];
    });
    for (int k = 1; k <= 2 * n; ++k) {
      const std::vector<int> ranks = {k};
      CHECK(alice_probability(n, ranks) == Rational(eaten[k], oracle::factorial(2 * n)));
      CHECK(alice_probability(n, ranks) == Rational(k - 1, 2 * n - 1));
    }
  }
}
