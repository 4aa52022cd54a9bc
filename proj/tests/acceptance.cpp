// Acceptance suite: every exit criterion, exact, with its time budget.
// Prints one PASS/FAIL line per criterion; exit status is non-zero if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "crossout/correspondence.hpp"
#include "crossout/hermite.hpp"
#include "crossout/identity_suite.hpp"
#include "crossout/numbers.hpp"

using namespace crossout;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

// Runs `suite` for n = lo..hi and requires every report to be equal.
void all_equal(Outcome& out, const std::string& suite, int lo, int hi, std::size_t* count = nullptr) {
  for (int n = lo; n <= hi; ++n)
    run_suite(suite, n, {}, [&](const IdentityReport& r) {
      if (count) ++*count;
      out.require(r.equal(), r.id + " n=" + std::to_string(n) + " " + r.params + ": " +
                                 to_string(r.lhs) + " != " + to_string(r.rhs));
    });
}

Outcome round_trip() {
  Outcome out;
  std::size_t cases = 0;
  for (int n = 1; n <= 8; ++n)
    for_each_permutation(n, [&](const Permutation& w) {
      ++cases;
      out.require(decode(encode(w)) == w, "round trip failed for " + w.to_string());
    });
  out.require(cases == 46233, "expected 46233 permutations, saw " + std::to_string(cases));
  if (out.ok) out.detail = std::to_string(cases) + " permutations";
  return out;
}

Outcome worked_example() {
  Outcome out;
  const Permutation w({2, 6, 4, 1, 3, 11, 5, 7, 10, 12, 9, 8});
  out.require(crossout_mark(w).to_string() == "AABBBABAAABB", "marking");
  const CrossoutTuple t = encode(w);
  out.require(t.pa.down_steps() == std::vector<int>{2, 6, 7, 10, 11, 12}, "p_A down steps");
  out.require(t.pb.down_steps() == std::vector<int>{4, 5, 6, 8, 12, 13, 14}, "p_B down steps");
  // Down step at position 7 is the 3rd of p_A; position 12 is the 5th of p_B.
  out.require(t.pa.down_steps()[2] == 7 && t.ell[2] == 2, "ell_3 = 2 at position 7");
  out.require(t.pb.down_steps()[4] == 12 && t.em[4] == 2, "m_5 = 2 at position 12");
  return out;
}

Outcome fiber_identities() {
  Outcome out;
  std::size_t reports = 0;
  all_equal(out, "thm2", 1, 3, &reports);
  if (out.ok) out.detail = std::to_string(reports) + " fiber identities";
  return out;
}

Outcome marginals() {
  Outcome out;
  all_equal(out, "thm4", 1, 4);
  // thm3 also checks the circled-box generator against the brute-force fiber.
  all_equal(out, "thm3", 1, 3);
  for (const DyckPath& alpha : enumerate_dyck(8)) {
    const IdentityReport r = check_alice_marginal(alpha);
    out.require(r.equal(), "thm3 n=4 " + r.params);
  }
  return out;
}

Outcome double_factorial_sums() {
  Outcome out;
  all_equal(out, "cor5", 1, 8);
  const auto [a, b] = check_double_factorial_sums(2);
  out.require(std::get<BigInt>(a.lhs) == 3 && std::get<BigInt>(b.lhs) == 8, "n=2 values 3 and 8");
  return out;
}

Outcome qt_and_z_identities() {
  Outcome out;
  all_equal(out, "thm6", 1, 3);
  all_equal(out, "lemmaz", 1, 3);
  return out;
}

Outcome path_sum_identities() {
  Outcome out;
  std::set<std::string> ids;
  for (int n = 1; n <= 8; ++n)
    for (const IdentityReport& r : check_path_sum_identities(n)) {
      ids.insert(r.id + "@" + std::to_string(n));
      out.require(r.equal(), r.id + " n=" + std::to_string(n) + " " + r.params);
    }
  for (int n = 1; n <= 3; ++n) {
    out.require(ids.count("cor7-qq@" + std::to_string(n)) == 1, "eq qq missing at n=" + std::to_string(n));
    out.require(ids.count("cor7-inv@" + std::to_string(n)) == 1, "inversion identity missing");
  }
  out.require(ids.count("cor7-a@8") == 1, "eq a missing at n=8");
  return out;
}

Outcome probability() {
  Outcome out;
  std::size_t subsets = 0;
  all_equal(out, "prob", 1, 4, &subsets);
  for (int n = 1; n <= 4; ++n) {
    out.require(alice_probability(n, std::vector<int>{2 * n}) == 1, "favorite always eaten");
    out.require(alice_probability(n, std::vector<int>{1}) == 0, "least favorite never eaten");
    if (n >= 2)
      out.require(alice_probability(n, std::vector<int>{1, 2 * n}) == 0, "ranks containing 1");
  }
  if (out.ok) out.detail = std::to_string(subsets) + " rank subsets";
  return out;
}

Outcome no_ba_and_playout() {
  Outcome out;
  for (int n = 1; n <= 4; ++n)
    run_suite("stats", n, {}, [&](const IdentityReport& r) {
      if (r.id == "stats-ba-zero") out.require(r.equal(), "ba != 0 somewhere, " + r.params);
    });
  all_equal(out, "playout", 1, 4);
  return out;
}

Outcome outcomes() {
  Outcome out;
  all_equal(out, "outcomes", 1, 4);
  const OutcomeCounts two = outcome_counts(2);
  out.require(two.alice == 2 && two.bob == 5, "n=2 counts (2, 5)");
  std::set<std::vector<int>> bob_sets;
  std::set<std::vector<int>> alice_ranks;
  for_each_permutation(4, [&](const Permutation& w) {
    const Marking m = crossout_mark(w);
    bob_sets.insert(m.positions(Mark::B));
    std::vector<int> ranks;
    for (int a : m.positions(Mark::A)) ranks.push_back(w.at(a));
    std::sort(ranks.begin(), ranks.end());
    alice_ranks.insert(ranks);
  });
  out.require(bob_sets == std::set<std::vector<int>>{{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}},
              "Bob's n=2 outcome sets");
  out.require(alice_ranks == std::set<std::vector<int>>{{2, 4}, {3, 4}}, "Alice's n=2 outcomes");
  return out;
}

Outcome independence() {
  Outcome out;
  all_equal(out, "independence", 1, 4);
  return out;
}

Outcome hermite() {
  Outcome out;
  all_equal(out, "hermite", 1, 4);
  return out;
}

struct Criterion {
  const char* id;
  const char* title;
  double budget_seconds;  // 0 means no time limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC01", "round trip decode(encode(w)) = w, N = 1..8", 10, round_trip},
      {"AC02", "worked example regression", 0, worked_example},
      {"AC03", "fiber q,r identity, every (alpha, beta), n <= 3", 30, fiber_identities},
      {"AC04", "Alice and Bob marginals n <= 4; circled-box generator n <= 3", 60, marginals},
      {"AC05", "double-factorial path sums n <= 8", 5, double_factorial_sums},
      {"AC06", "q,t identity per alpha and z identity per w, n <= 3", 0, qt_and_z_identities},
      {"AC07", "path-sum q identity n <= 8; inversion identities n <= 3", 0, path_sum_identities},
      {"AC08", "probability Alice eats given ranks, all subsets, n <= 4", 0, probability},
      {"AC09", "no BA inversions and playout invariants, N <= 8", 0, no_ba_and_playout},
      {"AC10", "outcome counts (C_n, C_{n+1}), n <= 4", 0, outcomes},
      {"AC11", "independence counts, n <= 4", 0, independence},
      {"AC12", "history/matching round trip 2n <= 8, count (2n-1)!!", 0, hermite},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream time;
    time.precision(3);
    time << std::fixed << secs << "s";
    if (c.budget_seconds > 0) {
      time << " of " << c.budget_seconds << "s";
      if (secs >= c.budget_seconds && out.ok) {
        out.ok = false;
        out.detail = "over time budget";
      }
    }
    if (!out.ok) ++failures;
    std::printf("[%s] %s %s (%s)%s%s\n", out.ok ? "PASS" : "FAIL", c.id, c.title,
                time.str().c_str(), out.detail.empty() ? "" : ": ", out.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
