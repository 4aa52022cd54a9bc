#include "crossout/identity_suite.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>

#include "crossout/correspondence.hpp"
#include "crossout/errors.hpp"
#include "crossout/game.hpp"
#include "crossout/hermite.hpp"
#include "crossout/statistics.hpp"

namespace crossout {

std::string to_string(const Quantity& q) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, BigInt>)
          return v.str();
        else if constexpr (std::is_same_v<T, Rational>)
          return crossout::to_string(v);
        else
          return v.to_string();
      },
      q);
}

const char* kind_name(const Quantity& q) {
  switch (q.index()) {
    case 0: return "integer";
    case 1: return "rational";
    default: return "polynomial";
  }
}

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
IdentityReport timed(std::string id, int n, std::string params, F&& compute) {
  const auto start = Clock::now();
  auto [lhs, rhs] = compute();
  IdentityReport r;
  r.id = std::move(id);
  r.n = n;
  r.params = std::move(params);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return r;
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (int x : v) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

void require_positive(int n) {
  if (n < 1) throw ValidationError("n must be at least 1");
}

// prod_i [h_i]_var
Polynomial height_product(const std::vector<int>& hs, Var var) { return q_product(hs, var); }

// prod_i q^{h_i - 1} [h_i]_q
Polynomial shifted_height_product(const std::vector<int>& hs) {
  Polynomial p = 1;
  for (int h : hs) p *= Polynomial::monomial(Var::q, h - 1) * q_integer(h, Var::q);
  return p;
}

BigInt product(const std::vector<int>& v) {
  BigInt p = 1;
  for (int x : v) p *= x;
  return p;
}

std::vector<int> even_ks(int n) {
  std::vector<int> ks;
  for (int k = 1; k <= n; ++k) ks.push_back(2 * k);
  return ks;
}

std::vector<int> bob_bounds(const DyckPath& beta) { return label_bounds(beta, true); }

// Everything a sweep over S_{2n} records per w.
struct EvenSweep {
  std::map<DyckPath, BigInt> alice_count;
  std::map<DyckPath, BigInt> bob_count;
  std::map<DyckPath, Polynomial> alice_qt;   // sum of q^aa t^z
  std::map<DyckPath, Polynomial> alice_inv;  // sum of q^inv
  Polynomial inv_total;
  BigInt z_identity_ok = 0;
};

EvenSweep sweep_even(int n, SweepOptions opts) {
  EvenSweep s;
  for_each_permutation(
      2 * n,
      [&](const Permutation& w) {
        const Marking marking = crossout_mark(w);
        const DyckPath pa = alice_path(w, marking);
        const DyckPath pb = bob_path(w, marking);
        const StatBundle st = stat_bundle(w);
        s.alice_count[pa] += 1;
        s.bob_count[pb] += 1;
        s.alice_qt[pa].add_term({static_cast<int>(st.aa), 0, static_cast<int>(st.z)}, 1);
        s.alice_inv[pa].add_term({static_cast<int>(st.inv), 0, 0}, 1);
        s.inv_total.add_term({static_cast<int>(st.inv), 0, 0}, 1);
        std::int64_t heights_excess = 0;
        for (int h : pa.heights().h) heights_excess += h - 1;
        if (st.z == static_cast<std::int64_t>(n) * n + heights_excess - st.ab - st.bb)
          ++s.z_identity_ok;
      },
      opts.force);
  return s;
}

void check_fiber_shape(const DyckPath& alpha, const DyckPath& beta) {
  const int n = alpha.semilength();
  if (n < 1) throw ValidationError("alpha must be non-empty");
  if (beta.length() != 2 * n + 2)
    throw ValidationError("beta must have length " + std::to_string(2 * n + 2));
  if (!beta.is_down(beta.length())) throw ValidationError("beta must end with a down step");
}

void generate_rec(const DyckPath& alpha, int k, std::vector<int>& boxes,
                  std::vector<bool>& circled, std::vector<Permutation>& out) {
  const int size = alpha.length();
  if (k > size) {
    out.emplace_back(boxes);
    return;
  }
  const bool down = alpha.is_down(k);
  for (int b = 0; b < size; ++b) {
    if (boxes[b] != 0 || circled[b] != down) continue;
    boxes[b] = k;
    int newly_circled = -1;
    if (!down) {
      for (int c = 0; c < size; ++c)
        if (boxes[c] == 0 && !circled[c]) {
          newly_circled = c;
          break;
        }
      if (newly_circled >= 0) circled[newly_circled] = true;
    }
    generate_rec(alpha, k + 1, boxes, circled, out);
    if (newly_circled >= 0) circled[newly_circled] = false;
    boxes[b] = 0;
  }
}

IdentityReport alice_marginal_report(const DyckPath& alpha, const BigInt& count) {
  const int n = alpha.semilength();
  return timed("thm3", n, "alpha=" + alpha.to_string(), [&] {
    return std::pair<Quantity, Quantity>{
        count, even_double_factorial(n) * product(alpha.heights().h)};
  });
}

IdentityReport bob_marginal_report(const DyckPath& beta, const BigInt& count) {
  const int n = beta.semilength() - 1;
  return timed("thm4", n, "beta=" + beta.to_string(), [&] {
    return std::pair<Quantity, Quantity>{count,
                                         odd_double_factorial(n) * product(bob_bounds(beta))};
  });
}

IdentityReport alice_qt_report(const DyckPath& alpha, const Polynomial& lhs) {
  const int n = alpha.semilength();
  return timed("thm6", n, "alpha=" + alpha.to_string(), [&] {
    return std::pair<Quantity, Quantity>{
        lhs, q_product(even_ks(n), Var::t) * height_product(alpha.heights().h, Var::q)};
  });
}

IdentityReport eq_qq_report(const DyckPath& alpha, const Polynomial& lhs) {
  const int n = alpha.semilength();
  return timed("cor7-qq", n, "alpha=" + alpha.to_string(), [&] {
    return std::pair<Quantity, Quantity>{
        lhs, q_product(even_ks(n), Var::q) * shifted_height_product(alpha.heights().h)};
  });
}

IdentityReport generator_report(const DyckPath& alpha, const std::set<Permutation>& brute) {
  const int n = alpha.semilength();
  return timed("thm3-generator", n,
               "alpha=" + alpha.to_string() + " score=distinct members-(duplicates+strays)",
               [&] {
                 std::set<Permutation> seen;
                 BigInt score = 0;
                 for (const Permutation& w : generate_alice_fiber(alpha)) {
                   if (brute.count(w) && seen.insert(w).second)
                     score += 1;
                   else
                     score -= 1;
                 }
                 return std::pair<Quantity, Quantity>{score, BigInt(brute.size())};
               });
}

std::vector<DyckPath> bob_paths(int n) {
  // Every Dyck path ends with a down step, so all of D_{2n+2} qualifies.
  return enumerate_dyck(2 * n + 2);
}

}  // namespace

void for_each_in_fiber(const DyckPath& alpha, const DyckPath& beta,
                       const std::function<void(const Permutation&)>& fn) {
  check_fiber_shape(alpha, beta);
  const std::vector<int> ell_bounds = label_bounds(alpha, false);
  const std::vector<int> em_bounds = bob_bounds(beta);
  for_each_labeling(ell_bounds, [&](const std::vector<int>& ell) {
    for_each_labeling(em_bounds, [&](const std::vector<int>& em) {
      const Permutation w = decode(CrossoutTuple{alpha, beta, ell, em, Parity::Even});
      const Marking marking = crossout_mark(w);
      if (alice_path(w, marking) != alpha || bob_path(w, marking) != beta)
        throw std::logic_error("decoded permutation " + w.to_string() + " left its fiber");
      fn(w);
    });
  });
}

std::vector<Permutation> fiber(const DyckPath& alpha, const DyckPath& beta) {
  std::vector<Permutation> out;
  for_each_in_fiber(alpha, beta, [&](const Permutation& w) { out.push_back(w); });
  return out;
}

std::vector<Permutation> generate_alice_fiber(const DyckPath& alpha) {
  if (alpha.length() == 0) throw ValidationError("alpha must be non-empty");
  std::vector<int> boxes(alpha.length(), 0);
  std::vector<bool> circled(alpha.length(), false);
  std::vector<Permutation> out;
  generate_rec(alpha, 1, boxes, circled, out);
  return out;
}

IdentityReport check_fiber_identity(const DyckPath& alpha, const DyckPath& beta) {
  check_fiber_shape(alpha, beta);
  const int n = alpha.semilength();
  return timed("thm2", n, "alpha=" + alpha.to_string() + " beta=" + beta.to_string(), [&] {
    Polynomial lhs;
    for_each_in_fiber(alpha, beta, [&](const Permutation& w) {
      const StatBundle st = stat_bundle(w);
      lhs.add_term({static_cast<int>(st.aa), static_cast<int>(st.bb), 0}, 1);
    });
    Polynomial rhs =
        height_product(alpha.heights().h, Var::q) * height_product(bob_bounds(beta), Var::r);
    return std::pair<Quantity, Quantity>{std::move(lhs), std::move(rhs)};
  });
}

IdentityReport check_alice_marginal(const DyckPath& alpha, SweepOptions opts) {
  BigInt count = 0;
  for_each_permutation(
      alpha.length(),
      [&](const Permutation& w) {
        if (alice_path(w, crossout_mark(w)) == alpha) count += 1;
      },
      opts.force);
  return alice_marginal_report(alpha, count);
}

IdentityReport check_alice_generator(const DyckPath& alpha, SweepOptions opts) {
  std::set<Permutation> brute;
  for_each_permutation(
      alpha.length(),
      [&](const Permutation& w) {
        if (alice_path(w, crossout_mark(w)) == alpha) brute.insert(w);
      },
      opts.force);
  return generator_report(alpha, brute);
}

IdentityReport check_bob_marginal(const DyckPath& beta, SweepOptions opts) {
  const int n = beta.semilength() - 1;
  if (n < 1 || !beta.is_down(beta.length())) throw ValidationError("beta must have length >= 4");
  BigInt count = 0;
  for_each_permutation(
      2 * n,
      [&](const Permutation& w) {
        if (bob_path(w, crossout_mark(w)) == beta) count += 1;
      },
      opts.force);
  return bob_marginal_report(beta, count);
}

std::pair<IdentityReport, IdentityReport> check_double_factorial_sums(int n) {
  require_positive(n);
  IdentityReport first = timed("cor5-alice", n, "sum over D_" + std::to_string(2 * n), [&] {
    BigInt sum = 0;
    for_each_dyck_path(2 * n, [&](const DyckPath& p) { sum += product(p.heights().h); });
    return std::pair<Quantity, Quantity>{sum, odd_double_factorial(n)};
  });
  IdentityReport second = timed("cor5-bob", n, "sum over D_" + std::to_string(2 * n + 2), [&] {
    BigInt sum = 0;
    for_each_dyck_path(2 * n + 2, [&](const DyckPath& p) { sum += product(bob_bounds(p)); });
    return std::pair<Quantity, Quantity>{sum, even_double_factorial(n)};
  });
  return {first, second};
}

IdentityReport check_alice_qt_identity(const DyckPath& alpha, SweepOptions opts) {
  Polynomial lhs;
  for_each_permutation(
      alpha.length(),
      [&](const Permutation& w) {
        if (alice_path(w, crossout_mark(w)) != alpha) return;
        const StatBundle st = stat_bundle(w);
        lhs.add_term({static_cast<int>(st.aa), 0, static_cast<int>(st.z)}, 1);
      },
      opts.force);
  return alice_qt_report(alpha, lhs);
}

std::vector<IdentityReport> check_path_sum_identities(int n, SweepOptions opts) {
  require_positive(n);
  std::vector<IdentityReport> out;
  out.push_back(timed("cor7-a", n, "sum over D_" + std::to_string(2 * n), [&] {
    Polynomial lhs;
    for_each_dyck_path(2 * n,
                       [&](const DyckPath& p) { lhs += shifted_height_product(p.heights().h); });
    std::vector<int> odd;
    for (int k = 1; k <= n; ++k) odd.push_back(2 * k - 1);
    return std::pair<Quantity, Quantity>{std::move(lhs), q_product(odd, Var::q)};
  }));
  if (2 * n > kMaxSweepSize && !opts.force) return out;
  const EvenSweep s = sweep_even(n, opts);
  for (const auto& [alpha, poly] : s.alice_inv) out.push_back(eq_qq_report(alpha, poly));
  out.push_back(timed("cor7-inv", n, "sum over S_" + std::to_string(2 * n), [&] {
    std::vector<int> ks;
    for (int k = 1; k <= 2 * n; ++k) ks.push_back(k);
    return std::pair<Quantity, Quantity>{s.inv_total, q_product(ks, Var::q)};
  }));
  return out;
}

std::vector<IdentityReport> check_probability(int n, SweepOptions opts) {
  require_positive(n);
  const int size = 2 * n;
  check_sweep_guard(size, opts.force);
  std::vector<BigInt> by_mask(std::size_t{1} << size, 0);
  for_each_permutation(
      size,
      [&](const Permutation& w) {
        const Marking marking = crossout_mark(w);
        std::size_t mask = 0;
        for (int pos = 1; pos <= size; ++pos)
          if (marking.at(pos) == Mark::A) mask |= std::size_t{1} << (w.at(pos) - 1);
        by_mask[mask] += 1;
      },
      opts.force);
  const BigInt total = factorial(size);
  std::vector<IdentityReport> out;
  for (std::size_t subset = 1; subset < by_mask.size(); ++subset) {
    const int m = __builtin_popcountll(subset);
    if (m > n) continue;
    std::vector<int> ranks;
    for (int k = 1; k <= size; ++k)
      if (subset >> (k - 1) & 1) ranks.push_back(k);
    out.push_back(timed("prob", n, "ranks=" + join(ranks), [&] {
      BigInt count = 0;
      for (std::size_t mask = 0; mask < by_mask.size(); ++mask)
        if ((mask & subset) == subset) count += by_mask[mask];
      return std::pair<Quantity, Quantity>{Rational(count, total), alice_probability(n, ranks)};
    }));
  }
  return out;
}

OutcomeCounts outcome_counts(int n, SweepOptions opts) {
  require_positive(n);
  std::set<std::vector<int>> alice;
  std::set<std::vector<int>> bob;
  for_each_permutation(
      2 * n,
      [&](const Permutation& w) {
        const Marking marking = crossout_mark(w);
        std::vector<int> ranks;
        for (int a : marking.positions(Mark::A)) ranks.push_back(w.at(a));
        std::sort(ranks.begin(), ranks.end());
        alice.insert(std::move(ranks));
        bob.insert(marking.positions(Mark::B));
      },
      opts.force);
  return {BigInt(alice.size()), BigInt(bob.size())};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "roundtrip", "thm2", "thm3", "thm4", "cor5",     "thm6",         "lemmaz",
      "stats",     "cor7", "prob", "outcomes", "independence", "hermite", "playout"};
  return names;
}

std::string canonical_suite(const std::string& name) {
  static const std::map<std::string, std::string> aliases = {
      {"theorem2", "thm2"},         {"theorem3", "thm3"},   {"theorem4", "thm4"},
      {"corollary5", "cor5"},       {"theorem6", "thm6"},   {"corollary7", "cor7"},
      {"probability", "prob"},      {"lemma", "lemmaz"},    {"z", "lemmaz"},
      {"alice", "thm3"},            {"bob", "thm4"},        {"matching", "hermite"},
      {"game", "playout"},
  };
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), name) != names.end()) return name;
  const auto it = aliases.find(name);
  if (it != aliases.end()) return it->second;
  throw ValidationError("unknown suite '" + name + "'");
}

namespace {

void suite_roundtrip(int n, SweepOptions opts,
                     const std::function<void(const IdentityReport&)>& sink) {
  for (int size : {2 * n - 1, 2 * n}) {
    sink(timed("roundtrip", n, "N=" + std::to_string(size), [&] {
      BigInt ok = 0;
      for_each_permutation(
          size,
          [&](const Permutation& w) {
            const CrossoutTuple t = encode(w);
            t.validate();
            if (decode(t) == w) ok += 1;
          },
          opts.force);
      return std::pair<Quantity, Quantity>{ok, factorial(size)};
    }));
  }
  check_sweep_guard(2 * n, opts.force);
  sink(timed("roundtrip-tuples", n, "encode(decode(t)) over all even tuples", [&] {
    BigInt ok = 0;
    for_each_dyck_path(2 * n, [&](const DyckPath& alpha) {
      for (const DyckPath& beta : bob_paths(n)) {
        for_each_labeling(label_bounds(alpha, false), [&](const std::vector<int>& ell) {
          for_each_labeling(bob_bounds(beta), [&](const std::vector<int>& em) {
            const CrossoutTuple t{alpha, beta, ell, em, Parity::Even};
            if (encode(decode(t)) == t) ok += 1;
          });
        });
      }
    });
    return std::pair<Quantity, Quantity>{ok, factorial(2 * n)};
  }));
}

void suite_thm2(int n, SweepOptions opts, const std::function<void(const IdentityReport&)>& sink) {
  check_sweep_guard(2 * n, opts.force);
  std::set<Permutation> seen;
  BigInt total = 0;
  const auto start = Clock::now();
  for (const DyckPath& alpha : enumerate_dyck(2 * n))
    for (const DyckPath& beta : bob_paths(n)) {
      sink(check_fiber_identity(alpha, beta));
      for_each_in_fiber(alpha, beta, [&](const Permutation& w) {
        seen.insert(w);
        total += 1;
      });
    }
  IdentityReport r = timed("thm2-fibers", n, "distinct permutations over all fibers", [&] {
    // Duplicates across fibers would make the distinct count fall short.
    return std::pair<Quantity, Quantity>{BigInt(seen.size()) - (total - BigInt(seen.size())),
                                         factorial(2 * n)};
  });
  r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  sink(r);
}

void suite_thm3(int n, SweepOptions opts, const std::function<void(const IdentityReport&)>& sink) {
  check_sweep_guard(2 * n, opts.force);
  std::map<DyckPath, std::set<Permutation>> brute;
  for_each_permutation(
      2 * n,
      [&](const Permutation& w) { brute[alice_path(w, crossout_mark(w))].insert(w); },
      opts.force);
  for (const DyckPath& alpha : enumerate_dyck(2 * n)) {
    const auto it = brute.find(alpha);
    const std::set<Permutation> empty;
    const std::set<Permutation>& members = it == brute.end() ? empty : it->second;
    sink(alice_marginal_report(alpha, BigInt(members.size())));
    sink(generator_report(alpha, members));
  }
}

void suite_thm4(int n, SweepOptions opts, const std::function<void(const IdentityReport&)>& sink) {
  const EvenSweep s = sweep_even(n, opts);
  for (const DyckPath& beta : bob_paths(n)) {
    const auto it = s.bob_count.find(beta);
    sink(bob_marginal_report(beta, it == s.bob_count.end() ? BigInt(0) : it->second));
  }
}

void suite_thm6(int n, SweepOptions opts, const std::function<void(const IdentityReport&)>& sink) {
  const EvenSweep s = sweep_even(n, opts);
  for (const DyckPath& alpha : enumerate_dyck(2 * n)) {
    const auto it = s.alice_qt.find(alpha);
    sink(alice_qt_report(alpha, it == s.alice_qt.end() ? Polynomial() : it->second));
  }
}

void suite_z_identity(int n, SweepOptions opts,
                  const std::function<void(const IdentityReport&)>& sink) {
  sink(timed("lemmaz", n, "z = n^2 + sum(h_i - 1) - ab - bb for every w", [&] {
    const EvenSweep s = sweep_even(n, opts);
    return std::pair<Quantity, Quantity>{s.z_identity_ok, factorial(2 * n)};
  }));
}

void suite_stats(int n, SweepOptions opts, const std::function<void(const IdentityReport&)>& sink) {
  for (int size : {2 * n - 1, 2 * n}) {
    BigInt no_ba = 0;
    BigInt inv_split = 0;
    BigInt labels_match = 0;
    const auto start = Clock::now();
    for_each_permutation(
        size,
        [&](const Permutation& w) {
          const StatBundle st = stat_bundle(w);
          if (st.ba == 0) no_ba += 1;
          if (st.inv == st.aa + st.ab + st.bb && st.inv == inversions(w)) inv_split += 1;
          const CrossoutTuple t = encode(w);
          std::int64_t ell_excess = 0;
          std::int64_t em_excess = 0;
          for (int l : t.ell) ell_excess += l - 1;
          for (int m : t.em) em_excess += m - 1;
          if (st.aa == ell_excess && st.bb == em_excess) labels_match += 1;
        },
        opts.force);
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    const std::string params = "N=" + std::to_string(size);
    const BigInt all = factorial(size);
    for (auto [id, count] : {std::pair<const char*, BigInt>{"stats-ba-zero", no_ba},
                             {"stats-inv-split", inv_split},
                             {"stats-label-excess", labels_match}}) {
      IdentityReport r = timed(id, n, params, [&] {
        return std::pair<Quantity, Quantity>{count, all};
      });
      r.elapsed_ms = ms;
      sink(r);
    }
  }
}

void suite_outcomes(int n, SweepOptions opts,
                    const std::function<void(const IdentityReport&)>& sink) {
  const auto start = Clock::now();
  const OutcomeCounts c = outcome_counts(n, opts);
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  IdentityReport a = timed("outcomes-alice", n, "distinct rank sets", [&] {
    return std::pair<Quantity, Quantity>{c.alice, catalan(n)};
  });
  IdentityReport b = timed("outcomes-bob", n, "distinct position sets", [&] {
    return std::pair<Quantity, Quantity>{c.bob, catalan(n + 1)};
  });
  a.elapsed_ms = b.elapsed_ms = ms;
  sink(a);
  sink(b);
}

std::string history_key(const DyckPath& p, const std::vector<int>& labels) {
  return p.to_string() + ":" + join(labels);
}

void suite_independence(int n, SweepOptions opts,
                        const std::function<void(const IdentityReport&)>& sink) {
  std::map<std::string, BigInt> alice;
  std::map<std::string, BigInt> bob;
  std::set<std::string> joint;
  const auto start = Clock::now();
  for_each_permutation(
      2 * n,
      [&](const Permutation& w) {
        const CrossoutTuple t = encode(w);
        const std::string a = history_key(t.pa, t.ell);
        const std::string b = history_key(t.pb, t.em);
        alice[a] += 1;
        bob[b] += 1;
        joint.insert(a + "|" + b);
      },
      opts.force);
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  const BigInt alice_each = even_double_factorial(n);
  const BigInt bob_each = odd_double_factorial(n);
  auto count_equal = [](const std::map<std::string, BigInt>& hist, const BigInt& v) {
    BigInt c = 0;
    for (const auto& [k, x] : hist)
      if (x == v) c += 1;
    return c;
  };
  // k values each hit exactly `each` times, with k * each = (2n)!, leave no
  // room for any other value.
  std::vector<IdentityReport> reports;
  reports.push_back(timed("independence-alice", n,
                          "(p_A, ell) values occurring " + alice_each.str() + " times", [&] {
                            return std::pair<Quantity, Quantity>{count_equal(alice, alice_each),
                                                                 odd_double_factorial(n)};
                          }));
  reports.push_back(timed("independence-bob", n,
                          "(p_B, m) values occurring " + bob_each.str() + " times", [&] {
                            return std::pair<Quantity, Quantity>{count_equal(bob, bob_each),
                                                                 even_double_factorial(n)};
                          }));
  reports.push_back(timed("independence-joint", n, "distinct joint values", [&] {
    return std::pair<Quantity, Quantity>{BigInt(joint.size()), factorial(2 * n)};
  }));
  for (IdentityReport& r : reports) {
    r.elapsed_ms = ms;
    sink(r);
  }
}

void suite_hermite(int n, SweepOptions opts,
                   const std::function<void(const IdentityReport&)>& sink) {
  check_sweep_guard(2 * n, opts.force);
  BigInt histories = 0;
  BigInt history_roundtrip = 0;
  for_each_dyck_path(2 * n, [&](const DyckPath& p) {
    for_each_labeling(label_bounds(p, false), [&](const std::vector<int>& labels) {
      histories += 1;
      const LabeledDyckPath h{p, labels};
      if (matching_to_hermite(hermite_to_matching(h)) == h) history_roundtrip += 1;
    });
  });
  sink(timed("hermite-count", n, "Hermite histories of length " + std::to_string(2 * n), [&] {
    return std::pair<Quantity, Quantity>{histories, odd_double_factorial(n)};
  }));
  sink(timed("hermite-roundtrip", n, "matching_to_hermite(hermite_to_matching(h)) = h", [&] {
    return std::pair<Quantity, Quantity>{history_roundtrip, odd_double_factorial(n)};
  }));
  sink(timed("matching-roundtrip", n, "hermite_to_matching(matching_to_hermite(m)) = m", [&] {
    BigInt ok = 0;
    for_each_matching(2 * n, [&](const Matching& m) {
      if (hermite_to_matching(matching_to_hermite(m)) == m) ok += 1;
    });
    return std::pair<Quantity, Quantity>{ok, odd_double_factorial(n)};
  }));
}

// Allocation equals the marking, play order is its reverse, each player's
// picks descend in their own preference, and nobody wants to trade.
bool playout_invariants(const Permutation& w) {
  const Marking marking = crossout_mark(w);
  GameState s(w);
  while (!s.over()) s = s.apply_move(optimal_move(s));
  if (allocation(s) != marking) return false;
  int last_alice_pos = w.size() + 1;
  int last_bob_value = w.size() + 1;
  for (const MoveRecord& r : s.history()) {
    if (r.player == Player::Alice) {
      if (r.position >= last_alice_pos) return false;
      last_alice_pos = r.position;
    } else {
      if (r.value >= last_bob_value) return false;
      last_bob_value = r.value;
    }
  }
  return no_trade_check(s);
}

void suite_playout(int n, SweepOptions opts,
                   const std::function<void(const IdentityReport&)>& sink) {
  for (int size : {2 * n - 1, 2 * n}) {
    sink(timed("playout", n, "N=" + std::to_string(size), [&] {
      BigInt ok = 0;
      for_each_permutation(
          size, [&](const Permutation& w) { ok += playout_invariants(w) ? 1 : 0; }, opts.force);
      return std::pair<Quantity, Quantity>{ok, factorial(size)};
    }));
  }
}

}  // namespace

void run_suite(const std::string& suite, int n, SweepOptions opts,
               const std::function<void(const IdentityReport&)>& sink) {
  require_positive(n);
  const std::string name = canonical_suite(suite);
  if (name == "roundtrip") return suite_roundtrip(n, opts, sink);
  if (name == "thm2") return suite_thm2(n, opts, sink);
  if (name == "thm3") return suite_thm3(n, opts, sink);
  if (name == "thm4") return suite_thm4(n, opts, sink);
  if (name == "cor5") {
    auto [a, b] = check_double_factorial_sums(n);
    sink(a);
    sink(b);
    return;
  }
  if (name == "thm6") return suite_thm6(n, opts, sink);
  if (name == "lemmaz") return suite_z_identity(n, opts, sink);
  if (name == "stats") return suite_stats(n, opts, sink);
  if (name == "cor7") {
    for (const IdentityReport& r : check_path_sum_identities(n, opts)) sink(r);
    return;
  }
  if (name == "prob") {
    for (const IdentityReport& r : check_probability(n, opts)) sink(r);
    return;
  }
  if (name == "outcomes") return suite_outcomes(n, opts, sink);
  if (name == "independence") return suite_independence(n, opts, sink);
  if (name == "hermite") return suite_hermite(n, opts, sink);
  if (name == "playout") return suite_playout(n, opts, sink);
}

std::vector<IdentityReport> run_suite(const std::string& suite, int n, SweepOptions opts) {
  std::vector<IdentityReport> out;
  run_suite(suite, n, opts, [&](const IdentityReport& r) { out.push_back(r); });
  return out;
}

}  // namespace crossout
