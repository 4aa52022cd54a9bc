#pragma once

#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "crossout/dyck_path.hpp"
#include "crossout/numbers.hpp"
#include "crossout/permutation.hpp"
#include "crossout/polynomial.hpp"

namespace crossout {

/// One side of a checked identity.
using Quantity = std::variant<BigInt, Rational, Polynomial>;

std::string to_string(const Quantity& q);
const char* kind_name(const Quantity& q);

/// Outcome of one brute-force check: left side from definitions (marking,
/// inversion counting, enumeration), right side from the closed form.
struct IdentityReport {
  std::string id;
  int n = 0;
  std::string params;
  Quantity lhs;
  Quantity rhs;
  double elapsed_ms = 0;

  bool equal() const { return lhs == rhs; }
};

struct SweepOptions {
  bool force = false;  // lift the exhaustive-sweep guard
};

/// S(alpha, beta): every w with p_A(w) = alpha and p_B(w) = beta, produced by
/// decoding every admissible labeling. Requires |alpha| = 2n, |beta| = 2n+2
/// and beta ending with a down step.
void for_each_in_fiber(const DyckPath& alpha, const DyckPath& beta,
                       const std::function<void(const Permutation&)>& fn);
std::vector<Permutation> fiber(const DyckPath& alpha, const DyckPath& beta);

/// Circled-box write-in process: every w in S_{2n} with p_A(w) = alpha,
/// generated directly from alpha.
std::vector<Permutation> generate_alice_fiber(const DyckPath& alpha);

IdentityReport check_fiber_identity(const DyckPath& alpha, const DyckPath& beta);
IdentityReport check_alice_marginal(const DyckPath& alpha, SweepOptions opts = {});
IdentityReport check_alice_generator(const DyckPath& alpha, SweepOptions opts = {});
IdentityReport check_bob_marginal(const DyckPath& beta, SweepOptions opts = {});
std::pair<IdentityReport, IdentityReport> check_double_factorial_sums(int n);
IdentityReport check_alice_qt_identity(const DyckPath& alpha, SweepOptions opts = {});
/// Path-sum identity always; the per-alpha inversion identity and the
/// classical inversion generating function only within the sweep guard.
std::vector<IdentityReport> check_path_sum_identities(int n, SweepOptions opts = {});
std::vector<IdentityReport> check_probability(int n, SweepOptions opts = {});

struct OutcomeCounts {
  BigInt alice;
  BigInt bob;
};
/// Distinct Alice rank sets and distinct Bob position sets over S_{2n}.
OutcomeCounts outcome_counts(int n, SweepOptions opts = {});

/// Registered suite names, in canonical order.
const std::vector<std::string>& suite_names();
/// Maps aliases ("theorem2", "corollary5", ...) to canonical names; throws
/// ValidationError on unknown names.
std::string canonical_suite(const std::string& name);

/// Runs every check of `suite` at parameter n, calling `sink` per report.
void run_suite(const std::string& suite, int n, SweepOptions opts,
               const std::function<void(const IdentityReport&)>& sink);
std::vector<IdentityReport> run_suite(const std::string& suite, int n, SweepOptions opts = {});

}  // namespace crossout
