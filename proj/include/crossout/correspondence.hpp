#pragma once

#include <string>
#include <vector>

#include "crossout/dyck_path.hpp"
#include "crossout/permutation.hpp"

namespace crossout {

enum class Parity { Even, Odd };

inline const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }
Parity parity_from_string(const std::string& s);

/// The labeled path pair (p_A, p_B, ell, em) attached to a permutation.
///
/// Even length N = 2n: |p_A| = 2n, |p_B| = 2n+2 ending in a down step,
/// |ell| = |em| = n, ell_i <= h_i(p_A), em_i <= h*_i(p_B).
/// Odd length N = 2n-1: |p_A| = |p_B| = 2n, p_A ends in a down step,
/// |ell| = n-1, |em| = n, ell_i <= h*_i(p_A), em_i <= h_i(p_B).
///
/// The final down step of p_B (even) or p_A (odd) carries no label, so the
/// corresponding label vector is one shorter than its down-step count.
struct CrossoutTuple {
  DyckPath pa;
  DyckPath pb;
  std::vector<int> ell;
  std::vector<int> em;
  Parity parity = Parity::Even;

  /// Number of permutation entries N this tuple corresponds to.
  int permutation_size() const;

  /// Throws ValidationError on shape problems and ConstraintViolation on
  /// label bound violations (the index is the 1-based label position).
  void validate() const;

  LabeledDyckPath alice() const { return {pa, ell}; }
  LabeledDyckPath bob() const { return {pb, em}; }

  friend bool operator==(const CrossoutTuple&, const CrossoutTuple&) = default;
};

/// p_A(w) from a marking of w: down steps {w(a) : a marked A}, plus a final
/// down step when |w| is odd.
DyckPath alice_path(const Permutation& w, const Marking& marking);
/// p_B(w) from a marking of w: down steps {b+1 : b marked B}, plus a final
/// down step when |w| is even.
DyckPath bob_path(const Permutation& w, const Marking& marking);

/// Crossout correspondence w -> (p_A, p_B, ell, em); parity follows |w|.
CrossoutTuple encode(const Permutation& w);

/// Inverse of encode, by filling 2n (or 2n-1) boxes: B boxes come from the
/// down steps of p_B, A values are dropped into the ell_i-th empty A box,
/// and B boxes are filled left to right with the em_i-th smallest unused
/// value.
Permutation decode(const CrossoutTuple& t);

}  // namespace crossout
