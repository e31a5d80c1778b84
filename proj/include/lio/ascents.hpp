#pragma once

#include <vector>

#include "lio/ballots.hpp"
#include "lio/core.hpp"

namespace lio {

// Digit word c_1 ... c_n for a set S = {s_1 < ... < s_k} within [n-1].
// Digit c_i drives the placement of the value n + 1 - i and ranges over
// [0, #{ s in S : s <= n - i }].
class ConstructionChoice {
 public:
  ConstructionChoice() = default;
  // Throws std::invalid_argument on a bad S or an out-of-range digit.
  ConstructionChoice(int n, IntSet S, std::vector<int> digits);

  int n() const { return n_; }
  const IntSet& S() const { return S_; }
  const std::vector<int>& digits() const { return digits_; }
  // 1-based.
  int digit(int i) const { return digits_.at(static_cast<std::size_t>(i - 1)); }

  friend bool operator==(const ConstructionChoice&, const ConstructionChoice&) = default;
  friend auto operator<=>(const ConstructionChoice&, const ConstructionChoice&) = default;

 private:
  int n_ = 0;
  IntSet S_;
  std::vector<int> digits_;
};

// Largest allowed value of each digit.
std::vector<int> digit_bounds(int n, const IntSet& S);

// Lexicographic. Guard: n <= 9.
std::vector<ConstructionChoice> construction_choices(int n, const IntSet& S);

// Active-site insertion of 1, 2, ..., n. Lands in { p : A(p) within S }.
Permutation cc_to_perm(const ConstructionChoice& c);
// Inverse of cc_to_perm; requires ascent_bottom_set(p) within S.
ConstructionChoice perm_to_cc(const Permutation& p, const IntSet& S);

// b_i = s_{c_i} with s_0 = 0. Lands in { t : dent(t) within {0} u S }.
InversionTable cc_to_invtab_subset(const ConstructionChoice& c);
ConstructionChoice invtab_subset_to_cc(const InversionTable& t, const IntSet& S);

// Open/close block filling. Block minima are {1, s_1 + 1, ..., s_k + 1}.
Ballot cc_to_ballot(const ConstructionChoice& c);
ConstructionChoice ballot_to_cc(const Ballot& w, const IntSet& S);

// Concatenation of the blocks, each written in decreasing order.
Permutation ballot_to_perm_decreasing(const Ballot& w);
// Inverse of ballot_to_perm_decreasing on ballots with block minima
// {1, s_1 + 1, ..., s_k + 1}: cuts p after each of those values.
Ballot perm_to_ballot_decreasing(const Permutation& p, const IntSet& S);

// Intermediate stages of cc_to_invtab_missing.
struct MissingChain {
  Ballot ballot;
  Permutation tau;             // ballot_to_perm_decreasing(ballot)
  Permutation tau_complement;  // complement(tau)
  ConstructionChoice tau_complement_cc;  // w.r.t. ascent_bottom_set(tau_complement)
  InversionTable invtab;
};

MissingChain missing_chain(const ConstructionChoice& c);

// Lands in { t : missing_entries(t) within { n - s : s in S } }.
InversionTable cc_to_invtab_missing(const ConstructionChoice& c);
ConstructionChoice invtab_missing_to_cc(const InversionTable& t, const IntSet& S);

}  // namespace lio
