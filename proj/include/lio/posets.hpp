#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "lio/core.hpp"
#include "lio/matrices.hpp"

namespace lio {

// Strict partial order on a finite set of integers. The relation is stored
// transitively closed and sorted; equality is equality of labeled relations.
class Poset {
 public:
  using Relation = std::vector<std::pair<int, int>>;

  Poset() = default;
  // Takes the transitive closure of `less`; throws std::invalid_argument on
  // a cycle or on a pair mentioning a non-element.
  Poset(IntSet elements, const Relation& less);

  const IntSet& elements() const { return elements_; }
  const Relation& less() const { return less_; }
  bool is_less(int x, int y) const;

  friend bool operator==(const Poset&, const Poset&) = default;
  friend auto operator<=>(const Poset&, const Poset&) = default;

 private:
  IntSet elements_;
  Relation less_;
};

std::string to_string(const Poset& P);

// x < y iff the column of x is strictly left of the row of y.
Poset poset_of(const BallotMatrix& A);

// { y : y < x }; throws std::out_of_range for an unknown element.
IntSet downset(const Poset& P, int x);

// Downsets totally ordered by inclusion.
bool is_interval_order(const Poset& P);
// No induced copy of two disjoint 2-element chains.
bool is_two_plus_two_free(const Poset& P);

// Brute-force oracle: every interval order on [n], found by orienting each
// pair of [n] in all three ways, keeping the acyclic choices, closing them
// transitively and deduplicating. Sorted. Guard: n <= 5.
std::vector<Poset> enumerate_labeled_interval_orders(int n);

}  // namespace lio
