#pragma once

#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "lio/core.hpp"

namespace lio {

// Ordered sequence of pairwise disjoint non-empty blocks (an ordered set
// partition of its underlying set).
class Ballot {
 public:
  Ballot() = default;
  explicit Ballot(std::vector<IntSet> blocks);
  Ballot(std::initializer_list<IntSet> blocks) : Ballot(std::vector<IntSet>(blocks)) {}

  // Every element of `elems` in its own block, increasing.
  static Ballot singletons(const IntSet& elems);

  const std::vector<IntSet>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  bool empty() const { return blocks_.empty(); }
  const IntSet& underlying() const { return underlying_; }
  int element_count() const { return static_cast<int>(underlying_.size()); }

  friend bool operator==(const Ballot& a, const Ballot& b) { return a.blocks_ == b.blocks_; }
  friend auto operator<=>(const Ballot& a, const Ballot& b) { return a.blocks_ <=> b.blocks_; }

 private:
  std::vector<IntSet> blocks_;
  IntSet underlying_;
};

std::string to_string(const Ballot& w);

// (-1)^(number of blocks)
int ballot_sign(const Ballot& w);

// True when w is {u_1}{u_2}...{u_n} with u_1 < ... < u_n, the only ballot
// fixed by ballot_involution.
bool is_increasing_singletons(const Ballot& w);

// Sign-reversing split/merge involution. Leading blocks {u_1}{u_2}... made
// of the successive minima are skipped; at the first remaining minimum x,
// a block of size >= 2 sheds x into a new block {x} on its right, while a
// singleton {x} that is not the first remaining block merges into its
// left neighbour.
Ballot ballot_involution(const Ballot& w);

// Every ballot on U exactly once. Guard: |U| <= 9.
void for_each_ballot(const IntSet& U, const std::function<void(const Ballot&)>& visit);
std::vector<Ballot> enumerate_ballots(const IntSet& U);

}  // namespace lio
