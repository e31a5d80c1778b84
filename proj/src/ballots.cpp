#include "lio/ballots.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lio {

Ballot::Ballot(std::vector<IntSet> blocks) : blocks_(std::move(blocks)) {
  std::size_t total = 0;
  for (const IntSet& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("Ballot: empty block");
    total += b.size();
    underlying_ = underlying_.set_union(b);
  }
  if (underlying_.size() != total) throw std::invalid_argument("Ballot: blocks are not disjoint");
}

Ballot Ballot::singletons(const IntSet& elems) {
  std::vector<IntSet> blocks;
  for (int x : elems) blocks.push_back(IntSet{x});
  return Ballot(std::move(blocks));
}

std::string to_string(const Ballot& w) {
  if (w.empty()) return "{}";
  std::string out;
  for (const IntSet& b : w.blocks()) out += to_string(b);
  return out;
}

int ballot_sign(const Ballot& w) { return w.block_count() % 2 == 0 ? 1 : -1; }

bool is_increasing_singletons(const Ballot& w) {
  const auto& blocks = w.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].size() != 1) return false;
    if (i > 0 && blocks[i - 1][0] > blocks[i][0]) return false;
  }
  return true;
}

Ballot ballot_involution(const Ballot& w) {
  std::vector<IntSet> blocks = w.blocks();
  const IntSet& U = w.underlying();

  std::size_t start = 0;  // first block of the unskipped suffix
  for (int x : U) {
    const auto it = std::find_if(blocks.begin() + static_cast<std::ptrdiff_t>(start),
                                 blocks.end(),
                                 [x](const IntSet& b) { return b.contains(x); });
    const auto i = static_cast<std::size_t>(it - blocks.begin());

    if (blocks[i].size() >= 2) {
      blocks[i].erase(x);
      blocks.insert(blocks.begin() + static_cast<std::ptrdiff_t>(i + 1), IntSet{x});
      return Ballot(std::move(blocks));
    }
    if (i > start) {
      blocks[i - 1].insert(x);
      blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(i));
      return Ballot(std::move(blocks));
    }
    ++start;  // first remaining block is {x}
  }
  return w;
}

namespace {

void extend_ballots(std::vector<int>& remaining, std::vector<IntSet>& prefix,
                    const std::function<void(const Ballot&)>& visit) {
  if (remaining.empty()) {
    visit(Ballot(prefix));
    return;
  }
  // Choose the next block as any non-empty subset of the remaining elements.
  const std::size_t r = remaining.size();
  for (unsigned long mask = 1; mask < (1UL << r); ++mask) {
    std::vector<int> block, rest;
    for (std::size_t b = 0; b < r; ++b)
      ((mask >> b) & 1UL ? block : rest).push_back(remaining[b]);
    prefix.emplace_back(std::move(block));
    extend_ballots(rest, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace

void for_each_ballot(const IntSet& U, const std::function<void(const Ballot&)>& visit) {
  check_guard("ballot ground set size", static_cast<long long>(U.size()), 9);
  std::vector<int> remaining = U.values();
  std::vector<IntSet> prefix;
  extend_ballots(remaining, prefix, visit);
}

std::vector<Ballot> enumerate_ballots(const IntSet& U) {
  std::vector<Ballot> out;
  for_each_ballot(U, [&](const Ballot& w) { out.push_back(w); });
  return out;
}

}  // namespace lio
