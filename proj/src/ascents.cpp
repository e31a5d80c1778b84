#include "lio/ascents.hpp"

#include <algorithm>
#include <list>
#include <stdexcept>

namespace lio {

namespace {

void check_subset_of_range(int n, const IntSet& S) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  if (!S.is_subset_of(IntSet::range(n - 1)))
    throw std::invalid_argument("S = " + to_string(S) + " is not a subset of [n-1]");
}

// 0 for x not in S, otherwise r with s_r = x.
int rank_in(const IntSet& S, int x) {
  auto it = std::lower_bound(S.begin(), S.end(), x);
  if (it == S.end() || *it != x) return 0;
  return static_cast<int>(it - S.begin()) + 1;
}

IntSet block_minima(const IntSet& S) {
  IntSet mins{1};
  for (int s : S) mins.insert(s + 1);
  return mins;
}

}  // namespace

ConstructionChoice::ConstructionChoice(int n, IntSet S, std::vector<int> digits)
    : n_(n), S_(std::move(S)), digits_(std::move(digits)) {
  check_subset_of_range(n_, S_);
  if (static_cast<int>(digits_.size()) != n_)
    throw std::invalid_argument("ConstructionChoice: expected " + std::to_string(n_) + " digits");
  const std::vector<int> bound = digit_bounds(n_, S_);
  for (std::size_t i = 0; i < digits_.size(); ++i)
    if (digits_[i] < 0 || digits_[i] > bound[i])
      throw std::invalid_argument("ConstructionChoice: digit c_" + std::to_string(i + 1) +
                                  " = " + std::to_string(digits_[i]) + " outside [0," +
                                  std::to_string(bound[i]) + "]");
}

std::vector<int> digit_bounds(int n, const IntSet& S) {
  check_subset_of_range(n, S);
  std::vector<int> bound;
  for (int i = 1; i <= n; ++i)
    bound.push_back(static_cast<int>(std::count_if(S.begin(), S.end(), [&](int s) { return s <= n - i; })));
  return bound;
}

std::vector<ConstructionChoice> construction_choices(int n, const IntSet& S) {
  check_guard("construction choice length", n, 9);
  const std::vector<int> bound = digit_bounds(n, S);
  std::vector<ConstructionChoice> out;
  std::vector<int> d(static_cast<std::size_t>(n), 0);
  while (true) {
    out.emplace_back(n, S, d);
    int i = n - 1;
    while (i >= 0 && d[static_cast<std::size_t>(i)] == bound[static_cast<std::size_t>(i)])
      d[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++d[static_cast<std::size_t>(i)];
  }
  return out;
}

// ------------------------------------------------------------ permutation

Permutation cc_to_perm(const ConstructionChoice& c) {
  const int n = c.n();
  // Non-negative tokens are values; a token -1-r marks active site r.
  std::list<int> tokens{-1};
  for (int e = 1; e <= n; ++e) {
    const int site = c.digit(n + 1 - e);
    auto it = std::find(tokens.begin(), tokens.end(), -1 - site);
    auto placed = tokens.insert(std::next(it), e);
    if (int r = rank_in(c.S(), e); r > 0) tokens.insert(std::next(placed), -1 - r);
  }
  std::vector<int> w;
  for (int t : tokens)
    if (t > 0) w.push_back(t);
  return Permutation(std::move(w));
}

ConstructionChoice perm_to_cc(const Permutation& p, const IntSet& S) {
  const int n = p.size();
  check_subset_of_range(n, S);
  if (!ascent_bottom_set(p).is_subset_of(S))
    throw std::invalid_argument("perm_to_cc: ascent bottoms of " + to_string(p) + " not within " +
                                to_string(S));
  // e was placed directly after the site of its nearest smaller left
  // neighbour (site 0 when there is none).
  std::vector<int> d(static_cast<std::size_t>(n), 0);
  for (int pos = 1; pos <= n; ++pos) {
    const int e = p.at(pos);
    int site = 0;
    for (int q = pos - 1; q >= 1; --q)
      if (p.at(q) < e) {
        site = rank_in(S, p.at(q));
        break;
      }
    d[static_cast<std::size_t>(n - e)] = site;
  }
  return ConstructionChoice(n, S, std::move(d));
}

// --------------------------------------------------------- subset tables

InversionTable cc_to_invtab_subset(const ConstructionChoice& c) {
  std::vector<int> b;
  for (int d : c.digits()) b.push_back(d == 0 ? 0 : c.S()[static_cast<std::size_t>(d - 1)]);
  return InversionTable(std::move(b));
}

ConstructionChoice invtab_subset_to_cc(const InversionTable& t, const IntSet& S) {
  check_subset_of_range(t.size(), S);
  std::vector<int> d;
  for (int b : t.entries()) {
    const int r = rank_in(S, b);
    if (b != 0 && r == 0)
      throw std::invalid_argument("invtab_subset_to_cc: entry " + std::to_string(b) + " not in {0} u S");
    d.push_back(r);
  }
  return ConstructionChoice(t.size(), S, std::move(d));
}

// ---------------------------------------------------------------- ballots

Ballot cc_to_ballot(const ConstructionChoice& c) {
  const int n = c.n();
  const IntSet mins = block_minima(c.S());
  const std::size_t blocks = c.S().size() + 1;
  std::vector<std::vector<int>> content(n == 0 ? 0 : blocks);
  std::vector<bool> open(content.size(), true);
  for (int i = 1; i <= n; ++i) {
    const int a = n + 1 - i;
    int want = c.digit(i);
    std::size_t b = 0;
    for (;; ++b)
      if (open[b] && want-- == 0) break;
    content[b].push_back(a);
    if (mins.contains(a)) open[b] = false;
  }
  std::vector<IntSet> out;
  for (auto& blk : content) out.emplace_back(std::move(blk));
  return Ballot(std::move(out));
}

ConstructionChoice ballot_to_cc(const Ballot& w, const IntSet& S) {
  const int n = w.element_count();
  check_subset_of_range(n, S);
  if (w.underlying() != IntSet::range(n))
    throw std::invalid_argument("ballot_to_cc: ballot must cover [n]");
  IntSet mins;
  for (const IntSet& b : w.blocks()) mins.insert(b.min());
  if (n > 0 && mins != block_minima(S))
    throw std::invalid_argument("ballot_to_cc: block minima " + to_string(mins) + " do not match S");

  std::vector<int> d(static_cast<std::size_t>(n), 0);
  for (int a = 1; a <= n; ++a) {
    // blocks still open when a is placed: those whose minimum is <= a
    int index = 0;
    for (const IntSet& b : w.blocks()) {
      if (b.contains(a)) break;
      if (b.min() <= a) ++index;
    }
    d[static_cast<std::size_t>(n - a)] = index;
  }
  return ConstructionChoice(n, S, std::move(d));
}

Permutation ballot_to_perm_decreasing(const Ballot& w) {
  std::vector<int> out;
  for (const IntSet& b : w.blocks()) out.insert(out.end(), b.values().rbegin(), b.values().rend());
  return Permutation(std::move(out));
}

Ballot perm_to_ballot_decreasing(const Permutation& p, const IntSet& S) {
  check_subset_of_range(p.size(), S);
  const IntSet mins = block_minima(S);
  std::vector<IntSet> blocks;
  std::vector<int> current;
  for (int v : p.word()) {
    if (!current.empty() && current.back() < v)
      throw std::invalid_argument("perm_to_ballot_decreasing: block not decreasing");
    current.push_back(v);
    if (mins.contains(v)) {
      blocks.emplace_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty())
    throw std::invalid_argument("perm_to_ballot_decreasing: last entry is not a block minimum");
  return Ballot(std::move(blocks));
}

// --------------------------------------------------------- missing tables

MissingChain missing_chain(const ConstructionChoice& c) {
  MissingChain ch;
  ch.ballot = cc_to_ballot(c);
  ch.tau = ballot_to_perm_decreasing(ch.ballot);
  ch.tau_complement = complement(ch.tau);
  ch.tau_complement_cc = perm_to_cc(ch.tau_complement, ascent_bottom_set(ch.tau_complement));
  ch.invtab = cc_to_invtab_subset(ch.tau_complement_cc);
  return ch;
}

InversionTable cc_to_invtab_missing(const ConstructionChoice& c) { return missing_chain(c).invtab; }

ConstructionChoice invtab_missing_to_cc(const InversionTable& t, const IntSet& S) {
  const int n = t.size();
  check_subset_of_range(n, S);
  IntSet allowed;
  for (int s : S) allowed.insert(n - s);
  if (!missing_entries(t).is_subset_of(allowed))
    throw std::invalid_argument("invtab_missing_to_cc: missing entries not within {n - s}");
  IntSet present = dent(t);
  present.erase(0);
  const Permutation tau_c = cc_to_perm(invtab_subset_to_cc(t, present));
  const Ballot w = perm_to_ballot_decreasing(complement(tau_c), S);
  return ballot_to_cc(w, S);
}

}  // namespace lio
