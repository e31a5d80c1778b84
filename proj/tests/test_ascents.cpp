#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "lio/ascents.hpp"
#include "oracles.hpp"

using namespace lio;
using testing::bal;

namespace {

const IntSet kS{3, 5, 6, 7};
const ConstructionChoice kRunning(8, kS, {4, 2, 0, 0, 1, 0, 0, 0});

std::vector<IntSet> subsets(int n) {
  std::vector<IntSet> out;
  for (unsigned long long m = 0; m < (n <= 1 ? 1ULL : 1ULL << (n - 1)); ++m) out.push_back(IntSet::from_mask(m));
  return out;
}

}  // namespace

TEST_SUITE("ascents") {

TEST_CASE("digit bounds and validation") {
  CHECK(digit_bounds(8, kS) == std::vector<int>{4, 3, 2, 1, 1, 0, 0, 0});
  CHECK_THROWS_AS(ConstructionChoice(8, kS, {5, 0, 0, 0, 0, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(ConstructionChoice(8, kS, {0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(ConstructionChoice(3, IntSet{3}, {0, 0, 0}), std::invalid_argument);
  CHECK(construction_choices(8, kS).size() == 240);
}

TEST_CASE("running example") {
  CHECK(cc_to_perm(kRunning) == Permutation::parse("65783421"));
  CHECK(cc_to_invtab_subset(kRunning) == InversionTable::parse("75003000"));
  CHECK(dent(cc_to_invtab_subset(kRunning)) == IntSet{0, 3, 5, 7});
  CHECK(cc_to_ballot(kRunning) == bal("{6}{1,2,3,5}{7}{4}{8}"));
  CHECK(ballot_to_perm_decreasing(bal("{6}{1,2,3,5}{7}{4}{8}")) == Permutation::parse("65321748"));

  const MissingChain chain = missing_chain(kRunning);
  CHECK(chain.ballot == bal("{6}{1,2,3,5}{7}{4}{8}"));
  CHECK(chain.tau == Permutation::parse("65321748"));
  CHECK(chain.tau_complement == Permutation::parse("34678251"));
  CHECK(chain.tau_complement_cc.S() == IntSet{2, 3, 4, 6, 7});
  CHECK(chain.tau_complement_cc.digits() == std::vector<int>{5, 4, 3, 1, 2, 0, 0, 0});
  CHECK(chain.invtab == InversionTable::parse("76423000"));
  CHECK(cc_to_invtab_missing(kRunning) == InversionTable::parse("76423000"));
  CHECK(dent(chain.invtab) == IntSet{0, 2, 3, 4, 6, 7});

  CHECK(to_string(cc_to_perm(kRunning)) == "65783421");
  CHECK(to_string(cc_to_invtab_subset(kRunning)) == "75003000");
  CHECK(to_string(cc_to_ballot(kRunning)) == "{6}{1,2,3,5}{7}{4}{8}");
  CHECK(to_string(chain.tau) == "65321748");
  CHECK(to_string(chain.tau_complement) == "34678251");
  CHECK(to_string(chain.invtab) == "76423000");
}

TEST_CASE("inverse maps on the running example") {
  CHECK(perm_to_cc(Permutation::parse("65783421"), kS) == kRunning);
  CHECK(invtab_subset_to_cc(InversionTable::parse("75003000"), kS) == kRunning);
  CHECK(ballot_to_cc(bal("{6}{1,2,3,5}{7}{4}{8}"), kS) == kRunning);
  CHECK(invtab_missing_to_cc(InversionTable::parse("76423000"), kS) == kRunning);
  CHECK_THROWS_AS(perm_to_cc(Permutation::parse("12345678"), kS), std::invalid_argument);
}

TEST_CASE("trivial choices") {
  for (int n = 1; n <= 6; ++n) {
    const ConstructionChoice zero(n, IntSet{}, std::vector<int>(static_cast<std::size_t>(n), 0));
    std::vector<int> down;
    for (int v = n; v >= 1; --v) down.push_back(v);
    CHECK(cc_to_perm(zero) == Permutation(down));
    CHECK(cc_to_invtab_subset(zero) == InversionTable(std::vector<int>(static_cast<std::size_t>(n), 0)));
    CHECK(cc_to_ballot(zero) == Ballot({IntSet::range(n)}));
    CHECK(missing_entries(cc_to_invtab_missing(zero)).empty());
    CHECK(ballot_to_perm_decreasing(Ballot({IntSet::range(n)})) == Permutation(down));
    CHECK(ballot_to_perm_decreasing(Ballot::singletons(IntSet::range(n))) == Permutation::identity(n));
  }
}

TEST_CASE("bijections against S_n and IT_n filtering for n <= 6") {
  for (int n = 0; n <= 6; ++n) {
    const auto perms = oracle::permutations(n);
    for (const IntSet& S : subsets(n)) {
      const auto mask = static_cast<std::uint32_t>(S.to_mask());
      std::set<std::vector<int>> want_perms, want_subset, want_missing;
      for (const auto& w : perms) {
        if ((oracle::ascent_bottom_mask(w) & ~mask) == 0) want_perms.insert(w);
        const auto b = oracle::inversion_table(w);
        bool in_subset = true;
        std::vector<bool> present(static_cast<std::size_t>(n + 1), false);
        for (int v : b) {
          present[static_cast<std::size_t>(v)] = true;
          if (v != 0 && !S.contains(v)) in_subset = false;
        }
        if (in_subset) want_subset.insert(b);
        bool in_missing = true;
        for (int a = 1; a < n; ++a)
          if (!present[static_cast<std::size_t>(a)] && !S.contains(n - a)) in_missing = false;
        if (in_missing) want_missing.insert(b);
      }

      std::set<std::vector<int>> got_perms, got_subset, got_missing;
      std::set<Ballot> got_ballots;
      const auto ccs = construction_choices(n, S);
      CHECK(ccs.size() == want_perms.size());
      for (const auto& c : ccs) {
        const Permutation p = cc_to_perm(c);
        const InversionTable ts = cc_to_invtab_subset(c), tm = cc_to_invtab_missing(c);
        const Ballot w = cc_to_ballot(c);
        CHECK(perm_to_cc(p, S) == c);
        CHECK(invtab_subset_to_cc(ts, S) == c);
        CHECK(invtab_missing_to_cc(tm, S) == c);
        CHECK(ballot_to_cc(w, S) == c);
        got_perms.insert(p.word());
        got_subset.insert(ts.entries());
        got_missing.insert(tm.entries());
        got_ballots.insert(w);
        if (n > 0) {
          IntSet mins;
          for (const IntSet& b : w.blocks()) mins.insert(b.min());
          IntSet want_mins{1};
          for (int s : S) want_mins.insert(s + 1);
          CHECK(mins == want_mins);
        }
      }
      CHECK(got_perms == want_perms);
      CHECK(got_subset == want_subset);
      CHECK(got_missing == want_missing);
      CHECK(got_ballots.size() == ccs.size());
    }
  }
}

}
