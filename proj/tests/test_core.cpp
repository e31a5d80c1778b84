#include <doctest.h>

#include "lio/core.hpp"
#include "oracles.hpp"

using namespace lio;

TEST_SUITE("core") {

TEST_CASE("permutations validate their entries") {
  CHECK_NOTHROW(Permutation({}));
  CHECK_NOTHROW(Permutation::parse("4132"));
  CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
  CHECK(Permutation::parse("4132").at(2) == 1);
  CHECK(Permutation::parse("4132").position_of(3) == 3);
}

TEST_CASE("inversion tables validate their range") {
  CHECK_NOTHROW(InversionTable::parse("231100"));
  CHECK_THROWS_AS(InversionTable({1}), std::invalid_argument);
  CHECK_THROWS_AS(InversionTable({3, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(InversionTable({0, -1, 0}), std::invalid_argument);
}

TEST_CASE("descent set") {
  CHECK(descent_set(Permutation::parse("123")).empty());
  CHECK(descent_set(Permutation::parse("321")) == IntSet{1, 2});
  CHECK(descent_set(Permutation::parse("65783421")) == IntSet{1, 4, 6, 7});
  CHECK(descent_set(Permutation({})).empty());
}

TEST_CASE("ascent bottom set") {
  CHECK(ascent_bottom_set(Permutation::parse("65783421")) == IntSet{3, 5, 7});
  CHECK(ascent_bottom_set(Permutation::parse("34678251")) == IntSet{2, 3, 4, 6, 7});
  CHECK(ascent_bottom_set(Permutation::parse("321")).empty());
}

TEST_CASE("statistics agree with the bitmask oracle on S_6") {
  for (const auto& w : oracle::permutations(6)) {
    const Permutation p(w);
    CHECK(descent_set(p).to_mask() == oracle::descent_mask(w));
    CHECK(ascent_bottom_set(p).to_mask() == oracle::ascent_bottom_mask(w));
  }
}

TEST_CASE("complement") {
  CHECK(complement(Permutation::parse("65321748")) == Permutation::parse("34678251"));
  CHECK(complement(Permutation::parse("123")) == Permutation::parse("321"));
  for (const Permutation& p : all_permutations(5)) CHECK(complement(complement(p)) == p);
}

TEST_CASE("dent and missing entries") {
  CHECK(dent(InversionTable::parse("430200")) == IntSet{0, 2, 3, 4});
  CHECK(dent(InversionTable::parse("231100")) == IntSet{0, 1, 2, 3});
  CHECK(dent(InversionTable::parse("000")) == IntSet{0});
  CHECK(missing_entries(InversionTable::parse("430200")) == IntSet{1, 5});
  CHECK(missing_entries(InversionTable::parse("210")).empty());
  CHECK(missing_entries(InversionTable::parse("00000")) == IntSet{1, 2, 3, 4});
}

TEST_CASE("permutation to inversion table") {
  CHECK(to_inversion_table(Permutation::parse("123")) == InversionTable::parse("000"));
  CHECK(to_inversion_table(Permutation::parse("321")) == InversionTable::parse("210"));
  for (const auto& w : oracle::permutations(6)) {
    const Permutation p(w);
    const InversionTable t = to_inversion_table(p);
    CHECK(t.entries() == oracle::inversion_table(w));
    CHECK(to_permutation(t) == p);
  }
}

TEST_CASE("enumerators") {
  CHECK(all_permutations(0).size() == 1);
  CHECK(all_permutations(5).size() == 120);
  const auto tables = all_inversion_tables(5);
  CHECK(tables.size() == 120);
  CHECK(std::is_sorted(tables.begin(), tables.end()));
  CHECK_THROWS_AS(all_permutations(11), SizeGuardError);
}

TEST_CASE("IntSet basics") {
  IntSet s{5, 1, 3, 3};
  CHECK(s.values() == std::vector<int>{1, 3, 5});
  CHECK(IntSet::range(3) == IntSet{1, 2, 3});
  CHECK(IntSet::from_mask(0b101) == IntSet{1, 3});
  CHECK(IntSet{1, 3}.to_mask() == 0b101);
  CHECK(IntSet{1, 3}.is_subset_of(s));
  CHECK(s.set_difference(IntSet{3}) == IntSet{1, 5});
}

}
