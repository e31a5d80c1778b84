#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "lio/ballots.hpp"
#include "oracles.hpp"

using namespace lio;
using testing::bal;

TEST_SUITE("ballots") {

TEST_CASE("ballots validate blocks") {
  CHECK_THROWS_AS(Ballot({IntSet{1}, IntSet{}}), std::invalid_argument);
  CHECK_THROWS_AS(Ballot({IntSet{1, 2}, IntSet{2}}), std::invalid_argument);
  CHECK(bal("{2,5}{1,4,6}{3}").underlying() == IntSet{1, 2, 3, 4, 5, 6});
  CHECK(Ballot{}.underlying().empty());
}

TEST_CASE("sign") {
  CHECK(ballot_sign(bal("{2,5}{1,4,6}{3}")) == -1);
  CHECK(ballot_sign(bal("{1,2}")) == -1);
  CHECK(ballot_sign(Ballot{}) == 1);
}

TEST_CASE("involution examples") {
  CHECK(ballot_involution(bal("{2,5}{1,4,6}{3}")) == bal("{2,5}{4,6}{1}{3}"));
  CHECK(ballot_involution(bal("{2,5}{4,6}{1}{3}")) == bal("{2,5}{1,4,6}{3}"));
  CHECK(ballot_involution(bal("{1}{2}{5}{4,6}{3}")) == bal("{1}{2}{5}{3,4,6}"));
  CHECK(ballot_involution(bal("{1}{2}{3}")) == bal("{1}{2}{3}"));
  CHECK(ballot_involution(Ballot{}) == Ballot{});
}

TEST_CASE("enumeration sizes follow the Fubini numbers") {
  CHECK(enumerate_ballots(IntSet{}).size() == 1);
  const auto two = enumerate_ballots(IntSet{1, 2});
  CHECK(std::set<Ballot>(two.begin(), two.end()) == std::set<Ballot>{bal("{1,2}"), bal("{1}{2}"), bal("{2}{1}")});
  for (int n = 0; n <= 6; ++n) {
    const auto all = enumerate_ballots(IntSet::range(n));
    CHECK(static_cast<long>(all.size()) == oracle::fubini(n));
    CHECK(std::set<Ballot>(all.begin(), all.end()).size() == all.size());
  }
  CHECK(enumerate_ballots(IntSet::range(4)).size() == 75);
  CHECK_THROWS_AS(enumerate_ballots(IntSet::range(10)), SizeGuardError);
}

TEST_CASE("involution is sign reversing with one fixed point") {
  for (int n = 0; n <= 7; ++n) {
    const IntSet U = IntSet::interval(3, 2 + n);
    long fixed = 0, signed_sum = 0;
    for_each_ballot(U, [&](const Ballot& w) {
      const Ballot v = ballot_involution(w);
      CHECK(ballot_involution(v) == w);
      if (v == w) {
        ++fixed;
        CHECK(w == Ballot::singletons(U));
      } else {
        CHECK(ballot_sign(v) == -ballot_sign(w));
      }
      signed_sum += ballot_sign(w);
    });
    CHECK(fixed == 1);
    CHECK(signed_sum == (n % 2 == 0 ? 1 : -1));
  }
}

}
