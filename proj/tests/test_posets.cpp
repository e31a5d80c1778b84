#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "lio/posets.hpp"
#include "oracles.hpp"

using namespace lio;
using testing::mat;

namespace {

BallotMatrix hook_example() {
  return mat({{"0", "{6}", "0", "{4,5}"}, {"0", "{3}", "0"}, {"{1}", "0"}, {"{2}"}});
}

}  // namespace

TEST_SUITE("posets") {

TEST_CASE("closure and validation") {
  const Poset P(IntSet{1, 2, 3}, {{1, 2}, {2, 3}});
  CHECK(P.less() == Poset::Relation{{1, 2}, {1, 3}, {2, 3}});
  CHECK(P.is_less(1, 3));
  CHECK_FALSE(P.is_less(3, 1));
  CHECK_THROWS_AS(Poset(IntSet{1, 2}, {{1, 2}, {2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Poset(IntSet{1}, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Poset(IntSet{1, 2}, {{1, 3}}), std::invalid_argument);
}

TEST_CASE("hook rule on the worked matrix") {
  const Poset P = poset_of(hook_example());
  const Poset want(IntSet::range(6), {{6, 1}, {1, 2}, {3, 2}});
  CHECK(P == want);
  CHECK(downset(P, 2) == IntSet{1, 3, 6});
  CHECK(downset(P, 4).empty());
  CHECK(is_interval_order(P));
  CHECK(is_two_plus_two_free(P));
}

TEST_CASE("hook rule on a fixed point") {
  const Poset P = poset_of(mat({{"0", "{4}", "0", "0"}, {"0", "0", "{1}"}, {"{3}", "0"}, {"{2}"}}));
  CHECK(downset(P, 4).empty());
  CHECK(downset(P, 1).empty());
  CHECK(downset(P, 3) == IntSet{4});
  CHECK(downset(P, 2) == IntSet{3, 4});
}

TEST_CASE("one-row matrices give antichains") {
  CHECK(poset_of(mat({{"{3}{1,2}"}})).less().empty());
}

TEST_CASE("downsets") {
  const Poset chain(IntSet{1, 2, 3}, {{1, 2}, {2, 3}});
  CHECK(downset(chain, 3) == IntSet{1, 2});
  CHECK(downset(Poset(IntSet{1, 2}, {}), 2).empty());
  CHECK_THROWS_AS(downset(chain, 4), std::out_of_range);
}

TEST_CASE("interval-order tests") {
  const Poset two_two(IntSet{1, 2, 3, 4}, {{1, 2}, {3, 4}});
  CHECK_FALSE(is_interval_order(two_two));
  CHECK_FALSE(is_two_plus_two_free(two_two));
  const Poset chain(IntSet{1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 4}});
  CHECK(is_interval_order(chain));
  CHECK(is_two_plus_two_free(chain));
  CHECK(is_interval_order(Poset(IntSet{1, 2, 3, 4}, {})));
}

TEST_CASE("labeled interval orders match the relation oracle") {
  const long known[] = {1, 1, 3, 19, 207, 3451};
  for (int n = 0; n <= 5; ++n) {
    const auto all = enumerate_labeled_interval_orders(n);
    CHECK(static_cast<long>(all.size()) == oracle::interval_orders(n));
    CHECK(static_cast<long>(all.size()) == known[n]);
  }
  CHECK_THROWS_AS(enumerate_labeled_interval_orders(6), SizeGuardError);
}

TEST_CASE("induced posets are interval orders and every one is hit") {
  std::set<Poset> seen;
  for (const auto& A : enumerate_ballot_matrices(IntSet::range(3))) {
    const Poset P = poset_of(A);
    CHECK(is_interval_order(P));
    CHECK(is_two_plus_two_free(P));
    seen.insert(P);
  }
  const auto all = enumerate_labeled_interval_orders(3);
  CHECK(seen == std::set<Poset>(all.begin(), all.end()));
}

}
