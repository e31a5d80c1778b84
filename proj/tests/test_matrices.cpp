#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "lio/matrices.hpp"
#include "oracles.hpp"

using namespace lio;
using testing::bal;
using testing::mat;

namespace {

// Five-by-five example with pivots 2, 3 and 5, and its image under phi.
BallotMatrix pivot_example() {
  return mat({{"0", "{4}", "0", "0", "0"},
              {"{6}{8}", "0", "{3}{7}", "0"},
              {"0", "{2}", "0"},
              {"{9}", "{5}"},
              {"{1}"}});
}

BallotMatrix pivot_example_image() {
  return mat({{"0", "{4}", "0", "0"},
              {"{6}{8}", "{3}{7}", "0"},
              {"{2}{9}", "{5}"},
              {"{1}"}});
}

}  // namespace

TEST_SUITE("matrices") {

TEST_CASE("construction validates shape and disjointness") {
  CHECK_NOTHROW(mat({{"{1}", "0"}, {"{2}"}}));
  CHECK_THROWS_AS(mat({{"{1}", "0"}, {"0"}}), std::invalid_argument);
  CHECK_THROWS_AS(mat({{"{1}", "{1}"}, {"{2}"}}), std::invalid_argument);
  CHECK_THROWS_AS(mat({{"{1}"}, {"{2}"}}), std::invalid_argument);
  CHECK(BallotMatrix{}.m() == 0);
  const BallotMatrix A = pivot_example();
  CHECK(A.locate(9) == std::pair{4, 4});
  CHECK(A.row_elements(2) == IntSet{3, 6, 7, 8});
  CHECK(A.column_empty(3));
  CHECK(BallotMatrix::from_grid(A.to_grid()) == A);
}

TEST_CASE("sign") {
  CHECK(matrix_sign(mat({{"{1,2}"}})) == 1);
  CHECK(matrix_sign(mat({{"{1}{2}"}})) == -1);
  CHECK(matrix_sign(mat({{"0", "{6}", "0", "{4,5}"}, {"0", "{3}", "0"}, {"{1}", "0"}, {"{2}"}})) == -1);
  CHECK(matrix_sign(BallotMatrix{}) == 1);
}

TEST_CASE("ballot matrices on {1,2}") {
  std::set<BallotMatrix> pos, neg;
  for (const BallotMatrix& A : enumerate_ballot_matrices(IntSet{1, 2})) (matrix_sign(A) > 0 ? pos : neg).insert(A);
  const std::set<BallotMatrix> want_pos{mat({{"{1,2}"}}), mat({{"0", "{1}"}, {"{2}"}}), mat({{"0", "{2}"}, {"{1}"}}),
                                        mat({{"{2}", "0"}, {"{1}"}}), mat({{"{1}", "0"}, {"{2}"}})};
  const std::set<BallotMatrix> want_neg{mat({{"{1}{2}"}}), mat({{"{2}{1}"}})};
  CHECK(pos == want_pos);
  CHECK(neg == want_neg);
}

TEST_CASE("enumeration matches the placement oracle") {
  const auto empty = enumerate_ballot_matrices(IntSet{});
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].m() == 0);
  for (int n = 0; n <= 4; ++n) {
    const auto all = enumerate_ballot_matrices(IntSet::range(n));
    const auto [size, signed_sum] = oracle::ballot_matrix_totals(n);
    CHECK(static_cast<long long>(all.size()) == size);
    CHECK(std::set<BallotMatrix>(all.begin(), all.end()).size() == all.size());
    long long sum = 0;
    for (const auto& A : all) sum += matrix_sign(A);
    CHECK(sum == signed_sum);
  }
  CHECK_THROWS_AS(enumerate_ballot_matrices(IntSet::range(5)), SizeGuardError);
}

TEST_CASE("psi") {
  CHECK(psi(mat({{"{2,5}{1,4,6}{3}"}})) == mat({{"{2,5}{4,6}{1}{3}"}}));
  const BallotMatrix fixed = mat({{"{1}{3}", "{2}"}, {"{4}"}});
  CHECK(psi(fixed) == fixed);
  CHECK(is_psi_fixed(fixed));
  CHECK(psi(fixed, ScanOrder::kByMinimum) == fixed);
  // The two scan orders differ when two entries are unfixed.
  const BallotMatrix two = mat({{"{3}{2}", "{1,4}"}, {"{5}"}});
  CHECK(psi(two) == mat({{"{2,3}", "{1,4}"}, {"{5}"}}));
  CHECK(psi(two, ScanOrder::kByMinimum) == mat({{"{3}{2}", "{4}{1}"}, {"{5}"}}));
  for (const auto& A : enumerate_ballot_matrices(IntSet::range(3))) {
    CHECK(psi(psi(A)) == A);
    CHECK(psi(psi(A, ScanOrder::kByMinimum), ScanOrder::kByMinimum) == A);
  }
}

TEST_CASE("pivots") {
  CHECK(pivot_elements(pivot_example()) == IntSet{2, 3, 5});
  CHECK(pivot_elements(mat({{"{1}{2}"}})) == IntSet{1});
  CHECK(pivot_elements(mat({{"0", "{3}", "0"}, {"0", "{1}"}, {"{2}"}})).empty());
  CHECK_THROWS_AS(pivot_elements(mat({{"{2}{1}"}})), std::invalid_argument);
}

TEST_CASE("phi on the worked example") {
  CHECK(phi(pivot_example()) == pivot_example_image());
  CHECK(pivot_elements(pivot_example_image()).min() == 2);
  CHECK(phi(pivot_example_image()) == pivot_example());
  CHECK(eta(pivot_example()) == phi(pivot_example()));
}

TEST_CASE("phi is an involution on psi-fixed matrices of [3]") {
  for (const auto& A : enumerate_ballot_matrices(IntSet::range(3))) {
    if (!is_psi_fixed(A)) continue;
    CHECK(phi(phi(A)) == A);
  }
}

TEST_CASE("eta is a sign-reversing involution on [n], n <= 3") {
  for (int n = 0; n <= 3; ++n) {
    long fixed = 0;
    for (const auto& A : enumerate_ballot_matrices(IntSet::range(n))) {
      const BallotMatrix B = eta(A);
      CHECK(eta(B) == A);
      if (B == A) {
        ++fixed;
        CHECK(matrix_sign(A) == 1);
      } else {
        CHECK(matrix_sign(B) == -matrix_sign(A));
      }
    }
    CHECK(fixed == std::vector<long>{1, 1, 3, 19}[static_cast<std::size_t>(n)]);
  }
}

}
