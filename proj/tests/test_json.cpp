#include <doctest.h>

#include "helpers.hpp"
#include "lio/json_io.hpp"

using namespace lio;
using testing::mat;

TEST_SUITE("json") {

TEST_CASE("encodings are byte exact") {
  CHECK(to_json(Permutation::parse("4132")).dump() == "[4,1,3,2]");
  CHECK(to_json(IntSet{3, 1}).dump() == "[1,3]");
  CHECK(to_json(testing::bal("{6}{1,2,3,5}")).dump() == "[[6],[1,2,3,5]]");
  CHECK(to_json(mat({{"{1}", "0"}, {"{2}"}})).dump() == R"({"m":2,"rows":[[[[1]],[]],[[[2]]]]})");
  CHECK(to_json(Poset(IntSet{1, 2, 3}, {{2, 3}, {1, 2}})).dump() == R"({"elements":[1,2,3],"less":[[1,2],[1,3],[2,3]]})");
  CHECK(to_json(PermTablePair{Permutation::parse("21"), InversionTable::parse("10")}).dump() ==
        R"({"invtab":[1,0],"perm":[2,1]})");
  CHECK(to_json(ConstructionChoice(3, IntSet{1}, {1, 0, 0})).dump() == R"({"S":[1],"digits":[1,0,0],"n":3})");
}

TEST_CASE("round trips") {
  const BallotMatrix A = mat({{"0", "{6}", "0", "{4,5}"}, {"0", "{3}", "0"}, {"{1}", "0"}, {"{2}"}});
  CHECK(ballot_matrix_from_json(to_json(A)) == A);
  const Poset P = poset_of(A);
  CHECK(poset_from_json(to_json(P)) == P);
  const ConstructionChoice c(8, IntSet{3, 5, 6, 7}, {4, 2, 0, 0, 1, 0, 0, 0});
  CHECK(construction_choice_from_json(to_json(c)) == c);
  const PermTablePair pair{Permutation::parse("4132"), InversionTable::parse("2010")};
  CHECK(pair_from_json(to_json(pair)) == pair);
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(parse_json("{"), JsonFormatError);
  CHECK_THROWS_AS(int_set_from_json(parse_json("[2,1]")), JsonFormatError);
  CHECK_THROWS_AS(permutation_from_json(parse_json("[1,1]")), JsonFormatError);
  CHECK_THROWS_AS(permutation_from_json(parse_json("[1,\"2\"]")), JsonFormatError);
  CHECK_THROWS_AS(inversion_table_from_json(parse_json("[1]")), JsonFormatError);
  CHECK_THROWS_AS(ballot_from_json(parse_json("[[1],[]]")), JsonFormatError);
  CHECK_THROWS_AS(ballot_matrix_from_json(parse_json(R"({"m":2,"rows":[[[[1]],[]]]})")), JsonFormatError);
  CHECK_THROWS_AS(ballot_matrix_from_json(parse_json(R"({"m":1,"rows":[[[]]]})")), JsonFormatError);
  CHECK_THROWS_AS(ballot_matrix_from_json(parse_json(R"({"rows":[]})")), JsonFormatError);
  CHECK_THROWS_AS(construction_choice_from_json(parse_json(R"({"n":3,"S":[1],"digits":[2,0,0]})")), JsonFormatError);
  CHECK_THROWS_AS(poset_from_json(parse_json(R"({"elements":[1,2],"less":[[1,2],[2,1]]})")), JsonFormatError);
}

}
