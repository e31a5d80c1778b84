#pragma once

// JSON encodings of the domain types (nlohmann::json).
//
//   IntSet, Permutation, InversionTable  array of ints
//   Ballot                               array of blocks, block = sorted array
//   BallotMatrix                         {"m": int, "rows": [row_1, ...]}, row_i
//                                        lists the ballots in columns i..m
//   Poset                                {"elements": [...], "less": [[x,y],...]}
//   PermTablePair                        {"perm": [...], "invtab": [...]}
//   ConstructionChoice                   {"n": int, "S": [...], "digits": [...]}
//
// Decoding validates every invariant and throws JsonFormatError on failure.

#include <stdexcept>

#include <json.hpp>

#include "lio/ascents.hpp"
#include "lio/ballots.hpp"
#include "lio/core.hpp"
#include "lio/fixedpoints.hpp"
#include "lio/matrices.hpp"
#include "lio/posets.hpp"

namespace lio {

class JsonFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::json;

Json to_json(const IntSet& s);
Json to_json(const Permutation& p);
Json to_json(const InversionTable& t);
Json to_json(const Ballot& w);
Json to_json(const BallotMatrix& A);
Json to_json(const Poset& P);
Json to_json(const PermTablePair& pair);
Json to_json(const ConstructionChoice& c);

IntSet int_set_from_json(const Json& j);
Permutation permutation_from_json(const Json& j);
InversionTable inversion_table_from_json(const Json& j);
Ballot ballot_from_json(const Json& j);
BallotMatrix ballot_matrix_from_json(const Json& j);
Poset poset_from_json(const Json& j);
PermTablePair pair_from_json(const Json& j);
ConstructionChoice construction_choice_from_json(const Json& j);

// Parses text, mapping syntax errors to JsonFormatError.
Json parse_json(const std::string& text);

}  // namespace lio
