#include "lio/json_io.hpp"

#include <algorithm>

namespace lio {

namespace {

std::vector<int> int_array(const Json& j, const char* what) {
  if (!j.is_array()) throw JsonFormatError(std::string(what) + ": expected an array");
  std::vector<int> out;
  for (const Json& v : j) {
    if (!v.is_number_integer()) throw JsonFormatError(std::string(what) + ": expected integers");
    out.push_back(v.get<int>());
  }
  return out;
}

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    throw JsonFormatError(std::string(what) + ": missing field \"" + key + "\"");
  return j.at(key);
}

// Runs a validating constructor, reporting its complaint as a format error.
template <typename F>
auto checked(const char* what, F&& make) {
  try {
    return make();
  } catch (const std::invalid_argument& e) {
    throw JsonFormatError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json to_json(const IntSet& s) { return Json(s.values()); }
Json to_json(const Permutation& p) { return Json(p.word()); }
Json to_json(const InversionTable& t) { return Json(t.entries()); }

Json to_json(const Ballot& w) {
  Json out = Json::array();
  for (const IntSet& b : w.blocks()) out.push_back(to_json(b));
  return out;
}

Json to_json(const BallotMatrix& A) {
  Json rows = Json::array();
  for (int i = 1; i <= A.m(); ++i) {
    Json row = Json::array();
    for (int j = i; j <= A.m(); ++j) row.push_back(to_json(A.at(i, j)));
    rows.push_back(std::move(row));
  }
  Json out = Json::object();
  out["m"] = A.m();
  out["rows"] = std::move(rows);
  return out;
}

Json to_json(const Poset& P) {
  Json less = Json::array();
  for (auto [x, y] : P.less()) less.push_back(Json::array({x, y}));
  Json out = Json::object();
  out["elements"] = to_json(P.elements());
  out["less"] = std::move(less);
  return out;
}

Json to_json(const PermTablePair& pair) {
  Json out = Json::object();
  out["perm"] = to_json(pair.perm);
  out["invtab"] = to_json(pair.invtab);
  return out;
}

Json to_json(const ConstructionChoice& c) {
  Json out = Json::object();
  out["n"] = c.n();
  out["S"] = to_json(c.S());
  out["digits"] = Json(c.digits());
  return out;
}

IntSet int_set_from_json(const Json& j) {
  std::vector<int> v = int_array(j, "IntSet");
  if (!std::is_sorted(v.begin(), v.end()) || std::adjacent_find(v.begin(), v.end()) != v.end())
    throw JsonFormatError("IntSet: expected a strictly increasing array");
  return IntSet(std::move(v));
}

Permutation permutation_from_json(const Json& j) {
  return checked("Permutation", [&] { return Permutation(int_array(j, "Permutation")); });
}

InversionTable inversion_table_from_json(const Json& j) {
  return checked("InversionTable", [&] { return InversionTable(int_array(j, "InversionTable")); });
}

Ballot ballot_from_json(const Json& j) {
  if (!j.is_array()) throw JsonFormatError("Ballot: expected an array of blocks");
  std::vector<IntSet> blocks;
  for (const Json& b : j) blocks.push_back(int_set_from_json(b));
  return checked("Ballot", [&] { return Ballot(std::move(blocks)); });
}

BallotMatrix ballot_matrix_from_json(const Json& j) {
  const Json& mj = field(j, "m", "BallotMatrix");
  if (!mj.is_number_integer() || mj.get<int>() < 0)
    throw JsonFormatError("BallotMatrix: \"m\" must be a non-negative integer");
  const int m = mj.get<int>();
  const Json& rj = field(j, "rows", "BallotMatrix");
  if (!rj.is_array() || static_cast<int>(rj.size()) != m)
    throw JsonFormatError("BallotMatrix: \"rows\" must hold m rows");
  std::vector<std::vector<Ballot>> rows;
  for (const Json& row : rj) {
    if (!row.is_array()) throw JsonFormatError("BallotMatrix: row must be an array");
    std::vector<Ballot> r;
    for (const Json& w : row) r.push_back(ballot_from_json(w));
    rows.push_back(std::move(r));
  }
  return checked("BallotMatrix", [&] { return BallotMatrix(std::move(rows)); });
}

Poset poset_from_json(const Json& j) {
  IntSet el = int_set_from_json(field(j, "elements", "Poset"));
  const Json& lj = field(j, "less", "Poset");
  if (!lj.is_array()) throw JsonFormatError("Poset: \"less\" must be an array");
  Poset::Relation rel;
  for (const Json& pr : lj) {
    std::vector<int> xy = int_array(pr, "Poset pair");
    if (xy.size() != 2) throw JsonFormatError("Poset: pairs must have two entries");
    rel.emplace_back(xy[0], xy[1]);
  }
  return checked("Poset", [&] { return Poset(std::move(el), rel); });
}

PermTablePair pair_from_json(const Json& j) {
  return {permutation_from_json(field(j, "perm", "pair")),
          inversion_table_from_json(field(j, "invtab", "pair"))};
}

ConstructionChoice construction_choice_from_json(const Json& j) {
  const Json& nj = field(j, "n", "ConstructionChoice");
  if (!nj.is_number_integer()) throw JsonFormatError("ConstructionChoice: \"n\" must be an integer");
  IntSet S = int_set_from_json(field(j, "S", "ConstructionChoice"));
  std::vector<int> digits = int_array(field(j, "digits", "ConstructionChoice"), "digits");
  return checked("ConstructionChoice",
                 [&] { return ConstructionChoice(nj.get<int>(), std::move(S), std::move(digits)); });
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw JsonFormatError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace lio
