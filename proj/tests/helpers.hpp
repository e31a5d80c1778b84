#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "lio/ballots.hpp"
#include "lio/matrices.hpp"

namespace testing {

// "{6}{1,2,3,5}" -> Ballot; "" or "0" -> empty ballot.
inline lio::Ballot bal(const std::string& text) {
  std::vector<lio::IntSet> blocks;
  lio::IntSet cur;
  std::string num;
  for (char ch : text) {
    if (ch >= '0' && ch <= '9') {
      num += ch;
      continue;
    }
    if (!num.empty()) {
      cur.insert(std::stoi(num));
      num.clear();
    }
    if (ch == '}') {
      blocks.push_back(cur);
      cur = lio::IntSet{};
    }
  }
  return lio::Ballot(std::move(blocks));
}

// rows[i-1] lists the ballots in columns i..m.
inline lio::BallotMatrix mat(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<lio::Ballot>> out;
  for (const auto& row : rows) {
    std::vector<lio::Ballot> r;
    for (const auto& cell : row) r.push_back(cell == "0" ? lio::Ballot{} : bal(cell));
    out.push_back(std::move(r));
  }
  return lio::BallotMatrix(std::move(out));
}

}  // namespace testing
