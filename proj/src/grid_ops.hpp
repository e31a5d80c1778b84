#pragma once

// Row/column surgery shared by phi and rho. Grids are square and indexed
// 1-based by the callers; the helpers translate.

#include "lio/matrices.hpp"

namespace lio::detail {

// New empty row at index i and new empty column at index i; everything at
// or beyond i shifts by one.
void insert_row_and_column(BallotMatrix::Grid& grid, int i);

// Deletes row i and column i. Both must already be empty.
void remove_row_and_column(BallotMatrix::Grid& grid, int i);

// The ballot with x deleted from its block (the block is dropped if it
// becomes empty).
Ballot without_element(const Ballot& w, int x);

Ballot with_front_singleton(const Ballot& w, int x);
Ballot with_back_singleton(const Ballot& w, int x);

inline Ballot& cell(BallotMatrix::Grid& grid, int i, int j) {
  return grid[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

}  // namespace lio::detail
