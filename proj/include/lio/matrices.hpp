#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "lio/ballots.hpp"
#include "lio/core.hpp"

namespace lio {

// Upper triangular m x m matrix of pairwise disjoint ballots in which every
// row holds at least one element. Rows and columns are 1-based.
class BallotMatrix {
 public:
  // Square grid of ballots; entries below the diagonal must be empty.
  using Grid = std::vector<std::vector<Ballot>>;

  BallotMatrix() = default;
  // rows[i-1] lists the entries (i,i), (i,i+1), ..., (i,m).
  explicit BallotMatrix(std::vector<std::vector<Ballot>> rows);

  static BallotMatrix from_grid(const Grid& grid);
  Grid to_grid() const;

  int m() const { return m_; }
  const Ballot& at(int i, int j) const;
  const IntSet& underlying() const { return underlying_; }

  IntSet row_elements(int i) const;
  IntSet column_elements(int j) const;
  bool column_empty(int j) const;
  // Total number of blocks over all entries.
  int block_count() const;
  // (row, column) of the entry holding x.
  std::pair<int, int> locate(int x) const;

  friend bool operator==(const BallotMatrix& a, const BallotMatrix& b) {
    return a.m_ == b.m_ && a.cells_ == b.cells_;
  }
  friend auto operator<=>(const BallotMatrix& a, const BallotMatrix& b) {
    if (auto c = a.m_ <=> b.m_; c != 0) return c;
    return a.cells_ <=> b.cells_;
  }

 private:
  std::size_t index(int i, int j) const;

  int m_ = 0;
  std::vector<Ballot> cells_;  // row-major upper triangle
  IntSet underlying_;
};

std::string to_string(const BallotMatrix& A);

// (-1)^(blocks + m)
int matrix_sign(const BallotMatrix& A);

// Every ballot matrix on U exactly once, ordered by m and then by entries.
// Guard: |U| <= 4.
void for_each_ballot_matrix(const IntSet& U,
                            const std::function<void(const BallotMatrix&)>& visit);
std::vector<BallotMatrix> enumerate_ballot_matrices(const IntSet& U);

// Canonical order in which psi looks for the first non-fixed entry.
enum class ScanOrder {
  kRowMajor,   // (i,j) lexicographic
  kByMinimum,  // by least element of the entry
};

// Applies ballot_involution to the first entry it does not fix.
BallotMatrix psi(const BallotMatrix& A, ScanOrder order = ScanOrder::kRowMajor);
bool is_psi_fixed(const BallotMatrix& A);

// Pivot elements of a psi-fixed matrix; throws std::invalid_argument
// otherwise.
IntSet pivot_elements(const BallotMatrix& A);

// Involution on psi-fixed matrices driven by the smallest pivot.
BallotMatrix phi(const BallotMatrix& A);

// phi(A) when psi fixes A, psi(A) otherwise.
BallotMatrix eta(const BallotMatrix& A, ScanOrder order = ScanOrder::kRowMajor);

}  // namespace lio
