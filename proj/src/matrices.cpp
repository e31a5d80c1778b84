#include "lio/matrices.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "grid_ops.hpp"

namespace lio {

// ----------------------------------------------------------- BallotMatrix

BallotMatrix::BallotMatrix(std::vector<std::vector<Ballot>> rows)
    : m_(static_cast<int>(rows.size())) {
  std::size_t total = 0;
  for (int i = 1; i <= m_; ++i) {
    auto& row = rows[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(row.size()) != m_ - i + 1)
      throw std::invalid_argument("BallotMatrix: row " + std::to_string(i) +
                                  " must have " + std::to_string(m_ - i + 1) + " entries");
    std::size_t row_total = 0;
    for (Ballot& w : row) {
      row_total += w.underlying().size();
      underlying_ = underlying_.set_union(w.underlying());
      cells_.push_back(std::move(w));
    }
    if (row_total == 0)
      throw std::invalid_argument("BallotMatrix: row " + std::to_string(i) + " is empty");
    total += row_total;
  }
  if (underlying_.size() != total)
    throw std::invalid_argument("BallotMatrix: entries are not pairwise disjoint");
}

BallotMatrix BallotMatrix::from_grid(const Grid& grid) {
  const int m = static_cast<int>(grid.size());
  std::vector<std::vector<Ballot>> rows(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    const auto& g = grid[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(g.size()) != m) throw std::invalid_argument("BallotMatrix: grid not square");
    for (int j = 1; j <= m; ++j) {
      const Ballot& w = g[static_cast<std::size_t>(j - 1)];
      if (j < i) {
        if (!w.empty()) throw std::invalid_argument("BallotMatrix: entry below the diagonal");
      } else {
        rows[static_cast<std::size_t>(i - 1)].push_back(w);
      }
    }
  }
  return BallotMatrix(std::move(rows));
}

BallotMatrix::Grid BallotMatrix::to_grid() const {
  Grid grid(static_cast<std::size_t>(m_), std::vector<Ballot>(static_cast<std::size_t>(m_)));
  for (int i = 1; i <= m_; ++i)
    for (int j = i; j <= m_; ++j) detail::cell(grid, i, j) = at(i, j);
  return grid;
}

std::size_t BallotMatrix::index(int i, int j) const {
  if (i < 1 || j < i || j > m_) throw std::out_of_range("BallotMatrix: position outside upper triangle");
  // rows 1..i-1 hold m + (m-1) + ... + (m-i+2) entries
  const int before = (i - 1) * m_ - (i - 1) * (i - 2) / 2;
  return static_cast<std::size_t>(before + (j - i));
}

const Ballot& BallotMatrix::at(int i, int j) const { return cells_[index(i, j)]; }

IntSet BallotMatrix::row_elements(int i) const {
  IntSet out;
  for (int j = i; j <= m_; ++j) out = out.set_union(at(i, j).underlying());
  return out;
}

IntSet BallotMatrix::column_elements(int j) const {
  IntSet out;
  for (int i = 1; i <= j; ++i) out = out.set_union(at(i, j).underlying());
  return out;
}

bool BallotMatrix::column_empty(int j) const {
  for (int i = 1; i <= j; ++i)
    if (!at(i, j).empty()) return false;
  return true;
}

int BallotMatrix::block_count() const {
  int total = 0;
  for (const Ballot& w : cells_) total += w.block_count();
  return total;
}

std::pair<int, int> BallotMatrix::locate(int x) const {
  for (int i = 1; i <= m_; ++i)
    for (int j = i; j <= m_; ++j)
      if (at(i, j).underlying().contains(x)) return {i, j};
  throw std::out_of_range("BallotMatrix::locate: " + std::to_string(x) + " not present");
}

std::string to_string(const BallotMatrix& A) {
  std::ostringstream os;
  os << '[';
  for (int i = 1; i <= A.m(); ++i) {
    if (i > 1) os << " | ";
    for (int j = i; j <= A.m(); ++j) {
      if (j > i) os << ' ';
      os << (A.at(i, j).empty() ? "0" : to_string(A.at(i, j)));
    }
  }
  os << ']';
  return os.str();
}

int matrix_sign(const BallotMatrix& A) {
  return (A.block_count() + A.m()) % 2 == 0 ? 1 : -1;
}

// ------------------------------------------------------------ enumeration

void for_each_ballot_matrix(const IntSet& U,
                            const std::function<void(const BallotMatrix&)>& visit) {
  check_guard("ballot matrix ground set size", static_cast<long long>(U.size()), 4);
  const int n = static_cast<int>(U.size());
  if (n == 0) {
    visit(BallotMatrix());
    return;
  }

  for (int m = 1; m <= n; ++m) {
    std::vector<std::pair<int, int>> positions;
    for (int i = 1; i <= m; ++i)
      for (int j = i; j <= m; ++j) positions.emplace_back(i, j);
    const int cells = static_cast<int>(positions.size());

    std::vector<BallotMatrix> batch;
    std::vector<int> where(static_cast<std::size_t>(n), 0);  // cell of each element
    while (true) {
      std::vector<std::vector<int>> content(static_cast<std::size_t>(cells));
      std::vector<bool> row_used(static_cast<std::size_t>(m + 1), false);
      for (int e = 0; e < n; ++e) {
        content[static_cast<std::size_t>(where[static_cast<std::size_t>(e)])].push_back(U[static_cast<std::size_t>(e)]);
        row_used[static_cast<std::size_t>(positions[static_cast<std::size_t>(where[static_cast<std::size_t>(e)])].first)] = true;
      }
      if (std::all_of(row_used.begin() + 1, row_used.end(), [](bool b) { return b; })) {
        std::vector<std::vector<Ballot>> options;
        for (const auto& c : content) options.push_back(enumerate_ballots(IntSet(c)));
        std::vector<std::size_t> pick(options.size(), 0);
        while (true) {
          std::vector<std::vector<Ballot>> rows(static_cast<std::size_t>(m));
          for (int c = 0; c < cells; ++c)
            rows[static_cast<std::size_t>(positions[static_cast<std::size_t>(c)].first - 1)]
                .push_back(options[static_cast<std::size_t>(c)][pick[static_cast<std::size_t>(c)]]);
          batch.emplace_back(std::move(rows));
          std::size_t c = 0;
          while (c < pick.size() && ++pick[c] == options[c].size()) pick[c++] = 0;
          if (c == pick.size()) break;
        }
      }
      int e = 0;
      while (e < n && ++where[static_cast<std::size_t>(e)] == cells) where[static_cast<std::size_t>(e++)] = 0;
      if (e == n) break;
    }
    std::sort(batch.begin(), batch.end());
    for (const BallotMatrix& A : batch) visit(A);
  }
}

std::vector<BallotMatrix> enumerate_ballot_matrices(const IntSet& U) {
  std::vector<BallotMatrix> out;
  for_each_ballot_matrix(U, [&](const BallotMatrix& A) { out.push_back(A); });
  return out;
}

// -------------------------------------------------------------------- psi

namespace {

std::vector<std::pair<int, int>> scan_positions(const BallotMatrix& A, ScanOrder order) {
  std::vector<std::pair<int, int>> pos;
  for (int i = 1; i <= A.m(); ++i)
    for (int j = i; j <= A.m(); ++j)
      if (!A.at(i, j).empty()) pos.emplace_back(i, j);
  if (order == ScanOrder::kByMinimum) {
    std::sort(pos.begin(), pos.end(), [&](const auto& a, const auto& b) {
      return A.at(a.first, a.second).underlying().min() <
             A.at(b.first, b.second).underlying().min();
    });
  }
  return pos;
}

}  // namespace

BallotMatrix psi(const BallotMatrix& A, ScanOrder order) {
  for (auto [i, j] : scan_positions(A, order)) {
    const Ballot& w = A.at(i, j);
    if (is_increasing_singletons(w)) continue;
    BallotMatrix::Grid grid = A.to_grid();
    detail::cell(grid, i, j) = ballot_involution(w);
    return BallotMatrix::from_grid(grid);
  }
  return A;
}

bool is_psi_fixed(const BallotMatrix& A) {
  for (int i = 1; i <= A.m(); ++i)
    for (int j = i; j <= A.m(); ++j)
      if (!is_increasing_singletons(A.at(i, j))) return false;
  return true;
}

// ----------------------------------------------------------------- pivots

IntSet pivot_elements(const BallotMatrix& A) {
  if (!is_psi_fixed(A))
    throw std::invalid_argument("pivot_elements: matrix is not fixed by psi");
  IntSet pivots;
  for (int i = 1; i <= A.m(); ++i) {
    const IntSet row = A.row_elements(i);
    if (row.size() >= 2) {
      pivots.insert(row.min());
    } else if (i < A.m() && A.column_empty(i) && row.min() < A.row_elements(i + 1).min()) {
      pivots.insert(row.min());
    }
  }
  return pivots;
}

BallotMatrix phi(const BallotMatrix& A) {
  const IntSet pivots = pivot_elements(A);
  if (pivots.empty()) return A;
  const int x = pivots.min();
  const auto [i, j] = A.locate(x);
  BallotMatrix::Grid grid = A.to_grid();

  if (A.row_elements(i).size() >= 2) {
    // New row i holding {x} alone; x keeps its column, which the new
    // column i pushes to j+1.
    detail::cell(grid, i, j) = detail::without_element(detail::cell(grid, i, j), x);
    detail::insert_row_and_column(grid, i);
    detail::cell(grid, i, j + 1) = Ballot{IntSet{x}};
  } else {
    // Row i is {x} alone and column i is empty: fold x into row i+1.
    detail::cell(grid, i, j) = Ballot();
    detail::cell(grid, i + 1, j) = detail::with_front_singleton(detail::cell(grid, i + 1, j), x);
    detail::remove_row_and_column(grid, i);
  }
  return BallotMatrix::from_grid(grid);
}

BallotMatrix eta(const BallotMatrix& A, ScanOrder order) {
  BallotMatrix image = psi(A, order);
  if (image != A) return image;
  return phi(A);
}

// ------------------------------------------------------------ grid surgery

namespace detail {

void insert_row_and_column(BallotMatrix::Grid& grid, int i) {
  const auto at = static_cast<std::ptrdiff_t>(i - 1);
  for (auto& row : grid) row.insert(row.begin() + at, Ballot());
  const std::size_t width = grid.empty() ? 1 : grid.front().size();
  grid.insert(grid.begin() + at, std::vector<Ballot>(width));
}

void remove_row_and_column(BallotMatrix::Grid& grid, int i) {
  const auto at = static_cast<std::ptrdiff_t>(i - 1);
  for (const Ballot& w : grid[static_cast<std::size_t>(at)])
    if (!w.empty()) throw std::logic_error("remove_row_and_column: row not empty");
  grid.erase(grid.begin() + at);
  for (auto& row : grid) {
    if (!row[static_cast<std::size_t>(at)].empty())
      throw std::logic_error("remove_row_and_column: column not empty");
    row.erase(row.begin() + at);
  }
}

Ballot without_element(const Ballot& w, int x) {
  std::vector<IntSet> blocks;
  for (IntSet b : w.blocks()) {
    b.erase(x);
    if (!b.empty()) blocks.push_back(std::move(b));
  }
  return Ballot(std::move(blocks));
}

Ballot with_front_singleton(const Ballot& w, int x) {
  std::vector<IntSet> blocks = w.blocks();
  blocks.insert(blocks.begin(), IntSet{x});
  return Ballot(std::move(blocks));
}

Ballot with_back_singleton(const Ballot& w, int x) {
  std::vector<IntSet> blocks = w.blocks();
  blocks.push_back(IntSet{x});
  return Ballot(std::move(blocks));
}

}  // namespace detail

}  // namespace lio
