#include "lio/fixedpoints.hpp"

#include <stdexcept>

#include "grid_ops.hpp"

namespace lio {

bool is_fixed_point(const BallotMatrix& A) {
  return is_psi_fixed(A) && pivot_elements(A).empty();
}

bool has_fixed_point_shape(const BallotMatrix& A) {
  std::vector<int> row_element;
  for (int i = 1; i <= A.m(); ++i) {
    const IntSet row = A.row_elements(i);
    if (row.size() != 1) return false;
    row_element.push_back(row.min());
  }
  for (int i = 1; i < A.m(); ++i)
    if (row_element[static_cast<std::size_t>(i - 1)] < row_element[static_cast<std::size_t>(i)] &&
        A.column_empty(i))
      return false;
  return true;
}

FixedPointMatrix::FixedPointMatrix(BallotMatrix A) : A_(std::move(A)) {
  if (!is_fixed_point(A_)) throw std::invalid_argument("FixedPointMatrix: matrix is not fixed by eta");
}

PermTablePair decompose(const FixedPointMatrix& F) {
  const BallotMatrix& A = F.matrix();
  const int n = A.m();
  if (A.underlying() != IntSet::range(n))
    throw std::invalid_argument("decompose: underlying set must be [n]");
  std::vector<int> perm, table;
  for (int i = 1; i <= n; ++i) {
    const int x = A.row_elements(i).min();
    perm.push_back(x);
    table.push_back(n - A.locate(x).second);
  }
  return {Permutation(std::move(perm)), InversionTable(std::move(table))};
}

FixedPointMatrix compose(const PermTablePair& pair) {
  const int n = pair.perm.size();
  if (pair.invtab.size() != n)
    throw std::invalid_argument("compose: permutation and table lengths differ");
  BallotMatrix::Grid grid(static_cast<std::size_t>(n), std::vector<Ballot>(static_cast<std::size_t>(n)));
  for (int i = 1; i <= n; ++i)
    detail::cell(grid, i, n - pair.invtab.at(i)) = Ballot{IntSet{pair.perm.at(i)}};
  return FixedPointMatrix(BallotMatrix::from_grid(grid));
}

bool is_composition_matrix(const BallotMatrix& A) {
  if (!is_psi_fixed(A)) return false;
  for (int j = 1; j <= A.m(); ++j)
    if (A.column_empty(j)) return false;
  return true;  // rows are non-empty in every BallotMatrix
}

CompositionMatrix::CompositionMatrix(BallotMatrix A) : A_(std::move(A)) {
  if (!is_composition_matrix(A_)) throw std::invalid_argument("CompositionMatrix: invalid matrix");
}

// -------------------------------------------------------------------- rho

namespace {

std::vector<int> row_minima(const BallotMatrix& A) {
  std::vector<int> u;
  for (int i = 1; i <= A.m(); ++i) u.push_back(A.row_elements(i).min());
  return u;
}

}  // namespace

IntSet rho_candidates(const BallotMatrix& A) {
  return A.underlying().set_difference(IntSet(row_minima(A)));
}

IntSet rho_inverse_candidates(const BallotMatrix& A) {
  const std::vector<int> u = row_minima(A);
  IntSet out;
  for (int i = 1; i < A.m(); ++i) {
    const int ui = u[static_cast<std::size_t>(i - 1)];
    if (A.column_empty(i) && A.row_elements(i).size() == 1 && ui > u[static_cast<std::size_t>(i)])
      out.insert(ui);
  }
  return out;
}

BallotMatrix rho_move(const BallotMatrix& A, int x) {
  if (!rho_candidates(A).contains(x))
    throw std::invalid_argument("rho_move: " + std::to_string(x) + " is absent or a row minimum");
  const auto [i, j] = A.locate(x);
  BallotMatrix::Grid grid = A.to_grid();
  detail::cell(grid, i, j) = detail::without_element(detail::cell(grid, i, j), x);
  detail::insert_row_and_column(grid, i);
  detail::cell(grid, i, j + 1) = Ballot{IntSet{x}};
  return BallotMatrix::from_grid(grid);
}

BallotMatrix rho_inverse_move(const BallotMatrix& A, int x) {
  if (!rho_inverse_candidates(A).contains(x))
    throw std::invalid_argument("rho_inverse_move: " + std::to_string(x) + " is not a candidate");
  const auto [i, j] = A.locate(x);
  BallotMatrix::Grid grid = A.to_grid();
  detail::cell(grid, i, j) = Ballot();
  detail::cell(grid, i + 1, j) = detail::with_back_singleton(detail::cell(grid, i + 1, j), x);
  detail::remove_row_and_column(grid, i);
  return BallotMatrix::from_grid(grid);
}

BallotMatrix rho(const BallotMatrix& A) {
  const IntSet g = rho_candidates(A);
  if (g.empty()) throw std::invalid_argument("rho: every element is a row minimum");
  return rho_move(A, g.max());
}

BallotMatrix rho_inverse(const BallotMatrix& A) {
  const IntSet h = rho_inverse_candidates(A);
  if (h.empty()) throw std::invalid_argument("rho_inverse: no candidate row");
  return rho_inverse_move(A, h.min());
}

BallotMatrix rho_closure(const BallotMatrix& A) {
  BallotMatrix B = A;
  while (!rho_candidates(B).empty()) B = rho(B);
  return B;
}

BallotMatrix rho_inverse_closure(const BallotMatrix& A) {
  BallotMatrix B = A;
  while (!rho_inverse_candidates(B).empty()) B = rho_inverse(B);
  return B;
}

// ------------------------------------------------------------ enumeration

std::vector<InversionTable> bk_class(const Permutation& p) {
  const int n = p.size();
  IntSet allowed_missing;
  for (int s : descent_set(p)) allowed_missing.insert(n - s);
  std::vector<InversionTable> out;
  for (const InversionTable& t : all_inversion_tables(n))
    if (missing_entries(t).is_subset_of(allowed_missing)) out.push_back(t);
  return out;
}

std::vector<Permutation> al_class(const InversionTable& t) {
  const int n = t.size();
  const IntSet d = dent(t);
  std::vector<Permutation> out;
  for (const Permutation& p : all_permutations(n)) {
    bool ok = true;
    for (int i = 1; i < n && ok; ++i)
      if (p.at(i) < p.at(i + 1) && !d.contains(n - i)) ok = false;
    if (ok) out.push_back(p);
  }
  return out;
}

std::vector<FixedPointMatrix> fixed_points_for(const IntSet& U) {
  const int n = static_cast<int>(U.size());
  check_guard("fixed point ground set size", n, 6);
  std::vector<FixedPointMatrix> out;
  for (const Permutation& p : all_permutations(n)) {
    for (const InversionTable& t : bk_class(p)) {
      std::vector<int> relabeled;
      for (int v : p.word()) relabeled.push_back(U[static_cast<std::size_t>(v - 1)]);
      BallotMatrix::Grid grid(static_cast<std::size_t>(n), std::vector<Ballot>(static_cast<std::size_t>(n)));
      for (int i = 1; i <= n; ++i)
        detail::cell(grid, i, n - t.at(i)) = Ballot{IntSet{relabeled[static_cast<std::size_t>(i - 1)]}};
      out.emplace_back(BallotMatrix::from_grid(grid));
    }
  }
  return out;
}

}  // namespace lio
