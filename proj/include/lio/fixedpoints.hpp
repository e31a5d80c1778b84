#pragma once

#include <utility>
#include <vector>

#include "lio/core.hpp"
#include "lio/matrices.hpp"

namespace lio {

// psi fixes A and A has no pivot elements.
bool is_fixed_point(const BallotMatrix& A);

// The structural description of eta-fixed matrices: one element per row,
// and an ascent between rows i and i+1 forces column i to be non-empty.
// Checked directly, without psi or pivots.
bool has_fixed_point_shape(const BallotMatrix& A);

// A ballot matrix fixed by eta.
class FixedPointMatrix {
 public:
  // Throws std::invalid_argument unless is_fixed_point(A).
  explicit FixedPointMatrix(BallotMatrix A);

  const BallotMatrix& matrix() const { return A_; }

  friend bool operator==(const FixedPointMatrix&, const FixedPointMatrix&) = default;
  friend auto operator<=>(const FixedPointMatrix&, const FixedPointMatrix&) = default;

 private:
  BallotMatrix A_;
};

// Reading of a fixed point on [n]: a_i is the element on row i, b_i is n
// minus its column.
struct PermTablePair {
  Permutation perm;
  InversionTable invtab;

  friend bool operator==(const PermTablePair&, const PermTablePair&) = default;
  friend auto operator<=>(const PermTablePair&, const PermTablePair&) = default;
};

// Requires underlying set [n].
PermTablePair decompose(const FixedPointMatrix& A);
// Inverse of decompose; throws std::invalid_argument when the pair is not
// compatible (see bk_class).
FixedPointMatrix compose(const PermTablePair& pair);

// Matrix whose entries all have the form {a_1}{a_2}...{a_j}, increasing,
// with no empty row and no empty column.
bool is_composition_matrix(const BallotMatrix& A);

class CompositionMatrix {
 public:
  explicit CompositionMatrix(BallotMatrix A);
  const BallotMatrix& matrix() const { return A_; }

  friend bool operator==(const CompositionMatrix&, const CompositionMatrix&) = default;
  friend auto operator<=>(const CompositionMatrix&, const CompositionMatrix&) = default;

 private:
  BallotMatrix A_;
};

// U minus the row minima.
IntSet rho_candidates(const BallotMatrix& A);
// Row minima u_i (i < m) with column i empty, u_i alone on row i and
// u_i > u_{i+1}.
IntSet rho_inverse_candidates(const BallotMatrix& A);

// Moves x (not a row minimum) out of its ballot into a new row inserted
// above its row, as a singleton in its own column, with a new empty column
// at the index of the new row.
BallotMatrix rho_move(const BallotMatrix& A, int x);
// Folds the lone element x of row i into the end of the ballot below it at
// (i+1, column of x), then deletes row and column i.
BallotMatrix rho_inverse_move(const BallotMatrix& A, int x);

// rho_move of the largest candidate. Throws std::invalid_argument when
// there is none.
BallotMatrix rho(const BallotMatrix& A);
// rho_inverse_move of the smallest candidate. Throws std::invalid_argument
// when there is none.
BallotMatrix rho_inverse(const BallotMatrix& A);

// Applies rho until no candidate remains.
BallotMatrix rho_closure(const BallotMatrix& A);
// Applies rho_inverse until no candidate remains.
BallotMatrix rho_inverse_closure(const BallotMatrix& A);

// Every eta-fixed matrix on U exactly once, generated from compatible
// (permutation, inversion table) pairs and relabeled onto U. Ordered by
// permutation then table. Guard: |U| <= 6.
std::vector<FixedPointMatrix> fixed_points_for(const IntSet& U);

// Inversion tables pairable with p: missing entries within
// { n - s : s in D(p) }.
std::vector<InversionTable> bk_class(const Permutation& p);
// Permutations pairable with t: every ascent position i has n - i in
// dent(t). Reversal takes them onto the permutations whose descent set
// lies within dent(t) \ {0}.
std::vector<Permutation> al_class(const InversionTable& t);

}  // namespace lio
