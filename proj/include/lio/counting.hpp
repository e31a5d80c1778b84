#pragma once

#include <gmpxx.h>

#include <vector>

#include "lio/core.hpp"

namespace lio {

// Exact non-negative counts.
using BigCount = mpz_class;

// Zero unless 0 <= k <= n.
BigCount binomial(long n, long k);
BigCount multinomial(const std::vector<long>& parts);

// Fraction-free Gaussian elimination; the matrix must be square.
BigCount determinant(std::vector<std::vector<BigCount>> matrix);

// [ binom(n - s_i, s_{j+1} - s_i) ] for i, j in [0, k], s_0 = 0, s_{k+1} = n.
std::vector<std::vector<BigCount>> beta_matrix(int n, const IntSet& S);

// |{ p in S_n : D(p) within S }|, a multinomial in the gaps of S.
BigCount alpha(int n, const IntSet& S);
// |{ p in S_n : D(p) = S }|, the determinant of beta_matrix. The matrix is
// upper Hessenberg with unit subdiagonal, so the determinant is expanded
// along the last column without division.
BigCount beta(int n, const IntSet& S);
// Inclusion-exclusion over alpha.
BigCount beta_sieve(int n, const IntSet& S);
// |{ p in S_n : A(p) within S }| = prod_{r=1}^{k+1} r^(s_r - s_{r-1}).
BigCount kappa(int n, const IntSet& S);
// |{ p in S_n : A(p) = S }|, inclusion-exclusion over kappa.
BigCount lambda(int n, const IntSet& S);

// Number of labeled interval orders on [n] as sum_S beta_n(S) kappa_n(S).
// The subsets are walked depth-first so determinant prefixes are shared;
// `jobs` worker threads split the walk. Guard: n <= 24.
BigCount count_lio(int n, int jobs = 1);
// The same count as sum_S alpha_n(S) lambda_n(S), with all lambda values
// obtained by one Moebius transform of kappa. Guard: n <= 22.
BigCount count_lio_alpha_lambda(int n);

// |{ (p, t) in S_n x S_n : A(t) within D(p) }|. Brute force over all pairs
// for n <= 7, sum beta kappa above that.
BigCount count_pairs_ab_in_d(int n);
// |{ (p, t) in S_n x S_n : D(p) within A(t) }|. Brute force over all pairs
// for n <= 7, sum alpha lambda above that.
BigCount count_pairs_d_in_ab(int n);

}  // namespace lio
