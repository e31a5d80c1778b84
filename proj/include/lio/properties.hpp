#pragma once

// Exhaustive property suites behind `lio verify`.

#include <string>
#include <vector>

namespace lio {

struct PropertyResult {
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::string detail;  // first counterexample, or a short summary
};

// Ballot involution on [n] (n <= 7), and psi, phi, eta on BalMat[n]
// (n <= 4): involutive, sign-reversing, positive fixed points.
std::vector<PropertyResult> verify_involution(int n, int jobs = 1);

// poset_of is preserved by eta, lands in interval orders, hits every
// interval order, and each fiber holds one eta-fixed matrix. Guard n <= 4.
std::vector<PropertyResult> verify_preservation(int n, int jobs = 1);

// Permutation/inversion-table round trips, the construction-choice
// bijections for every S within [n-1], fixed-point decomposition and the
// rho chain. Guard n <= 7 (rho chain and slow cross-checks only for n <= 4).
std::vector<PropertyResult> verify_bijections(int n, int jobs = 1);

// The interval-order count by every available route, and alpha, beta,
// kappa, lambda against filtering S_n. Guard n <= 7 (poset oracle only for
// n <= 5).
std::vector<PropertyResult> verify_counts(int n, int jobs = 1);

}  // namespace lio
