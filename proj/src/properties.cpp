#include "lio/properties.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "lio/ascents.hpp"
#include "lio/ballots.hpp"
#include "lio/counting.hpp"
#include "lio/fixedpoints.hpp"
#include "lio/matrices.hpp"
#include "lio/posets.hpp"

namespace lio {

namespace {

// Runs `check` on every item, sharded over `jobs` threads. An empty string
// means the item passed; otherwise the failure with the smallest index is
// reported.
template <typename T>
PropertyResult check_each(std::string name, const std::vector<T>& items, int jobs,
                          const std::function<std::string(const T&)>& check) {
  jobs = std::max(jobs, 1);
  std::vector<std::size_t> first_fail(static_cast<std::size_t>(jobs), items.size());
  std::vector<std::string> detail(static_cast<std::size_t>(jobs));
  std::vector<std::thread> threads;
  for (int w = 0; w < jobs; ++w) {
    threads.emplace_back([&, w] {
      for (std::size_t i = static_cast<std::size_t>(w); i < items.size(); i += static_cast<std::size_t>(jobs)) {
        std::string msg = check(items[i]);
        if (!msg.empty()) {
          first_fail[static_cast<std::size_t>(w)] = i;
          detail[static_cast<std::size_t>(w)] = std::move(msg);
          return;
        }
      }
    });
  }
  for (auto& t : threads) t.join();

  PropertyResult r{std::move(name), true, false, std::to_string(items.size()) + " cases"};
  std::size_t best = items.size();
  for (int w = 0; w < jobs; ++w)
    if (first_fail[static_cast<std::size_t>(w)] < best) {
      best = first_fail[static_cast<std::size_t>(w)];
      r.passed = false;
      r.detail = detail[static_cast<std::size_t>(w)];
    }
  return r;
}

PropertyResult expect(std::string name, bool ok, const std::string& detail) {
  return {std::move(name), ok, false, detail};
}

PropertyResult skipped(std::string name, const std::string& why) {
  return {std::move(name), true, true, why};
}

template <typename A, typename B>
PropertyResult expect_equal(std::string name, const A& got, const B& want) {
  std::ostringstream os;
  os << got << (got == want ? " == " : " != ") << want;
  return expect(std::move(name), got == want, os.str());
}

std::vector<IntSet> subsets_of_range(int n) {
  std::vector<IntSet> out;
  const unsigned long long size = n <= 1 ? 1ULL : 1ULL << (n - 1);
  for (unsigned long long mask = 0; mask < size; ++mask) out.push_back(IntSet::from_mask(mask));
  return out;
}

}  // namespace

// ------------------------------------------------------------ involution

std::vector<PropertyResult> verify_involution(int n, int jobs) {
  check_guard("verify involution n", n, 7);
  std::vector<PropertyResult> out;
  const IntSet U = IntSet::range(n);

  const std::vector<Ballot> ballots = enumerate_ballots(U);
  out.push_back(check_each<Ballot>("ballot involution is a sign-reversing involution", ballots, jobs,
                                   [](const Ballot& w) -> std::string {
                                     const Ballot v = ballot_involution(w);
                                     if (ballot_involution(v) != w) return "not involutive at " + to_string(w);
                                     if (v == w && !is_increasing_singletons(w)) return "extra fixed point " + to_string(w);
                                     if (v != w && ballot_sign(v) == ballot_sign(w)) return "sign kept at " + to_string(w);
                                     return {};
                                   }));
  long signed_sum = 0;
  for (const Ballot& w : ballots) signed_sum += ballot_sign(w);
  out.push_back(expect_equal("signed ballot count is (-1)^n", signed_sum, n % 2 == 0 ? 1L : -1L));

  if (n > 4) {
    out.push_back(skipped("ballot matrix involutions", "BalMat enumeration limited to n <= 4"));
    return out;
  }
  const std::vector<BallotMatrix> all = enumerate_ballot_matrices(U);
  out.push_back(check_each<BallotMatrix>("psi is an involution", all, jobs, [](const BallotMatrix& A) -> std::string {
    return psi(psi(A)) == A ? "" : "psi(psi(A)) != A for " + to_string(A);
  }));
  out.push_back(check_each<BallotMatrix>("phi is a sign-reversing involution on psi-fixed matrices", all, jobs,
                                         [](const BallotMatrix& A) -> std::string {
                                           if (!is_psi_fixed(A)) return {};
                                           const BallotMatrix B = phi(A);
                                           if (phi(B) != A) return "phi(phi(A)) != A for " + to_string(A);
                                           if (B != A && matrix_sign(B) == matrix_sign(A)) return "sign kept at " + to_string(A);
                                           return {};
                                         }));
  out.push_back(check_each<BallotMatrix>("eta is a sign-reversing involution", all, jobs,
                                         [](const BallotMatrix& A) -> std::string {
                                           const BallotMatrix B = eta(A);
                                           if (eta(B) != A) return "eta(eta(A)) != A for " + to_string(A);
                                           if (B != A && matrix_sign(B) == matrix_sign(A)) return "sign kept at " + to_string(A);
                                           return {};
                                         }));
  out.push_back(check_each<BallotMatrix>("eta-fixed matrices are positive", all, jobs,
                                         [](const BallotMatrix& A) -> std::string {
                                           if (eta(A) == A && matrix_sign(A) != 1) return "negative fixed point " + to_string(A);
                                           return {};
                                         }));
  out.push_back(check_each<BallotMatrix>("eta fixed points match the structural description", all, jobs,
                                         [](const BallotMatrix& A) -> std::string {
                                           return (eta(A) == A) == has_fixed_point_shape(A) ? "" : "mismatch at " + to_string(A);
                                         }));
  out.push_back(check_each<BallotMatrix>("fixed points do not depend on the psi scan order", all, jobs,
                                         [](const BallotMatrix& A) -> std::string {
                                           const BallotMatrix B = eta(A, ScanOrder::kByMinimum);
                                           if (eta(B, ScanOrder::kByMinimum) != A) return "by-minimum eta not involutive at " + to_string(A);
                                           return (B == A) == (eta(A) == A) ? "" : "fixed sets differ at " + to_string(A);
                                         }));
  long matrix_sum = 0;
  for (const BallotMatrix& A : all) matrix_sum += matrix_sign(A);
  out.push_back(expect_equal("signed ballot matrix count equals count_lio", BigCount(matrix_sum), count_lio(n)));
  return out;
}

// ---------------------------------------------------------- preservation

std::vector<PropertyResult> verify_preservation(int n, int jobs) {
  check_guard("verify preservation n", n, 4);
  std::vector<PropertyResult> out;
  const std::vector<BallotMatrix> all = enumerate_ballot_matrices(IntSet::range(n));

  out.push_back(check_each<BallotMatrix>("eta preserves the induced poset", all, jobs, [](const BallotMatrix& A) -> std::string {
    return poset_of(eta(A)) == poset_of(A) ? "" : "poset changed at " + to_string(A);
  }));
  out.push_back(check_each<BallotMatrix>("induced posets are interval orders", all, jobs, [](const BallotMatrix& A) -> std::string {
    const Poset P = poset_of(A);
    return is_interval_order(P) && is_two_plus_two_free(P) ? "" : "not an interval order: " + to_string(A);
  }));

  std::map<Poset, int> fixed_per_fiber;
  for (const BallotMatrix& A : all) {
    int& slot = fixed_per_fiber[poset_of(A)];
    if (is_fixed_point(A)) ++slot;
  }
  const std::vector<Poset> oracle = enumerate_labeled_interval_orders(n);
  bool surjective = std::all_of(oracle.begin(), oracle.end(), [&](const Poset& P) { return fixed_per_fiber.count(P) > 0; });
  out.push_back(expect("every interval order is induced", surjective, std::to_string(oracle.size()) + " interval orders"));
  out.push_back(expect_equal("fiber count equals interval-order count", fixed_per_fiber.size(), oracle.size()));
  bool unique = std::all_of(fixed_per_fiber.begin(), fixed_per_fiber.end(), [](const auto& kv) { return kv.second == 1; });
  out.push_back(expect("each fiber holds exactly one eta-fixed matrix", unique, std::to_string(fixed_per_fiber.size()) + " fibers"));
  return out;
}

// ------------------------------------------------------------ bijections

std::vector<PropertyResult> verify_bijections(int n, int jobs) {
  check_guard("verify bijections n", n, 7);
  std::vector<PropertyResult> out;
  const std::vector<Permutation> perms = all_permutations(n);
  const std::vector<InversionTable> tables = all_inversion_tables(n);

  out.push_back(check_each<Permutation>("permutation <-> inversion table round trip", perms, jobs, [](const Permutation& p) -> std::string {
    return to_permutation(to_inversion_table(p)) == p ? "" : "fails at " + to_string(p);
  }));
  {
    std::set<InversionTable> images;
    for (const Permutation& p : perms) images.insert(to_inversion_table(p));
    out.push_back(expect_equal("inversion table map is onto IT_n", images.size(), tables.size()));
  }

  const std::vector<IntSet> subsets = subsets_of_range(n);
  out.push_back(check_each<IntSet>("construction choices <-> permutations", subsets, jobs, [&](const IntSet& S) -> std::string {
    const auto ccs = construction_choices(n, S);
    if (BigCount(static_cast<unsigned long>(ccs.size())) != kappa(n, S)) return "|CC| != kappa for S=" + to_string(S);
    std::set<Permutation> image;
    for (const auto& c : ccs) {
      const Permutation p = cc_to_perm(c);
      if (!ascent_bottom_set(p).is_subset_of(S)) return "ascent bottom outside S for " + to_string(p);
      if (perm_to_cc(p, S) != c) return "round trip fails at " + to_string(p);
      for (std::size_t r = 1; r <= S.size(); ++r) {
        const bool used = std::count(c.digits().begin(), c.digits().end(), static_cast<int>(r)) > 0;
        if (used != ascent_bottom_set(p).contains(S[r - 1])) return "digit/ascent-bottom mismatch at " + to_string(p);
      }
      image.insert(p);
    }
    const auto expected = std::count_if(perms.begin(), perms.end(), [&](const Permutation& p) { return ascent_bottom_set(p).is_subset_of(S); });
    return static_cast<long>(image.size()) == expected ? "" : "image size mismatch for S=" + to_string(S);
  }));
  out.push_back(check_each<IntSet>("construction choices <-> tables with entries in {0} u S", subsets, jobs, [&](const IntSet& S) -> std::string {
    IntSet allowed = S;
    allowed.insert(0);
    std::set<InversionTable> image;
    BigCount exact = 0;
    for (const auto& c : construction_choices(n, S)) {
      const InversionTable t = cc_to_invtab_subset(c);
      if (!dent(t).is_subset_of(allowed)) return "entry outside {0} u S: " + to_string(t);
      if (invtab_subset_to_cc(t, S) != c) return "round trip fails at " + to_string(t);
      if (dent(t).set_union(IntSet{0}) == allowed) ++exact;
      image.insert(t);
    }
    const auto expected = std::count_if(tables.begin(), tables.end(), [&](const InversionTable& t) { return dent(t).is_subset_of(allowed); });
    if (static_cast<long>(image.size()) != expected) return "image size mismatch for S=" + to_string(S);
    return exact == lambda(n, S) ? "" : "exact-entry count != lambda for S=" + to_string(S);
  }));
  out.push_back(check_each<IntSet>("construction choices <-> ballots with prescribed block minima", subsets, jobs, [&](const IntSet& S) -> std::string {
    IntSet mins{1};
    for (int s : S) mins.insert(s + 1);
    std::set<Ballot> image;
    for (const auto& c : construction_choices(n, S)) {
      const Ballot w = cc_to_ballot(c);
      IntSet got;
      for (const IntSet& b : w.blocks()) got.insert(b.min());
      if (n > 0 && got != mins) return "wrong block minima in " + to_string(w);
      if (ballot_to_cc(w, S) != c) return "round trip fails at " + to_string(w);
      if (perm_to_ballot_decreasing(ballot_to_perm_decreasing(w), S) != w) return "decreasing reading fails at " + to_string(w);
      image.insert(w);
    }
    return BigCount(static_cast<unsigned long>(image.size())) == kappa(n, S) ? "" : "ballot image size mismatch for S=" + to_string(S);
  }));
  out.push_back(check_each<IntSet>("construction choices <-> tables with missing entries in n - S", subsets, jobs, [&](const IntSet& S) -> std::string {
    IntSet allowed;
    for (int s : S) allowed.insert(n - s);
    std::set<InversionTable> image;
    for (const auto& c : construction_choices(n, S)) {
      const InversionTable t = cc_to_invtab_missing(c);
      if (!missing_entries(t).is_subset_of(allowed)) return "missing entries outside n - S: " + to_string(t);
      if (invtab_missing_to_cc(t, S) != c) return "round trip fails at " + to_string(t);
      image.insert(t);
    }
    const auto expected = std::count_if(tables.begin(), tables.end(), [&](const InversionTable& t) { return missing_entries(t).is_subset_of(allowed); });
    return static_cast<long>(image.size()) == expected ? "" : "image size mismatch for S=" + to_string(S);
  }));

  if (n > 6) {
    out.push_back(skipped("fixed-point decomposition", "fixed point enumeration limited to n <= 6"));
    return out;
  }
  const std::vector<FixedPointMatrix> fps = fixed_points_for(IntSet::range(n));
  out.push_back(check_each<FixedPointMatrix>("fixed points decompose and recompose", fps, jobs, [](const FixedPointMatrix& F) -> std::string {
    if (!has_fixed_point_shape(F.matrix())) return "shape check fails at " + to_string(F.matrix());
    return compose(decompose(F)) == F ? "" : "compose(decompose) fails at " + to_string(F.matrix());
  }));
  {
    std::set<PermTablePair> pairs;
    for (const auto& F : fps) pairs.insert(decompose(F));
    BigCount pairable = 0;
    for (const Permutation& p : perms) pairable += static_cast<unsigned long>(bk_class(p).size());
    out.push_back(expect("decomposition is injective onto compatible pairs",
                         pairs.size() == fps.size() && BigCount(static_cast<unsigned long>(fps.size())) == pairable,
                         std::to_string(fps.size()) + " fixed points"));
  }

  if (n > 4) {
    out.push_back(skipped("rho chain and slow fixed-point cross-check", "ballot matrix enumeration limited to n <= 4"));
    return out;
  }
  const std::vector<BallotMatrix> all = enumerate_ballot_matrices(IntSet::range(n));
  {
    std::vector<BallotMatrix> filtered;
    for (const auto& A : all)
      if (is_fixed_point(A)) filtered.push_back(A);
    std::vector<BallotMatrix> generated;
    for (const auto& F : fps) generated.push_back(F.matrix());
    std::sort(generated.begin(), generated.end());
    out.push_back(expect("generated fixed points equal filtered enumeration", filtered == generated,
                         std::to_string(filtered.size()) + " vs " + std::to_string(generated.size())));
  }
  std::vector<BallotMatrix> compositions;
  for (const auto& A : all)
    if (is_composition_matrix(A)) compositions.push_back(A);
  {
    std::set<BallotMatrix> reached;
    std::string failure;
    for (const auto& C : compositions) {
      const BallotMatrix F = rho_closure(C);
      if (!is_fixed_point(F)) { failure = "rho closure not fixed from " + to_string(C); break; }
      if (poset_of(F) != poset_of(C)) { failure = "rho changes the poset of " + to_string(C); break; }
      if (rho_inverse_closure(F) != C) { failure = "rho inverse does not return to " + to_string(C); break; }
      reached.insert(F);
    }
    if (failure.empty() && reached.size() != fps.size())
      failure = std::to_string(reached.size()) + " fixed points reached, " + std::to_string(fps.size()) + " exist";
    out.push_back(expect("rho chain: composition matrices <-> fixed points", failure.empty(),
                         failure.empty() ? std::to_string(compositions.size()) + " composition matrices" : failure));
  }
  out.push_back(check_each<FixedPointMatrix>("rho inverse chain ends at a composition matrix", fps, jobs, [](const FixedPointMatrix& F) -> std::string {
    const BallotMatrix C = rho_inverse_closure(F.matrix());
    if (!is_composition_matrix(C)) return "not a composition matrix from " + to_string(F.matrix());
    if (poset_of(C) != poset_of(F.matrix())) return "poset changed from " + to_string(F.matrix());
    return rho_closure(C) == F.matrix() ? "" : "rho does not return to " + to_string(F.matrix());
  }));
  return out;
}

// ---------------------------------------------------------------- counts

std::vector<PropertyResult> verify_counts(int n, int jobs) {
  check_guard("verify counts n", n, 7);
  std::vector<PropertyResult> out;
  const BigCount lio = count_lio(n, jobs);

  out.push_back(expect_equal("sum beta*kappa == sum alpha*lambda", count_lio_alpha_lambda(n), lio));
  out.push_back(expect_equal("pairs A(t) in D(p) == count_lio", count_pairs_ab_in_d(n), lio));
  out.push_back(expect_equal("pairs D(p) in A(t) == count_lio", count_pairs_d_in_ab(n), lio));
  if (n <= 6)
    out.push_back(expect_equal("eta-fixed matrices == count_lio",
                               BigCount(static_cast<unsigned long>(fixed_points_for(IntSet::range(n)).size())), lio));
  else
    out.push_back(skipped("eta-fixed matrices == count_lio", "fixed point enumeration limited to n <= 6"));
  if (n <= 5)
    out.push_back(expect_equal("poset oracle == count_lio",
                               BigCount(static_cast<unsigned long>(enumerate_labeled_interval_orders(n).size())), lio));
  else
    out.push_back(skipped("poset oracle == count_lio", "oracle limited to n <= 5"));

  const std::vector<Permutation> perms = all_permutations(n);
  const std::vector<IntSet> subsets = subsets_of_range(n);
  out.push_back(check_each<IntSet>("alpha, beta, kappa, lambda match S_n filtering", subsets, jobs, [&](const IntSet& S) -> std::string {
    long a = 0, b = 0, k = 0, l = 0;
    for (const Permutation& p : perms) {
      const IntSet d = descent_set(p), ab = ascent_bottom_set(p);
      a += d.is_subset_of(S);
      b += d == S;
      k += ab.is_subset_of(S);
      l += ab == S;
    }
    if (alpha(n, S) != a) return "alpha mismatch at S=" + to_string(S);
    if (beta(n, S) != b || beta_sieve(n, S) != b || determinant(beta_matrix(n, S)) != b) return "beta mismatch at S=" + to_string(S);
    if (kappa(n, S) != k) return "kappa mismatch at S=" + to_string(S);
    if (lambda(n, S) != l) return "lambda mismatch at S=" + to_string(S);
    return {};
  }));
  BigCount beta_total = 0, factorial = 1;
  for (const IntSet& S : subsets) beta_total += beta(n, S);
  for (int i = 2; i <= n; ++i) factorial *= i;
  out.push_back(expect_equal("sum of beta over S equals n!", beta_total, factorial));

  if (n <= 3) {
    long matrix_sum = 0;
    for_each_ballot_matrix(IntSet::range(n), [&](const BallotMatrix& A) { matrix_sum += matrix_sign(A); });
    out.push_back(expect_equal("signed ballot matrix count == count_lio", BigCount(matrix_sum), lio));
  } else {
    out.push_back(skipped("signed ballot matrix count == count_lio", "checked for n <= 3"));
  }
  return out;
}

}  // namespace lio
