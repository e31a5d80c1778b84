#include "lio/counting.hpp"

#include <stdexcept>
#include <thread>

namespace lio {

namespace {

void check_set(int n, const IntSet& S) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  if (!S.is_subset_of(IntSet::range(n - 1)))
    throw std::invalid_argument("S = " + to_string(S) + " is not a subset of [n-1]");
}

// s_0 = 0, s_1, ..., s_k, s_{k+1} = n
std::vector<int> padded(int n, const IntSet& S) {
  std::vector<int> s{0};
  s.insert(s.end(), S.begin(), S.end());
  s.push_back(n);
  return s;
}

BigCount power(long base, unsigned long exp) {
  BigCount r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exp);
  return r;
}

}  // namespace

BigCount binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigCount r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigCount multinomial(const std::vector<long>& parts) {
  BigCount r = 1;
  long total = 0;
  for (long p : parts) {
    if (p < 0) return 0;
    total += p;
    r *= binomial(total, p);
  }
  return r;
}

BigCount determinant(std::vector<std::vector<BigCount>> a) {
  const std::size_t k = a.size();
  for (const auto& row : a)
    if (row.size() != k) throw std::invalid_argument("determinant: matrix is not square");
  if (k == 0) return 1;

  int sign = 1;
  BigCount prev = 1;
  for (std::size_t p = 0; p + 1 < k; ++p) {
    if (a[p][p] == 0) {
      std::size_t r = p + 1;
      while (r < k && a[r][p] == 0) ++r;
      if (r == k) return 0;
      std::swap(a[p], a[r]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < k; ++i) {
      for (std::size_t j = p + 1; j < k; ++j) {
        a[i][j] = a[i][j] * a[p][p] - a[i][p] * a[p][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[p][p];
  }
  return sign * a[k - 1][k - 1];
}

std::vector<std::vector<BigCount>> beta_matrix(int n, const IntSet& S) {
  check_set(n, S);
  const std::vector<int> s = padded(n, S);
  const std::size_t k1 = S.size() + 1;
  std::vector<std::vector<BigCount>> m(k1, std::vector<BigCount>(k1));
  for (std::size_t i = 0; i < k1; ++i)
    for (std::size_t j = 0; j < k1; ++j) m[i][j] = binomial(n - s[i], s[j + 1] - s[i]);
  return m;
}

BigCount alpha(int n, const IntSet& S) {
  check_set(n, S);
  const std::vector<int> s = padded(n, S);
  std::vector<long> gaps;
  for (std::size_t r = 1; r < s.size(); ++r) gaps.push_back(s[r] - s[r - 1]);
  return multinomial(gaps);
}

BigCount beta(int n, const IntSet& S) {
  check_set(n, S);
  const std::vector<int> s = padded(n, S);
  const std::size_t k1 = S.size() + 1;
  // minors[r] is the leading r x r minor; minors[0] = 1.
  std::vector<BigCount> minors{1};
  for (std::size_t j = 0; j < k1; ++j) {
    BigCount d = 0;
    for (std::size_t r = 0; r <= j; ++r) {
      BigCount term = binomial(n - s[r], s[j + 1] - s[r]) * minors[r];
      if ((j - r) % 2 == 0) d += term; else d -= term;
    }
    minors.push_back(d);
  }
  return minors.back();
}

BigCount beta_sieve(int n, const IntSet& S) {
  check_set(n, S);
  check_guard("sieve set size", static_cast<long long>(S.size()), 30);
  const std::vector<int>& v = S.values();
  BigCount total = 0;
  for (unsigned long mask = 0; mask < (1UL << v.size()); ++mask) {
    IntSet T;
    for (std::size_t b = 0; b < v.size(); ++b)
      if ((mask >> b) & 1UL) T.insert(v[b]);
    if ((S.size() - T.size()) % 2 == 0) total += alpha(n, T); else total -= alpha(n, T);
  }
  return total;
}

BigCount kappa(int n, const IntSet& S) {
  check_set(n, S);
  const std::vector<int> s = padded(n, S);
  BigCount r = 1;
  for (std::size_t i = 1; i < s.size(); ++i) r *= power(static_cast<long>(i), static_cast<unsigned long>(s[i] - s[i - 1]));
  return r;
}

BigCount lambda(int n, const IntSet& S) {
  check_set(n, S);
  check_guard("sieve set size", static_cast<long long>(S.size()), 30);
  const std::vector<int>& v = S.values();
  BigCount total = 0;
  for (unsigned long mask = 0; mask < (1UL << v.size()); ++mask) {
    IntSet T;
    for (std::size_t b = 0; b < v.size(); ++b)
      if ((mask >> b) & 1UL) T.insert(v[b]);
    if ((S.size() - T.size()) % 2 == 0) total += kappa(n, T); else total -= kappa(n, T);
  }
  return total;
}

// ------------------------------------------------------------- count_lio

namespace {

// Depth-first walk over the subsets of [n-1]. Position p is either skipped
// or appended as the next s value; each append adds one leading minor of
// the beta matrix and one factor of the kappa product.
class BetaKappaWalk {
 public:
  BetaKappaWalk(int n, int split, int jobs, int worker)
      : n_(n), split_(split), jobs_(jobs), worker_(worker) {
    binom_.assign(static_cast<std::size_t>(n + 1), std::vector<BigCount>(static_cast<std::size_t>(n + 1)));
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= a; ++b) binom_[a][b] = binomial(a, b);
    s_.push_back(0);
    minors_.emplace_back(1);
    kappa_.emplace_back(1);
  }

  BigCount run() {
    visit(1, 0);
    return total_;
  }

 private:
  BigCount binom(int a, int b) const {
    if (a < 0 || b < 0 || b > a) return 0;
    return binom_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }

  // Leading minor obtained when `next` becomes s_{j+1}, j = s_.size() - 1.
  BigCount next_minor(int next) const {
    const std::size_t j = s_.size() - 1;
    BigCount d = 0;
    for (std::size_t r = 0; r <= j; ++r) {
      const BigCount term = binom(n_ - s_[r], next - s_[r]) * minors_[r];
      if ((j - r) % 2 == 0) d += term; else d -= term;
    }
    return d;
  }

  BigCount next_kappa(int next) const {
    return kappa_.back() * power(static_cast<long>(s_.size()), static_cast<unsigned long>(next - s_.back()));
  }

  void visit(int p, unsigned long pattern) {
    if (p == split_ + 1 && static_cast<int>(pattern % static_cast<unsigned long>(jobs_)) != worker_) return;
    if (p >= n_) {
      total_ += next_minor(n_) * next_kappa(n_);
      return;
    }
    visit(p + 1, pattern << 1);
    minors_.push_back(next_minor(p));
    kappa_.push_back(next_kappa(p));
    s_.push_back(p);
    visit(p + 1, (pattern << 1) | 1UL);
    s_.pop_back();
    kappa_.pop_back();
    minors_.pop_back();
  }

  int n_, split_, jobs_, worker_;
  std::vector<std::vector<BigCount>> binom_;
  std::vector<int> s_;
  std::vector<BigCount> minors_;
  std::vector<BigCount> kappa_;
  BigCount total_ = 0;
};

}  // namespace

BigCount count_lio(int n, int jobs) {
  if (n < 0) throw std::invalid_argument("count_lio: n must be non-negative");
  check_guard("count_lio n", n, 24);
  if (n == 0) return 1;
  if (jobs < 1) throw std::invalid_argument("count_lio: jobs must be positive");
  // Positions 1..split decide the shard; leaves are dealt round-robin.
  const int split = std::min(n - 1, 8);
  std::vector<BigCount> partial(static_cast<std::size_t>(jobs));
  std::vector<std::thread> threads;
  for (int w = 0; w < jobs; ++w)
    threads.emplace_back([&, w] { partial[static_cast<std::size_t>(w)] = BetaKappaWalk(n, split, jobs, w).run(); });
  for (auto& t : threads) t.join();
  BigCount total = 0;
  for (const BigCount& v : partial) total += v;
  return total;
}

BigCount count_lio_alpha_lambda(int n) {
  if (n < 0) throw std::invalid_argument("count_lio_alpha_lambda: n must be non-negative");
  check_guard("count_lio_alpha_lambda n", n, 22);
  if (n == 0) return 1;
  const std::size_t bits = static_cast<std::size_t>(n - 1);
  const std::size_t size = std::size_t{1} << bits;
  std::vector<BigCount> lam(size);
  for (std::size_t mask = 0; mask < size; ++mask) lam[mask] = kappa(n, IntSet::from_mask(mask));
  // Moebius transform over the subset lattice: kappa -> lambda.
  for (std::size_t b = 0; b < bits; ++b)
    for (std::size_t mask = 0; mask < size; ++mask)
      if (mask & (std::size_t{1} << b)) lam[mask] -= lam[mask ^ (std::size_t{1} << b)];
  BigCount total = 0;
  for (std::size_t mask = 0; mask < size; ++mask) total += alpha(n, IntSet::from_mask(mask)) * lam[mask];
  return total;
}

// ------------------------------------------------------------- pair sets

namespace {

struct StatMasks {
  std::vector<unsigned long long> descents, ascent_bottoms;
};

StatMasks stat_masks(int n) {
  StatMasks m;
  for (const Permutation& p : all_permutations(n)) {
    m.descents.push_back(descent_set(p).to_mask());
    m.ascent_bottoms.push_back(ascent_bottom_set(p).to_mask());
  }
  return m;
}

}  // namespace

BigCount count_pairs_ab_in_d(int n) {
  if (n < 0) throw std::invalid_argument("count_pairs_ab_in_d: n must be non-negative");
  if (n > 7) return count_lio(n);
  const StatMasks m = stat_masks(n);
  unsigned long long count = 0;
  for (unsigned long long d : m.descents)
    for (unsigned long long a : m.ascent_bottoms)
      if ((a & ~d) == 0) ++count;
  return BigCount(static_cast<unsigned long>(count));
}

BigCount count_pairs_d_in_ab(int n) {
  if (n < 0) throw std::invalid_argument("count_pairs_d_in_ab: n must be non-negative");
  if (n > 7) return count_lio_alpha_lambda(n);
  const StatMasks m = stat_masks(n);
  unsigned long long count = 0;
  for (unsigned long long d : m.descents)
    for (unsigned long long a : m.ascent_bottoms)
      if ((d & ~a) == 0) ++count;
  return BigCount(static_cast<unsigned long>(count));
}

}  // namespace lio
