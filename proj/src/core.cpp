#include "lio/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lio {

void check_guard(std::string_view what, long long value, long long limit) {
  if (value > limit) {
    std::ostringstream os;
    os << what << " = " << value << " exceeds the supported limit " << limit;
    throw SizeGuardError(os.str());
  }
}

// ---------------------------------------------------------------- IntSet

IntSet::IntSet(std::initializer_list<int> values)
    : IntSet(std::vector<int>(values)) {}

IntSet::IntSet(std::vector<int> values) : elems_(std::move(values)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

IntSet IntSet::range(int n) { return interval(1, n); }

IntSet IntSet::interval(int lo, int hi) {
  IntSet s;
  for (int x = lo; x <= hi; ++x) s.elems_.push_back(x);
  return s;
}

IntSet IntSet::from_mask(unsigned long long mask) {
  IntSet s;
  for (int bit = 0; mask != 0; ++bit, mask >>= 1)
    if (mask & 1ULL) s.elems_.push_back(bit + 1);
  return s;
}

bool IntSet::contains(int x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

void IntSet::insert(int x) {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
  if (it == elems_.end() || *it != x) elems_.insert(it, x);
}

void IntSet::erase(int x) {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
  if (it != elems_.end() && *it == x) elems_.erase(it);
}

int IntSet::min() const {
  if (elems_.empty()) throw std::logic_error("min of empty IntSet");
  return elems_.front();
}

int IntSet::max() const {
  if (elems_.empty()) throw std::logic_error("max of empty IntSet");
  return elems_.back();
}

unsigned long long IntSet::to_mask() const {
  unsigned long long mask = 0;
  for (int x : elems_) {
    if (x < 1 || x > 64) throw std::out_of_range("IntSet::to_mask: member outside [1,64]");
    mask |= 1ULL << (x - 1);
  }
  return mask;
}

bool IntSet::is_subset_of(const IntSet& other) const {
  return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(),
                       elems_.end());
}

IntSet IntSet::set_union(const IntSet& other) const {
  std::vector<int> out;
  std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(),
                 other.elems_.end(), std::back_inserter(out));
  return IntSet(std::move(out));
}

IntSet IntSet::set_difference(const IntSet& other) const {
  std::vector<int> out;
  std::set_difference(elems_.begin(), elems_.end(), other.elems_.begin(),
                      other.elems_.end(), std::back_inserter(out));
  return IntSet(std::move(out));
}

std::string to_string(const IntSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

// ----------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  std::vector<bool> seen(word_.size() + 1, false);
  for (int v : word_) {
    if (v < 1 || v > static_cast<int>(word_.size()) || seen[v])
      throw std::invalid_argument("Permutation: word is not a bijection on [n]");
    seen[v] = true;
  }
}

Permutation Permutation::parse(std::string_view digits) {
  std::vector<int> w;
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("Permutation::parse: non-digit");
    w.push_back(c - '0');
  }
  return Permutation(std::move(w));
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

int Permutation::position_of(int v) const {
  auto it = std::find(word_.begin(), word_.end(), v);
  if (it == word_.end()) throw std::out_of_range("Permutation::position_of");
  return static_cast<int>(it - word_.begin()) + 1;
}

namespace {

std::string join_word(const std::vector<int>& w) {
  bool compact = std::all_of(w.begin(), w.end(), [](int v) { return v >= 0 && v <= 9; });
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i) os << ' ';
    os << w[i];
  }
  return os.str();
}

}  // namespace

std::string to_string(const Permutation& p) { return join_word(p.word()); }

// -------------------------------------------------------- InversionTable

InversionTable::InversionTable(std::vector<int> entries) : entries_(std::move(entries)) {
  const int n = static_cast<int>(entries_.size());
  for (int i = 1; i <= n; ++i) {
    int b = entries_[static_cast<std::size_t>(i - 1)];
    if (b < 0 || b > n - i)
      throw std::invalid_argument("InversionTable: entry b_" + std::to_string(i) +
                                  " = " + std::to_string(b) + " outside [0, n-i]");
  }
}

InversionTable InversionTable::parse(std::string_view digits) {
  std::vector<int> w;
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("InversionTable::parse: non-digit");
    w.push_back(c - '0');
  }
  return InversionTable(std::move(w));
}

std::string to_string(const InversionTable& t) { return join_word(t.entries()); }

// ------------------------------------------------------------ statistics

IntSet descent_set(const Permutation& p) {
  std::vector<int> out;
  for (int i = 1; i < p.size(); ++i)
    if (p.at(i) > p.at(i + 1)) out.push_back(i);
  return IntSet(std::move(out));
}

IntSet ascent_bottom_set(const Permutation& p) {
  std::vector<int> out;
  for (int i = 1; i < p.size(); ++i)
    if (p.at(i) < p.at(i + 1)) out.push_back(p.at(i));
  return IntSet(std::move(out));
}

Permutation complement(const Permutation& p) {
  std::vector<int> w = p.word();
  const int n = p.size();
  for (int& v : w) v = n + 1 - v;
  return Permutation(std::move(w));
}

IntSet dent(const InversionTable& t) { return IntSet(t.entries()); }

IntSet missing_entries(const InversionTable& t) {
  return IntSet::range(t.size() - 1).set_difference(dent(t));
}

InversionTable to_inversion_table(const Permutation& p) {
  const int n = p.size();
  std::vector<int> b(static_cast<std::size_t>(n), 0);
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k)
      if (p.at(j) > p.at(k)) ++b[static_cast<std::size_t>(p.at(k) - 1)];
  return InversionTable(std::move(b));
}

Permutation to_permutation(const InversionTable& t) {
  // Place n, n-1, ..., 1 in turn: value i goes after exactly b_i of the
  // already placed (larger) values.
  const int n = t.size();
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(n));
  for (int i = n; i >= 1; --i)
    w.insert(w.begin() + t.at(i), i);
  return Permutation(std::move(w));
}

std::vector<Permutation> all_permutations(int n) {
  check_guard("permutation length", n, 10);
  std::vector<int> w(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<InversionTable> all_inversion_tables(int n) {
  check_guard("inversion table length", n, 10);
  std::vector<InversionTable> out;
  std::vector<int> b(static_cast<std::size_t>(std::max(n, 0)), 0);
  while (true) {
    out.emplace_back(b);
    int i = n - 1;  // 1-based i = n has range {0}, skip it
    while (i >= 1 && b[static_cast<std::size_t>(i - 1)] == n - i) {
      b[static_cast<std::size_t>(i - 1)] = 0;
      --i;
    }
    if (i < 1) break;
    ++b[static_cast<std::size_t>(i - 1)];
  }
  return out;
}

}  // namespace lio
