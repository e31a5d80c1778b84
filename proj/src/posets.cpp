#include "lio/posets.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lio {

Poset::Poset(IntSet elements, const Relation& less) : elements_(std::move(elements)) {
  const std::vector<int>& el = elements_.values();
  const std::size_t n = el.size();
  std::map<int, std::size_t> idx;
  for (std::size_t k = 0; k < n; ++k) idx[el[k]] = k;

  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (auto [x, y] : less) {
    auto ix = idx.find(x), iy = idx.find(y);
    if (ix == idx.end() || iy == idx.end())
      throw std::invalid_argument("Poset: relation mentions a non-element");
    r[ix->second][iy->second] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (r[a][k])
        for (std::size_t b = 0; b < n; ++b)
          if (r[k][b]) r[a][b] = true;
  for (std::size_t a = 0; a < n; ++a) {
    if (r[a][a]) throw std::invalid_argument("Poset: relation has a cycle");
    for (std::size_t b = 0; b < n; ++b)
      if (r[a][b]) less_.emplace_back(el[a], el[b]);
  }
}

bool Poset::is_less(int x, int y) const {
  return std::binary_search(less_.begin(), less_.end(), std::make_pair(x, y));
}

std::string to_string(const Poset& P) {
  std::ostringstream os;
  os << to_string(P.elements()) << " <";
  for (auto [x, y] : P.less()) os << ' ' << x << '<' << y;
  return os.str();
}

Poset poset_of(const BallotMatrix& A) {
  std::vector<std::pair<int, int>> where;  // (row, column) per element
  std::vector<int> el;
  for (int x : A.underlying()) {
    el.push_back(x);
    where.push_back(A.locate(x));
  }
  Poset::Relation less;
  for (std::size_t a = 0; a < el.size(); ++a)
    for (std::size_t b = 0; b < el.size(); ++b)
      if (where[a].second < where[b].first) less.emplace_back(el[a], el[b]);
  return Poset(A.underlying(), less);
}

IntSet downset(const Poset& P, int x) {
  if (!P.elements().contains(x))
    throw std::out_of_range("downset: " + std::to_string(x) + " is not an element");
  IntSet out;
  for (auto [a, b] : P.less())
    if (b == x) out.insert(a);
  return out;
}

bool is_interval_order(const Poset& P) {
  std::vector<IntSet> downs;
  for (int x : P.elements()) downs.push_back(downset(P, x));
  for (std::size_t a = 0; a < downs.size(); ++a)
    for (std::size_t b = a + 1; b < downs.size(); ++b)
      if (!downs[a].is_subset_of(downs[b]) && !downs[b].is_subset_of(downs[a])) return false;
  return true;
}

bool is_two_plus_two_free(const Poset& P) {
  auto comparable = [&](int u, int v) { return P.is_less(u, v) || P.is_less(v, u); };
  for (auto [a, b] : P.less())
    for (auto [c, d] : P.less()) {
      if (a == c || a == d || b == c || b == d) continue;
      if (!comparable(a, c) && !comparable(a, d) && !comparable(b, c) && !comparable(b, d))
        return false;
    }
  return true;
}

std::vector<Poset> enumerate_labeled_interval_orders(int n) {
  check_guard("interval order size", n, 5);
  std::vector<std::pair<int, int>> pairs;
  for (int x = 1; x <= n; ++x)
    for (int y = x + 1; y <= n; ++y) pairs.emplace_back(x, y);

  std::set<Poset> found;
  std::vector<int> state(pairs.size(), 0);  // 0 none, 1 x<y, 2 y<x
  while (true) {
    Poset::Relation rel;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (state[p] == 1) rel.push_back(pairs[p]);
      if (state[p] == 2) rel.emplace_back(pairs[p].second, pairs[p].first);
    }
    try {
      Poset P(IntSet::range(n), rel);
      if (is_interval_order(P)) found.insert(std::move(P));
    } catch (const std::invalid_argument&) {
      // cyclic orientation
    }
    std::size_t p = 0;
    while (p < state.size() && ++state[p] == 3) state[p++] = 0;
    if (p == state.size()) break;
  }
  return {found.begin(), found.end()};
}

}  // namespace lio
