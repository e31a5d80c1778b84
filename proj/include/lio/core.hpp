#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lio {

// Raised when an enumeration or brute-force routine is asked for an input
// larger than its documented size guard.
class SizeGuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Throws SizeGuardError unless value <= limit.
void check_guard(std::string_view what, long long value, long long limit);

// Finite set of integers kept sorted ascending without duplicates.
class IntSet {
 public:
  IntSet() = default;
  IntSet(std::initializer_list<int> values);
  explicit IntSet(std::vector<int> values);

  // {1, ..., n}
  static IntSet range(int n);
  // {lo, ..., hi}; empty when hi < lo.
  static IntSet interval(int lo, int hi);
  // Members are the 1-based positions of set bits.
  static IntSet from_mask(unsigned long long mask);

  bool contains(int x) const;
  void insert(int x);
  void erase(int x);

  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  int min() const;
  int max() const;
  int operator[](std::size_t i) const { return elems_[i]; }

  // Bit (x-1) set for every member x; members must lie in [1, 64].
  unsigned long long to_mask() const;
  bool is_subset_of(const IntSet& other) const;

  IntSet set_union(const IntSet& other) const;
  IntSet set_difference(const IntSet& other) const;

  const std::vector<int>& values() const { return elems_; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  friend bool operator==(const IntSet&, const IntSet&) = default;
  friend auto operator<=>(const IntSet&, const IntSet&) = default;

 private:
  std::vector<int> elems_;
};

std::string to_string(const IntSet& s);

// A bijection of [n] written in one-line notation a_1 ... a_n.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word);
  Permutation(std::initializer_list<int> word)
      : Permutation(std::vector<int>(word)) {}

  // Parses one-line notation with single-digit entries, e.g. "65783421".
  static Permutation parse(std::string_view digits);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(word_.size()); }
  // 1-based access.
  int at(int i) const { return word_.at(static_cast<std::size_t>(i - 1)); }
  // 1-based position of value v.
  int position_of(int v) const;

  const std::vector<int>& word() const { return word_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

std::string to_string(const Permutation& p);

// Word b_1 ... b_n with b_i in [0, n-i].
class InversionTable {
 public:
  InversionTable() = default;
  explicit InversionTable(std::vector<int> entries);
  InversionTable(std::initializer_list<int> entries)
      : InversionTable(std::vector<int>(entries)) {}

  static InversionTable parse(std::string_view digits);

  int size() const { return static_cast<int>(entries_.size()); }
  int at(int i) const { return entries_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& entries() const { return entries_; }

  friend bool operator==(const InversionTable&, const InversionTable&) = default;
  friend auto operator<=>(const InversionTable&, const InversionTable&) = default;

 private:
  std::vector<int> entries_;
};

std::string to_string(const InversionTable& t);

// { i in [n-1] : a_i > a_{i+1} }
IntSet descent_set(const Permutation& p);
// { a_i : i in [n-1], a_i < a_{i+1} }
IntSet ascent_bottom_set(const Permutation& p);
// a_i -> n + 1 - a_i
Permutation complement(const Permutation& p);

// Distinct entries of t; may contain 0.
IntSet dent(const InversionTable& t);
// [n-1] \ dent(t)
IntSet missing_entries(const InversionTable& t);

// b_i counts the entries greater than i standing to the left of i.
InversionTable to_inversion_table(const Permutation& p);
Permutation to_permutation(const InversionTable& t);

// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);
// All of IT_n in lexicographic order.
std::vector<InversionTable> all_inversion_tables(int n);

}  // namespace lio
