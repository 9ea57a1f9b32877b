#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace invtab {

// A box (row, col) of the staircase {(i,j) : 1 <= i < j <= n}. Both indices
// are 1-based; for an inversion (i,j) they are the two positions.
struct Box {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Box&, const Box&) = default;
};

// One-line notation w_1 ... w_n of a permutation of {1..n}, 1-indexed.
class Permutation {
 public:
  Permutation() : window_{1} {}
  explicit Permutation(std::vector<int> window);

  static Permutation identity(int n);
  static Permutation longest(int n);

  int size() const { return static_cast<int>(window_.size()); }
  // w_i for 1 <= i <= n.
  int operator()(int i) const { return window_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> window() const { return window_; }

  int length() const;
  int position_of(int value) const;
  Permutation inverse() const;

  // u * t_{ij}: exchanges the entries in positions i and j.
  Permutation swap_positions(int i, int j) const;
  // s_a * u: exchanges the values a and a+1 (left action).
  Permutation swap_values(int a) const;

  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> window_;
};

// Lehmer code c_1..c_n with 0 <= c_i <= n - i.
class LehmerCode {
 public:
  explicit LehmerCode(std::vector<int> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  int operator()(int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> entries() const { return entries_; }
  int sum() const;

  friend auto operator<=>(const LehmerCode&, const LehmerCode&) = default;

 private:
  std::vector<int> entries_;
};

std::vector<Box> inversions(const Permutation& w);

// c_i = #{j > i : (i,j) inverted}.
LehmerCode lehmer_code(const Permutation& w);
// c_i = #{m < w_i : m not among w_1..w_{i-1}}; must agree with lehmer_code.
LehmerCode lehmer_code_by_values(const Permutation& w);
Permutation from_lehmer_code(const LehmerCode& code);
// c_j = #{i < j : (i,j) inverted}. Not a Lehmer code in the bounded sense, so
// it is returned as a plain vector.
std::vector<int> column_lehmer_code(const Permutation& w);

bool avoids_pattern(const Permutation& w, const Permutation& pattern);
bool is_dominant(const Permutation& w);
std::optional<int> grassmannian_descent(const Permutation& w);
bool is_vexillary(const Permutation& w);
std::vector<int> descents(const Permutation& w);

bool weak_leq(const Permutation& u, const Permutation& w);
bool mediocre_covers(const Permutation& u, const Permutation& w);
bool mediocre_leq(const Permutation& u, const Permutation& w);
Permutation mediocre_cover_target(const Permutation& u, int i);
bool strong_bruhat_leq(const Permutation& u, const Permutation& w);

// 1, 2, ..., m, w_1 + m, ..., w_n + m.
Permutation one_m_times(const Permutation& w, int m);

// All of S_n in lexicographic order of windows.
std::vector<Permutation> all_permutations(int n);

// "431562" (n <= 9) or "4,3,1,5,6,2".
Permutation parse_permutation(std::string_view text);

}  // namespace invtab
