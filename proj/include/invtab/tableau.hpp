#pragma once

#include <functional>
#include <span>
#include <vector>

#include "invtab/diagram.hpp"
#include "invtab/permutation.hpp"

namespace invtab {

// Total map from the staircase of size n to non-negative integers.
class StaircaseFilling {
 public:
  StaircaseFilling() : StaircaseFilling(1) {}
  explicit StaircaseFilling(int n);
  // `values` is indexed by staircase_index.
  StaircaseFilling(int n, std::vector<int> values);

  int n() const { return n_; }
  int at(int i, int j) const { return values_[static_cast<std::size_t>(staircase_index(i, j))]; }
  int at(Box b) const { return at(b.row, b.col); }
  void set(Box b, int value);
  std::span<const int> values() const { return values_; }

  friend auto operator<=>(const StaircaseFilling&, const StaircaseFilling&) = default;

 private:
  int n_;
  std::vector<int> values_;
};

// A filling of the shaded boxes of a diagram by positive integers, with the
// unshaded boxes read as 0. The constructor only checks the support; whether
// IT1-IT3 hold is a separate question (is_inversions_tableau).
class InversionsTableau {
 public:
  InversionsTableau() = default;
  InversionsTableau(InversionsDiagram diagram, StaircaseFilling filling);

  struct Entry {
    Box box;
    int value;
  };
  static InversionsTableau from_entries(int n, std::span<const Entry> entries);

  const InversionsDiagram& diagram() const { return diagram_; }
  const StaircaseFilling& filling() const { return filling_; }
  int n() const { return diagram_.n(); }
  int operator()(int i, int j) const { return filling_.at(i, j); }
  int operator()(Box b) const { return filling_.at(b); }
  std::vector<Entry> entries() const;
  Permutation permutation() const { return permutation_of(diagram_); }
  // (m_1, ..., m_n): m_v = number of boxes holding v.
  std::vector<int> weight() const;
  // Same count padded/truncated to `arity` entries (values beyond arity must
  // not occur).
  std::vector<int> weight(int arity) const;

  friend bool operator==(const InversionsTableau& a, const InversionsTableau& b) {
    return a.diagram_ == b.diagram_ && a.filling_ == b.filling_;
  }
  friend bool operator<(const InversionsTableau& a, const InversionsTableau& b) {
    if (a.n() != b.n()) return a.n() < b.n();
    return a.filling_ < b.filling_;
  }

 private:
  InversionsDiagram diagram_;
  StaircaseFilling filling_;
};

// Corner first, then the boxes above it in its column, then the boxes left of
// it in its row.
std::vector<Box> hook(int n, int i, int j);

bool is_balanced(const StaircaseFilling& t);
bool is_weakly_balanced(const StaircaseFilling& t);
bool satisfies_rectangle_rule(const StaircaseFilling& t);

// IT1 + IT2 + IT3.
bool is_inversions_tableau(const InversionsDiagram& d, const StaircaseFilling& t);
// IT1 + IT2 + IT3' (every entry in row i is at most i).
bool is_inversions_tableau_row_bounded(const InversionsDiagram& d, const StaircaseFilling& t);
bool is_inversions_tableau(const InversionsTableau& t);

// Backtracking over the staircase in column-major bottom-up order. A box with
// fixed value >= 0 is pinned; a free box ranges over [1, max_entry]. The
// rectangle rule is checked on the whole composite filling, column
// distinctness only among free boxes, and the diagonal bound T(i,i+1) <= i
// only on free boxes when `diagonal_bound` is set.
struct FillingConstraints {
  int n = 1;
  std::vector<int> fixed;      // per staircase index; -1 = free
  std::vector<int> max_entry;  // per staircase index, for free boxes
  bool diagonal_bound = true;
};
// Calls `visit` for each solution in lexicographic order of the value vector;
// stops early when `visit` returns false.
void enumerate_fillings(const FillingConstraints& rules,
                        const std::function<bool(const StaircaseFilling&)>& visit);

std::vector<InversionsTableau> enumerate_IT(const Permutation& w);
// Counts IT(w), stopping once `limit` is reached (0 = no limit).
long long count_IT(const Permutation& w, long long limit = 0);
// Unbounded inversions tableaux (IT1 + IT2) with entries in 1..max_entry.
std::vector<InversionsTableau> enumerate_UIT(const Permutation& w, int max_entry);

InversionsTableau lex_max_tableau(const Permutation& w);
InversionsTableau lex_min_tableau(const Permutation& w);

// Total order on all staircase boxes, non-decreasing in the (zero-extended)
// entry, whose relabelling 1..N is balanced.
std::vector<Box> balanced_extension(const StaircaseFilling& t);
StaircaseFilling relabel(int n, std::span<const Box> order);

StaircaseFilling chain_to_balanced(std::span<const Permutation> chain);
std::vector<Permutation> balanced_to_chain(const StaircaseFilling& b);
// Every maximal chain Id -> w0 in weak order on S_n.
std::vector<std::vector<Permutation>> maximal_chains(int n);

}  // namespace invtab
