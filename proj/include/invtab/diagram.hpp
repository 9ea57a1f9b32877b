#pragma once

#include <span>
#include <string>
#include <vector>

#include "invtab/permutation.hpp"

namespace invtab {

// Number of boxes in the staircase of S_n.
constexpr int staircase_size(int n) { return n * (n - 1) / 2; }

// Dense index of staircase box (i,j), column-major: column 2 first, rows
// increasing within a column.
constexpr int staircase_index(int i, int j) { return (j - 1) * (j - 2) / 2 + (i - 1); }

bool in_staircase(int n, Box b);
// All staircase boxes in column-major bottom-up order.
std::vector<Box> staircase_boxes(int n);

// A shaded subset of the staircase. Boxes are kept sorted row-major, so two
// diagrams compare equal exactly when they shade the same boxes of the same n.
class InversionsDiagram {
 public:
  InversionsDiagram() : InversionsDiagram(1, {}) {}
  // Checks that every box lies in the staircase; does not check validity.
  InversionsDiagram(int n, std::vector<Box> shaded);

  int n() const { return n_; }
  std::span<const Box> shaded() const { return shaded_; }
  bool contains(int i, int j) const;
  bool contains(Box b) const { return contains(b.row, b.col); }
  int row_count(int i) const;
  int column_count(int j) const;

  friend bool operator==(const InversionsDiagram& a, const InversionsDiagram& b) {
    return a.n_ == b.n_ && a.shaded_ == b.shaded_;
  }

 private:
  int n_;
  std::vector<Box> shaded_;
  std::vector<bool> mask_;  // indexed by staircase_index
};

InversionsDiagram diagram_of(const Permutation& w);
// Reads w_i = i + (#shaded in row i) - (#shaded in column i).
Permutation permutation_of(const InversionsDiagram& d);

bool is_valid_inversion_set(std::span<const Box> boxes, int n);
bool is_valid(const InversionsDiagram& d);
bool is_downward_closed(const InversionsDiagram& d);
bool is_dominant_shape(const InversionsDiagram& d);

// Rows are printed from n-1 down to 1, '#' for shaded and '.' otherwise.
std::string render(const InversionsDiagram& d);

}  // namespace invtab
