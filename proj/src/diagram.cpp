#include "invtab/diagram.hpp"

#include <algorithm>

#include "invtab/error.hpp"

namespace invtab {

bool in_staircase(int n, Box b) { return 1 <= b.row && b.row < b.col && b.col <= n; }

std::vector<Box> staircase_boxes(int n) {
  std::vector<Box> out;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) out.push_back({i, j});
  return out;
}

InversionsDiagram::InversionsDiagram(int n, std::vector<Box> shaded)
    : n_(n), shaded_(std::move(shaded)), mask_(static_cast<std::size_t>(staircase_size(n)), false) {
  if (n < 1) fail(Errc::invalid_diagram, "diagram needs n >= 1");
  std::sort(shaded_.begin(), shaded_.end());
  shaded_.erase(std::unique(shaded_.begin(), shaded_.end()), shaded_.end());
  for (const Box& b : shaded_) {
    if (!in_staircase(n, b)) {
      fail(Errc::invalid_box, "box (" + std::to_string(b.row) + "," + std::to_string(b.col) +
                                  ") is outside the staircase of size " + std::to_string(n));
    }
    mask_[static_cast<std::size_t>(staircase_index(b.row, b.col))] = true;
  }
}

bool InversionsDiagram::contains(int i, int j) const {
  if (!in_staircase(n_, {i, j})) return false;
  return mask_[static_cast<std::size_t>(staircase_index(i, j))];
}

int InversionsDiagram::row_count(int i) const {
  return static_cast<int>(
      std::count_if(shaded_.begin(), shaded_.end(), [i](const Box& b) { return b.row == i; }));
}

int InversionsDiagram::column_count(int j) const {
  return static_cast<int>(
      std::count_if(shaded_.begin(), shaded_.end(), [j](const Box& b) { return b.col == j; }));
}

InversionsDiagram diagram_of(const Permutation& w) { return {w.size(), inversions(w)}; }

Permutation permutation_of(const InversionsDiagram& d) {
  if (!is_valid(d)) fail(Errc::invalid_diagram, "shaded boxes are not an inversion set");
  std::vector<int> w;
  for (int i = 1; i <= d.n(); ++i) w.push_back(i + d.row_count(i) - d.column_count(i));
  return Permutation(std::move(w));
}

bool is_valid_inversion_set(std::span<const Box> boxes, int n) {
  std::vector<bool> mask(static_cast<std::size_t>(staircase_size(n)), false);
  for (const Box& b : boxes) {
    if (!in_staircase(n, b)) return false;
    mask[static_cast<std::size_t>(staircase_index(b.row, b.col))] = true;
  }
  auto in = [&](int i, int j) { return mask[static_cast<std::size_t>(staircase_index(i, j))]; };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        bool a = in(i, j);
        bool c = in(j, k);
        bool base = in(i, k);
        if (a && c && !base) return false;
        if (!a && !c && base) return false;
      }
  return true;
}

bool is_valid(const InversionsDiagram& d) { return is_valid_inversion_set(d.shaded(), d.n()); }

bool is_downward_closed(const InversionsDiagram& d) {
  return std::all_of(d.shaded().begin(), d.shaded().end(), [&](const Box& b) {
    return b.row == 1 || d.contains(b.row - 1, b.col);
  });
}

bool is_dominant_shape(const InversionsDiagram& d) {
  for (int j = 2; j <= d.n(); ++j) {
    int top = 0;
    for (int i = 1; i < j; ++i)
      if (d.contains(i, j)) top = i;
    if (top == 0) continue;
    for (int r = 1; r <= top; ++r)
      for (int c = top + 1; c <= j; ++c)
        if (!d.contains(r, c)) return false;
  }
  return true;
}

std::string render(const InversionsDiagram& d) {
  std::string out;
  const int n = d.n();
  for (int i = n - 1; i >= 1; --i) {
    out += std::string(static_cast<std::size_t>(i - 1), ' ');
    for (int j = i + 1; j <= n; ++j) out += d.contains(i, j) ? '#' : '.';
    out += "  " + std::to_string(i) + "\n";
  }
  return out;
}

}  // namespace invtab
