#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "invtab/permutation.hpp"
#include "invtab/tableau.hpp"

namespace invtab {

// Cross tiles of a pipe dream in matrix coordinates (row, column), all with
// row + column <= n. Every other cell of the triangle is a bump; cells with
// row + column = n + 1 are the elbow caps.
class PipeDream {
 public:
  PipeDream() : PipeDream(1, {}) {}
  PipeDream(int n, std::vector<Box> crosses);

  int n() const { return n_; }
  std::span<const Box> crosses() const { return crosses_; }
  bool has_cross(int r, int c) const;
  std::size_t size() const { return crosses_.size(); }

  friend bool operator==(const PipeDream&, const PipeDream&) = default;
  friend auto operator<=>(const PipeDream&, const PipeDream&) = default;

 private:
  int n_;
  std::vector<Box> crosses_;  // sorted row-major
};

// Where two pipes meet on a cross tile: `over` travels horizontally, `up`
// vertically.
struct Crossing {
  Box cell;
  int over;
  int up;
};

struct Trace {
  Permutation permutation;
  std::vector<Crossing> crossings;  // one per cross tile, row-major
};

Trace trace(const PipeDream& p);
Permutation permutation_of(const PipeDream& p);
std::vector<int> weight(const PipeDream& p);
bool is_reduced(const PipeDream& p);

// Reading word: crosses read top row first, right to left within a row; the
// cross at (r,c) contributes the letter r+c-1.
std::vector<int> reading_word(const PipeDream& p);

std::vector<PipeDream> enumerate_RP(const Permutation& w);

InversionsTableau phi(const PipeDream& p);
PipeDream phi_inverse(const InversionsTableau& t);

// s_{a_1} s_{a_2} ... s_{a_l} acting on values of the identity of S_n.
Permutation product_of_word(int n, std::span<const int> word);
bool is_reduced_word_for(const Permutation& w, std::span<const int> word);

struct CompatiblePair {
  std::vector<int> word;
  std::vector<int> weights;
  friend auto operator<=>(const CompatiblePair&, const CompatiblePair&) = default;
};

bool is_compatible(const CompatiblePair& pair, const Permutation& w);
CompatiblePair compatible_pair(const InversionsTableau& t);

// (i, w_j) -> T(i,j) for every shaded (i,j).
std::map<std::pair<int, int>, int> balanced_labelling_of(const InversionsTableau& t);

// '+' for crosses and a middle dot for bumps, one line per row.
std::string render(const PipeDream& p);

}  // namespace invtab
