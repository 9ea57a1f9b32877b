#pragma once

#include <vector>

#include "invtab/permutation.hpp"
#include "invtab/polynomial.hpp"
#include "invtab/tableau.hpp"
#include "invtab/young.hpp"

namespace invtab {

// True when every descent of w is at k (so the identity qualifies for any k).
bool is_grassmannian(const Permutation& w, int k);

// (a_k - k, ..., a_1 - 1) for w = a_1 ... a_k b_1 ... b_(n-k).
Partition lambda_of(const Permutation& w, int k);

// Row r, column c of the reverse tableau sits at staircase box (k+1-r, k+c).
YoungTableau it_to_reverse_ssyt(const InversionsTableau& t, int k);
InversionsTableau reverse_ssyt_to_it(const YoungTableau& r, const Permutation& w, int k);

// Shape (k+i-b_i)_i and flags b_i over the rows with k+i-b_i > 0.
struct FlaggedShape {
  Partition shape;
  std::vector<int> flags;
};
FlaggedShape inverse_grassmannian_shape(const Permutation& w, int k);

// T is an inversions tableau of w^-1. Row i, column c of the flagged tableau
// is T(b_i, a_(k+1-c)).
YoungTableau inverse_grassmannian_to_flagged(const InversionsTableau& t, const Permutation& w, int k);
InversionsTableau flagged_to_inverse_grassmannian(const YoungTableau& y, const Permutation& w, int k);

// Filling of Inv(w) \ Inv(u); the boxes of Inv(u) hold k in `filling`.
struct SkewInversionsTableau {
  InversionsDiagram outer;
  InversionsDiagram inner;
  int k = 0;
  StaircaseFilling filling;

  std::vector<int> weight(int arity) const;
  friend bool operator==(const SkewInversionsTableau&, const SkewInversionsTableau&) = default;
};

std::vector<SkewInversionsTableau> enumerate_skew_IT(const Permutation& w, const Permutation& u, int k);
// Arity n.
Polynomial skew_schubert_G(const Permutation& w, const Permutation& u, int k);

}  // namespace invtab
