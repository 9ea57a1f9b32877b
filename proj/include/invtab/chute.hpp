#pragma once

#include <string>
#include <utility>
#include <vector>

#include "invtab/pipe_dream.hpp"
#include "invtab/tableau.hpp"

namespace invtab {

using PipePair = std::pair<int, int>;

// Pairs (i,j) whose crossing can be chuted, sorted.
std::vector<PipePair> chute_moves_pd(const PipeDream& p);
PipeDream apply_chute_pd(const PipeDream& p, int i, int j);

std::vector<PipePair> chute_moves_it(const InversionsTableau& t);
InversionsTableau apply_chute_it(const InversionsTableau& t, int i, int j);

// Shaded entries of column c read bottom to top.
std::vector<int> column_word(const InversionsDiagram& d, const StaircaseFilling& f, int c);
std::vector<int> word_c(const InversionsTableau& t, int c);
// u followed by the unused values of 1..n in increasing order.
Permutation extend_to_sn(std::span<const int> u, int n);

// Lehmer code of a partial permutation and its inverse (values may be any
// positive integers).
std::vector<int> partial_code(std::span<const int> u);
std::vector<int> from_partial_code(std::span<const int> code);

struct LehmerTableau {
  InversionsDiagram diagram;
  StaircaseFilling entries;

  int operator()(int i, int j) const { return entries.at(i, j); }
  friend bool operator==(const LehmerTableau&, const LehmerTableau&) = default;
};

std::vector<int> word_c(const LehmerTableau& l, int c);
// Each column word of the result is the code of the same column of T.
LehmerTableau lehmer_tableau(const InversionsTableau& t);
InversionsTableau tableau_of(const LehmerTableau& l);
LehmerTableau apply_chute_lehmer(const LehmerTableau& l, int i, int j);

// L(i_m, c) <= i_m - m for the shaded rows i_1 < i_2 < ... of column c.
bool row_bound_equivalence(const LehmerTableau& l, int c);

struct ChutePoset {
  struct Edge {
    int from;
    int to;
    int i;
    int j;
  };
  std::vector<PipeDream> vertices;  // sorted
  std::vector<Edge> edges;
};

ChutePoset build_chute_poset(const Permutation& w);
// reach[x][y]: y can be reached from x (reflexive).
std::vector<std::vector<bool>> reachability(const ChutePoset& poset);
bool is_lattice(const ChutePoset& poset);
std::string to_dot(const ChutePoset& poset);

}  // namespace invtab
