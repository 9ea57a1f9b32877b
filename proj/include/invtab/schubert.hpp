#pragma once

#include <map>
#include <vector>

#include "invtab/permutation.hpp"
#include "invtab/polynomial.hpp"

namespace invtab {

// All Schubert polynomials below carry arity n for w in S_n.

// Divided differences from x1^(n-1) x2^(n-2) ... x_(n-1) down to w, climbing
// from w to w0 by ascents. `smallest_ascent_first` picks which ascent to
// climb at each step, giving two different paths for the same w.
Polynomial schubert_dd(const Permutation& w, bool smallest_ascent_first = true);

// Every Schubert polynomial of S_n, computed once downward from w0.
class SchubertTable {
 public:
  explicit SchubertTable(int n);
  int n() const { return n_; }
  const Polynomial& operator()(const Permutation& w) const;

 private:
  int n_;
  std::map<Permutation, Polynomial> table_;
};

Polynomial schubert_from_tableaux(const Permutation& w);
Polynomial schubert_from_pipedreams(const Permutation& w);

// Orders that compare exponent vectors starting from the last variable. The
// extremal monomials x^code(w) and its column counterpart are extremal in
// this order; in the x1-first order they generally are not (S_132 = x1 + x2).
bool last_variable_less(const Exponent& a, const Exponent& b);
Exponent last_variable_max(const Polynomial& f);
Exponent last_variable_min(const Polynomial& f);

// x^code(w).
Exponent lex_max_monomial(const Permutation& w);
// prod_i x_i^#{j : ccode(w)_j >= i}.
Exponent lex_min_monomial(const Permutation& w);

// Generating function of unbounded inversions tableaux with entries <= m.
Polynomial stanley_truncated(const Permutation& w, int m);

}  // namespace invtab
