#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace invtab {

struct PropertyResult {
  std::string name;
  bool passed = true;
  std::string detail;  // first counterexample, or a short summary
};

// Properties quantified over S_n (or over the stated objects inside S_n).

// schubert_dd = tableaux = pipe dreams, exact term maps.
PropertyResult check_schubert_triple(int n);
PropertyResult check_dd_path_independence(int n);
// partial_i^2 = 0, commutation and braid relations on random polynomials.
PropertyResult check_divided_difference_relations(int count, std::uint32_t seed);
PropertyResult check_extremal_monomials(int n);
PropertyResult check_dominance(int n);

PropertyResult check_balance_equivalence_exhaustive(int n, int max_entry);
PropertyResult check_balance_equivalence_random(int n, int count, std::uint32_t seed);
PropertyResult check_it3_equivalence(int n);
PropertyResult check_balanced_chains(int n);
PropertyResult check_balanced_extension(int n);
PropertyResult check_it_rp_counts(int n);

// Weight preservation, entry semantics, row bound and two-sided inverse on
// every pipe dream of every w in S_n.
PropertyResult check_phi_bijection(int n);
PropertyResult check_phi_random(int n, int count, std::uint32_t seed);
PropertyResult check_compatible_pairs(int n);

// Stanley truncation against 1^p x w for p in {p0, p0+1}, where p0 is l(w)
// when `length_only`, or max(l(w), m) otherwise.
PropertyResult check_stanley(int n, int max_vars, bool length_only);
PropertyResult check_schur_expansions(int max_size, int k);

PropertyResult check_grassmannian(int n);
PropertyResult check_inverse_grassmannian(int n);
PropertyResult check_skew(int n);
PropertyResult check_grassmannian_shapes(int n);

PropertyResult check_mediocre_closure(int n);
PropertyResult check_order_inclusions(int n);
// phi-commutation, skipped-value rule, observation cases, mediocre covers and
// Lehmer column behaviour for every move of every tableau of S_n.
PropertyResult check_chute_correspondence(int n);
PropertyResult check_lehmer_monotone(int n);
PropertyResult check_row_bound(int n);
PropertyResult check_lattice(int n);

// Suite is one of "all", "core", "grassmann", "chute".
std::vector<PropertyResult> run_suite(int n, std::string_view suite);

}  // namespace invtab
