#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "invtab/polynomial.hpp"

namespace invtab {

// Weakly decreasing parts; trailing zeros are dropped.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  // Part i (1-based), 0 beyond the length.
  int operator[](int i) const;
  int size() const;
  bool contains(const Partition& mu) const;
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// A (skew) tableau. rows[r] holds the cells of row r+1 outside `inner`, left
// to right, so rows[r].size() == outer[r+1] - inner[r+1].
struct YoungTableau {
  Partition outer;
  Partition inner;
  std::vector<std::vector<int>> rows;
  std::optional<std::vector<int>> flags;

  friend bool operator==(const YoungTableau&, const YoungTableau&) = default;
  friend auto operator<=>(const YoungTableau&, const YoungTableau&) = default;
};

bool has_shape(const YoungTableau& t);
// Rows weakly increase, columns strictly increase, flags respected.
bool is_ssyt(const YoungTableau& t);
// Rows weakly decrease, columns strictly decrease.
bool is_reverse_ssyt(const YoungTableau& t);
std::vector<int> weight(const YoungTableau& t, int arity);

// SSYT of shape outer/inner, row r bounded by bounds[r-1]; stops when `visit`
// returns false.
void enumerate_ssyt(const Partition& outer, const Partition& inner, const std::vector<int>& bounds,
                    const std::function<bool(const YoungTableau&)>& visit);
std::vector<YoungTableau> ssyt(const Partition& outer, const Partition& inner, int k);
std::vector<YoungTableau> flagged_ssyt(const Partition& shape, const std::vector<int>& flags);

// Arity k.
Polynomial schur(const Partition& lambda, int k);
// Arity max(flags).
Polynomial flagged_schur(const Partition& lambda, const std::vector<int>& flags);
// Arity k.
Polynomial skew_schur(const Partition& lambda, const Partition& mu, int k);

// Peels off leading terms (x1-first lex) until nothing remains. f must be a
// symmetric polynomial in its arity.
std::map<Partition, mpz_class> schur_expand(const Polynomial& f);
// Coefficient of s_lambda in s_mu * s_nu.
mpz_class lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

}  // namespace invtab
