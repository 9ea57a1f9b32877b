#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace invtab {

using Exponent = std::vector<int>;

// Sparse polynomial with integer coefficients in a fixed number of variables.
// Terms iterate lex-descending on exponent vectors, x1 compared first.
class Polynomial {
 public:
  using Terms = std::map<Exponent, mpz_class, std::greater<>>;

  Polynomial() : Polynomial(0) {}
  explicit Polynomial(int arity);

  static Polynomial constant(int arity, const mpz_class& c);
  static Polynomial monomial(Exponent e, const mpz_class& c = 1);

  int arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  mpz_class coefficient(const Exponent& e) const;

  void add_term(const Exponent& e, const mpz_class& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const mpz_class& c, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  // Sets x_{m+1}, x_{m+2}, ... to zero and drops them.
  Polynomial truncated(int m) const;
  // Adds variables that do not occur.
  Polynomial extended(int arity) const;
  Polynomial swap_variables(int i) const;  // x_i <-> x_{i+1}
  bool is_symmetric() const;
  bool is_homogeneous() const;

  // "3*x1^2*x2 - x3 + 1"; the zero polynomial prints as "0".
  std::string to_string() const;

 private:
  void require_arity(const Exponent& e) const;
  void require_same(const Polynomial& o) const;

  int arity_;
  Terms terms_;
};

// (f - s_i f) / (x_i - x_{i+1}), computed term by term.
Polynomial divided_difference(const Polynomial& f, int i);

}  // namespace invtab
