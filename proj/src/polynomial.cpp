#include "invtab/polynomial.hpp"

#include <numeric>

#include "invtab/error.hpp"

namespace invtab {

Polynomial::Polynomial(int arity) : arity_(arity) {
  if (arity < 0) fail(Errc::dimension_mismatch, "negative arity");
}

Polynomial Polynomial::constant(int arity, const mpz_class& c) {
  Polynomial p(arity);
  p.add_term(Exponent(static_cast<std::size_t>(arity), 0), c);
  return p;
}

Polynomial Polynomial::monomial(Exponent e, const mpz_class& c) {
  Polynomial p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

void Polynomial::require_arity(const Exponent& e) const {
  if (static_cast<int>(e.size()) != arity_) {
    fail(Errc::dimension_mismatch, "exponent of arity " + std::to_string(e.size()) +
                                       " in polynomial of arity " + std::to_string(arity_));
  }
  for (int x : e)
    if (x < 0) fail(Errc::dimension_mismatch, "negative exponent");
}

void Polynomial::require_same(const Polynomial& o) const {
  if (o.arity_ != arity_) {
    fail(Errc::dimension_mismatch, "polynomials of arity " + std::to_string(arity_) + " and " +
                                       std::to_string(o.arity_));
  }
}

mpz_class Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const mpz_class& c) {
  require_arity(e);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same(b);
  Polynomial out(a.arity_);
  Exponent e(static_cast<std::size_t>(a.arity_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  return out;
}

Polynomial operator*(const mpz_class& c, const Polynomial& p) {
  Polynomial out(p.arity_);
  for (const auto& [e, x] : p.terms_) out.add_term(e, c * x);
  return out;
}

Polynomial Polynomial::truncated(int m) const {
  if (m < 0 || m > arity_) fail(Errc::dimension_mismatch, "truncation beyond arity");
  Polynomial out(m);
  for (const auto& [e, c] : terms_) {
    bool vanishes = false;
    for (std::size_t k = static_cast<std::size_t>(m); k < e.size(); ++k)
      if (e[k] != 0) vanishes = true;
    if (!vanishes) out.add_term(Exponent(e.begin(), e.begin() + m), c);
  }
  return out;
}

Polynomial Polynomial::extended(int arity) const {
  if (arity < arity_) fail(Errc::dimension_mismatch, "extension cannot shrink arity");
  Polynomial out(arity);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f.resize(static_cast<std::size_t>(arity), 0);
    out.add_term(f, c);
  }
  return out;
}

Polynomial Polynomial::swap_variables(int i) const {
  if (i < 1 || i >= arity_) fail(Errc::dimension_mismatch, "variable index out of range");
  Polynomial out(arity_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    std::swap(f[static_cast<std::size_t>(i - 1)], f[static_cast<std::size_t>(i)]);
    out.add_term(f, c);
  }
  return out;
}

bool Polynomial::is_symmetric() const {
  for (int i = 1; i < arity_; ++i)
    if (!(swap_variables(i) == *this)) return false;
  return true;
}

bool Polynomial::is_homogeneous() const {
  int degree = -1;
  for (const auto& [e, c] : terms_) {
    int d = std::accumulate(e.begin(), e.end(), 0);
    if (degree >= 0 && d != degree) return false;
    degree = d;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpz_class mag = abs(c);
    if (first) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    first = false;
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "x" + std::to_string(k + 1);
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    if (mono.empty()) out += mag.get_str();
    else if (mag == 1) out += mono;
    else out += mag.get_str() + "*" + mono;
  }
  return out;
}

Polynomial divided_difference(const Polynomial& f, int i) {
  if (i < 1 || i >= f.arity()) {
    fail(Errc::dimension_mismatch, "divided difference index " + std::to_string(i) +
                                       " out of range for arity " + std::to_string(f.arity()));
  }
  const auto a = static_cast<std::size_t>(i - 1);
  Polynomial out(f.arity());
  // x_i^p x_{i+1}^q with p > q gives sum_t x_i^(q+t) x_{i+1}^(p-1-t), t < p-q;
  // p < q is minus the swapped case, p = q vanishes.
  for (const auto& [e, c] : f.terms()) {
    int p = e[a];
    int q = e[a + 1];
    if (p == q) continue;
    const mpz_class sign = p > q ? c : mpz_class(-c);
    int hi = std::max(p, q);
    int lo = std::min(p, q);
    Exponent g = e;
    for (int t = 0; t < hi - lo; ++t) {
      g[a] = lo + t;
      g[a + 1] = hi - 1 - t;
      out.add_term(g, sign);
    }
  }
  return out;
}

}  // namespace invtab
