#include "invtab/schubert.hpp"

#include <algorithm>
#include <deque>

#include "invtab/diagram.hpp"
#include "invtab/error.hpp"
#include "invtab/pipe_dream.hpp"
#include "invtab/tableau.hpp"

namespace invtab {

namespace {

Polynomial top_schubert(int n) {
  Exponent e;
  for (int i = 1; i <= n; ++i) e.push_back(n - i);
  return Polynomial::monomial(e);
}

}  // namespace

Polynomial schubert_dd(const Permutation& w, bool smallest_ascent_first) {
  const int n = w.size();
  std::vector<int> climb;
  Permutation u = w;
  while (u.length() < staircase_size(n)) {
    int pick = 0;
    for (int i = 1; i < n; ++i) {
      if (u(i) < u(i + 1)) {
        pick = i;
        if (smallest_ascent_first) break;
      }
    }
    climb.push_back(pick);
    u = u.swap_positions(pick, pick + 1);
  }
  Polynomial f = top_schubert(n);
  for (auto it = climb.rbegin(); it != climb.rend(); ++it) f = divided_difference(f, *it);
  return f;
}

SchubertTable::SchubertTable(int n) : n_(n) {
  const Permutation top = Permutation::longest(n);
  table_.emplace(top, top_schubert(n));
  std::deque<Permutation> queue{top};
  while (!queue.empty()) {
    Permutation u = queue.front();
    queue.pop_front();
    const Polynomial& f = table_.at(u);
    for (int i = 1; i < n; ++i) {
      if (u(i) < u(i + 1)) continue;
      Permutation v = u.swap_positions(i, i + 1);
      if (table_.count(v)) continue;
      auto g = divided_difference(f, i);
      table_.emplace(v, std::move(g));
      queue.push_back(v);
    }
  }
}

const Polynomial& SchubertTable::operator()(const Permutation& w) const {
  if (w.size() != n_) fail(Errc::dimension_mismatch, "permutation not in this table's S_n");
  return table_.at(w);
}

Polynomial schubert_from_tableaux(const Permutation& w) {
  Polynomial f(w.size());
  for (const auto& t : enumerate_IT(w)) f.add_term(t.weight(), 1);
  return f;
}

Polynomial schubert_from_pipedreams(const Permutation& w) {
  Polynomial f(w.size());
  for (const auto& p : enumerate_RP(w)) f.add_term(weight(p), 1);
  return f;
}

bool last_variable_less(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size()) fail(Errc::dimension_mismatch, "exponents of different arity");
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

Exponent last_variable_max(const Polynomial& f) {
  if (f.is_zero()) fail(Errc::expansion_failed, "zero polynomial has no extremal term");
  Exponent best = f.terms().begin()->first;
  for (const auto& [e, c] : f.terms())
    if (last_variable_less(best, e)) best = e;
  return best;
}

Exponent last_variable_min(const Polynomial& f) {
  if (f.is_zero()) fail(Errc::expansion_failed, "zero polynomial has no extremal term");
  Exponent best = f.terms().begin()->first;
  for (const auto& [e, c] : f.terms())
    if (last_variable_less(e, best)) best = e;
  return best;
}

Exponent lex_max_monomial(const Permutation& w) {
  const auto code = lehmer_code(w);
  return {code.entries().begin(), code.entries().end()};
}

Exponent lex_min_monomial(const Permutation& w) {
  const auto cc = column_lehmer_code(w);
  Exponent e;
  for (int i = 1; i <= w.size(); ++i)
    e.push_back(static_cast<int>(std::count_if(cc.begin(), cc.end(), [i](int c) { return c >= i; })));
  return e;
}

Polynomial stanley_truncated(const Permutation& w, int m) {
  if (m < 1) fail(Errc::invalid_filling, "need at least one variable");
  Polynomial f(m);
  for (const auto& t : enumerate_UIT(w, m)) f.add_term(t.weight(m), 1);
  return f;
}

}  // namespace invtab
