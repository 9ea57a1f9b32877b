#include "invtab/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "invtab/chute.hpp"
#include "invtab/error.hpp"
#include "invtab/grassmann.hpp"
#include "invtab/pipe_dream.hpp"
#include "invtab/schubert.hpp"
#include "invtab/tableau.hpp"
#include "invtab/young.hpp"

namespace invtab {

namespace {

class Check {
 public:
  explicit Check(std::string name) { r_.name = std::move(name); }

  // Records the first failure only; later ones are usually consequences.
  bool expect(bool ok, const std::function<std::string()>& why) {
    if (!ok && r_.passed) {
      r_.passed = false;
      r_.detail = why();
    }
    return ok;
  }
  bool failed() const { return !r_.passed; }
  PropertyResult done(std::string summary) {
    if (r_.passed) r_.detail = std::move(summary);
    return r_;
  }

 private:
  PropertyResult r_;
};

PropertyResult guarded(const std::string& name, const std::function<PropertyResult()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {name, false, std::string("exception: ") + e.what()};
  }
}

std::string str(const Permutation& w) { return w.to_string(); }

std::string vec_str(std::span<const int> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

// (descent, w) for every Grassmannian w in S_n, identity excluded.
std::vector<std::pair<int, Permutation>> grassmannians(int n) {
  std::vector<std::pair<int, Permutation>> out;
  for (const auto& w : all_permutations(n))
    if (auto k = grassmannian_descent(w)) out.emplace_back(*k, w);
  return out;
}

// Partitions of `size` with at most `max_parts` parts, each at most `max_part`.
void partitions(int size, int max_parts, int max_part, std::vector<int>& prefix,
                std::vector<Partition>& out) {
  if (size == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (max_parts == 0) return;
  for (int p = std::min(size, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions(size - p, max_parts - 1, p, prefix, out);
    prefix.pop_back();
  }
}

std::vector<Partition> partitions_of(int size, int max_parts) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions(size, max_parts, size, prefix, out);
  return out;
}

bool entrywise_leq(const LehmerTableau& a, const LehmerTableau& b) {
  for (const Box& box : a.diagram.shaded())
    if (a(box.row, box.col) > b(box.row, box.col)) return false;
  return true;
}

// Shared body of the exhaustive and random bijection checks.
void check_phi_on(Check& c, const Permutation& w) {
  const auto rp = enumerate_RP(w);
  const auto it = enumerate_IT(w);
  std::vector<InversionsTableau> images;
  for (const auto& p : rp) {
    const auto tr = trace(p);
    c.expect(tr.permutation == w && is_reduced(p), [&] { return "pipe dream not reduced for " + str(w); });
    const auto t = phi(p);
    c.expect(is_inversions_tableau(t), [&] { return "phi image violates IT rules for " + str(w); });
    c.expect(t.weight() == weight(p), [&] { return "phi changes the weight for " + str(w); });
    for (const auto& x : tr.crossings) {
      const int i = std::min(x.over, x.up);
      const int j = std::max(x.over, x.up);
      c.expect(t(i, j) == x.cell.row, [&] { return "entry is not the crossing row for " + str(w); });
      c.expect(x.cell.row <= i, [&] { return "pipe crosses below its start row for " + str(w); });
    }
    c.expect(phi_inverse(t) == p, [&] { return "phi_inverse(phi(P)) != P for " + str(w); });
    images.push_back(t);
  }
  std::sort(images.begin(), images.end());
  c.expect(std::adjacent_find(images.begin(), images.end()) == images.end(),
           [&] { return "phi not injective on RP(" + str(w) + ")"; });
  c.expect(images == it, [&] { return "phi(RP) != IT for " + str(w); });
  for (const auto& t : it)
    c.expect(phi(phi_inverse(t)) == t, [&] { return "phi(phi_inverse(T)) != T for " + str(w); });
}

}  // namespace

PropertyResult check_schubert_triple(int n) {
  const std::string name = "schubert: dd = tableaux = pipe dreams on S_" + std::to_string(n);
  return guarded(name, [&] {
    Check c(name);
    SchubertTable table(n);
    int count = 0;
    for (const auto& w : all_permutations(n)) {
      const auto& dd = table(w);
      c.expect(schubert_dd(w) == dd, [&] { return "two divided-difference routes differ at " + str(w); });
      c.expect(schubert_from_tableaux(w) == dd, [&] { return "tableau sum differs at " + str(w); });
      c.expect(schubert_from_pipedreams(w) == dd, [&] { return "pipe dream sum differs at " + str(w); });
      ++count;
    }
    return c.done(std::to_string(count) + " permutations");
  });
}

PropertyResult check_dd_path_independence(int n) {
  const std::string name = "schubert: two divided-difference paths agree on S_" + std::to_string(n);
  return guarded(name, [&] {
    Check c(name);
    for (const auto& w : all_permutations(n))
      c.expect(schubert_dd(w, true) == schubert_dd(w, false), [&] { return "paths differ at " + str(w); });
    return c.done("ok");
  });
}

PropertyResult check_divided_difference_relations(int count, std::uint32_t seed) {
  const std::string name = "poly: divided-difference relations on random polynomials";
  return guarded(name, [&] {
    Check c(name);
    std::mt19937 rng(seed);
    const int arity = 5;
    std::uniform_int_distribution<int> terms(1, 6), expo(0, 3), coef(-3, 3);
    for (int s = 0; s < count && !c.failed(); ++s) {
      Polynomial f(arity);
      for (int t = terms(rng); t > 0; --t) {
        Exponent e(arity);
        for (int& x : e) x = expo(rng);
        f.add_term(e, coef(rng));
      }
      for (int i = 1; i < arity; ++i) {
        auto di = divided_difference(f, i);
        Exponent xi(arity, 0), xj(arity, 0);
        xi[static_cast<std::size_t>(i - 1)] = 1;
        xj[static_cast<std::size_t>(i)] = 1;
        auto diff = Polynomial::monomial(xi) - Polynomial::monomial(xj);
        c.expect(diff * di == f - f.swap_variables(i), [&] { return "quotient is not exact: " + f.to_string(); });
        c.expect(divided_difference(di, i).is_zero(), [&] { return "d_i^2 != 0 on " + f.to_string(); });
        for (int j = i + 2; j < arity; ++j)
          c.expect(divided_difference(di, j) == divided_difference(divided_difference(f, j), i),
                   [&] { return "d_i d_j != d_j d_i on " + f.to_string(); });
        if (i + 1 < arity) {
          auto lhs = divided_difference(divided_difference(di, i + 1), i);
          auto rhs = divided_difference(divided_difference(divided_difference(f, i + 1), i), i + 1);
          c.expect(lhs == rhs, [&] { return "braid relation fails on " + f.to_string(); });
        }
      }
    }
    return c.done(std::to_string(count) + " polynomials");
  });
}

PropertyResult check_extremal_monomials(int n) {
  const std::string name = "schubert: x^code and column-code monomials are extremal on S_" + std::to_string(n);
  return guarded(name, [&] {
    Check c(name);
    SchubertTable table(n);
    for (const auto& w : all_permutations(n)) {
      const auto& f = table(w);
      const auto hi = lex_max_monomial(w);
      const auto lo = lex_min_monomial(w);
      c.expect(f.coefficient(hi) == 1 && last_variable_max(f) == hi,
               [&] { return "x^code is not the extremal top term of S_" + str(w); });
      c.expect(f.coefficient(lo) == 1 && last_variable_min(f) == lo,
               [&] { return "column-code monomial is not the bottom term of S_" + str(w); });
    }
    return c.done("ok");
  });
}

PropertyResult check_dominance(int n) {
  const std::string name = "dominance: five characterizations coincide on S_" + std::to_string(n);
  return guarded(name, [&] {
    Check c(name);
    SchubertTable table(n);
    const Permutation p132({1, 3, 2});
    int dominant = 0;
    for (const auto& w : all_permutations(n)) {
      const auto d = diagram_of(w);
      const bool a = is_dominant(w);
      const bool b = avoids_pattern(w, p132);
      const bool e = is_downward_closed(d);
      const bool f = is_dominant_shape(d);
      const bool g = count_IT(w, 2) == 1 && table(w) == Polynomial::monomial(lex_max_monomial(w));
      c.expect(a == b && b == e && e == f && f == g, [&] {
        return "conditions disagree at " + str(w) + ": " + std::to_string(a) + std::to_string(b) +
               std::to_string(e) + std::to_string(f) + std::to_string(g);
      });
      dominant += a;
    }
    return c.done(std::to_string(dominant) + " dominant permutations");
  });
}

PropertyResult check_balance_equivalence_exhaustive(int n, int max_entry) {
  const std::string name = "tableau: weakly balanced <=> rectangle rule, all n=" + std::to_string(n) +
                           " fillings over 0.." + std::to_string(max_entry);
  return guarded(name, [&] {
    Check c(name);
    const int boxes = staircase_size(n);
    std::vector<int> v(static_cast<std::size_t>(boxes), 0);
    long long count = 0;
    while (true) {
      StaircaseFilling f(n, v);
      c.expect(is_weakly_balanced(f) == satisfies_rectangle_rule(f), [&] { return "disagree on " + vec_str(v); });
      ++count;
      std::size_t k = 0;
      while (k < v.size() && v[k] == max_entry) v[k++] = 0;
      if (k == v.size()) break;
      ++v[k];
    }
    return c.done(std::to_string(count) + " exhaustive fillings");
  });
}

PropertyResult check_balance_equivalence_random(int n, int count, std::uint32_t seed) {
  const std::string name = "tableau: weakly balanced <=> rectangle rule, " + std::to_string(count) +
                           " random n=" + std::to_string(n) + " fillings";
  return guarded(name, [&] {
    Check c(name);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> narrow(0, 2), wide(0, 6);
    int positive = 0;
    for (int s = 0; s < count; ++s) {
      std::vector<int> v(static_cast<std::size_t>(staircase_size(n)));
      for (int& x : v) x = s % 2 ? narrow(rng) : wide(rng);
      StaircaseFilling f(n, v);
      bool wb = is_weakly_balanced(f);
      c.expect(wb == satisfies_rectangle_rule(f), [&] { return "disagree on " + vec_str(v); });
      positive += wb;
    }
    return c.done(std::to_string(positive) + " of " + std::to_string(count) + " random fillings weakly balanced");
  });
}

PropertyResult check_it3_equivalence(int n) {
  const std::string name = "tableau: diagonal bound <=> row bound on candidate fillings of S_" + std::to_string(n);
  return guarded(name, [&] {
    Check c(name);
    long long candidates = 0;
    for (const auto& w : all_permutations(n)) {
      // Fillings failing IT1 or IT2 fail both forms, so only those passing
      // them need comparing.
      for (const auto& t : enumerate_UIT(w, n)) {
        const bool diag = is_inversions_tableau(t.diagram(), t.filling());
        const bool rows = is_inversions_tableau_row_bounded(t.diagram(), t.filling());
        c.expect(diag == rows, [&] { return "forms disagree on a filling of " + str(w); });
        ++candidates;
      }
    }
    return c.done(std::to_string(candidates) + " fillings satisfying IT1 and IT2");
  });
}

PropertyResult check_balanced_chains(int n) {
  const std::string name = "tableau: maximal chains <-> balanced tableaux on S_" + std::to_string(n);
  return guarded(name, [&] {
    Check c(name);
    std::set<StaircaseFilling> from_chains;
    const auto chains = maximal_chains(n);
    for (const auto& chain : chains) {
      auto b = chain_to_balanced(chain);
      c.expect(is_balanced(b), [&] { return std::string("chain gives an unbalanced tableau"); });
      c.expect(balanced_to_chain(b) == chain, [&] { return std::string("round trip fails"); });
      from_chains.insert(b);
    }
    c.expect(from_chains.size() == chains.size(), [&] { return std::string("two chains give one tableau"); });
    if (n <= 4) {
      std::vector<int> labels(static_cast<std::size_t>(staircase_size(n)));
      std::iota(labels.begin(), labels.end(), 1);
      std::set<StaircaseFilling> brute;
      do {
        StaircaseFilling f(n, labels);
        if (is_balanced(f)) brute.insert(f);
      } while (std::next_permutation(labels.begin(), labels.end()));
      c.expect(brute == from_chains, [&] {
        return std::to_string(brute.size()) + " balanced tableaux vs " + std::to_string(from_chains.size()) +
               " chains";
      });
    }
    return c.done(std::to_string(chains.size()) + " chains");
  });
}

PropertyResult check_balanced_extension(int n) {
  const std::string name = "tableau: balanced extensions of every IT(w), S_" + std::to_string(n);
  return guarded(name, [&] {
    Check c(name);
    for (const auto& w : all_permutations(n))
      for (const auto& t : enumerate_IT(w)) {
        const auto order = balanced_extension(t.filling());
        c.expect(is_balanced(relabel(n, order)), [&] { return "relabelling not balanced for " + str(w); });
        for (std::size_t k = 1; k < order.size(); ++k)
          c.expect(t(order[k - 1]) <= t(order[k]), [&] { return "order decreases for " + str(w); });
      }
    return c.done("ok");
  });
}

PropertyResult check_it_rp_counts(int n) {
  const std::string name = "counts: |IT(w)| = |RP(w)| on S_" + std::to_string(n);
  return guarded(name, [&] {
    Check c(name);
    long long total = 0;
    for (const auto& w : all_permutations(n)) {
      auto a = enumerate_IT(w).size();
      auto b = enumerate_RP(w).size();
      c.expect(a == b, [&] { return std::to_string(a) + " vs " + std::to_string(b) + " at " + str(w); });
      total += static_cast<long long>(a);
    }
    return c.done(std::to_string(total) + " objects in total");
  });
}

PropertyResult check_phi_bijection(int n) {
  const std::string name = "pipedream: phi is a weight-preserving bijection on S_" + std::to_string(n);
  return guarded(name, [&] {
    Check c(name);
    for (const auto& w : all_permutations(n)) check_phi_on(c, w);
    return c.done("ok");
  });
}

PropertyResult check_phi_random(int n, int count, std::uint32_t seed) {
  const std::string name = "pipedream: phi bijection on " + std::to_string(count) + " random w in S_" +
                           std::to_string(n);
  return guarded(name, [&] {
    Check c(name);
    std::mt19937 rng(seed);
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    long long objects = 0;
    for (int s = 0; s < count; ++s) {
      std::shuffle(v.begin(), v.end(), rng);
      Permutation w(v);
      check_phi_on(c, w);
      objects += static_cast<long long>(enumerate_RP(w).size());
    }
    return c.done(std::to_string(objects) + " pipe dreams");
  });
}

PropertyResult check_compatible_pairs(int n) {
  const std::string name = "pipedream: compatible pairs and balanced labellings on S_" + std::to_string(n);
  return guarded(name, [&] {
    Check c(name);
    for (const auto& w : all_permutations(n)) {
      std::set<CompatiblePair> pairs;
      const auto it = enumerate_IT(w);
      for (const auto& t : it) {
        auto pair = compatible_pair(t);
        c.expect(is_compatible(pair, w), [&] { return "incompatible pair for " + str(w); });
        pairs.insert(pair);
        c.expect(static_cast<int>(balanced_labelling_of(t).size()) == w.length(),
                 [&] { return "labelling keys collide for " + str(w); });
      }
      c.expect(pairs.size() == it.size(), [&] { return "Theta not injective on IT(" + str(w) + ")"; });
      c.expect(pairs.size() == enumerate_RP(w).size(), [&] { return "pair count != |RP| for " + str(w); });
    }
    return c.done("ok");
  });
}

PropertyResult check_stanley(int n, int max_vars, bool length_only) {
  const std::string name = std::string("stanley: truncation = 1^p x w Schubert, p from ") +
                           (length_only ? "l(w)" : "max(l(w), m)") + ", S_" + std::to_string(n) +
                           ", m <= " + std::to_string(max_vars);
  return guarded(name, [&] {
    Check c(name);
    std::map<Permutation, Polynomial> cache;
    auto schubert = [&](const Permutation& u) -> const Polynomial& {
      auto it = cache.find(u);
      if (it == cache.end()) it = cache.emplace(u, schubert_dd(u)).first;
      return it->second;
    };
    for (const auto& w : all_permutations(n))
      for (int m = 1; m <= max_vars; ++m) {
        const auto f = stanley_truncated(w, m);
        c.expect(f.is_symmetric(), [&] { return "not symmetric for " + str(w); });
        const int p0 = length_only ? w.length() : std::max(w.length(), m);
        for (int p : {p0, p0 + 1}) {
          auto s = schubert(one_m_times(w, p));
          auto cut = s.arity() >= m ? s.truncated(m) : s.extended(m);
          c.expect(cut == f, [&] {
            return "w=" + str(w) + " m=" + std::to_string(m) + " p=" + std::to_string(p) + ": truncation " +
                   f.to_string() + " vs Schubert " + cut.to_string();
          });
        }
      }
    return c.done("ok");
  });
}

PropertyResult check_schur_expansions(int max_size, int k) {
  const std::string name = "young: Schur self-expansion and skew LR positivity, |lambda| <= " +
                           std::to_string(max_size) + ", " + std::to_string(k) + " variables";
  return guarded(name, [&] {
    Check c(name);
    for (int s = 0; s <= max_size; ++s)
      for (const auto& lambda : partitions_of(s, k)) {
        auto self = schur_expand(schur(lambda, k));
        c.expect(self.size() == 1 && self.begin()->first == lambda && self.begin()->second == 1,
                 [&] { return "s_" + lambda.to_string() + " does not expand to itself"; });
        for (int t = 0; t <= s; ++t)
          for (const auto& mu : partitions_of(t, k)) {
            if (!lambda.contains(mu)) continue;
            auto skew = schur_expand(skew_schur(lambda, mu, k));
            for (const auto& [nu, coef] : skew) {
              c.expect(coef > 0, [&] { return "negative coefficient in " + lambda.to_string() + "/" + mu.to_string(); });
              c.expect(lr_coefficient(lambda, mu, nu) == coef,
                       [&] { return "skew and product LR disagree at " + lambda.to_string(); });
            }
          }
      }
    return c.done("ok");
  });
}

PropertyResult check_grassmannian(int n) {
  const std::string name = "grassmann: S_w = s_lambda and reverse SSYT bijection on S_" + std::to_string(n);
  return guarded(name, [&] {
    Check c(name);
    SchubertTable table(n);
    int count = 0;
    for (const auto& [k, w] : grassmannians(n)) {
      const auto lambda = lambda_of(w, k);
      c.expect(lambda.size() == w.length() && lambda.length() <= k && lambda[1] <= n - k,
               [&] { return "lambda_w does not fit for " + str(w); });
      c.expect(table(w) == schur(lambda, k).extended(n), [&] { return "S_w != s_lambda for " + str(w); });
      const auto it = enumerate_IT(w);
      std::set<YoungTableau> images;
      for (const auto& t : it) {
        auto r = it_to_reverse_ssyt(t, k);
        bool bounded = true;
        for (const auto& row : r.rows)
          for (int v : row) bounded = bounded && v <= k;
        c.expect(is_reverse_ssyt(r) && bounded, [&] { return "image is not a reverse SSYT for " + str(w); });
        c.expect(weight(r, n) == t.weight(), [&] { return "weight changes for " + str(w); });
        c.expect(reverse_ssyt_to_it(r, w, k) == t, [&] { return "round trip fails for " + str(w); });
        images.insert(r);
      }
      c.expect(images.size() == it.size() && it.size() == ssyt(lambda, Partition(), k).size(),
               [&] { return "counts differ for " + str(w); });
      ++count;
    }
    return c.done(std::to_string(count) + " Grassmannian permutations");
  });
}

PropertyResult check_inverse_grassmannian(int n) {
  const std::string name = "grassmann: S_{w^-1} = flagged Schur on S_" + std::to_string(n);
  return guarded(name, [&] {
    Check c(name);
    SchubertTable table(n);
    for (const auto& [k, w] : grassmannians(n)) {
      const auto [shape, flags] = inverse_grassmannian_shape(w, k);
      c.expect(table(w.inverse()) == flagged_schur(shape, flags).extended(n),
               [&] { return "S_{w^-1} != flagged Schur for " + str(w); });
      const auto it = enumerate_IT(w.inverse());
      std::set<YoungTableau> images;
      for (const auto& t : it) {
        auto y = inverse_grassmannian_to_flagged(t, w, k);
        c.expect(is_ssyt(y), [&] { return "image is not a flagged SSYT for " + str(w); });
        c.expect(weight(y, n) == t.weight(), [&] { return "weight changes for " + str(w); });
        c.expect(flagged_to_inverse_grassmannian(y, w, k) == t, [&] { return "round trip fails for " + str(w); });
        images.insert(y);
      }
      c.expect(images.size() == it.size() && it.size() == flagged_ssyt(shape, flags).size(),
               [&] { return "counts differ for " + str(w); });
    }
    return c.done("ok");
  });
}

PropertyResult check_skew(int n) {
  const std::string name = "grassmann: G_{w/u} = s_{lambda/mu} = sum of LR terms on S_" + std::to_string(n);
  return guarded(name, [&] {
    Check c(name);
    int pairs = 0;
    for (int k = 1; k < n; ++k) {
      std::vector<Permutation> ks;
      for (const auto& w : all_permutations(n))
        if (is_grassmannian(w, k)) ks.push_back(w);
      for (const auto& w : ks)
        for (const auto& u : ks) {
          if (!weak_leq(u, w)) continue;
          const auto lw = lambda_of(w, k);
          const auto lu = lambda_of(u, k);
          const auto g = skew_schubert_G(w, u, k);
          c.expect(g == skew_schur(lw, lu, k).extended(n),
                   [&] { return "G != skew Schur for w=" + str(w) + " u=" + str(u); });
          Polynomial lr(k);
          for (const auto& nu : partitions_of(lw.size() - lu.size(), k)) {
            auto coef = lr_coefficient(lw, lu, nu);
            if (coef != 0) lr += coef * schur(nu, k);
          }
          c.expect(g == lr.extended(n), [&] { return "G != LR sum for w=" + str(w) + " u=" + str(u); });
          ++pairs;
        }
    }
    return c.done(std::to_string(pairs) + " nested pairs");
  });
}

PropertyResult check_grassmannian_shapes(int n) {
  const std::string name = "grassmann: Grassmannian diagrams are Young diagrams on S_" + std::to_string(n);
  return guarded(name, [&] {
    Check c(name);
    for (const auto& [k, w] : grassmannians(n)) {
      const auto lambda = lambda_of(w, k);
      std::vector<Box> boxes;
      for (int r = 1; r <= lambda.length(); ++r)
        for (int col = 1; col <= lambda[r]; ++col) boxes.push_back({k + 1 - r, k + col});
      c.expect(InversionsDiagram(n, boxes) == diagram_of(w), [&] { return "diagram is not lambda_w for " + str(w); });
    }
    return c.done("ok");
  });
}

PropertyResult check_mediocre_closure(int n) {
  const std::string name = "mediocre: closure of covers = Lehmer code comparison on S_" + std::to_string(n);
  return guarded(name, [&] {
    Check c(name);
    const auto perms = all_permutations(n);
    const std::size_t size = perms.size();
    std::map<Permutation, std::size_t> index;
    for (std::size_t i = 0; i < size; ++i) index[perms[i]] = i;
    std::vector<std::vector<std::size_t>> up(size);
    for (std::size_t a = 0; a < size; ++a) {
      std::set<std::size_t> by_target;
      for (int i = 1; i <= n; ++i) {
        try {
          by_target.insert(index.at(mediocre_cover_target(perms[a], i)));
        } catch (const Error& e) {
          if (e.code() != Errc::no_cover) throw;
        }
      }
      for (std::size_t b = 0; b < size; ++b)
        if (mediocre_covers(perms[a], perms[b])) up[a].push_back(b);
      c.expect(std::set<std::size_t>(up[a].begin(), up[a].end()) == by_target,
               [&] { return "cover definitions disagree at " + str(perms[a]); });
    }
    long long related = 0;
    for (std::size_t a = 0; a < size; ++a) {
      std::vector<bool> seen(size, false);
      std::vector<std::size_t> stack{a};
      seen[a] = true;
      while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto t : up[v])
          if (!seen[t]) {
            seen[t] = true;
            stack.push_back(t);
          }
      }
      for (std::size_t b = 0; b < size; ++b) {
        c.expect(seen[b] == mediocre_leq(perms[a], perms[b]),
                 [&] { return "closure and code order disagree on " + str(perms[a]) + ", " + str(perms[b]); });
        related += seen[b];
      }
    }
    return c.done(std::to_string(size * size) + " ordered pairs, " + std::to_string(related) + " related");
  });
}

PropertyResult check_order_inclusions(int n) {
  const std::string name = "mediocre: weak <= mediocre <= strong Bruhat on S_" + std::to_string(n);
  return guarded(name, [&] {
    Check c(name);
    const auto perms = all_permutations(n);
    for (const auto& u : perms)
      for (const auto& w : perms) {
        if (weak_leq(u, w)) c.expect(mediocre_leq(u, w), [&] { return "weak not mediocre: " + str(u) + " " + str(w); });
        if (mediocre_leq(u, w))
          c.expect(strong_bruhat_leq(u, w), [&] { return "mediocre not strong: " + str(u) + " " + str(w); });
      }
    return c.done("ok");
  });
}

PropertyResult check_chute_correspondence(int n) {
  const std::string name = "chute: tableau and pipe dream moves correspond on S_" + std::to_string(n);
  return guarded(name, [&] {
    Check c(name);
    long long moves = 0;
    for (const auto& w : all_permutations(n))
      for (const auto& t : enumerate_IT(w)) {
        const auto p = phi_inverse(t);
        const auto it_moves = chute_moves_it(t);
        c.expect(it_moves == chute_moves_pd(p), [&] { return "available moves differ for " + str(w); });
        const auto lam = lehmer_tableau(t);
        c.expect(tableau_of(lam) == t, [&] { return "Lehmer tableau does not invert for " + str(w); });
        for (auto [i, j] : it_moves) {
          ++moves;
          const auto t2 = apply_chute_it(t, i, j);
          const auto p2 = apply_chute_pd(p, i, j);
          auto where = [&] { return str(w) + " move C_" + std::to_string(i) + "," + std::to_string(j); };
          c.expect(phi_inverse(t2) == p2, [&] { return "square does not commute at " + where(); });
          c.expect(is_reduced(p2) && permutation_of(p2) == w, [&] { return "move leaves RP at " + where(); });
          auto dw = weight(p2);
          auto w0 = weight(p);
          const int a = t(i, j);
          const int b = t2(i, j);
          --dw[static_cast<std::size_t>(b - 1)];
          ++dw[static_cast<std::size_t>(a - 1)];
          c.expect(dw == w0, [&] { return "weight does not change by e_b - e_a at " + where(); });

          int leftmost = 0;
          for (int col = 2; col <= n; ++col) {
            const auto u = word_c(t, col);
            const auto v = word_c(t2, col);
            // Every value skipped over sits lower down.
            for (int r = 1; r < col; ++r) {
              if (!t.diagram().contains(r, col) || t2(r, col) <= t(r, col)) continue;
              for (int x = t(r, col) + 1; x < t2(r, col); ++x) {
                bool below = false;
                for (int q = 1; q < r; ++q) below = below || (t.diagram().contains(q, col) && t(q, col) == x);
                c.expect(below, [&] { return "skipped value not below at " + where(); });
              }
            }
            const auto su = extend_to_sn(u, n);
            const auto sv = extend_to_sn(v, n);
            c.expect(su == sv || mediocre_covers(su, sv), [&] { return "column is not a mediocre cover at " + where(); });
            const auto lu = word_c(lam, col);
            const auto lv = word_c(lehmer_tableau(t2), col);
            int bumps = 0;
            bool fine = lu.size() == lv.size();
            for (std::size_t q = 0; fine && q < lu.size(); ++q) {
              if (lv[q] == lu[q] + 1) ++bumps;
              else if (lv[q] != lu[q]) fine = false;
            }
            c.expect(fine && bumps <= 1, [&] { return "Lehmer column changes by more than e_i at " + where(); });
            if (u == v) continue;
            std::vector<std::size_t> changed;
            for (std::size_t q = 0; q < u.size(); ++q)
              if (u[q] != v[q]) changed.push_back(q);
            auto earlier = [&](std::size_t before, int lo, int hi) {
              for (int x = lo + 1; x < hi; ++x)
                if (std::find(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(before), x) ==
                    u.begin() + static_cast<std::ptrdiff_t>(before))
                  return false;
              return true;
            };
            if (leftmost == 0) {
              leftmost = col;
              c.expect(col == j, [&] { return "leftmost changed column is not j at " + where(); });
              bool case_i = changed.size() == 1 && v[changed[0]] > u[changed[0]] &&
                            std::find(u.begin(), u.end(), v[changed[0]]) == u.end() &&
                            earlier(changed[0], u[changed[0]], v[changed[0]]);
              c.expect(case_i, [&] { return "leftmost column is not a replacement at " + where(); });
            } else {
              bool case_ii = changed.size() == 2 && u[changed[0]] < u[changed[1]] &&
                             v[changed[0]] == u[changed[1]] && v[changed[1]] == u[changed[0]] &&
                             earlier(changed[0], u[changed[0]], u[changed[1]]);
              c.expect(case_ii, [&] { return "later column is not a trade at " + where(); });
            }
          }
          c.expect(apply_chute_lehmer(lam, i, j) == lehmer_tableau(t2),
                   [&] { return "Lehmer move disagrees at " + where(); });
        }
      }
    return c.done(std::to_string(moves) + " moves");
  });
}

PropertyResult check_lehmer_monotone(int n) {
  const std::string name = "chute: Lehmer tableaux grow along every path, S_" + std::to_string(n);
  return guarded(name, [&] {
    Check c(name);
    for (const auto& w : all_permutations(n)) {
      const auto poset = build_chute_poset(w);
      std::vector<LehmerTableau> lam;
      for (const auto& p : poset.vertices) lam.push_back(lehmer_tableau(phi(p)));
      const auto reach = reachability(poset);
      for (std::size_t x = 0; x < lam.size(); ++x)
        for (std::size_t y = 0; y < lam.size(); ++y)
          if (reach[x][y]) c.expect(entrywise_leq(lam[x], lam[y]), [&] { return "Lehmer entries drop in " + str(w); });
    }
    return c.done("ok");
  });
}

PropertyResult check_row_bound(int n) {
  const std::string name = "chute: Lehmer row bound <=> entries bounded by row, S_" + std::to_string(n);
  return guarded(name, [&] {
    Check c(name);
    for (const auto& w : all_permutations(n))
      for (const auto& t : enumerate_IT(w)) {
        const auto lam = lehmer_tableau(t);
        for (int col = 2; col <= n; ++col)
          c.expect(row_bound_equivalence(lam, col), [&] { return "bound fails on IT(" + str(w) + ")"; });
      }
    // Every single-column code, inverted and compared with the row bound.
    long long columns = 0;
    for (int col = 2; col <= n; ++col)
      for (unsigned mask = 1; mask < (1u << (col - 1)); ++mask) {
        std::vector<Box> boxes;
        for (int r = 1; r < col; ++r)
          if (mask >> (r - 1) & 1) boxes.push_back({r, col});
        std::vector<int> code(boxes.size(), 0);
        while (true) {
          StaircaseFilling f(n);
          for (std::size_t q = 0; q < boxes.size(); ++q) f.set(boxes[q], code[q]);
          LehmerTableau l{InversionsDiagram(n, boxes), f};
          const auto word = from_partial_code(code);
          bool rows = true;
          for (std::size_t q = 0; q < boxes.size(); ++q) rows = rows && word[q] <= boxes[q].row;
          c.expect(row_bound_equivalence(l, col) == rows, [&] { return "bound and rows disagree, code " + vec_str(code); });
          ++columns;
          std::size_t q = 0;
          while (q < code.size() && code[q] == col) code[q++] = 0;
          if (q == code.size()) break;
          ++code[q];
        }
      }
    return c.done(std::to_string(columns) + " synthetic columns");
  });
}

PropertyResult check_lattice(int n) {
  const std::string name = "chute: every chute poset is a lattice on S_" + std::to_string(n);
  return guarded(name, [&] {
    Check c(name);
    std::size_t largest = 0;
    for (const auto& w : all_permutations(n)) {
      const auto poset = build_chute_poset(w);
      largest = std::max(largest, poset.vertices.size());
      c.expect(is_lattice(poset), [&] { return "not a lattice for " + str(w); });
    }
    return c.done("largest poset has " + std::to_string(largest) + " elements");
  });
}

std::vector<PropertyResult> run_suite(int n, std::string_view suite) {
  const bool all = suite == "all";
  if (!all && suite != "core" && suite != "grassmann" && suite != "chute")
    fail(Errc::parse_error, "unknown suite '" + std::string(suite) + "'");
  if (n < 2) fail(Errc::parse_error, "verify needs n >= 2");
  std::vector<PropertyResult> out;
  if (all || suite == "core") {
    out.push_back(check_schubert_triple(n));
    out.push_back(check_dd_path_independence(n));
    out.push_back(check_divided_difference_relations(100, 7));
    out.push_back(check_extremal_monomials(n));
    out.push_back(check_dominance(n));
    out.push_back(check_balance_equivalence_exhaustive(3, 2));
    out.push_back(check_balance_equivalence_random(n, 1000, 11));
    out.push_back(check_it3_equivalence(n));
    out.push_back(check_balanced_chains(std::min(n, 4)));
    out.push_back(check_balanced_extension(n));
    out.push_back(check_it_rp_counts(n));
    out.push_back(check_phi_bijection(n));
    out.push_back(check_compatible_pairs(n));
    out.push_back(check_stanley(std::min(n, 4), 3, false));
    out.push_back(check_schur_expansions(std::min(n, 5), 3));
    out.push_back(check_mediocre_closure(n));
    out.push_back(check_order_inclusions(n));
  }
  if (all || suite == "grassmann") {
    out.push_back(check_grassmannian(n));
    out.push_back(check_inverse_grassmannian(n));
    out.push_back(check_skew(n));
    out.push_back(check_grassmannian_shapes(n));
  }
  if (all || suite == "chute") {
    out.push_back(check_chute_correspondence(n));
    out.push_back(check_lehmer_monotone(n));
    out.push_back(check_row_bound(n));
    out.push_back(check_lattice(n));
  }
  return out;
}

}  // namespace invtab
