#include "invtab/chute.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <set>

#include "invtab/error.hpp"
#include "invtab/polynomial.hpp"

namespace invtab {

namespace {

std::optional<PipeDream> try_chute_pd(const PipeDream& p, const Trace& tr, int i, int j) {
  auto it = std::find_if(tr.crossings.begin(), tr.crossings.end(), [&](const Crossing& x) {
    return std::min(x.over, x.up) == i && std::max(x.over, x.up) == j;
  });
  if (it == tr.crossings.end()) return std::nullopt;
  const int n = p.n();
  const int a = it->cell.row;
  const int d = it->cell.col;
  int c = d - 1;
  while (c >= 1 && p.has_cross(a, c)) --c;
  if (c < 1) return std::nullopt;
  int b = a + 1;
  while (p.has_cross(b, c)) ++b;
  if (b + c > n) return std::nullopt;
  for (int r = a + 1; r < b; ++r)
    for (int col = c + 1; col <= d; ++col)
      if (!p.has_cross(r, col)) return std::nullopt;
  for (int col = c + 1; col < d; ++col)
    if (!p.has_cross(b, col)) return std::nullopt;
  if (p.has_cross(b, d)) return std::nullopt;

  std::vector<Box> crosses(p.crosses().begin(), p.crosses().end());
  crosses.erase(std::find(crosses.begin(), crosses.end(), Box{a, d}));
  crosses.push_back({b, c});
  return PipeDream(n, std::move(crosses));
}

std::optional<InversionsTableau> try_chute_it(const InversionsTableau& t, int i, int j) {
  if (!t.diagram().contains(i, j)) return std::nullopt;
  const int a = t(i, j);
  std::set<int> above;
  for (int r = 1; r < i; ++r)
    if (t.diagram().contains(r, j)) above.insert(t(r, j));
  int b = a + 1;
  while (above.count(b)) ++b;

  std::vector<int> eligible;
  for (int k = j + 1; k <= t.n(); ++k)
    if (t(i, k) == a && t(j, k) == b) eligible.push_back(k);

  // The definition only says "for some k"; take every subset of the eligible
  // columns and keep the ones that give an inversions tableau.
  std::optional<InversionsTableau> found;
  const std::size_t subsets = std::size_t{1} << eligible.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    StaircaseFilling f = t.filling();
    f.set({i, j}, b);
    for (std::size_t e = 0; e < eligible.size(); ++e) {
      if (!(mask >> e & 1)) continue;
      f.set({i, eligible[e]}, b);
      f.set({j, eligible[e]}, a);
    }
    if (!is_inversions_tableau(t.diagram(), f)) continue;
    if (found) fail(Errc::internal, "chute move on tableau is not uniquely determined");
    found.emplace(t.diagram(), std::move(f));
  }
  return found;
}

}  // namespace

std::vector<PipePair> chute_moves_pd(const PipeDream& p) {
  const Trace tr = trace(p);
  std::vector<PipePair> out;
  for (const Crossing& x : tr.crossings) {
    int i = std::min(x.over, x.up);
    int j = std::max(x.over, x.up);
    if (try_chute_pd(p, tr, i, j)) out.emplace_back(i, j);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PipeDream apply_chute_pd(const PipeDream& p, int i, int j) {
  auto q = try_chute_pd(p, trace(p), i, j);
  if (!q) fail(Errc::no_move, "no chute move C_" + std::to_string(i) + "," + std::to_string(j));
  return *q;
}

std::vector<PipePair> chute_moves_it(const InversionsTableau& t) {
  std::vector<PipePair> out;
  for (const Box& b : t.diagram().shaded())
    if (try_chute_it(t, b.row, b.col)) out.emplace_back(b.row, b.col);
  return out;
}

InversionsTableau apply_chute_it(const InversionsTableau& t, int i, int j) {
  auto q = try_chute_it(t, i, j);
  if (!q) fail(Errc::no_move, "no chute move C_" + std::to_string(i) + "," + std::to_string(j));
  return *q;
}

std::vector<int> column_word(const InversionsDiagram& d, const StaircaseFilling& f, int c) {
  if (c < 1 || c > d.n()) fail(Errc::invalid_box, "column out of range");
  std::vector<int> word;
  for (int r = 1; r < c; ++r)
    if (d.contains(r, c)) word.push_back(f.at(r, c));
  return word;
}

std::vector<int> word_c(const InversionsTableau& t, int c) {
  return column_word(t.diagram(), t.filling(), c);
}

std::vector<int> word_c(const LehmerTableau& l, int c) { return column_word(l.diagram, l.entries, c); }

Permutation extend_to_sn(std::span<const int> u, int n) {
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> out;
  for (int v : u) {
    if (v < 1 || v > n || used[static_cast<std::size_t>(v)])
      fail(Errc::invalid_permutation, "partial permutation has repeated or out-of-range values");
    used[static_cast<std::size_t>(v)] = true;
    out.push_back(v);
  }
  for (int v = 1; v <= n; ++v)
    if (!used[static_cast<std::size_t>(v)]) out.push_back(v);
  return Permutation(std::move(out));
}

std::vector<int> partial_code(std::span<const int> u) {
  std::vector<int> code;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] < 1) fail(Errc::invalid_permutation, "partial permutation values must be positive");
    int count = u[k] - 1;
    for (std::size_t m = 0; m < k; ++m) {
      if (u[m] == u[k]) fail(Errc::invalid_permutation, "repeated value in partial permutation");
      if (u[m] < u[k]) --count;
    }
    code.push_back(count);
  }
  return code;
}

std::vector<int> from_partial_code(std::span<const int> code) {
  std::vector<int> u;
  for (int c : code) {
    if (c < 0) fail(Errc::invalid_code, "negative code entry");
    // The (c+1)-th smallest positive integer not used yet.
    int v = 0;
    int skipped = -1;
    while (skipped < c) {
      ++v;
      if (std::find(u.begin(), u.end(), v) == u.end()) ++skipped;
    }
    u.push_back(v);
  }
  return u;
}

LehmerTableau lehmer_tableau(const InversionsTableau& t) {
  const int n = t.n();
  StaircaseFilling f(n);
  for (int c = 2; c <= n; ++c) {
    auto code = partial_code(word_c(t, c));
    std::size_t k = 0;
    for (int r = 1; r < c; ++r)
      if (t.diagram().contains(r, c)) f.set({r, c}, code[k++]);
  }
  return {t.diagram(), std::move(f)};
}

InversionsTableau tableau_of(const LehmerTableau& l) {
  const int n = l.diagram.n();
  StaircaseFilling f(n);
  for (int c = 2; c <= n; ++c) {
    auto word = from_partial_code(word_c(l, c));
    std::size_t k = 0;
    for (int r = 1; r < c; ++r)
      if (l.diagram.contains(r, c)) f.set({r, c}, word[k++]);
  }
  return {l.diagram, std::move(f)};
}

LehmerTableau apply_chute_lehmer(const LehmerTableau& l, int i, int j) {
  return lehmer_tableau(apply_chute_it(tableau_of(l), i, j));
}

bool row_bound_equivalence(const LehmerTableau& l, int c) {
  if (c < 2 || c > l.diagram.n()) fail(Errc::invalid_box, "column must lie right of its shaded rows");
  int m = 0;
  for (int r = 1; r < c; ++r) {
    if (!l.diagram.contains(r, c)) continue;
    ++m;
    if (l(r, c) > r - m) return false;
  }
  return true;
}

ChutePoset build_chute_poset(const Permutation& w) {
  ChutePoset poset;
  poset.vertices = enumerate_RP(w);
  auto index = [&](const PipeDream& p) {
    auto it = std::lower_bound(poset.vertices.begin(), poset.vertices.end(), p);
    if (it == poset.vertices.end() || !(*it == p)) fail(Errc::internal, "chute move left RP(w)");
    return static_cast<int>(it - poset.vertices.begin());
  };
  for (std::size_t v = 0; v < poset.vertices.size(); ++v) {
    const PipeDream& p = poset.vertices[v];
    for (auto [i, j] : chute_moves_pd(p))
      poset.edges.push_back({static_cast<int>(v), index(apply_chute_pd(p, i, j)), i, j});
  }
  return poset;
}

std::vector<std::vector<bool>> reachability(const ChutePoset& poset) {
  const std::size_t n = poset.vertices.size();
  std::vector<std::vector<int>> out(n);
  for (const auto& e : poset.edges) out[static_cast<std::size_t>(e.from)].push_back(e.to);
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> stack{s};
    reach[s][s] = true;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (int t : out[v]) {
        if (reach[s][static_cast<std::size_t>(t)]) continue;
        reach[s][static_cast<std::size_t>(t)] = true;
        stack.push_back(static_cast<std::size_t>(t));
      }
    }
  }
  return reach;
}

bool is_lattice(const ChutePoset& poset) {
  const auto reach = reachability(poset);
  const std::size_t n = reach.size();
  // Reachability must be antisymmetric for the order to be a poset at all.
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (reach[x][y] && reach[y][x]) return false;

  auto has_extremum = [&](std::size_t x, std::size_t y, bool upper) {
    auto leq = [&](std::size_t a, std::size_t b) { return upper ? reach[a][b] : reach[b][a]; };
    std::vector<std::size_t> bounds;
    for (std::size_t z = 0; z < n; ++z)
      if (leq(x, z) && leq(y, z)) bounds.push_back(z);
    return std::any_of(bounds.begin(), bounds.end(), [&](std::size_t z) {
      return std::all_of(bounds.begin(), bounds.end(), [&](std::size_t u) { return leq(z, u); });
    });
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (!has_extremum(x, y, true) || !has_extremum(x, y, false)) return false;
  return true;
}

namespace {

std::uint32_t fnv1a(const PipeDream& p) {
  std::uint32_t h = 2166136261u;
  auto mix = [&h](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 16777619u;
    }
  };
  mix(std::to_string(p.n()) + ":");
  for (const Box& b : p.crosses()) mix(std::to_string(b.row) + "," + std::to_string(b.col) + ";");
  return h;
}

}  // namespace

std::string to_dot(const ChutePoset& poset) {
  std::string out = "digraph chute {\n";
  for (std::size_t v = 0; v < poset.vertices.size(); ++v) {
    const auto& p = poset.vertices[v];
    char hash[16];
    std::snprintf(hash, sizeof hash, "%08x", static_cast<unsigned>(fnv1a(p)));
    out += "  v" + std::to_string(v) + " [label=\"" + Polynomial::monomial(weight(p)).to_string() + " #" +
           hash + "\"];\n";
  }
  for (const auto& e : poset.edges) {
    out += "  v" + std::to_string(e.from) + " -> v" + std::to_string(e.to) + " [label=\"C_{" +
           std::to_string(e.i) + "," + std::to_string(e.j) + "}\"];\n";
  }
  return out + "}\n";
}

}  // namespace invtab
