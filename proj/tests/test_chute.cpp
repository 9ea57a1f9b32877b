#include <doctest.h>

#include <algorithm>
#include <deque>
#include <set>
#include <vector>

#include "invtab/chute.hpp"
#include "invtab/error.hpp"

using namespace invtab;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

PipeDream pd(int n, std::vector<Box> crosses) { return PipeDream(n, std::move(crosses)); }

InversionsTableau tableau(int n, std::vector<InversionsTableau::Entry> e) {
  return InversionsTableau::from_entries(n, e);
}

// Crosses left-justified in each row, row i holding code_i of them.
PipeDream bottom_pd(const Permutation& w) {
  const auto code = lehmer_code(w);
  std::vector<Box> crosses;
  int i = 1;
  for (int c : code.entries()) {
    for (int k = 1; k <= c; ++k) crosses.push_back({i, k});
    ++i;
  }
  return pd(w.size(), crosses);
}

// Transpose of the bottom pipe dream of the inverse.
PipeDream top_pd(const Permutation& w) {
  const auto bottom = bottom_pd(w.inverse());
  std::vector<Box> crosses;
  for (const Box& b : bottom.crosses()) crosses.push_back({b.col, b.row});
  return pd(w.size(), crosses);
}

// Pipe dreams reachable from p by chute moves.
std::set<PipeDream> closure(const PipeDream& p) {
  std::set<PipeDream> seen{p};
  std::deque<PipeDream> queue{p};
  while (!queue.empty()) {
    const auto q = queue.front();
    queue.pop_front();
    for (auto [i, j] : chute_moves_pd(q)) {
      const auto r = apply_chute_pd(q, i, j);
      if (seen.insert(r).second) queue.push_back(r);
    }
  }
  return seen;
}

const PipeDream c35_before = pd(8, {{1, 1}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 1}, {2, 2}, {2, 3}, {2, 4},
                                    {2, 5}, {2, 6}, {3, 1}, {3, 3}, {3, 4}, {7, 1}});
const PipeDream c35_after = pd(8, {{1, 1}, {1, 3}, {1, 4}, {1, 6}, {2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5},
                                   {2, 6}, {3, 1}, {3, 2}, {3, 3}, {3, 4}, {7, 1}});

InversionsTableau c35_tableau(int t35, int t36, int t38, int t56, int t58) {
  return tableau(8, {{{1, 4}, 1}, {{2, 3}, 2}, {{2, 4}, 2}, {{2, 5}, 2}, {{2, 6}, 2}, {{2, 7}, 2},
                     {{2, 8}, 2}, {{3, 4}, 3}, {{3, 5}, t35}, {{3, 6}, t36}, {{3, 7}, 1}, {{3, 8}, t38},
                     {{5, 6}, t56}, {{5, 8}, t58}, {{7, 8}, 7}});
}

LehmerTableau c35_lehmer(const InversionsDiagram& d, int l35, int l36, int l38) {
  StaircaseFilling f(8);
  for (int c = 5; c <= 8; ++c) f.set({2, c}, 1);
  f.set({2, 3}, 1);
  f.set({3, 5}, l35);
  f.set({3, 6}, l36);
  f.set({3, 8}, l38);
  f.set({7, 8}, 3);
  return {d, f};
}

}  // namespace

TEST_CASE("worked chute move") {
  REQUIRE(is_reduced(c35_before));
  const auto w = permutation_of(c35_before);
  CHECK(permutation_of(c35_after) == w);
  const auto moves = chute_moves_pd(c35_before);
  CHECK(std::find(moves.begin(), moves.end(), PipePair{3, 5}) != moves.end());
  CHECK(apply_chute_pd(c35_before, 3, 5) == c35_after);

  const auto before = c35_tableau(1, 1, 1, 3, 3);
  const auto after = c35_tableau(3, 3, 3, 1, 1);
  REQUIRE(before.permutation() == w);
  CHECK(phi(c35_before) == before);
  CHECK(phi(c35_after) == after);
  CHECK(apply_chute_it(before, 3, 5) == after);

  const auto l_before = lehmer_tableau(before);
  const auto l_after = lehmer_tableau(after);
  CHECK(l_before == c35_lehmer(before.diagram(), 0, 0, 0));
  CHECK(l_after == c35_lehmer(before.diagram(), 1, 1, 1));
  CHECK(apply_chute_lehmer(l_before, 3, 5) == l_after);
  CHECK(tableau_of(l_after) == after);

  const auto wt_before = weight(c35_before), wt_after = weight(c35_after);
  auto expected = wt_before;
  --expected[0];
  ++expected[2];
  CHECK(wt_after == expected);

  CHECK_THROWS_AS(apply_chute_pd(c35_after, 1, 2), Error);
  try {
    apply_chute_it(before, 1, 2);
    FAIL("expected no_move");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::no_move);
  }
}

TEST_CASE("column words") {
  const auto proof = tableau(6, {{{1, 3}, 1}, {{1, 6}, 1}, {{2, 3}, 2}, {{2, 4}, 1}, {{2, 5}, 1},
                                 {{2, 6}, 2}, {{4, 5}, 4}, {{4, 6}, 4}, {{5, 6}, 3}});
  const auto w6 = word_c(proof, 6);
  CHECK(w6 == std::vector<int>{1, 2, 4, 3});
  CHECK(extend_to_sn(w6, 7) == P("1243567"));

  const auto inv_grass = tableau(8, {{{6, 7}, 5}, {{3, 4}, 3}, {{3, 5}, 3}, {{3, 7}, 2},
                                     {{1, 2}, 1}, {{1, 4}, 1}, {{1, 5}, 1}, {{1, 7}, 1}});
  const auto w7 = word_c(inv_grass, 7);
  CHECK(w7 == std::vector<int>{1, 2, 5});
  CHECK(extend_to_sn(w7, 8) == P("12534678"));

  CHECK(word_c(proof, 1).empty());
  CHECK(extend_to_sn(std::vector<int>{}, 4) == P("1234"));
  CHECK_THROWS_AS(extend_to_sn(std::vector<int>{2, 2}, 4), Error);
  CHECK_THROWS_AS(extend_to_sn(std::vector<int>{5}, 4), Error);
  CHECK_THROWS_AS(word_c(proof, 7), Error);
}

TEST_CASE("partial Lehmer codes") {
  CHECK(partial_code(std::vector<int>{3}) == std::vector<int>{2});
  CHECK(partial_code(std::vector<int>{2, 7, 1, 3}) == std::vector<int>{1, 5, 0, 0});
  CHECK(from_partial_code(std::vector<int>{1, 5, 0, 0}) == std::vector<int>{2, 7, 1, 3});
  CHECK_THROWS_AS(partial_code(std::vector<int>{1, 1}), Error);
  CHECK_THROWS_AS(from_partial_code(std::vector<int>{-1}), Error);
  // Agrees with the full Lehmer code on permutations.
  for (const auto& w : all_permutations(5)) {
    const auto code = lehmer_code(w);
    std::vector<int> values;
    for (int i = 1; i <= 5; ++i) values.push_back(w(i));
    const auto pc = partial_code(values);
    CHECK(std::equal(pc.begin(), pc.end(), code.entries().begin(), code.entries().end()));
  }
  // Every code of length 3 with entries < 4 round trips.
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        const std::vector<int> code{a, b, c};
        const auto u = from_partial_code(code);
        CHECK(partial_code(u) == code);
        CHECK(std::set<int>(u.begin(), u.end()).size() == 3);
      }
}

TEST_CASE("Lehmer tableaux") {
  // One box with entry a gives a - 1.
  const auto t21 = tableau(2, {{{1, 2}, 1}});
  CHECK(lehmer_tableau(t21)(1, 2) == 0);
  for (int n = 2; n <= 5; ++n)
    for (const auto& w : all_permutations(n))
      for (const auto& t : enumerate_IT(w)) {
        const auto l = lehmer_tableau(t);
        CHECK(tableau_of(l) == t);
        for (int c = 2; c <= n; ++c) {
          CHECK(word_c(l, c) == partial_code(word_c(t, c)));
          // Entry counts the smaller values missing below it.
          const auto word = word_c(t, c);
          for (std::size_t k = 0; k < word.size(); ++k) {
            int missing = 0;
            for (int v = 1; v < word[k]; ++v)
              missing += std::find(word.begin(), word.begin() + k, v) == word.begin() + k;
            CHECK(word_c(l, c)[k] == missing);
          }
          CHECK(row_bound_equivalence(l, c));
        }
      }
}

TEST_CASE("row bound lemma") {
  const auto d = diagram_of(P("321"));
  StaircaseFilling f(3);
  f.set({1, 3}, 1);
  const LehmerTableau bad{d, f};
  CHECK(!row_bound_equivalence(bad, 3));
  CHECK(tableau_of(bad)(1, 3) == 2);
  CHECK_THROWS_AS(row_bound_equivalence(bad, 1), Error);

  // Every filling of the S_4 staircase with entries 0..3.
  const auto d4 = diagram_of(P("4321"));
  const auto boxes = staircase_boxes(4);
  std::vector<int> v(boxes.size(), 0);
  while (true) {
    StaircaseFilling g(4);
    for (std::size_t k = 0; k < boxes.size(); ++k) g.set(boxes[k], v[k]);
    const LehmerTableau l{d4, g};
    const auto t = tableau_of(l);
    for (int c = 2; c <= 4; ++c) {
      bool bounded = true;
      for (int r = 1; r < c; ++r) bounded = bounded && t(r, c) <= r;
      CHECK(row_bound_equivalence(l, c) == bounded);
    }
    std::size_t k = 0;
    while (k < v.size() && v[k] == 3) v[k++] = 0;
    if (k == v.size()) break;
    ++v[k];
  }
}

TEST_CASE("chute moves on S_5") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& w : all_permutations(n)) {
      const auto rp = enumerate_RP(w);
      const std::set<PipeDream> all(rp.begin(), rp.end());
      for (const auto& p : rp) {
        const auto t = phi(p);
        const auto moves = chute_moves_pd(p);
        auto it_moves = chute_moves_it(t);
        std::sort(it_moves.begin(), it_moves.end());
        CHECK(it_moves == moves);
        for (auto [i, j] : moves) {
          const auto q = apply_chute_pd(p, i, j);
          CHECK(all.count(q) == 1);
          CHECK(q.crosses().size() == p.crosses().size());
          const auto t2 = apply_chute_it(t, i, j);
          CHECK(phi(q) == t2);
          CHECK(phi_inverse(t2) == q);

          // The moved crossing goes from row a to row b.
          const int a = t(i, j), b = t2(i, j);
          CHECK(b > a);
          auto wt = weight(p);
          --wt[a - 1];
          ++wt[b - 1];
          CHECK(weight(q) == wt);

          for (int c = 2; c <= n; ++c) {
            const auto before = word_c(t, c), after = word_c(t2, c);
            const auto u = extend_to_sn(before, n), v = extend_to_sn(after, n);
            CHECK((u == v || mediocre_covers(u, v)));

            const auto lb = word_c(lehmer_tableau(t), c), la = word_c(lehmer_tableau(t2), c);
            std::vector<int> diff;
            for (std::size_t k = 0; k < lb.size(); ++k) diff.push_back(la[k] - lb[k]);
            const auto changed = std::count_if(diff.begin(), diff.end(), [](int x) { return x != 0; });
            CHECK(changed <= 1);
            for (std::size_t k = 0; k < diff.size(); ++k)
              if (diff[k] != 0) {
                CHECK(diff[k] == 1);
                // The raised position is the one in row i.
                int row = 0, seen = -1;
                while (seen < int(k)) seen += t.diagram().contains(++row, c);
                CHECK(row == i);
              }
          }

          // Column j gets a new value; later columns trade a and b between rows i and j.
          for (const Box& x : t.diagram().shaded()) {
            if (t(x) == t2(x)) continue;
            const bool own = x.row == i && x.col == j;
            const bool traded = x.col > j && ((x.row == i && t(x) == a && t2(x) == b) ||
                                              (x.row == j && t(x) == b && t2(x) == a));
            CHECK((own || traded));
            if (x.row == i) {
              for (int y = a + 1; y < b; ++y) {
                bool below = false;
                for (int r = 1; r < i; ++r) below = below || (t.diagram().contains(r, x.col) && t(r, x.col) == y);
                CHECK(below);
              }
            }
          }
          for (int k = j + 1; k <= n; ++k)
            CHECK((t(i, k) != t2(i, k)) == (t(j, k) != t2(j, k)));
        }
      }
    }
}

TEST_CASE("dominant permutations have no moves") {
  for (const auto& w : all_permutations(5)) {
    if (!is_dominant(w)) continue;
    const auto rp = enumerate_RP(w);
    REQUIRE(rp.size() == 1);
    CHECK(chute_moves_pd(rp[0]).empty());
    const auto poset = build_chute_poset(w);
    CHECK(poset.edges.empty());
    CHECK(is_lattice(poset));
  }
}

TEST_CASE("chute moves generate RP(w) from the top pipe dream") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : all_permutations(n)) {
      const auto rp = enumerate_RP(w);
      const auto top = top_pd(w);
      CHECK(permutation_of(top) == w);
      CHECK(top == phi_inverse(lex_min_tableau(w)));
      CHECK(bottom_pd(w) == phi_inverse(lex_max_tableau(w)));
      CHECK(closure(top) == std::set<PipeDream>(rp.begin(), rp.end()));
      CHECK(chute_moves_pd(bottom_pd(w)).empty());
    }
}

TEST_CASE("chute posets") {
  const auto poset = build_chute_poset(P("431562"));
  CHECK(poset.vertices.size() == 3);
  CHECK(std::is_sorted(poset.vertices.begin(), poset.vertices.end()));
  CHECK(is_lattice(poset));
  const auto reach = reachability(poset);
  // A chain from the top pipe dream down to the bottom one.
  const auto top = std::find(poset.vertices.begin(), poset.vertices.end(), top_pd(P("431562"))) - poset.vertices.begin();
  for (std::size_t v = 0; v < 3; ++v) CHECK(reach[top][v]);
  CHECK(poset.edges.size() == 2);

  for (int n = 2; n <= 5; ++n)
    for (const auto& w : all_permutations(n)) {
      const auto p = build_chute_poset(w);
      CHECK(is_lattice(p));
      const auto r = reachability(p);
      // Lambda entries only grow along the order.
      std::vector<LehmerTableau> lam;
      for (const auto& v : p.vertices) lam.push_back(lehmer_tableau(phi(v)));
      for (std::size_t x = 0; x < r.size(); ++x)
        for (std::size_t y = 0; y < r.size(); ++y) {
          if (!r[x][y]) continue;
          for (const Box& b : lam[x].diagram.shaded()) CHECK(lam[x](b.row, b.col) <= lam[y](b.row, b.col));
        }
    }

  // Two incomparable elements with two upper bounds and no least one.
  ChutePoset bowtie;
  bowtie.vertices = {pd(2, {}), pd(2, {}), pd(2, {}), pd(2, {})};
  bowtie.edges = {{0, 2, 1, 2}, {0, 3, 1, 2}, {1, 2, 1, 2}, {1, 3, 1, 2}};
  CHECK(!is_lattice(bowtie));
  ChutePoset cycle;
  cycle.vertices = {pd(2, {}), pd(2, {})};
  cycle.edges = {{0, 1, 1, 2}, {1, 0, 1, 2}};
  CHECK(!is_lattice(cycle));
}

TEST_CASE("dot export") {
  const auto poset = build_chute_poset(P("431562"));
  const auto dot = to_dot(poset);
  CHECK(dot.rfind("digraph chute {\n", 0) == 0);
  CHECK(dot.substr(dot.size() - 2) == "}\n");
  CHECK(std::count(dot.begin(), dot.end(), '\n') == 1 + 3 + 2 + 1);
  CHECK(dot.find("[label=\"C_{") != std::string::npos);
  CHECK(dot.find("x1^3*x2^2*x4*x5") != std::string::npos);
  CHECK(to_dot(build_chute_poset(P("431562"))) == dot);
  CHECK(to_dot(build_chute_poset(P("123"))) == to_dot(build_chute_poset(P("123"))));
}
