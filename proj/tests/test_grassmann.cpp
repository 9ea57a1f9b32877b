#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "invtab/error.hpp"
#include "invtab/grassmann.hpp"
#include "invtab/schubert.hpp"

using namespace invtab;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }
Partition L(std::vector<int> p) { return Partition(std::move(p)); }

InversionsTableau tableau(int n, std::vector<InversionsTableau::Entry> e) {
  return InversionsTableau::from_entries(n, e);
}

// Reverse SSYT of lambda/mu with entries 1..k, by brute force.
int count_reverse_ssyt(const Partition& lambda, const Partition& mu, int k) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 1; r <= lambda.length(); ++r)
    for (int c = mu[r] + 1; c <= lambda[r]; ++c) cells.push_back({r, c});
  std::vector<int> v(cells.size(), 1);
  int count = 0;
  while (true) {
    std::map<std::pair<int, int>, int> at;
    for (std::size_t q = 0; q < cells.size(); ++q) at[cells[q]] = v[q];
    bool ok = true;
    for (const auto& [rc, x] : at) {
      const auto left = at.find({rc.first, rc.second - 1});
      const auto up = at.find({rc.first - 1, rc.second});
      if (left != at.end() && left->second < x) ok = false;
      if (up != at.end() && up->second <= x) ok = false;
    }
    count += ok;
    std::size_t q = 0;
    while (q < v.size() && v[q] == k) v[q++] = 1;
    if (q == v.size()) break;
    ++v[q];
  }
  return count;
}

}  // namespace

TEST_CASE("Grassmannian shapes") {
  CHECK(is_grassmannian(P("346912578"), 4));
  CHECK(!is_grassmannian(P("346912578"), 3));
  CHECK(is_grassmannian(P("1234"), 2));
  CHECK(lambda_of(P("346912578"), 4) == L({5, 3, 2, 2}));
  CHECK(lambda_of(P("24571368"), 4) == L({3, 2, 2, 1}));
  CHECK_THROWS_AS(lambda_of(P("2143"), 1), Error);
  // Shaded boxes of a k-Grassmannian diagram form lambda with corner (k, k+1).
  for (int n = 2; n <= 7; ++n)
    for (const auto& w : all_permutations(n))
      for (int k = 1; k < n; ++k) {
        if (!is_grassmannian(w, k)) continue;
        const auto lambda = lambda_of(w, k);
        const auto d = diagram_of(w);
        int boxes = 0;
        for (int r = 1; r <= k; ++r)
          for (int c = 1; c <= lambda[r]; ++c) {
            CHECK(d.contains(k + 1 - r, k + c));
            ++boxes;
          }
        CHECK(boxes == w.length());
      }
}

TEST_CASE("worked Grassmannian tableau") {
  const auto w = P("346912578");
  const auto t = tableau(9, {{{4, 5}, 4}, {{4, 6}, 4}, {{4, 7}, 4}, {{4, 8}, 2}, {{4, 9}, 2},
                             {{3, 5}, 3}, {{3, 6}, 3}, {{3, 7}, 1}, {{2, 5}, 2}, {{2, 6}, 2},
                             {{1, 5}, 1}, {{1, 6}, 1}});
  REQUIRE(t.permutation() == w);
  CHECK(is_inversions_tableau(t));
  const auto r = it_to_reverse_ssyt(t, 4);
  CHECK(r.outer == L({5, 3, 2, 2}));
  CHECK(r.rows == std::vector<std::vector<int>>{{4, 4, 4, 2, 2}, {3, 3, 1}, {2, 2}, {1, 1}});
  CHECK(is_reverse_ssyt(r));
  CHECK(reverse_ssyt_to_it(r, w, 4) == t);
}

TEST_CASE("Grassmannian Schubert polynomials are Schur polynomials") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& w : all_permutations(n)) {
      const auto k = grassmannian_descent(w);
      if (!k) continue;
      const auto lambda = lambda_of(w, *k);
      CHECK(schubert_dd(w) == schur(lambda, *k).extended(n));
      const auto ts = enumerate_IT(w);
      CHECK(int(ts.size()) == count_reverse_ssyt(lambda, Partition(), *k));
      std::set<std::vector<std::vector<int>>> seen;
      for (const auto& t : ts) {
        const auto r = it_to_reverse_ssyt(t, *k);
        CHECK(is_reverse_ssyt(r));
        CHECK(reverse_ssyt_to_it(r, w, *k) == t);
        // Entries carry over unchanged, so the weights agree.
        std::vector<int> wt(n, 0);
        for (const auto& row : r.rows)
          for (int v : row) ++wt[v - 1];
        CHECK(wt == t.weight());
        seen.insert(r.rows);
      }
      CHECK(seen.size() == ts.size());
    }
}

TEST_CASE("worked inverse Grassmannian tableau") {
  const auto w = P("24571368");
  const auto [shape, flags] = inverse_grassmannian_shape(w, 4);
  CHECK(shape == L({4, 3, 1}));
  CHECK(flags == std::vector<int>{1, 3, 6});
  const auto t = tableau(8, {{{6, 7}, 5}, {{3, 4}, 3}, {{3, 5}, 3}, {{3, 7}, 2},
                             {{1, 2}, 1}, {{1, 4}, 1}, {{1, 5}, 1}, {{1, 7}, 1}});
  REQUIRE(t.permutation() == w.inverse());
  CHECK(is_inversions_tableau(t));
  const auto y = inverse_grassmannian_to_flagged(t, w, 4);
  CHECK(y.rows == std::vector<std::vector<int>>{{1, 1, 1, 1}, {2, 3, 3}, {5}});
  CHECK(is_ssyt(y));
  CHECK(flagged_to_inverse_grassmannian(y, w, 4) == t);
  CHECK_THROWS_AS(inverse_grassmannian_to_flagged(t, w.inverse(), 4), Error);
}

TEST_CASE("inverse Grassmannian Schubert polynomials are flagged Schur polynomials") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& w : all_permutations(n)) {
      const auto k = grassmannian_descent(w);
      if (!k) continue;
      const auto [shape, flags] = inverse_grassmannian_shape(w, *k);
      const auto v = w.inverse();
      if (shape.length() == 0) {
        CHECK(v == Permutation::identity(n));
        continue;
      }
      CHECK(schubert_dd(v) == flagged_schur(shape, flags).extended(n));
      const auto ts = enumerate_IT(v);
      CHECK(ts.size() == flagged_ssyt(shape, flags).size());
      for (const auto& t : ts) {
        const auto y = inverse_grassmannian_to_flagged(t, w, *k);
        CHECK(is_ssyt(y));
        CHECK(flagged_to_inverse_grassmannian(y, w, *k) == t);
      }
    }
}

TEST_CASE("worked skew tableau") {
  const auto w = P("257813469"), u = P("125734689");
  REQUIRE(weak_leq(u, w));
  CHECK(lambda_of(w, 4) == L({4, 4, 3, 1}));
  CHECK(lambda_of(u, 4) == L({3, 2}));
  const auto all = enumerate_skew_IT(w, u, 4);
  StaircaseFilling f(9);
  for (const Box& b : std::vector<Box>{{4, 5}, {4, 6}, {4, 7}, {3, 5}, {3, 6}}) f.set(b, 4);
  f.set({4, 8}, 4);
  f.set({3, 7}, 3);
  f.set({3, 8}, 2);
  f.set({2, 5}, 4);
  f.set({2, 6}, 1);
  f.set({2, 7}, 1);
  f.set({1, 5}, 2);
  const auto it = std::find_if(all.begin(), all.end(), [&](const auto& s) { return s.filling == f; });
  REQUIRE(it != all.end());
  CHECK(it->weight(4) == std::vector<int>{2, 2, 1, 2});
  CHECK(int(all.size()) == count_reverse_ssyt(L({4, 4, 3, 1}), L({3, 2}), 4));
  CHECK(skew_schubert_G(w, u, 4) == skew_schur(L({4, 4, 3, 1}), L({3, 2}), 4).extended(9));
  CHECK_THROWS_AS(enumerate_skew_IT(u, w, 4), Error);
}

TEST_CASE("skew identity on S_6") {
  for (const auto& w : all_permutations(6))
    for (const auto& u : all_permutations(6))
      for (int k = 1; k < 6; ++k) {
        if (!is_grassmannian(w, k) || !is_grassmannian(u, k) || !weak_leq(u, w)) continue;
        const auto lw = lambda_of(w, k), lu = lambda_of(u, k);
        const auto g = skew_schubert_G(w, u, k);
        CHECK(g == skew_schur(lw, lu, k).extended(6));
        CHECK(int(enumerate_skew_IT(w, u, k).size()) == count_reverse_ssyt(lw, lu, k));
      }
}
