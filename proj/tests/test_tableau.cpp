#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "invtab/error.hpp"
#include "invtab/tableau.hpp"

using namespace invtab;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

StaircaseFilling filling3(int t12, int t13, int t23) {
  StaircaseFilling f(3);
  f.set({1, 2}, t12);
  f.set({1, 3}, t13);
  f.set({2, 3}, t23);
  return f;
}

// Median test written out from the hook definition.
bool weakly_balanced_oracle(const StaircaseFilling& t) {
  const int n = t.n();
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      std::vector<int> h{t.at(i, j)};
      for (int r = i + 1; r < j; ++r) h.push_back(t.at(r, j));
      for (int c = i + 1; c < j; ++c) h.push_back(t.at(i, c));
      std::sort(h.begin(), h.end());
      if (h[h.size() / 2] != t.at(i, j)) return false;
    }
  return true;
}

bool it_oracle(const InversionsDiagram& d, const StaircaseFilling& t) {
  if (!weakly_balanced_oracle(t)) return false;
  const int n = d.n();
  for (int j = 2; j <= n; ++j) {
    std::set<int> seen;
    for (int i = 1; i < j; ++i)
      if (d.contains(i, j) && !seen.insert(t.at(i, j)).second) return false;
  }
  for (int i = 1; i < n; ++i)
    if (d.contains(i, i + 1) && t.at(i, i + 1) > i) return false;
  return true;
}

// Every filling of the shaded boxes with 1..(row), filtered by the oracle.
std::vector<StaircaseFilling> brute_force_IT(const Permutation& w) {
  const auto d = diagram_of(w);
  const std::vector<Box> shaded(d.shaded().begin(), d.shaded().end());
  std::vector<StaircaseFilling> out;
  std::vector<int> v(shaded.size(), 1);
  while (true) {
    StaircaseFilling f(w.size());
    for (std::size_t k = 0; k < shaded.size(); ++k) f.set(shaded[k], v[k]);
    if (it_oracle(d, f)) out.push_back(f);
    std::size_t k = 0;
    while (k < v.size() && v[k] == shaded[k].row) v[k++] = 1;
    if (k == v.size()) break;
    ++v[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

InversionsTableau example_tableau(int t46, int t56) {
  const std::vector<InversionsTableau::Entry> e{{{1, 2}, 1}, {{1, 3}, 1}, {{1, 6}, 1}, {{2, 3}, 2},
                                                {{2, 6}, 2}, {{4, 6}, t46}, {{5, 6}, t56}};
  return InversionsTableau::from_entries(6, e);
}

}  // namespace

TEST_CASE("hooks") {
  CHECK(hook(4, 1, 3) == std::vector<Box>{{1, 3}, {2, 3}, {1, 2}});
  CHECK(hook(5, 3, 4) == std::vector<Box>{{3, 4}});
  CHECK(hook(6, 1, 6).size() == 9);
  for (int i = 1; i < 6; ++i)
    for (int j = i + 1; j <= 6; ++j) CHECK(hook(6, i, j).size() == std::size_t(2 * (j - i) - 1));
  CHECK_THROWS_AS(hook(4, 3, 3), Error);
}

TEST_CASE("balanced fillings") {
  CHECK(is_balanced(filling3(1, 2, 3)));
  CHECK(!is_balanced(filling3(1, 3, 2)));
  CHECK(is_weakly_balanced(StaircaseFilling(5)));
  // Labels must be exactly 1..3.
  CHECK(!is_balanced(filling3(1, 1, 1)));
  int balanced = 0;
  std::vector<int> labels{1, 2, 3};
  do {
    balanced += is_balanced(StaircaseFilling(3, labels));
  } while (std::next_permutation(labels.begin(), labels.end()));
  CHECK(balanced == 2);
}

TEST_CASE("weak balance, rectangle rule and the median oracle") {
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        const auto f = filling3(a, b, c);
        const bool between = (a <= b && b <= c) || (c <= b && b <= a);
        CHECK(satisfies_rectangle_rule(f) == between);
        CHECK(is_weakly_balanced(f) == between);
        CHECK(weakly_balanced_oracle(f) == between);
      }
  std::mt19937 rng(5);
  int hits = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    StaircaseFilling f(5);
    // Small alphabets make weakly balanced fillings common enough to matter.
    std::uniform_int_distribution<int> pick(0, trial % 3 + 1);
    for (const Box& b : staircase_boxes(5)) f.set(b, pick(rng));
    const bool ok = weakly_balanced_oracle(f);
    CHECK(is_weakly_balanced(f) == ok);
    CHECK(satisfies_rectangle_rule(f) == ok);
    hits += ok;
  }
  CHECK(hits > 100);
}

TEST_CASE("inversions tableau rules") {
  const auto t = example_tableau(4, 5);
  CHECK(t.permutation() == P("431562"));
  CHECK(is_inversions_tableau(t));
  CHECK(t.weight() == std::vector<int>{3, 2, 0, 1, 1, 0});
  CHECK(is_inversions_tableau(example_tableau(3, 5)));
  CHECK(is_inversions_tableau(example_tableau(3, 4)));
  const auto bad = example_tableau(4, 6);
  CHECK(!is_inversions_tableau(bad));
  CHECK(!is_inversions_tableau_row_bounded(bad.diagram(), bad.filling()));
  CHECK(is_inversions_tableau(InversionsTableau::from_entries(4, {})));
  // Two equal entries in column 6.
  CHECK(!is_inversions_tableau(example_tableau(2, 5)));
  const std::vector<InversionsTableau::Entry> off{{{1, 2}, 1}, {{2, 3}, 1}};
  // Not an inversion set: (1,3) missing.
  CHECK(!is_inversions_tableau(InversionsTableau::from_entries(3, off)));
  const std::vector<InversionsTableau::Entry> zero{{{1, 2}, 0}};
  CHECK_THROWS_AS(InversionsTableau::from_entries(2, zero), Error);
}

TEST_CASE("enumerate_IT matches brute force") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& w : all_permutations(n)) {
      std::vector<StaircaseFilling> got;
      for (const auto& t : enumerate_IT(w)) got.push_back(t.filling());
      std::sort(got.begin(), got.end());
      CHECK(got == brute_force_IT(w));
    }
  const auto ts = enumerate_IT(P("431562"));
  REQUIRE(ts.size() == 3);
  std::set<std::vector<int>> weights;
  for (const auto& t : ts) weights.insert(t.weight());
  CHECK(weights == std::set<std::vector<int>>{{3, 2, 0, 1, 1, 0}, {3, 2, 1, 0, 1, 0}, {3, 2, 1, 1, 0, 0}});
  CHECK(enumerate_IT(P("12345")).size() == 1);
  CHECK(count_IT(P("431562")) == 3);
  CHECK(count_IT(P("154326"), 2) == 2);
}

TEST_CASE("dominant permutations have one tableau filled by rows") {
  for (const auto& w : all_permutations(6)) {
    if (!is_dominant(w)) continue;
    const auto ts = enumerate_IT(w);
    REQUIRE(ts.size() == 1);
    for (const auto& e : ts[0].entries()) CHECK(e.value == e.box.row);
  }
}

TEST_CASE("IT3 and IT3' agree on candidate fillings") {
  for (const auto& w : all_permutations(5)) {
    const auto d = diagram_of(w);
    for (const auto& t : enumerate_UIT(w, 4))
      CHECK(is_inversions_tableau(d, t.filling()) == is_inversions_tableau_row_bounded(d, t.filling()));
  }
}

TEST_CASE("unbounded tableaux") {
  CHECK(enumerate_UIT(P("21"), 2).size() == 2);
  std::set<std::vector<int>> weights;
  for (const auto& t : enumerate_UIT(P("321"), 2)) weights.insert(t.weight(2));
  CHECK(weights == std::set<std::vector<int>>{{2, 1}, {1, 2}});
  for (const auto& w : all_permutations(4)) {
    const auto uit = enumerate_UIT(w, 3);
    for (const auto& t : enumerate_IT(w)) CHECK(std::find(uit.begin(), uit.end(), t) != uit.end());
  }
}

TEST_CASE("lex extremal tableaux") {
  CHECK(lex_max_tableau(P("431562")).weight() == std::vector<int>{3, 2, 0, 1, 1, 0});
  CHECK(lex_min_tableau(P("431562")).weight() == std::vector<int>{3, 2, 1, 1, 0, 0});
  CHECK(lex_max_tableau(P("431562")) == example_tableau(4, 5));
  CHECK(lex_min_tableau(P("431562")) == example_tableau(3, 4));
  for (const auto& w : all_permutations(5)) {
    const auto ts = enumerate_IT(w);
    CHECK(std::find(ts.begin(), ts.end(), lex_max_tableau(w)) != ts.end());
    CHECK(std::find(ts.begin(), ts.end(), lex_min_tableau(w)) != ts.end());
    // Column by column from the bottom, the smallest unused value.
    const auto d = diagram_of(w);
    StaircaseFilling expected(5);
    for (int j = 2; j <= 5; ++j) {
      int next = 1;
      for (int i = 1; i < j; ++i)
        if (d.contains(i, j)) expected.set({i, j}, next++);
    }
    CHECK(lex_min_tableau(w).filling() == expected);
    if (is_dominant(w)) CHECK(lex_max_tableau(w) == lex_min_tableau(w));
  }
}

TEST_CASE("balanced extensions") {
  const auto w0 = InversionsTableau::from_entries(3, std::vector<InversionsTableau::Entry>{
                                                         {{1, 2}, 1}, {{1, 3}, 1}, {{2, 3}, 2}});
  CHECK(balanced_extension(w0.filling()) == std::vector<Box>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(is_balanced(relabel(3, balanced_extension(StaircaseFilling(3)))));
  for (int n = 2; n <= 5; ++n)
    for (const auto& w : all_permutations(n))
      for (const auto& t : enumerate_IT(w)) {
        const auto order = balanced_extension(t.filling());
        REQUIRE(order.size() == std::size_t(staircase_size(n)));
        for (std::size_t k = 1; k < order.size(); ++k) CHECK(t(order[k - 1]) <= t(order[k]));
        CHECK(is_balanced(relabel(n, order)));
      }
}

TEST_CASE("maximal chains and balanced tableaux") {
  CHECK(maximal_chains(2).size() == 1);
  CHECK(chain_to_balanced(maximal_chains(2)[0]).at(1, 2) == 1);
  const std::vector<Permutation> chain{P("123"), P("132"), P("231"), P("321")};
  const auto b = chain_to_balanced(chain);
  CHECK(b.at(2, 3) == 1);
  CHECK(b.at(1, 3) == 2);
  CHECK(b.at(1, 2) == 3);
  CHECK(balanced_to_chain(b) == chain);
  CHECK_THROWS_AS(chain_to_balanced(std::vector<Permutation>{P("123"), P("321")}), Error);

  const auto chains = maximal_chains(4);
  CHECK(chains.size() == 16);
  std::set<StaircaseFilling> images;
  for (const auto& c : chains) {
    const auto t = chain_to_balanced(c);
    CHECK(is_balanced(t));
    CHECK(balanced_to_chain(t) == c);
    images.insert(t);
  }
  // Every balanced labelling of the S_4 staircase is hit.
  std::vector<int> labels{1, 2, 3, 4, 5, 6};
  int balanced = 0;
  do {
    const StaircaseFilling f(4, labels);
    if (is_balanced(f)) {
      ++balanced;
      CHECK(images.count(f) == 1);
    }
  } while (std::next_permutation(labels.begin(), labels.end()));
  CHECK(balanced == 16);
}
