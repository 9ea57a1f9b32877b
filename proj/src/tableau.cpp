#include "invtab/tableau.hpp"

#include <algorithm>
#include <numeric>

#include "invtab/error.hpp"

namespace invtab {

namespace {

std::size_t idx(int i, int j) { return static_cast<std::size_t>(staircase_index(i, j)); }

bool weakly_between(int b, int a, int c) { return std::min(a, c) <= b && b <= std::max(a, c); }

}  // namespace

StaircaseFilling::StaircaseFilling(int n)
    : n_(n), values_(static_cast<std::size_t>(staircase_size(n)), 0) {
  if (n < 1) fail(Errc::invalid_filling, "filling needs n >= 1");
}

StaircaseFilling::StaircaseFilling(int n, std::vector<int> values) : n_(n), values_(std::move(values)) {
  if (n < 1 || values_.size() != static_cast<std::size_t>(staircase_size(n)))
    fail(Errc::invalid_filling, "filling does not cover the staircase exactly");
  for (int v : values_)
    if (v < 0) fail(Errc::invalid_filling, "negative entry in staircase filling");
}

void StaircaseFilling::set(Box b, int value) {
  if (!in_staircase(n_, b)) fail(Errc::invalid_box, "box outside staircase");
  if (value < 0) fail(Errc::invalid_filling, "negative entry in staircase filling");
  values_[idx(b.row, b.col)] = value;
}

InversionsTableau::InversionsTableau(InversionsDiagram diagram, StaircaseFilling filling)
    : diagram_(std::move(diagram)), filling_(std::move(filling)) {
  if (diagram_.n() != filling_.n()) fail(Errc::dimension_mismatch, "diagram and filling sizes differ");
  for (const Box& b : staircase_boxes(diagram_.n())) {
    int v = filling_.at(b);
    if (diagram_.contains(b) && v <= 0) {
      fail(Errc::invalid_filling, "shaded box (" + std::to_string(b.row) + "," +
                                      std::to_string(b.col) + ") needs a positive entry");
    }
    if (!diagram_.contains(b) && v != 0) {
      fail(Errc::invalid_filling, "entry on unshaded box (" + std::to_string(b.row) + "," +
                                      std::to_string(b.col) + ")");
    }
  }
}

InversionsTableau InversionsTableau::from_entries(int n, std::span<const Entry> entries) {
  std::vector<Box> boxes;
  StaircaseFilling filling(n);
  for (const Entry& e : entries) {
    if (!in_staircase(n, e.box)) fail(Errc::invalid_box, "entry outside staircase");
    if (e.value <= 0) fail(Errc::invalid_filling, "entries must be positive");
    boxes.push_back(e.box);
    filling.set(e.box, e.value);
  }
  return {InversionsDiagram(n, std::move(boxes)), std::move(filling)};
}

std::vector<InversionsTableau::Entry> InversionsTableau::entries() const {
  std::vector<Entry> out;
  for (const Box& b : diagram_.shaded()) out.push_back({b, filling_.at(b)});
  return out;
}

std::vector<int> InversionsTableau::weight() const { return weight(n()); }

std::vector<int> InversionsTableau::weight(int arity) const {
  std::vector<int> w(static_cast<std::size_t>(arity), 0);
  for (const Box& b : diagram_.shaded()) {
    int v = filling_.at(b);
    if (v > arity) fail(Errc::internal, "entry exceeds requested weight arity");
    ++w[static_cast<std::size_t>(v - 1)];
  }
  return w;
}

std::vector<Box> hook(int n, int i, int j) {
  if (!in_staircase(n, {i, j})) fail(Errc::invalid_box, "hook corner outside staircase");
  std::vector<Box> out{{i, j}};
  for (int r = i + 1; r < j; ++r) out.push_back({r, j});
  for (int c = i + 1; c < j; ++c) out.push_back({i, c});
  return out;
}

bool is_balanced(const StaircaseFilling& t) {
  std::vector<int> sorted(t.values().begin(), t.values().end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k)
    if (sorted[k] != static_cast<int>(k) + 1) return false;
  return is_weakly_balanced(t);
}

bool is_weakly_balanced(const StaircaseFilling& t) {
  const int n = t.n();
  std::vector<int> values;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) {
      values.clear();
      for (const Box& b : hook(n, i, j)) values.push_back(t.at(b));
      // Hooks have odd size 2(j-i)-1, so the median is a single element.
      const std::size_t mid = (values.size() - 1) / 2;
      std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
      if (values[mid] != t.at(i, j)) return false;
    }
  return true;
}

bool satisfies_rectangle_rule(const StaircaseFilling& t) {
  const int n = t.n();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        if (!weakly_between(t.at(i, k), t.at(i, j), t.at(j, k))) return false;
  return true;
}

namespace {

bool check_support(const InversionsDiagram& d, const StaircaseFilling& t) {
  if (d.n() != t.n()) fail(Errc::dimension_mismatch, "diagram and filling sizes differ");
  for (const Box& b : staircase_boxes(d.n())) {
    if (d.contains(b) && t.at(b) <= 0) fail(Errc::invalid_filling, "non-positive entry on shaded box");
    if (!d.contains(b) && t.at(b) != 0) fail(Errc::invalid_filling, "entry on unshaded box");
  }
  return is_valid(d);
}

bool columns_distinct(const InversionsDiagram& d, const StaircaseFilling& t) {
  const int n = d.n();
  for (int j = 2; j <= n; ++j) {
    std::vector<int> seen;
    for (int i = 1; i < j; ++i)
      if (d.contains(i, j)) seen.push_back(t.at(i, j));
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  }
  return true;
}

}  // namespace

bool is_inversions_tableau(const InversionsDiagram& d, const StaircaseFilling& t) {
  if (!check_support(d, t)) return false;
  if (!is_weakly_balanced(t) || !columns_distinct(d, t)) return false;
  for (int i = 1; i < d.n(); ++i)
    if (t.at(i, i + 1) > i) return false;
  return true;
}

bool is_inversions_tableau_row_bounded(const InversionsDiagram& d, const StaircaseFilling& t) {
  if (!check_support(d, t)) return false;
  if (!satisfies_rectangle_rule(t) || !columns_distinct(d, t)) return false;
  for (const Box& b : d.shaded())
    if (t.at(b) > b.row) return false;
  return true;
}

bool is_inversions_tableau(const InversionsTableau& t) {
  return is_inversions_tableau(t.diagram(), t.filling());
}

void enumerate_fillings(const FillingConstraints& rules,
                        const std::function<bool(const StaircaseFilling&)>& visit) {
  const int n = rules.n;
  const auto boxes = staircase_boxes(n);
  const std::size_t total = boxes.size();
  if (rules.fixed.size() != total || rules.max_entry.size() != total)
    fail(Errc::internal, "filling constraints do not match staircase size");

  std::vector<int> values(total, 0);
  bool stop = false;

  // Checks everything that becomes decidable once box k is assigned: the
  // rectangles whose top-right box is k, column distinctness against free
  // boxes below, and the diagonal bound.
  auto consistent = [&](std::size_t k) {
    const Box b = boxes[k];
    const int v = values[k];
    const bool free = rules.fixed[k] < 0;
    if (free) {
      if (rules.diagonal_bound && b.col == b.row + 1 && v > b.row) return false;
      for (int r = 1; r < b.row; ++r) {
        std::size_t below = idx(r, b.col);
        if (rules.fixed[below] < 0 && values[below] == v) return false;
      }
    }
    for (int i = 1; i < b.row; ++i)
      if (!weakly_between(values[idx(i, b.col)], values[idx(i, b.row)], v)) return false;
    return true;
  };

  std::function<void(std::size_t)> step = [&](std::size_t k) {
    if (stop) return;
    if (k == total) {
      if (!visit(StaircaseFilling(n, values))) stop = true;
      return;
    }
    if (rules.fixed[k] >= 0) {
      values[k] = rules.fixed[k];
      if (consistent(k)) step(k + 1);
      return;
    }
    for (int v = 1; v <= rules.max_entry[k] && !stop; ++v) {
      values[k] = v;
      if (consistent(k)) step(k + 1);
    }
    values[k] = 0;
  };
  step(0);
}

namespace {

FillingConstraints constraints_for(const Permutation& w, int bound_override) {
  const int n = w.size();
  const auto d = diagram_of(w);
  FillingConstraints rules;
  rules.n = n;
  for (const Box& b : staircase_boxes(n)) {
    rules.fixed.push_back(d.contains(b) ? -1 : 0);
    rules.max_entry.push_back(bound_override > 0 ? bound_override : b.row);
  }
  rules.diagonal_bound = bound_override <= 0;
  return rules;
}

}  // namespace

std::vector<InversionsTableau> enumerate_IT(const Permutation& w) {
  // Entries are bounded by their row (IT3'); this is equivalent to IT3 given
  // IT1 and IT2, and the test suite checks the two against each other.
  const auto d = diagram_of(w);
  std::vector<InversionsTableau> out;
  enumerate_fillings(constraints_for(w, 0), [&](const StaircaseFilling& f) {
    out.emplace_back(d, f);
    return true;
  });
  return out;
}

long long count_IT(const Permutation& w, long long limit) {
  long long count = 0;
  enumerate_fillings(constraints_for(w, 0), [&](const StaircaseFilling&) {
    ++count;
    return limit == 0 || count < limit;
  });
  return count;
}

std::vector<InversionsTableau> enumerate_UIT(const Permutation& w, int max_entry) {
  if (max_entry < 1) fail(Errc::invalid_filling, "max entry must be at least 1");
  const auto d = diagram_of(w);
  std::vector<InversionsTableau> out;
  enumerate_fillings(constraints_for(w, max_entry), [&](const StaircaseFilling& f) {
    out.emplace_back(d, f);
    return true;
  });
  return out;
}

InversionsTableau lex_max_tableau(const Permutation& w) {
  auto d = diagram_of(w);
  StaircaseFilling f(w.size());
  for (const Box& b : d.shaded()) f.set(b, b.row);
  return {std::move(d), std::move(f)};
}

InversionsTableau lex_min_tableau(const Permutation& w) {
  auto d = diagram_of(w);
  StaircaseFilling f(w.size());
  // Bottom to top, each shaded box gets the next unused value of its column.
  for (int j = 2; j <= w.size(); ++j) {
    int next = 1;
    for (int i = 1; i < j; ++i)
      if (d.contains(i, j)) f.set({i, j}, next++);
  }
  return {std::move(d), std::move(f)};
}

std::vector<Box> balanced_extension(const StaircaseFilling& t) {
  if (!satisfies_rectangle_rule(t))
    fail(Errc::invalid_filling, "balanced extension needs a weakly balanced filling");
  const int n = t.n();
  // Peel boxes off w0 one weak-order cover at a time, always taking a box of
  // the largest remaining entry; box (i,j) can be removed when positions i
  // and j hold adjacent values. Read from the identity instead, the box with
  // the largest v_i is the crossing furthest left in the pipe dream, and ties
  // go to it.
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.rbegin(), v.rend(), 1);
  std::vector<Box> remaining = staircase_boxes(n);
  std::vector<Box> descending;
  while (!remaining.empty()) {
    int top = 0;
    for (const Box& b : remaining) top = std::max(top, t.at(b));
    auto pick = remaining.end();
    for (auto it = remaining.begin(); it != remaining.end(); ++it) {
      if (t.at(*it) != top) continue;
      if (v[static_cast<std::size_t>(it->row - 1)] != v[static_cast<std::size_t>(it->col - 1)] + 1) continue;
      if (pick == remaining.end() || v[static_cast<std::size_t>(it->row - 1)] > v[static_cast<std::size_t>(pick->row - 1)])
        pick = it;
    }
    if (pick == remaining.end()) fail(Errc::internal, "no admissible box while extending filling");
    std::swap(v[static_cast<std::size_t>(pick->row - 1)], v[static_cast<std::size_t>(pick->col - 1)]);
    descending.push_back(*pick);
    remaining.erase(pick);
  }
  return {descending.rbegin(), descending.rend()};
}

StaircaseFilling relabel(int n, std::span<const Box> order) {
  StaircaseFilling out(n);
  int label = 1;
  for (const Box& b : order) out.set(b, label++);
  return out;
}

StaircaseFilling chain_to_balanced(std::span<const Permutation> chain) {
  if (chain.empty()) fail(Errc::invalid_chain, "empty chain");
  const int n = chain.front().size();
  const int total = staircase_size(n);
  if (static_cast<int>(chain.size()) != total + 1 || chain.front() != Permutation::identity(n) ||
      chain.back() != Permutation::longest(n)) {
    fail(Errc::invalid_chain, "chain must run from the identity to w0 in single steps");
  }
  StaircaseFilling out(n);
  for (std::size_t step = 1; step < chain.size(); ++step) {
    if (chain[step].size() != n) fail(Errc::invalid_chain, "chain mixes different n");
    auto before = inversions(chain[step - 1]);
    auto after = inversions(chain[step]);
    std::vector<Box> added;
    std::set_difference(after.begin(), after.end(), before.begin(), before.end(), std::back_inserter(added));
    if (added.size() != 1 || after.size() != before.size() + 1)
      fail(Errc::invalid_chain, "chain step is not a weak-order cover");
    out.set(added.front(), static_cast<int>(step));
  }
  return out;
}

std::vector<Permutation> balanced_to_chain(const StaircaseFilling& b) {
  const int n = b.n();
  const auto boxes = staircase_boxes(n);
  std::vector<Box> order(boxes.size());
  std::vector<bool> seen(boxes.size() + 1, false);
  for (const Box& box : boxes) {
    int label = b.at(box);
    if (label < 1 || label > static_cast<int>(boxes.size()) || seen[static_cast<std::size_t>(label)])
      fail(Errc::invalid_filling, "labels must be a bijection onto 1..n(n-1)/2");
    seen[static_cast<std::size_t>(label)] = true;
    order[static_cast<std::size_t>(label - 1)] = box;
  }
  std::vector<Permutation> chain{Permutation::identity(n)};
  std::vector<Box> current;
  for (const Box& box : order) {
    current.push_back(box);
    if (!is_valid_inversion_set(current, n))
      fail(Errc::invalid_filling, "filling is not balanced: a prefix is not an inversion set");
    chain.push_back(permutation_of(InversionsDiagram(n, current)));
  }
  return chain;
}

std::vector<std::vector<Permutation>> maximal_chains(int n) {
  std::vector<std::vector<Permutation>> out;
  std::vector<Permutation> chain{Permutation::identity(n)};
  const Permutation top = Permutation::longest(n);
  std::function<void()> grow = [&]() {
    const Permutation cur = chain.back();
    if (cur == top) {
      out.push_back(chain);
      return;
    }
    // Covers in weak order: swap adjacent values a, a+1 that are in order.
    for (int a = 1; a < n; ++a) {
      if (cur.position_of(a) < cur.position_of(a + 1)) {
        chain.push_back(cur.swap_values(a));
        grow();
        chain.pop_back();
      }
    }
  };
  grow();
  return out;
}

}  // namespace invtab
