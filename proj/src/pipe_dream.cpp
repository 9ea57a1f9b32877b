#include "invtab/pipe_dream.hpp"

#include <algorithm>
#include <numeric>

#include "invtab/error.hpp"

namespace invtab {

namespace {

bool in_region(int n, Box b) { return b.row >= 1 && b.col >= 1 && b.row + b.col <= n; }

}  // namespace

PipeDream::PipeDream(int n, std::vector<Box> crosses) : n_(n), crosses_(std::move(crosses)) {
  if (n < 1) fail(Errc::invalid_diagram, "pipe dream needs n >= 1");
  std::sort(crosses_.begin(), crosses_.end());
  crosses_.erase(std::unique(crosses_.begin(), crosses_.end()), crosses_.end());
  for (const Box& b : crosses_) {
    if (!in_region(n, b)) {
      fail(Errc::invalid_box, "cross (" + std::to_string(b.row) + "," + std::to_string(b.col) +
                                  ") outside the region r+c <= " + std::to_string(n));
    }
  }
}

bool PipeDream::has_cross(int r, int c) const {
  return std::binary_search(crosses_.begin(), crosses_.end(), Box{r, c});
}

Trace trace(const PipeDream& p) {
  const int n = p.n();
  const auto side = static_cast<std::size_t>(n + 2);
  std::vector<char> grid(side * side, 0);
  auto cell = [&](int r, int c) -> char& { return grid[static_cast<std::size_t>(r) * side + static_cast<std::size_t>(c)]; };
  for (const Box& b : p.crosses()) cell(b.row, b.col) = 1;

  std::map<Box, Crossing> met;
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int pipe = 1; pipe <= n; ++pipe) {
    int r = pipe;
    int c = 1;
    bool right = true;
    while (r >= 1) {
      if (r + c == n + 1) {
        right = false;
      } else if (cell(r, c)) {
        auto& x = met.try_emplace(Box{r, c}, Crossing{{r, c}, 0, 0}).first->second;
        (right ? x.over : x.up) = pipe;
      } else {
        right = !right;
      }
      if (right) ++c;
      else --r;
    }
    w[static_cast<std::size_t>(pipe - 1)] = c;
  }
  Trace out{Permutation(std::move(w)), {}};
  for (auto& [box, x] : met) out.crossings.push_back(x);
  return out;
}

Permutation permutation_of(const PipeDream& p) { return trace(p).permutation; }

std::vector<int> weight(const PipeDream& p) {
  std::vector<int> d(static_cast<std::size_t>(p.n()), 0);
  for (const Box& b : p.crosses()) ++d[static_cast<std::size_t>(b.row - 1)];
  return d;
}

bool is_reduced(const PipeDream& p) {
  return static_cast<int>(p.size()) == permutation_of(p).length();
}

std::vector<int> reading_word(const PipeDream& p) {
  std::vector<int> word;
  for (int r = 1; r < p.n(); ++r)
    for (int c = p.n() - r; c >= 1; --c)
      if (p.has_cross(r, c)) word.push_back(r + c - 1);
  return word;
}

std::vector<PipeDream> enumerate_RP(const Permutation& w) {
  // Depth-first over cells in reading order, peeling letters off the left of
  // the remaining permutation. A cross is only placed when its letter is a
  // left descent, so every leaf with nothing left is a reduced factorization.
  const int n = w.size();
  std::vector<Box> cells;
  for (int r = 1; r < n; ++r)
    for (int c = n - r; c >= 1; --c) cells.push_back({r, c});

  std::vector<int> pos(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) pos[static_cast<std::size_t>(w(i))] = i;
  std::vector<Box> chosen;
  std::vector<PipeDream> out;
  const int total = static_cast<int>(cells.size());

  std::function<void(int, int)> step = [&](int k, int left) {
    if (left > total - k) return;
    if (k == total) {
      out.emplace_back(n, chosen);
      return;
    }
    const Box b = cells[static_cast<std::size_t>(k)];
    const bool row_end = b.col == 1;
    // Letters from later rows are all larger than this row, so the values up
    // to this row must already be in place once the row is done.
    auto settled = [&] { return !row_end || pos[static_cast<std::size_t>(b.row)] == b.row; };
    const auto a = static_cast<std::size_t>(b.row + b.col - 1);
    if (pos[a + 1] < pos[a]) {
      std::swap(pos[a], pos[a + 1]);
      chosen.push_back(b);
      if (settled()) step(k + 1, left - 1);
      chosen.pop_back();
      std::swap(pos[a], pos[a + 1]);
    }
    if (settled()) step(k + 1, left);
  };
  step(0, w.length());
  std::sort(out.begin(), out.end());
  return out;
}

InversionsTableau phi(const PipeDream& p) {
  auto t = trace(p);
  if (static_cast<int>(t.crossings.size()) != t.permutation.length())
    fail(Errc::not_reduced, "phi needs a reduced pipe dream");
  std::vector<InversionsTableau::Entry> entries;
  for (const Crossing& x : t.crossings)
    entries.push_back({{std::min(x.over, x.up), std::max(x.over, x.up)}, x.cell.row});
  return InversionsTableau::from_entries(p.n(), entries);
}

namespace {

struct Insertion {
  Box cell;
  int letter;
  int row;
};

// Grows the pipe dream of T from the bottom up: boxes in decreasing order of
// a balanced extension, each one crossing two pipes that currently exit in
// adjacent columns.
std::vector<Insertion> insertion_sequence(const InversionsTableau& t) {
  if (!is_inversions_tableau(t)) fail(Errc::invalid_filling, "not an inversions tableau");
  const int n = t.n();
  const auto order = balanced_extension(t.filling());
  std::vector<int> v(static_cast<std::size_t>(n) + 1);
  std::iota(v.begin(), v.end(), 0);
  std::vector<Insertion> out;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (!t.diagram().contains(*it)) continue;
    const auto i = static_cast<std::size_t>(it->row);
    const auto j = static_cast<std::size_t>(it->col);
    const int a = v[i];
    if (v[j] != a + 1) fail(Errc::internal, "pipes to be crossed are not adjacent");
    const int r = t(*it);
    const Box cell{r, a + 1 - r};
    if (!in_region(n, cell)) fail(Errc::internal, "crossing falls outside the pipe dream");
    out.push_back({cell, a, r});
    std::swap(v[i], v[j]);
  }
  return out;
}

}  // namespace

PipeDream phi_inverse(const InversionsTableau& t) {
  std::vector<Box> crosses;
  for (const Insertion& ins : insertion_sequence(t)) crosses.push_back(ins.cell);
  const std::size_t count = crosses.size();
  PipeDream p(t.n(), std::move(crosses));
  if (p.size() != count || !(phi(p) == t)) fail(Errc::internal, "phi_inverse did not invert phi");
  return p;
}

Permutation product_of_word(int n, std::span<const int> word) {
  Permutation u = Permutation::identity(n);
  for (auto it = word.rbegin(); it != word.rend(); ++it) u = u.swap_values(*it);
  return u;
}

bool is_reduced_word_for(const Permutation& w, std::span<const int> word) {
  const int n = w.size();
  for (int a : word)
    if (a < 1 || a >= n) return false;
  return static_cast<int>(word.size()) == w.length() && product_of_word(n, word) == w;
}

bool is_compatible(const CompatiblePair& pair, const Permutation& w) {
  const auto& a = pair.word;
  const auto& alpha = pair.weights;
  if (a.size() != alpha.size() || !is_reduced_word_for(w, a)) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (alpha[k] < 1 || alpha[k] > a[k]) return false;
    if (k + 1 < a.size()) {
      if (alpha[k] > alpha[k + 1]) return false;
      if (a[k] < a[k + 1] && alpha[k] == alpha[k + 1]) return false;
    }
  }
  return true;
}

CompatiblePair compatible_pair(const InversionsTableau& t) {
  CompatiblePair out;
  const auto seq = insertion_sequence(t);
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    out.word.push_back(it->letter);
    out.weights.push_back(it->row);
  }
  return out;
}

std::map<std::pair<int, int>, int> balanced_labelling_of(const InversionsTableau& t) {
  const Permutation w = t.permutation();
  std::map<std::pair<int, int>, int> out;
  for (const auto& e : t.entries()) out[{e.box.row, w(e.box.col)}] = e.value;
  return out;
}

std::string render(const PipeDream& p) {
  std::string out;
  for (int r = 1; r < p.n(); ++r) {
    for (int c = 1; r + c <= p.n(); ++c) out += p.has_cross(r, c) ? "+" : "·";
    out += '\n';
  }
  return out;
}

}  // namespace invtab
