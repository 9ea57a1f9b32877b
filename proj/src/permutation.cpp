#include "invtab/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "invtab/error.hpp"

namespace invtab {

namespace {

void require_same_size(const Permutation& u, const Permutation& w) {
  if (u.size() != w.size()) {
    fail(Errc::dimension_mismatch, "permutations " + u.to_string() + " and " +
                                       w.to_string() + " live in different S_n");
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> window) : window_(std::move(window)) {
  if (window_.empty()) fail(Errc::invalid_permutation, "empty permutation");
  std::vector<bool> seen(window_.size() + 1, false);
  for (int v : window_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)]) {
      fail(Errc::invalid_permutation, "not a permutation of 1..n: " + to_string());
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.rbegin(), w.rend(), 1);
  return Permutation(std::move(w));
}

int Permutation::length() const {
  int count = 0;
  for (std::size_t i = 0; i < window_.size(); ++i)
    for (std::size_t j = i + 1; j < window_.size(); ++j)
      if (window_[i] > window_[j]) ++count;
  return count;
}

int Permutation::position_of(int value) const {
  auto it = std::find(window_.begin(), window_.end(), value);
  if (it == window_.end()) fail(Errc::invalid_permutation, "value out of range");
  return static_cast<int>(it - window_.begin()) + 1;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(window_.size());
  for (std::size_t i = 0; i < window_.size(); ++i)
    inv[static_cast<std::size_t>(window_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::swap_positions(int i, int j) const {
  if (i < 1 || j < 1 || i > size() || j > size())
    fail(Errc::invalid_permutation, "position out of range");
  auto w = window_;
  std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(j - 1)]);
  return Permutation(std::move(w));
}

Permutation Permutation::swap_values(int a) const {
  if (a < 1 || a >= size()) fail(Errc::invalid_permutation, "generator out of range");
  auto w = window_;
  for (int& v : w) {
    if (v == a) v = a + 1;
    else if (v == a + 1) v = a;
  }
  return Permutation(std::move(w));
}

std::string Permutation::to_string() const {
  std::string out;
  bool digits = window_.size() <= 9;
  for (std::size_t i = 0; i < window_.size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += std::to_string(window_[i]);
  }
  return out;
}

LehmerCode::LehmerCode(std::vector<int> entries) : entries_(std::move(entries)) {
  const int n = size();
  for (int i = 1; i <= n; ++i) {
    int c = entries_[static_cast<std::size_t>(i - 1)];
    if (c < 0 || c > n - i) {
      fail(Errc::invalid_code, "Lehmer code entry " + std::to_string(i) +
                                   " out of range [0, " + std::to_string(n - i) + "]");
    }
  }
}

int LehmerCode::sum() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

std::vector<Box> inversions(const Permutation& w) {
  std::vector<Box> out;
  const int n = w.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (w(i) > w(j)) out.push_back({i, j});
  return out;
}

LehmerCode lehmer_code(const Permutation& w) {
  const int n = w.size();
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  for (const Box& b : inversions(w)) ++c[static_cast<std::size_t>(b.row - 1)];
  return LehmerCode(std::move(c));
}

LehmerCode lehmer_code_by_values(const Permutation& w) {
  const int n = w.size();
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> c;
  for (int i = 1; i <= n; ++i) {
    int count = 0;
    for (int m = 1; m < w(i); ++m)
      if (!used[static_cast<std::size_t>(m)]) ++count;
    c.push_back(count);
    used[static_cast<std::size_t>(w(i))] = true;
  }
  return LehmerCode(std::move(c));
}

Permutation from_lehmer_code(const LehmerCode& code) {
  const int n = code.size();
  std::vector<int> unused(static_cast<std::size_t>(n));
  std::iota(unused.begin(), unused.end(), 1);
  std::vector<int> w;
  for (int i = 1; i <= n; ++i) {
    auto it = unused.begin() + code(i);
    w.push_back(*it);
    unused.erase(it);
  }
  return Permutation(std::move(w));
}

std::vector<int> column_lehmer_code(const Permutation& w) {
  std::vector<int> c(static_cast<std::size_t>(w.size()), 0);
  for (const Box& b : inversions(w)) ++c[static_cast<std::size_t>(b.col - 1)];
  return c;
}

bool avoids_pattern(const Permutation& w, const Permutation& pattern) {
  const int n = w.size();
  const int k = pattern.size();
  if (k > n) return true;
  // Scan all k-subsets of positions in increasing order.
  std::vector<int> pos(static_cast<std::size_t>(k));
  std::iota(pos.begin(), pos.end(), 1);
  while (true) {
    bool match = true;
    for (int a = 0; a < k && match; ++a)
      for (int b = a + 1; b < k && match; ++b) {
        bool in_w = w(pos[static_cast<std::size_t>(a)]) < w(pos[static_cast<std::size_t>(b)]);
        bool in_p = pattern(a + 1) < pattern(b + 1);
        if (in_w != in_p) match = false;
      }
    if (match) return false;
    int idx = k - 1;
    while (idx >= 0 && pos[static_cast<std::size_t>(idx)] == n - k + idx + 1) --idx;
    if (idx < 0) return true;
    ++pos[static_cast<std::size_t>(idx)];
    for (int t = idx + 1; t < k; ++t)
      pos[static_cast<std::size_t>(t)] = pos[static_cast<std::size_t>(t - 1)] + 1;
  }
}

bool is_dominant(const Permutation& w) {
  const auto code = lehmer_code(w);
  auto c = code.entries();
  return std::is_sorted(c.begin(), c.end(), std::greater<>());
}

std::vector<int> descents(const Permutation& w) {
  std::vector<int> out;
  for (int i = 1; i < w.size(); ++i)
    if (w(i) > w(i + 1)) out.push_back(i);
  return out;
}

std::optional<int> grassmannian_descent(const Permutation& w) {
  auto d = descents(w);
  if (d.size() != 1) return std::nullopt;
  return d.front();
}

bool is_vexillary(const Permutation& w) {
  return avoids_pattern(w, Permutation({2, 1, 4, 3}));
}

bool weak_leq(const Permutation& u, const Permutation& w) {
  require_same_size(u, w);
  auto inv_u = inversions(u);
  auto inv_w = inversions(w);
  return std::includes(inv_w.begin(), inv_w.end(), inv_u.begin(), inv_u.end());
}

bool mediocre_covers(const Permutation& u, const Permutation& w) {
  require_same_size(u, w);
  const int n = u.size();
  std::vector<int> moved;
  for (int p = 1; p <= n; ++p)
    if (u(p) != w(p)) moved.push_back(p);
  if (moved.size() != 2) return false;
  const int i = moved[0];
  const int j = moved[1];
  if (u(i) != w(j) || u(j) != w(i)) return false;
  if (u(i) > u(j)) return false;
  for (int x = u(i) + 1; x < u(j); ++x)
    if (u.position_of(x) >= i) return false;
  return true;
}

bool mediocre_leq(const Permutation& u, const Permutation& w) {
  require_same_size(u, w);
  const auto cu = lehmer_code(u);
  const auto cw = lehmer_code(w);
  auto c = cu.entries();
  auto d = cw.entries();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] > d[i]) return false;
  return true;
}

Permutation mediocre_cover_target(const Permutation& u, int i) {
  const int n = u.size();
  if (i < 1 || i > n) fail(Errc::no_cover, "position out of range");
  int best = 0;
  for (int k = i + 1; k <= n; ++k)
    if (u(k) > u(i) && (best == 0 || u(k) < u(best))) best = k;
  if (best == 0) {
    fail(Errc::no_cover, "no larger value to the right of position " + std::to_string(i) +
                             " in " + u.to_string());
  }
  return u.swap_positions(i, best);
}

bool strong_bruhat_leq(const Permutation& u, const Permutation& w) {
  require_same_size(u, w);
  // Rank-matrix criterion: u <= w iff for all p, q the count
  // #{i <= p : u_i >= q} is at most the same count for w.
  const int n = u.size();
  for (int p = 1; p <= n; ++p)
    for (int q = 1; q <= n; ++q) {
      int cu = 0;
      int cw = 0;
      for (int i = 1; i <= p; ++i) {
        if (u(i) >= q) ++cu;
        if (w(i) >= q) ++cw;
      }
      if (cu > cw) return false;
    }
  return true;
}

Permutation one_m_times(const Permutation& w, int m) {
  if (m < 0) fail(Errc::invalid_permutation, "negative prefix length");
  std::vector<int> out(static_cast<std::size_t>(m));
  std::iota(out.begin(), out.end(), 1);
  for (int v : w.window()) out.push_back(v + m);
  return Permutation(std::move(out));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> values;
  if (text.find(',') == std::string_view::npos) {
    for (char ch : text) {
      if (ch < '1' || ch > '9') {
        fail(Errc::parse_error, "expected digits 1-9 in permutation '" + std::string(text) + "'");
      }
      values.push_back(ch - '0');
    }
    if (values.size() > 9) fail(Errc::parse_error, "digit form is limited to n <= 9");
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      auto token = text.substr(start, end - start);
      int v = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
        fail(Errc::parse_error, "bad entry '" + std::string(token) + "' in permutation");
      }
      values.push_back(v);
      start = end + 1;
    }
  }
  if (values.empty()) fail(Errc::parse_error, "empty permutation");
  try {
    return Permutation(std::move(values));
  } catch (const Error& e) {
    fail(Errc::parse_error, e.what());
  }
}

}  // namespace invtab
