#include "invtab/young.hpp"

#include <algorithm>
#include <numeric>

#include "invtab/error.hpp"

namespace invtab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0 || (i > 0 && parts_[i] > parts_[i - 1]))
      fail(Errc::shape_mismatch, "parts must be non-negative and weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::operator[](int i) const {
  return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (mu[i] > (*this)[i]) return false;
  return true;
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

bool has_shape(const YoungTableau& t) {
  if (!t.outer.contains(t.inner)) return false;
  if (static_cast<int>(t.rows.size()) != t.outer.length()) return false;
  for (int r = 1; r <= t.outer.length(); ++r)
    if (static_cast<int>(t.rows[static_cast<std::size_t>(r - 1)].size()) != t.outer[r] - t.inner[r]) return false;
  return true;
}

namespace {

// Entry at (r,c) in absolute coordinates, or nullopt outside the skew shape.
std::optional<int> cell(const YoungTableau& t, int r, int c) {
  if (r < 1 || r > t.outer.length() || c <= t.inner[r] || c > t.outer[r]) return std::nullopt;
  return t.rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - t.inner[r] - 1)];
}

bool monotone(const YoungTableau& t, bool increasing) {
  if (!has_shape(t)) return false;
  for (int r = 1; r <= t.outer.length(); ++r)
    for (int c = t.inner[r] + 1; c <= t.outer[r]; ++c) {
      int v = *cell(t, r, c);
      if (v < 1) return false;
      if (auto left = cell(t, r, c - 1); left && (increasing ? *left > v : *left < v)) return false;
      if (auto up = cell(t, r - 1, c); up && (increasing ? *up >= v : *up <= v)) return false;
    }
  return true;
}

}  // namespace

bool is_ssyt(const YoungTableau& t) {
  if (!monotone(t, true)) return false;
  if (t.flags) {
    if (static_cast<int>(t.flags->size()) < t.outer.length()) return false;
    for (int r = 1; r <= t.outer.length(); ++r)
      for (int v : t.rows[static_cast<std::size_t>(r - 1)])
        if (v > (*t.flags)[static_cast<std::size_t>(r - 1)]) return false;
  }
  return true;
}

bool is_reverse_ssyt(const YoungTableau& t) { return monotone(t, false); }

std::vector<int> weight(const YoungTableau& t, int arity) {
  std::vector<int> w(static_cast<std::size_t>(arity), 0);
  for (const auto& row : t.rows)
    for (int v : row) {
      if (v < 1 || v > arity) fail(Errc::dimension_mismatch, "tableau entry exceeds weight arity");
      ++w[static_cast<std::size_t>(v - 1)];
    }
  return w;
}

void enumerate_ssyt(const Partition& outer, const Partition& inner, const std::vector<int>& bounds,
                    const std::function<bool(const YoungTableau&)>& visit) {
  if (!outer.contains(inner)) fail(Errc::shape_mismatch, "inner shape not contained in outer shape");
  if (static_cast<int>(bounds.size()) < outer.length())
    fail(Errc::shape_mismatch, "fewer row bounds than rows");
  YoungTableau t{outer, inner, {}, std::nullopt};
  std::vector<std::pair<int, int>> cells;
  for (int r = 1; r <= outer.length(); ++r) {
    t.rows.emplace_back(static_cast<std::size_t>(outer[r] - inner[r]), 0);
    for (int c = inner[r] + 1; c <= outer[r]; ++c) cells.emplace_back(r, c);
  }
  bool stop = false;
  std::function<void(std::size_t)> step = [&](std::size_t k) {
    if (stop) return;
    if (k == cells.size()) {
      if (!visit(t)) stop = true;
      return;
    }
    auto [r, c] = cells[k];
    int lo = 1;
    if (auto left = cell(t, r, c - 1)) lo = std::max(lo, *left);
    if (auto up = cell(t, r - 1, c)) lo = std::max(lo, *up + 1);
    int& slot = t.rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - inner[r] - 1)];
    for (int v = lo; v <= bounds[static_cast<std::size_t>(r - 1)] && !stop; ++v) {
      slot = v;
      step(k + 1);
    }
    slot = 0;
  };
  step(0);
}

std::vector<YoungTableau> ssyt(const Partition& outer, const Partition& inner, int k) {
  std::vector<YoungTableau> out;
  enumerate_ssyt(outer, inner, std::vector<int>(static_cast<std::size_t>(outer.length()), k),
                 [&](const YoungTableau& t) {
                   out.push_back(t);
                   return true;
                 });
  return out;
}

std::vector<YoungTableau> flagged_ssyt(const Partition& shape, const std::vector<int>& flags) {
  if (!std::is_sorted(flags.begin(), flags.end()))
    fail(Errc::shape_mismatch, "flags must be weakly increasing");
  std::vector<YoungTableau> out;
  enumerate_ssyt(shape, Partition(), flags, [&](const YoungTableau& t) {
    out.push_back(t);
    out.back().flags = flags;
    return true;
  });
  return out;
}

namespace {

Polynomial generating_sum(const Partition& outer, const Partition& inner,
                          const std::vector<int>& bounds, int arity) {
  Polynomial f(arity);
  if (outer.length() > static_cast<int>(bounds.size())) return f;
  enumerate_ssyt(outer, inner, bounds, [&](const YoungTableau& t) {
    f.add_term(weight(t, arity), 1);
    return true;
  });
  return f;
}

}  // namespace

Polynomial schur(const Partition& lambda, int k) {
  if (k < 0) fail(Errc::dimension_mismatch, "negative number of variables");
  if (lambda.length() > k) return Polynomial(k);
  return generating_sum(lambda, Partition(), std::vector<int>(static_cast<std::size_t>(lambda.length()), k), k);
}

Polynomial flagged_schur(const Partition& lambda, const std::vector<int>& flags) {
  if (!std::is_sorted(flags.begin(), flags.end()))
    fail(Errc::shape_mismatch, "flags must be weakly increasing");
  if (static_cast<int>(flags.size()) < lambda.length())
    fail(Errc::shape_mismatch, "fewer flags than rows");
  const int arity = flags.empty() ? 0 : std::max(flags.back(), 0);
  return generating_sum(lambda, Partition(), flags, arity);
}

Polynomial skew_schur(const Partition& lambda, const Partition& mu, int k) {
  if (!lambda.contains(mu)) fail(Errc::shape_mismatch, "skew shape needs mu inside lambda");
  return generating_sum(lambda, mu, std::vector<int>(static_cast<std::size_t>(lambda.length()), k), k);
}

std::map<Partition, mpz_class> schur_expand(const Polynomial& f) {
  const int k = f.arity();
  std::map<Partition, mpz_class> out;
  Polynomial rest = f;
  while (!rest.is_zero()) {
    const auto& [lead, coef] = *rest.terms().begin();
    if (!std::is_sorted(lead.begin(), lead.end(), std::greater<>()))
      fail(Errc::expansion_failed, "leading term is not a partition; input is not symmetric");
    Partition lambda(lead);
    mpz_class c = coef;
    out[lambda] += c;
    rest -= c * schur(lambda, k);
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == 0) it = out.erase(it);
    else ++it;
  }
  return out;
}

mpz_class lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() != mu.size() + nu.size()) return 0;
  if (!lambda.contains(mu) || !lambda.contains(nu)) return 0;
  // Restricting to l(lambda) variables kills only Schur functions with more
  // rows, so the coefficient of s_lambda survives unchanged.
  const int k = std::max(lambda.length(), 1);
  auto expansion = schur_expand(schur(mu, k) * schur(nu, k));
  auto it = expansion.find(lambda);
  return it == expansion.end() ? mpz_class(0) : it->second;
}

}  // namespace invtab
