#include "invtab/grassmann.hpp"

#include "invtab/error.hpp"

namespace invtab {

namespace {

void require_grassmannian(const Permutation& w, int k) {
  if (!is_grassmannian(w, k))
    fail(Errc::not_grassmannian, w.to_string() + " is not Grassmannian with descent " + std::to_string(k));
}

}  // namespace

bool is_grassmannian(const Permutation& w, int k) {
  if (k < 1 || k >= w.size()) return false;
  for (int d : descents(w))
    if (d != k) return false;
  return true;
}

Partition lambda_of(const Permutation& w, int k) {
  require_grassmannian(w, k);
  std::vector<int> parts;
  for (int i = k; i >= 1; --i) parts.push_back(w(i) - i);
  return Partition(std::move(parts));
}

YoungTableau it_to_reverse_ssyt(const InversionsTableau& t, int k) {
  const Permutation w = t.permutation();
  const Partition lambda = lambda_of(w, k);
  YoungTableau out{lambda, Partition(), {}, std::nullopt};
  for (int r = 1; r <= lambda.length(); ++r) {
    std::vector<int> row;
    for (int c = 1; c <= lambda[r]; ++c) row.push_back(t(k + 1 - r, k + c));
    out.rows.push_back(std::move(row));
  }
  return out;
}

InversionsTableau reverse_ssyt_to_it(const YoungTableau& r, const Permutation& w, int k) {
  const Partition lambda = lambda_of(w, k);
  if (r.outer != lambda || r.inner.length() != 0 || !has_shape(r))
    fail(Errc::shape_mismatch, "tableau shape differs from " + lambda.to_string());
  StaircaseFilling f(w.size());
  for (int i = 1; i <= lambda.length(); ++i)
    for (int c = 1; c <= lambda[i]; ++c)
      f.set({k + 1 - i, k + c}, r.rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(c - 1)]);
  return {diagram_of(w), std::move(f)};
}

FlaggedShape inverse_grassmannian_shape(const Permutation& w, int k) {
  require_grassmannian(w, k);
  std::vector<int> parts;
  std::vector<int> flags;
  for (int i = 1; i <= w.size() - k; ++i) {
    int b = w(k + i);
    if (k + i - b <= 0) continue;
    parts.push_back(k + i - b);
    flags.push_back(b);
  }
  return {Partition(std::move(parts)), std::move(flags)};
}

YoungTableau inverse_grassmannian_to_flagged(const InversionsTableau& t, const Permutation& w, int k) {
  auto [shape, flags] = inverse_grassmannian_shape(w, k);
  if (t.permutation() != w.inverse()) fail(Errc::shape_mismatch, "tableau is not for w^-1");
  YoungTableau out{shape, Partition(), {}, flags};
  for (int i = 1; i <= shape.length(); ++i) {
    std::vector<int> row;
    for (int c = 1; c <= shape[i]; ++c) row.push_back(t(flags[static_cast<std::size_t>(i - 1)], w(k + 1 - c)));
    out.rows.push_back(std::move(row));
  }
  return out;
}

InversionsTableau flagged_to_inverse_grassmannian(const YoungTableau& y, const Permutation& w, int k) {
  auto [shape, flags] = inverse_grassmannian_shape(w, k);
  if (y.outer != shape || y.inner.length() != 0 || !has_shape(y))
    fail(Errc::shape_mismatch, "tableau shape differs from " + shape.to_string());
  StaircaseFilling f(w.size());
  for (int i = 1; i <= shape.length(); ++i)
    for (int c = 1; c <= shape[i]; ++c)
      f.set({flags[static_cast<std::size_t>(i - 1)], w(k + 1 - c)},
            y.rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(c - 1)]);
  return {diagram_of(w.inverse()), std::move(f)};
}

std::vector<int> SkewInversionsTableau::weight(int arity) const {
  std::vector<int> m(static_cast<std::size_t>(arity), 0);
  for (const Box& b : outer.shaded()) {
    if (inner.contains(b)) continue;
    int v = filling.at(b);
    if (v > arity) fail(Errc::dimension_mismatch, "entry exceeds weight arity");
    ++m[static_cast<std::size_t>(v - 1)];
  }
  return m;
}

std::vector<SkewInversionsTableau> enumerate_skew_IT(const Permutation& w, const Permutation& u, int k) {
  require_grassmannian(w, k);
  require_grassmannian(u, k);
  if (u.size() != w.size() || !weak_leq(u, w))
    fail(Errc::not_comparable, u.to_string() + " is not below " + w.to_string() + " in weak order");
  const int n = w.size();
  auto outer = diagram_of(w);
  auto inner = diagram_of(u);
  FillingConstraints rules;
  rules.n = n;
  for (const Box& b : staircase_boxes(n)) {
    rules.fixed.push_back(inner.contains(b) ? k : outer.contains(b) ? -1 : 0);
    rules.max_entry.push_back(n);
  }
  std::vector<SkewInversionsTableau> out;
  enumerate_fillings(rules, [&](const StaircaseFilling& f) {
    out.push_back({outer, inner, k, f});
    return true;
  });
  return out;
}

Polynomial skew_schubert_G(const Permutation& w, const Permutation& u, int k) {
  Polynomial g(w.size());
  for (const auto& t : enumerate_skew_IT(w, u, k)) g.add_term(t.weight(w.size()), 1);
  return g;
}

}  // namespace invtab
