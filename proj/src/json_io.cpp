#include "invtab/json_io.hpp"

#include <limits>

#include "invtab/error.hpp"

namespace invtab {

namespace {

Json boxes(std::span<const Box> bs) {
  Json out = Json::array();
  for (const Box& b : bs) out.push_back({b.row, b.col});
  return out;
}

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    fail(Errc::parse_error, std::string("malformed ") + what + " JSON: " + e.what());
  }
}

int get_n(const Json& j) {
  int n = j.at("n").get<int>();
  if (n < 1) fail(Errc::parse_error, "\"n\" must be positive");
  return n;
}

}  // namespace

Json to_json(const Permutation& w) { return Json(std::vector<int>(w.window().begin(), w.window().end())); }

Json to_json(const InversionsDiagram& d) { return {{"n", d.n()}, {"shaded", boxes(d.shaded())}}; }

Json to_json(const InversionsTableau& t) {
  Json entries = Json::array();
  for (const auto& e : t.entries()) entries.push_back({e.box.row, e.box.col, e.value});
  return {{"n", t.n()}, {"entries", entries}};
}

Json to_json(const PipeDream& p) { return {{"n", p.n()}, {"crosses", boxes(p.crosses())}}; }

Json to_json(const mpz_class& c) {
  if (c.fits_slong_p()) return static_cast<long long>(c.get_si());
  return c.get_str();
}

Json to_json(const Polynomial& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"exp", e}, {"coef", to_json(c)}});
  return {{"arity", f.arity()}, {"terms", terms}};
}

Json to_json(const Partition& p) { return Json(std::vector<int>(p.parts().begin(), p.parts().end())); }

Json to_json(const YoungTableau& t) {
  Json out = {{"outer", to_json(t.outer)}, {"inner", to_json(t.inner)}, {"rows", t.rows}};
  if (t.flags) out["flags"] = *t.flags;
  return out;
}

Json to_json(const ChutePoset& poset) {
  Json vertices = Json::array();
  for (const auto& p : poset.vertices) vertices.push_back(to_json(p));
  Json edges = Json::array();
  for (const auto& e : poset.edges) edges.push_back({e.from, e.to, e.i, e.j});
  return {{"vertices", vertices}, {"edges", edges}};
}

Permutation permutation_from_json(const Json& j) {
  auto w = guarded("permutation", [&] { return j.get<std::vector<int>>(); });
  try {
    return Permutation(std::move(w));
  } catch (const Error& e) {
    fail(Errc::parse_error, e.what());
  }
}

InversionsDiagram diagram_from_json(const Json& j) {
  return guarded("diagram", [&] {
    std::vector<Box> shaded;
    for (const auto& b : j.at("shaded")) shaded.push_back({b.at(0).get<int>(), b.at(1).get<int>()});
    return InversionsDiagram(get_n(j), std::move(shaded));
  });
}

InversionsTableau tableau_from_json(const Json& j) {
  return guarded("tableau", [&] {
    std::vector<InversionsTableau::Entry> entries;
    for (const auto& e : j.at("entries")) {
      if (e.size() != 3) fail(Errc::parse_error, "tableau entries are [i, j, value]");
      entries.push_back({{e.at(0).get<int>(), e.at(1).get<int>()}, e.at(2).get<int>()});
    }
    return InversionsTableau::from_entries(get_n(j), entries);
  });
}

PipeDream pipe_dream_from_json(const Json& j) {
  return guarded("pipe dream", [&] {
    std::vector<Box> crosses;
    for (const auto& b : j.at("crosses")) crosses.push_back({b.at(0).get<int>(), b.at(1).get<int>()});
    return PipeDream(get_n(j), std::move(crosses));
  });
}

Polynomial polynomial_from_json(const Json& j) {
  return guarded("polynomial", [&] {
    Polynomial f(j.at("arity").get<int>());
    for (const auto& t : j.at("terms")) {
      const auto& c = t.at("coef");
      mpz_class coef;
      if (!c.is_string()) coef = c.get<long>();
      else if (coef.set_str(c.get<std::string>(), 10) != 0) fail(Errc::parse_error, "bad coefficient");
      f.add_term(t.at("exp").get<Exponent>(), coef);
    }
    return f;
  });
}

}  // namespace invtab
