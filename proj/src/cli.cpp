#include "invtab/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

#include "invtab/chute.hpp"
#include "invtab/error.hpp"
#include "invtab/grassmann.hpp"
#include "invtab/json_io.hpp"
#include "invtab/pipe_dream.hpp"
#include "invtab/schubert.hpp"
#include "invtab/verify.hpp"

namespace invtab::cli {

namespace {

struct Options {
  std::string w;
  std::string u;
  std::string method = "dd";
  std::string what = "tableaux";
  std::string dir;
  std::string poly_format = "text";
  std::string poset_format = "dot";
  int max_entry = 0;
  int vars = 0;
  int k = 0;
  int n = 0;
  std::string suite = "all";
};

void print_polynomial(std::ostream& out, const Polynomial& f, const std::string& format) {
  if (format == "json") out << to_json(f).dump() << '\n';
  else out << f.to_string() << '\n';
}

Json expansion_json(const std::map<Partition, mpz_class>& e) {
  Json out = Json::array();
  // Largest partitions first, matching the term order of polynomials.
  for (auto it = e.rbegin(); it != e.rend(); ++it)
    out.push_back({{"lambda", to_json(it->first)}, {"coef", to_json(it->second)}});
  return out;
}

int cmd_schubert(const Options& o, std::ostream& out) {
  const auto w = parse_permutation(o.w);
  Polynomial f;
  if (o.method == "dd") f = schubert_dd(w);
  else if (o.method == "tableaux") f = schubert_from_tableaux(w);
  else f = schubert_from_pipedreams(w);
  print_polynomial(out, f, o.poly_format);
  return 0;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const auto w = parse_permutation(o.w);
  Json arr = Json::array();
  if (o.what == "tableaux") {
    for (const auto& t : enumerate_IT(w)) arr.push_back(to_json(t));
  } else if (o.what == "pipedreams") {
    for (const auto& p : enumerate_RP(w)) arr.push_back(to_json(p));
  } else {
    if (o.max_entry < 1) fail(Errc::parse_error, "--what uit needs --max-entry >= 1");
    for (const auto& t : enumerate_UIT(w, o.max_entry)) arr.push_back(to_json(t));
  }
  out << arr.dump() << '\n';
  return 0;
}

int cmd_bijection(const Options& o, std::istream& in, std::ostream& out) {
  Json input;
  try {
    input = Json::parse(in);
  } catch (const Json::exception& e) {
    fail(Errc::parse_error, std::string("stdin is not JSON: ") + e.what());
  }
  if (o.dir == "pd2it") {
    out << to_json(phi(pipe_dream_from_json(input))).dump() << '\n';
  } else {
    const auto t = tableau_from_json(input);
    if (!is_inversions_tableau(t)) fail(Errc::invalid_filling, "input is not an inversions tableau");
    out << to_json(phi_inverse(t)).dump() << '\n';
  }
  return 0;
}

int cmd_stanley(const Options& o, std::ostream& out) {
  print_polynomial(out, stanley_truncated(parse_permutation(o.w), o.vars), o.poly_format);
  return 0;
}

int cmd_grassmann(const Options& o, std::ostream& out) {
  const auto w = parse_permutation(o.w);
  Json result = Json::object();
  if (auto k = grassmannian_descent(w)) {
    Json list = Json::array();
    for (const auto& t : enumerate_IT(w)) list.push_back(to_json(it_to_reverse_ssyt(t, *k)));
    result["grassmannian"] = {{"k", *k}, {"lambda", to_json(lambda_of(w, *k))}, {"reverse_ssyt", list}};
  }
  const auto v = w.inverse();
  if (auto k = grassmannian_descent(v)) {
    const auto [shape, flags] = inverse_grassmannian_shape(v, *k);
    Json list = Json::array();
    for (const auto& t : enumerate_IT(w)) list.push_back(to_json(inverse_grassmannian_to_flagged(t, v, *k)));
    result["inverse_grassmannian"] = {
        {"k", *k}, {"lambda", to_json(shape)}, {"flags", flags}, {"flagged_ssyt", list}};
  }
  if (result.empty()) fail(Errc::not_grassmannian, w.to_string() + " is neither Grassmannian nor inverse Grassmannian");
  out << result.dump() << '\n';
  return 0;
}

int cmd_skew(const Options& o, std::ostream& out) {
  const auto w = parse_permutation(o.w);
  const auto u = parse_permutation(o.u);
  const auto g = skew_schubert_G(w, u, o.k);
  Json result = {{"G", to_json(g)}, {"schur_expansion", expansion_json(schur_expand(g.truncated(o.k)))}};
  out << result.dump() << '\n';
  return 0;
}

int cmd_poset(const Options& o, std::ostream& out) {
  const auto poset = build_chute_poset(parse_permutation(o.w));
  if (o.poset_format == "json") out << to_json(poset).dump() << '\n';
  else out << to_dot(poset);
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  bool ok = true;
  for (const auto& r : run_suite(o.n, o.suite)) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " [" << r.detail << "]\n";
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schubert polynomials through inversions tableaux and pipe dreams"};
  app.require_subcommand(1);
  Options o;

  auto* schubert = app.add_subcommand("schubert", "Schubert polynomial of w");
  schubert->add_option("w", o.w, "permutation, e.g. 431562 or 4,3,1,5,6,2")->required();
  schubert->add_option("--method", o.method)->check(CLI::IsMember({"dd", "tableaux", "pipedreams"}));
  schubert->add_option("--format", o.poly_format)->check(CLI::IsMember({"text", "json"}));

  auto* enumerate = app.add_subcommand("enumerate", "list tableaux or pipe dreams of w as JSON");
  enumerate->add_option("w", o.w)->required();
  enumerate->add_option("--what", o.what)->check(CLI::IsMember({"tableaux", "pipedreams", "uit"}));
  enumerate->add_option("--max-entry", o.max_entry, "entry bound for --what uit");

  auto* bijection = app.add_subcommand("bijection", "map a pipe dream or tableau read from stdin");
  bijection->add_option("--dir", o.dir)->required()->check(CLI::IsMember({"pd2it", "it2pd"}));

  auto* stanley = app.add_subcommand("stanley", "Stanley symmetric function in M variables");
  stanley->add_option("w", o.w)->required();
  stanley->add_option("--vars", o.vars)->required()->check(CLI::PositiveNumber);
  stanley->add_option("--format", o.poly_format)->check(CLI::IsMember({"text", "json"}));

  auto* grassmann = app.add_subcommand("grassmann", "shape and tableaux of a (inverse) Grassmannian w");
  grassmann->add_option("w", o.w)->required();

  auto* skew = app.add_subcommand("skew", "skew Schubert polynomial G_{w/u} and its Schur expansion");
  skew->add_option("w", o.w)->required();
  skew->add_option("u", o.u)->required();
  skew->add_option("--k", o.k)->required()->check(CLI::PositiveNumber);

  auto* poset = app.add_subcommand("poset", "chute move poset of w");
  poset->add_option("w", o.w)->required();
  poset->add_option("--format", o.poset_format)->check(CLI::IsMember({"dot", "json"}));

  auto* verify = app.add_subcommand("verify", "run the property suite on S_N");
  verify->add_option("--n", o.n)->required()->check(CLI::Range(2, 8));
  verify->add_option("--suite", o.suite)->check(CLI::IsMember({"all", "core", "grassmann", "chute"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*schubert) return cmd_schubert(o, out);
    if (*enumerate) return cmd_enumerate(o, out);
    if (*bijection) return cmd_bijection(o, in, out);
    if (*stanley) return cmd_stanley(o, out);
    if (*grassmann) return cmd_grassmann(o, out);
    if (*skew) return cmd_skew(o, out);
    if (*poset) return cmd_poset(o, out);
    if (*verify) return cmd_verify(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::parse_error ? 2 : 1;
  }
  return 2;
}

}  // namespace invtab::cli
