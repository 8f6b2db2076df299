#include "wedgekit/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "wedgekit/json_io.hpp"
#include "wedgekit/selftest.hpp"

namespace wedgekit::cli {

namespace {

using nlohmann::json;
using namespace json_io;

struct Response {
  json input;
  json result;
  std::optional<bool> verdict;  // set for yes/no queries
  std::string statement;
  std::string summary;
};

struct Field {
  std::string name;
  std::string help;
};

struct Command {
  std::string name;
  std::string description;
  std::vector<Field> fields;
  std::function<Response(const json&)> handler;
};

const json& need(const json& req, const std::string& key) {
  auto it = req.find(key);
  WEDGEKIT_REQUIRE(it != req.end(), "request is missing \"" + key + "\"");
  return *it;
}

json listify(const json& j) { return j.is_array() ? j : json::array({j}); }

// A group may be given as {"factors":[...]} or as a bare factor list.
FinGenAbGroup group_arg(const json& j) {
  if (j.is_object()) return group_from_json(j);
  return FinGenAbGroup(integers_from_json(listify(j), "factors"));
}

// A tuple may list {"coords":[...]} objects or bare coordinate arrays.
ElementTuple tuple_arg(const json& j, const FinGenAbGroup& g) {
  WEDGEKIT_REQUIRE(j.is_array(), "tuple must be an array of elements");
  ElementTuple out;
  for (const auto& e : j)
    out.push_back(e.is_object() ? element_from_json(e, g) : g.element(integers_from_json(listify(e), "coords")));
  return out;
}

std::size_t size_arg(const json& j, const std::string& what) {
  const Integer x = integer_from_json(j, what);
  WEDGEKIT_REQUIRE(x >= 0 && x.fits_ulong_p(), what + " must be a nonnegative machine-size integer");
  return x.get_ui();
}

void require_generating(const ElementTuple& t, const FinGenAbGroup& g, const char* name) {
  WEDGEKIT_REQUIRE(is_generating(t, g), std::string("tuple ") + name + " does not generate " + g.to_string());
}

Response cmd_snf(const json& req) {
  const IntMatrix m = matrix_from_json(need(req, "matrix"), "matrix");
  const SnfResult r = snf(m);
  WEDGEKIT_ENSURE(r.u * m * r.v == r.s, "Smith normal form transforms do not reproduce the diagonal");
  return {json{{"matrix", to_json(m)}},
          json{{"s", to_json(r.s)}, {"u", to_json(r.u)}, {"v", to_json(r.v)}, {"diagonal", to_json(r.diagonal())}},
          std::nullopt, "smith-normal-form", "u * matrix * v = s with s in Smith normal form"};
}

Response cmd_wedge(const json& req) {
  const FinGenAbGroup g = group_arg(need(req, "group"));
  const ElementTuple t = tuple_arg(need(req, "tuple"), g);
  const WedgeElement w = wedge(g, t);
  return {json{{"group", to_json(g)}, {"tuple", to_json(t)}},
          json{{"wedge", to_json(w)}, {"class", to_json(class_of(w).representative())}, {"is_generator", is_generator(w)}},
          std::nullopt, "wedge-invariant", "wedge of the tuple in the exterior power of the group"};
}

Response cmd_elemops(const json& req) {
  const FinGenAbGroup g = group_arg(need(req, "group"));
  const ElementTuple a = tuple_arg(need(req, "a"), g);
  const ElementTuple b = tuple_arg(need(req, "b"), g);
  WEDGEKIT_REQUIRE(a.size() == b.size(), "tuples a and b have different lengths");
  require_generating(a, g, "a");
  require_generating(b, g, "b");
  json input{{"group", to_json(g)}, {"a", to_json(a)}, {"b", to_json(b)}};
  const char* statement = "elementary-operations-lemma";
  const char* summary = "generating tuples with equal wedges are related by elementary operations";
  if (!(wedge(g, a) == wedge(g, b)))
    return {input, json{{"reachable", false}, {"ops", nullptr}}, false, statement, summary};
  const auto ops = synthesize_elem_ops(a, b);
  WEDGEKIT_ENSURE(replay(a, ops) == b, "synthesized operations do not reproduce b");
  json list = json::array();
  for (const auto& op : ops) list.push_back(to_json(op));
  return {input, json{{"reachable", true}, {"ops", list}}, true, statement, summary};
}

Response cmd_glz(const json& req) {
  const FinGenAbGroup g = group_arg(need(req, "group"));
  const ElementTuple a = tuple_arg(need(req, "a"), g);
  const ElementTuple b = tuple_arg(need(req, "b"), g);
  WEDGEKIT_REQUIRE(a.size() == b.size(), "tuples a and b have different lengths");
  require_generating(a, g, "a");
  require_generating(b, g, "b");
  json input{{"group", to_json(g)}, {"a", to_json(a)}, {"b", to_json(b)}};
  const bool eq = class_of(wedge(g, a)) == class_of(wedge(g, b));
  json result{{"equivalent", eq}, {"witness", nullptr}};
  if (eq) result["witness"] = to_json(glz_witness(a, b));
  return {input, result, eq, "wedge-criterion", "generating tuples are GL_d(Z)-equivalent iff their wedges agree up to sign"};
}

Response cmd_symplectic(const json& req) {
  const FinGenAbGroup base = group_arg(need(req, "base"));
  const SymplecticSpace s(base);
  json input{{"base", to_json(base)}};
  std::optional<BilinearForm> form;
  if (req.contains("gram")) {
    form = form_from_json(json{{"base", to_json(base)}, {"gram", req["gram"]}});
  } else {
    form = s.form();
  }
  input["gram"] = to_json(*form, base)["gram"];
  const bool alt = is_alternating(*form);
  const bool nondeg = is_nondegenerate(*form);
  json result{{"alternating", alt}, {"nondegenerate", nondeg}, {"symplectic", alt && nondeg}};
  bool verdict = alt && nondeg;
  const bool has_modulus = base.rank() > 0 && base.factor(0) >= 2;
  if (req.contains("matrix")) {
    const IntMatrix c = matrix_from_json(req["matrix"], "matrix");
    input["matrix"] = to_json(c);
    const bool pres = preserves_form(c, s);
    result["preserves_form"] = pres;
    verdict = verdict && pres;
    if (pres) {
      const Integer d = det_mod_n1(c, s);
      result["det_mod_n1"] = to_json(d);
      if (has_modulus) {
        const Integer via_pf = pfaffian_congruence_check(c, base.factors());
        WEDGEKIT_ENSURE(via_pf == d, "Pfaffian route disagrees with the determinant");
        result["pfaffian_det_mod_n1"] = to_json(via_pf);
      }
      const bool trivial = !has_modulus || d == mod_floor(1, base.factor(0));
      WEDGEKIT_ENSURE(trivial, "form-preserving automorphism with determinant " + d.get_str() + " mod n_1");
      result["trivial_on_top_wedge"] = trivial;
    }
  }
  if (req.contains("enumerate") && req["enumerate"].is_boolean() && req["enumerate"].get<bool>()) {
    const Integer cap = req.contains("cap") ? integer_from_json(req["cap"], "cap") : Integer(4096);
    input["enumerate"] = true;
    input["cap"] = to_json(cap);
    const auto autos = enumerate_form_automorphisms(s, cap);
    bool all_one = true;
    for (const auto& c : autos)
      if (has_modulus && det_mod_n1(c, s) != mod_floor(1, base.factor(0))) all_one = false;
    WEDGEKIT_ENSURE(all_one, "an enumerated automorphism has nontrivial determinant mod n_1");
    result["automorphisms"] = autos.size();
    result["all_det_one"] = all_one;
  }
  return {input, result, verdict, "symplectic-determinant-lemma",
          "automorphisms preserving a symplectic form act trivially on the top exterior power"};
}

Response cmd_classify_equiv(const json& req) {
  const RepSpec v = rep_from_json(need(req, "v"));
  const RepSpec w = rep_from_json(need(req, "w"));
  const bool eq = birationally_equivalent(v, w);
  json result{{"equivalent", eq}, {"witness", nullptr}};
  if (v.dimension() == v.group.rank()) {
    result["invariant_v"] = to_json(invariant_i(v).representative());
    result["invariant_w"] = to_json(invariant_i(w).representative());
  }
  if (eq) {
    const IntMatrix n = monomial_witness(v, w);
    WEDGEKIT_ENSURE(is_unimodular(n), "monomial witness is not unimodular");
    result["witness"] = to_json(n);
  }
  return {json{{"v", to_json(v)}, {"w", to_json(w)}}, result, eq, "wedge-criterion",
          "faithful representations of equal dimension are birational iff their wedge classes agree"};
}

Response cmd_classify_count(const json& req) {
  const FinGenAbGroup g = group_arg(need(req, "group"));
  const std::size_t d = size_arg(need(req, "dim"), "dim");
  const std::size_t limit = req.contains("limit") ? size_arg(req["limit"], "limit") : 1000;
  const ClassCount cc = count_classes(g, d, limit);
  json reps = json::array();
  for (const auto& t : cc.representatives) reps.push_back(to_json(t));
  return {json{{"group", to_json(g)}, {"dim", d}, {"limit", limit}},
          json{{"count", to_json(cc.count)},
               {"representatives", reps},
               {"truncated", Integer(static_cast<unsigned long>(cc.representatives.size())) < cc.count}},
          std::nullopt, "class-count", "faithful representations of dimension rank fall into phi(n_1)/2 classes"};
}

Response cmd_katsylo(const json& req) {
  const FinGenAbGroup g = group_arg(need(req, "group"));
  const bool fails = katsylo_fails(g);
  json result{{"fails", fails}, {"conjecture_holds", !fails}};
  if (fails) {
    const ClassCount cc = count_classes(g, g.rank(), 2);
    WEDGEKIT_ENSURE(cc.representatives.size() == 2, "failure predicted but fewer than two classes found");
    result["inequivalent_pair"] = json::array({to_json(cc.representatives[0]), to_json(cc.representatives[1])});
  }
  return {json{{"group", to_json(g)}}, result, !fails, "katsylo-failure",
          "equal-dimensional faithful representations are birational unless n_1 = 5 or n_1 >= 7"};
}

Response cmd_counterexample(const json& req) {
  if (req.contains("params")) {
    std::vector<std::pair<Integer, std::size_t>> params;
    json echo = json::array();
    WEDGEKIT_REQUIRE(req["params"].is_array(), "params must be an array of [n, r] pairs");
    for (const auto& p : req["params"]) {
      WEDGEKIT_REQUIRE(p.is_array() && p.size() == 2, "params entries must be [n, r] pairs");
      params.emplace_back(integer_from_json(p[0], "n"), size_arg(p[1], "r"));
      echo.push_back(json::array({to_json(params.back().first), params.back().second}));
    }
    const std::size_t torus = req.contains("torus_rank") ? size_arg(req["torus_rank"], "torus_rank") : 0;
    const auto found = product_counterexample(params, torus);
    json result{{"exponents", nullptr}, {"dimension", nullptr}};
    if (found) {
      result["exponents"] = to_json(found->exponents);
      result["dimension"] = found->dimension;
    }
    return {json{{"params", echo}, {"torus_rank", torus}}, result, found.has_value(), "product-counterexample",
            "unit exponents with product of powers not +-1 give inequivalent representations"};
  }
  const Integer n = integer_from_json(need(req, "n"), "n");
  const std::size_t r = size_arg(need(req, "r"), "r");
  const auto m = semidirect_counterexample(n, r);
  const bool by_exp = counterexample_exists_by_exponent(n, r);
  WEDGEKIT_ENSURE(m.has_value() || !by_exp, "unit-group exponent test contradicts the exhaustive search");
  json result{{"m", m ? to_json(*m) : json(nullptr)},
              {"sufficient_by_exponent", by_exp},
              {"lower_bound", to_json(class_lower_bound_semidirect(n, r))}};
  return {json{{"n", to_json(n)}, {"r", r}}, result, m.has_value(), "semidirect-counterexample",
          "a unit m with m^r != +-1 mod n gives inequivalent representations"};
}

Response cmd_qtorus(const json& req) {
  const QuantumTorusSpec spec(integers_from_json(listify(need(req, "degrees")), "degrees"),
                              integers_from_json(listify(need(req, "exponents")), "exponents"));
  const bool k = k_isomorphic(spec);
  const bool w = wedge_criterion(spec);
  WEDGEKIT_ENSURE(k == w, "wedge criterion and product criterion disagree");
  return {to_json(spec), json{{"k_isomorphic", k}, {"brauer", brauer_equivalent(spec)}, {"wedge_criterion", w}}, k,
          "quantum-torus-criterion", "the twisted quantum torus is isomorphic iff prod m_i = +-1 mod n_1"};
}

Response cmd_heisenberg(const json& req) {
  const FinGenAbGroup a = group_arg(need(req, "group"));
  std::uint64_t p = 0;
  if (req.contains("prime")) {
    const Integer x = integer_from_json(req["prime"], "prime");
    WEDGEKIT_REQUIRE(x >= 2 && x.fits_ulong_p(), "prime out of range");
    p = x.get_ui();
  }
  const HeisenbergRep h(a, p);
  const BilinearForm w = commutator_form(h);
  const SymplecticSpace s(a);
  std::vector<QmodZ> negated;
  for (const auto& q : s.form().gram_entries()) negated.push_back(-q);
  const bool comm = h.commutation_holds();
  WEDGEKIT_ENSURE(comm, "commutation relation fails");
  const bool span = span_check(h);
  const bool sym = is_symplectic(w);
  return {json{{"group", to_json(a)}, {"prime", h.prime()}},
          json{{"prime", h.prime()},
               {"root", h.root()},
               {"dimension", h.order()},
               {"products", h.order() * h.order()},
               {"commutation", comm},
               {"span", span},
               {"commutator_form", to_json(w, a)["gram"]},
               {"symplectic", sym},
               {"negated_standard_form", w.gram_entries() == negated}},
          span && sym, "heisenberg-lemma", "P_a D_chi span the matrix algebra and the commutator form is symplectic"};
}

std::vector<Command> commands() {
  return {
      {"snf", "Smith normal form with transforms", {{"matrix", "integer matrix as JSON rows"}}, cmd_snf},
      {"wedge", "wedge of a tuple", {{"group", "group"}, {"tuple", "elements"}}, cmd_wedge},
      {"elemops", "elementary operations between tuples", {{"group", "group"}, {"a", "tuple"}, {"b", "tuple"}},
       cmd_elemops},
      {"glz-witness", "unimodular change of generators", {{"group", "group"}, {"a", "tuple"}, {"b", "tuple"}},
       cmd_glz},
      {"symplectic-check",
       "form and automorphism checks",
       {{"base", "base group"}, {"gram", "gram on the total group"}, {"matrix", "row-convention matrix"},
        {"enumerate", "enumerate automorphisms"}, {"cap", "enumeration cap"}},
       cmd_symplectic},
      {"classify-equiv", "birational equivalence of representations", {{"v", "representation"}, {"w", "representation"}},
       cmd_classify_equiv},
      {"classify-count", "number of birational classes",
       {{"group", "group"}, {"dim", "dimension"}, {"limit", "representative limit"}}, cmd_classify_count},
      {"katsylo", "Katsylo failure predicate", {{"group", "group"}}, cmd_katsylo},
      {"counterexample", "semidirect and product counterexamples",
       {{"n", "modulus"}, {"r", "exponent"}, {"params", "[[n, r], ...]"}, {"torus_rank", "torus rank"}},
       cmd_counterexample},
      {"qtorus", "quantum torus isomorphism", {{"degrees", "n_1,...,n_r"}, {"exponents", "m_1,...,m_r"}}, cmd_qtorus},
      {"heisenberg", "Heisenberg representation checks", {{"group", "group"}, {"prime", "prime"}}, cmd_heisenberg},
  };
}

// Flag values are JSON; anything that fails to parse is read as a
// comma-separated list of integers.
json parse_flag(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error&) {
  }
  json a = json::array();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) a.push_back(item);
  return a;
}

json envelope(const std::string& command, const json& input) {
  return json{{"schema", 1}, {"command", command}, {"input", input}};
}

void emit(const json& j, const std::string& out_path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path);
  WEDGEKIT_REQUIRE(f.good(), "cannot open output file " + out_path);
  f << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact decision procedures for wedge invariants of abelian group actions", "wedgekit"};
  app.require_subcommand(1);
  bool assert_flag = false;
  std::string out_path;
  unsigned bound = 1;
  app.add_flag("--assert", assert_flag, "exit 1 when a yes/no query answers no");
  app.add_option("--out", out_path, "write the response to a file");

  const auto cmds = commands();
  std::map<std::string, std::map<std::string, std::string>> flag_values;
  for (const auto& c : cmds) {
    auto* sub = app.add_subcommand(c.name, c.description);
    sub->fallthrough();
    for (const auto& f : c.fields) sub->add_option("--" + f.name, flag_values[c.name][f.name], f.help);
  }
  auto* self = app.add_subcommand("selftest", "bounded oracle cross-checks");
  self->fallthrough();
  self->add_option("--bound", bound, "search size multiplier")->check(CLI::Range(1u, 16u));

  std::string command = "";
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "wedgekit: " << e.what() << "\n";
    out << json{{"schema", 1}, {"error", {{"kind", "usage"}, {"message", e.what()}}}}.dump(2) << "\n";
    return kInvalidInput;
  }
  for (auto* s : app.get_subcommands()) command = s->get_name();

  try {
    if (command == "selftest") {
      const auto suites = run_selftest(bound);
      json list = json::array();
      bool all = true;
      for (const auto& s : suites) {
        all = all && s.passed;
        list.push_back(json{{"name", s.name}, {"passed", s.passed}, {"details", s.details}});
      }
      json resp = envelope(command, json{{"bound", bound}});
      resp["result"] = json{{"suites", list}, {"passed", all}};
      resp["provenance"] = json{{"statement", "selftest"}, {"summary", "bounded exhaustive oracle cross-checks"}};
      emit(resp, out_path, out);
      return all ? kOk : kInconsistent;
    }

    const Command* cmd = nullptr;
    for (const auto& c : cmds)
      if (c.name == command) cmd = &c;
    json request = json::object();
    for (const auto& [k, v] : flag_values[command])
      if (!v.empty()) request[k] = parse_flag(v);
    if (request.empty()) {
      std::stringstream buf;
      buf << in.rdbuf();
      WEDGEKIT_REQUIRE(!buf.str().empty(), "no input: pass flags or a JSON request on stdin");
      try {
        request = json::parse(buf.str());
      } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON request: ") + e.what());
      }
      WEDGEKIT_REQUIRE(request.is_object(), "the JSON request must be an object");
      if (request.contains("command")) {
        WEDGEKIT_REQUIRE(request["command"] == command, "request is for a different command");
        request.erase("command");
      }
    }
    const Response r = cmd->handler(request);
    json resp = envelope(command, r.input);
    resp["result"] = r.result;
    resp["provenance"] = json{{"statement", r.statement}, {"summary", r.summary}};
    if (r.verdict) resp["verdict"] = *r.verdict;
    emit(resp, out_path, out);
    return assert_flag && r.verdict && !*r.verdict ? kNo : kOk;
  } catch (const InputError& e) {
    err << "wedgekit: " << e.what() << "\n";
    out << json{{"schema", 1}, {"command", command}, {"error", {{"kind", "invalid-input"}, {"message", e.what()}}}}.dump(2)
        << "\n";
    return kInvalidInput;
  } catch (const json::exception& e) {
    err << "wedgekit: " << e.what() << "\n";
    out << json{{"schema", 1}, {"command", command}, {"error", {{"kind", "invalid-input"}, {"message", e.what()}}}}.dump(2)
        << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "wedgekit: internal consistency failure: " << e.what() << "\n";
    out << json{{"schema", 1}, {"command", command}, {"error", {{"kind", "consistency"}, {"message", e.what()}}}}.dump(2)
        << "\n";
    return kInconsistent;
  }
}

}  // namespace wedgekit::cli
