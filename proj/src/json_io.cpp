#include "wedgekit/json_io.hpp"

namespace wedgekit::json_io {

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
  WEDGEKIT_REQUIRE(j.is_object(), where + " must be a JSON object");
  auto it = j.find(key);
  WEDGEKIT_REQUIRE(it != j.end(), where + " is missing the field \"" + key + "\"");
  return *it;
}

}  // namespace

Integer integer_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    Integer x;
    const bool digits = !s.empty() && s.find_first_not_of("-0123456789") == std::string::npos;
    WEDGEKIT_REQUIRE(digits && x.set_str(s, 10) == 0, where + ": malformed integer \"" + s + "\"");
    return x;
  }
  throw InputError(where + ": expected an integer, got " + j.dump());
}

json to_json(const Integer& x) {
  if (x.fits_slong_p()) return json(static_cast<std::int64_t>(x.get_si()));
  return json(x.get_str());
}

std::vector<Integer> integers_from_json(const json& j, const std::string& where) {
  WEDGEKIT_REQUIRE(j.is_array(), where + " must be an array of integers");
  std::vector<Integer> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(integer_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

json to_json(const std::vector<Integer>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(to_json(x));
  return a;
}

// Bare arrays are accepted as shorthand for {"factors": [...]} and {"coords": [...]}.
FinGenAbGroup group_from_json(const json& j) {
  if (j.is_array()) return FinGenAbGroup(integers_from_json(j, "factors"));
  return FinGenAbGroup(integers_from_json(field(j, "factors", "group"), "factors"));
}

json to_json(const FinGenAbGroup& g) { return json{{"factors", to_json(g.factors())}}; }

GroupElement element_from_json(const json& j, const FinGenAbGroup& g) {
  if (j.is_array()) return g.element(integers_from_json(j, "coords"));
  return g.element(integers_from_json(field(j, "coords", "element"), "coords"));
}

json to_json(const GroupElement& x) { return json{{"coords", to_json(x.coords())}}; }

ElementTuple tuple_from_json(const json& j, const FinGenAbGroup& g) {
  WEDGEKIT_REQUIRE(j.is_array(), "tuple must be an array of elements");
  ElementTuple out;
  for (const auto& e : j) out.push_back(element_from_json(e, g));
  return out;
}

json to_json(const ElementTuple& t) {
  json a = json::array();
  for (const auto& x : t) a.push_back(to_json(x));
  return a;
}

json to_json(const WedgeElement& w) {
  json comps = json::array();
  const auto& cs = w.power().components();
  for (std::size_t k = 0; k < cs.size(); ++k) {
    json subset = json::array();
    for (auto i : cs[k].subset) subset.push_back(i + 1);
    comps.push_back(json{{"subset", subset}, {"modulus", to_json(cs[k].modulus)}, {"coord", to_json(w.coords()[k])}});
  }
  return json{{"degree", w.power().degree()}, {"components", comps}};
}

IntMatrix matrix_from_json(const json& j, const std::string& where) {
  WEDGEKIT_REQUIRE(j.is_array(), where + " must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto row = integers_from_json(j[i], where + "[" + std::to_string(i) + "]");
    WEDGEKIT_REQUIRE(row.size() == cols, where + ": rows have different lengths");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = row[c];
  }
  return m;
}

json to_json(const IntMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(i, c)));
    a.push_back(row);
  }
  return a;
}

QmodZ qmodz_from_json(const json& j) {
  if (j.is_string()) return QmodZ::parse(j.get<std::string>());
  return QmodZ(integer_from_json(j, "gram entry"), 1);
}

json to_json(const QmodZ& q) { return json(q.to_string()); }

BilinearForm form_from_json(const json& j) {
  const FinGenAbGroup base = group_from_json(field(j, "base", "form"));
  const SymplecticSpace s(base);
  const json& gram = field(j, "gram", "form");
  const std::size_t n = s.total().rank();
  WEDGEKIT_REQUIRE(gram.is_array() && gram.size() == n,
                   "gram must have " + std::to_string(n) + " rows for base " + base.to_string());
  std::vector<QmodZ> entries;
  for (const auto& row : gram) {
    WEDGEKIT_REQUIRE(row.is_array() && row.size() == n, "gram rows must have " + std::to_string(n) + " entries");
    for (const auto& e : row) entries.push_back(qmodz_from_json(e));
  }
  return BilinearForm(s.total(), std::move(entries));
}

json to_json(const BilinearForm& f, const FinGenAbGroup& base) {
  const std::size_t n = f.group().rank();
  json gram = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < n; ++c) row.push_back(to_json(f.gram(i, c)));
    gram.push_back(row);
  }
  return json{{"base", to_json(base)}, {"gram", gram}};
}

RepSpec rep_from_json(const json& j) {
  const FinGenAbGroup g = group_from_json(field(j, "group", "representation"));
  return RepSpec(g, tuple_from_json(field(j, "chars", "representation"), g));
}

json to_json(const RepSpec& r) { return json{{"group", to_json(r.group)}, {"chars", to_json(r.chars)}}; }

QuantumTorusSpec qtorus_from_json(const json& j) {
  return QuantumTorusSpec(integers_from_json(field(j, "degrees", "quantum torus"), "degrees"),
                          integers_from_json(field(j, "exponents", "quantum torus"), "exponents"));
}

json to_json(const QuantumTorusSpec& q) {
  return json{{"degrees", to_json(q.degrees())}, {"exponents", to_json(q.exponents())}};
}

json to_json(const ElementaryOp& op) {
  return json{{"i", op.i + 1}, {"j", op.j + 1}, {"m", to_json(op.m)}};
}

}  // namespace wedgekit::json_io
