#pragma once

// JSON encodings of the library types. Integers are read from JSON numbers
// or decimal strings and written as numbers when they fit in 64 bits.

#include <json.hpp>

#include "wedgekit/classify.hpp"
#include "wedgekit/exterior.hpp"
#include "wedgekit/qtorus.hpp"
#include "wedgekit/symplectic.hpp"

namespace wedgekit::json_io {

using nlohmann::json;

Integer integer_from_json(const json& j, const std::string& where);
json to_json(const Integer& x);
std::vector<Integer> integers_from_json(const json& j, const std::string& where);
json to_json(const std::vector<Integer>& xs);

/// {"factors":[...]}
FinGenAbGroup group_from_json(const json& j);
json to_json(const FinGenAbGroup& g);

/// {"coords":[...]}
GroupElement element_from_json(const json& j, const FinGenAbGroup& g);
json to_json(const GroupElement& x);
ElementTuple tuple_from_json(const json& j, const FinGenAbGroup& g);
json to_json(const ElementTuple& t);

/// {"degree":d,"components":[{"subset":[1-based],"modulus":n,"coord":c},...]}
json to_json(const WedgeElement& w);

/// Row-major list of rows.
IntMatrix matrix_from_json(const json& j, const std::string& where);
json to_json(const IntMatrix& m);

QmodZ qmodz_from_json(const json& j);
json to_json(const QmodZ& q);

/// {"base":{...},"gram":[["p/q",...],...]} on the interleaved total group.
BilinearForm form_from_json(const json& j);
json to_json(const BilinearForm& f, const FinGenAbGroup& base);

/// {"group":{...},"chars":[{"coords":[...]},...]}
RepSpec rep_from_json(const json& j);
json to_json(const RepSpec& r);

/// {"degrees":[...],"exponents":[...]}
QuantumTorusSpec qtorus_from_json(const json& j);
json to_json(const QuantumTorusSpec& q);

json to_json(const ElementaryOp& op);

}  // namespace wedgekit::json_io
