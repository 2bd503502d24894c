#ifndef SIMULTILE_JSON_IO_HPP
#define SIMULTILE_JSON_IO_HPP

#include <string>

#include "json.hpp"
#include "simultile/stepfn.hpp"
#include "simultile/ztiling.hpp"

namespace simultile {

using nlohmann::json;

// Encodings are exact: rationals go through decimal "p/q" strings and
// round-trip to identical values.
json to_json(const FieldNum& x);
json to_json(const ComplexField& z);
json to_json(const ElementarySet& s);
json to_json(const PiecewiseFn& f);
json to_json(const ZFunction& g);

FieldNum fieldnum_from_json(const json& j);
ComplexField complex_from_json(const json& j);
ElementarySet set_from_json(const json& j);
PiecewiseFn fn_from_json(const json& j);
ZFunction zfunction_from_json(const json& j);

json load_json_file(const std::string& path);

// 12-digit decimal annotation of an exact value.
std::string decimal_note(const FieldNum& x);

}  // namespace simultile

#endif
