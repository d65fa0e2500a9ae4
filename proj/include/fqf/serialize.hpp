#pragma once

#include <json.hpp>

#include "fqf/genus.hpp"
#include "fqf/lattice.hpp"
#include "fqf/places.hpp"
#include "fqf/upoly.hpp"

namespace fqf {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// {schema, q, gram: 3x3 array of polynomial strings}
Json gram_to_json(const Mat3& gram);
Mat3 gram_from_json(const Json& j);

// {schema, det, delta, r, D0, D1, hasse: {p: +-1}, hasse_inf: +-1}
Json genus_symbol_to_json(const GenusSymbol& sym);

// {schema, genus, classes: [{gram, so}], mass: "num/den"}
Json class_list_to_json(const ClassList& classes);

// Array of exact-rational strings, constant term first.
Json upoly_to_json(const UPoly& f);
UPoly upoly_from_json(const Json& j);

}  // namespace fqf
