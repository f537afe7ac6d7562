#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "nsd/digraph.hpp"
#include "nsd/family.hpp"
#include "nsd/hypernat.hpp"
#include "nsd/index_set.hpp"
#include "nsd/quasi_poly.hpp"
#include "nsd/ultrapower.hpp"

namespace nsd::io {

using nlohmann::json;

// All readers throw Error{MalformedSpec} on structurally bad input and pass
// through the domain errors of the underlying constructors.

/// {"arcs": [[t,h],...]} or {"arc_count": n, "partition": [[["in",i],...],...]}
Digraph digraph_from_json(const json& j);
json to_json(const Digraph& d);

/// {"prefix": "1101", "period": 2, "residues": [0]}; prefix defaults to "".
IndexSet index_set_from_json(const json& j);
json to_json(const IndexSet& s);

/// {"prefix": [..], "period": p, "polys": [[c0, c1, ..], ..]}; coefficients
/// are integers or [num, den] pairs.
QuasiPoly quasi_poly_from_json(const json& j);
json to_json(const QuasiPoly& q);
HyperNat hypernat_from_json(const json& j);
json to_json(const HyperNat& h);

/// {"kind":"constant","value":v} | {"kind":"quasi_affine","period":p,"polys":[..],"prefix":[..]}
/// | {"arc": <selector>, "polarity": "in"|"out"|"alternating"} | "const:K" | "n".
/// An optional "sort" key ("vertex" or "arc") overrides `default_sort`.
Selector selector_from_json(const json& j, Sort default_sort = Sort::Vertex);
json to_json(const Selector& s);

/// {"kind":"builtin","name":..} | {"kind":"explicit","prefix":[digraph..],"tail": digraph | builtin}
DigraphFamily family_from_json(const json& j);
json to_json(const DigraphFamily& f);

/// Parses JSON text; a parse failure becomes Error{MalformedSpec}.
json parse_json(const std::string& text);
json read_json_file(const std::filesystem::path& path);

}  // namespace nsd::io
