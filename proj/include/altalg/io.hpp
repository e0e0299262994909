#pragma once

#include <string>

#include <json.hpp>

#include "altalg/algebra.hpp"
#include "altalg/commuting.hpp"
#include "altalg/report.hpp"

namespace altalg {

using json = nlohmann::ordered_json;

// All readers throw UsageError on malformed input.

json field_to_json(const Field& f);
Field field_from_json(const json& j);

/// Array of scalar strings.
json element_to_json(const Element& e);
Element element_from_json(const json& j, const Algebra& a);

json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const json& j);

/// {"dim": n, "matrix": [[scalar-str, ...], ...]}
json map_to_json(const LinearMap& m);
LinearMap map_from_json(const json& j, const Algebra& a);

json decomposition_to_json(const Decomposition& d);
json witness_to_json(const Witness& w);
json check_to_json(const CheckRecord& c);

std::string read_text(const std::string& path);
json read_json(const std::string& path);
/// Indented JSON with arrays of scalars kept on one line.
std::string dump_json(const json& j);
/// Writes dump_json(j) plus a trailing newline.
void write_json(const std::string& path, const json& j);

Algebra read_algebra(const std::string& path);
LinearMap read_map(const std::string& path, const Algebra& a);

/// An element given as a path to a JSON array file, a basis label, or
/// comma-separated scalars ("1,0,-1/2").
Element parse_element(const std::string& spec, const Algebra& a);

}  // namespace altalg
