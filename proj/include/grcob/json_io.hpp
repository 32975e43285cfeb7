#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "grcob/gaf.hpp"
#include "grcob/intmat.hpp"

namespace grcob {

/// Parses {"attach":[...], "vertices":[...], "half_edges":[{"id","at"}...],
/// "edges":[["h1","h2"],...], "marking":{"b":"vertex",...}}.
/// A missing marking means B is empty. Throws MalformedInput.
MarkedGaf gaf_from_json(const nlohmann::json& j);
nlohmann::json gaf_to_json(const MarkedGaf& g);

MarkedGaf load_gaf(const std::string& path);
void save_gaf(const MarkedGaf& g, const std::string& path);

nlohmann::json intmat_to_json(const IntMatrix& m);

}  // namespace grcob
