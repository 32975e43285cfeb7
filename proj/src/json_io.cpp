#include "grcob/json_io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "grcob/errors.hpp"

namespace grcob {

using nlohmann::json;

MarkedGaf gaf_from_json(const json& j) {
  try {
    MarkedGaf g;
    if (!j.is_object()) throw GrcobError("MalformedInput", "expected object");
    for (const auto& a : j.value("attach", json::array()))
      g.gaf.attach.push_back(a.get<std::string>());
    for (const auto& v : j.value("vertices", json::array()))
      g.gaf.inner.push_back(v.get<std::string>());
    for (const auto& h : j.value("half_edges", json::array())) {
      std::string id = h.at("id").get<std::string>();
      g.gaf.half_edges.push_back(id);
      g.gaf.incidence[id] = h.at("at").get<std::string>();
    }
    for (const auto& e : j.value("edges", json::array())) {
      if (!e.is_array() || e.size() != 2)
        throw GrcobError("MalformedInput", "edge must be a pair");
      g.gaf.edge_pairs.emplace_back(e[0].get<std::string>(),
                                    e[1].get<std::string>());
    }
    if (j.contains("marking")) {
      for (const auto& [b, v] : j.at("marking").items()) {
        g.source.push_back(b);
        g.marking[b] = v.get<std::string>();
      }
      // json objects iterate in sorted key order already; keep B sorted.
    }
    return g;
  } catch (const GrcobError&) {
    throw;
  } catch (const std::exception& e) {
    throw GrcobError("MalformedInput", e.what());
  }
}

json gaf_to_json(const MarkedGaf& g) {
  json j;
  j["attach"] = g.gaf.attach;
  j["vertices"] = g.gaf.inner;
  j["half_edges"] = json::array();
  for (const auto& h : g.gaf.half_edges)
    j["half_edges"].push_back({{"id", h}, {"at", g.gaf.incidence.at(h)}});
  j["edges"] = json::array();
  for (const auto& [h1, h2] : g.gaf.edge_pairs)
    j["edges"].push_back({h1, h2});
  if (!g.source.empty()) {
    json m = json::object();
    for (const auto& b : g.source) m[b] = g.marking.at(b);
    j["marking"] = m;
  }
  return j;
}

MarkedGaf load_gaf(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GrcobError("MalformedInput", "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw GrcobError("MalformedInput", e.what());
  }
  return gaf_from_json(j);
}

void save_gaf(const MarkedGaf& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw GrcobError("MalformedInput", "cannot write " + path);
  out << gaf_to_json(g).dump(2) << "\n";
}

json intmat_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(m.at(i, j).get_str());
    rows.push_back(row);
  }
  return rows;
}

}  // namespace grcob
