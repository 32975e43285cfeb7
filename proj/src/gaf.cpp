#include "grcob/gaf.hpp"

#include <algorithm>
#include <set>

#include "grcob/errors.hpp"

namespace grcob {

namespace {

void check_distinct(const std::vector<std::string>& labels,
                    const std::string& kind,
                    std::vector<std::string>& out) {
  std::set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second)
      out.push_back("duplicate " + kind + " label '" + l + "'");
}

}  // namespace

std::vector<std::string> validate(const Gaf& g) {
  std::vector<std::string> out;
  check_distinct(g.attach, "attach", out);
  check_distinct(g.inner, "inner", out);
  check_distinct(g.half_edges, "half-edge", out);
  std::set<std::string> attach(g.attach.begin(), g.attach.end());
  std::set<std::string> inner(g.inner.begin(), g.inner.end());
  std::set<std::string> halves(g.half_edges.begin(), g.half_edges.end());
  for (const auto& a : g.attach)
    if (inner.count(a))
      out.push_back("label '" + a + "' is both attach and inner");
  for (const auto& h : g.half_edges) {
    auto it = g.incidence.find(h);
    if (it == g.incidence.end()) {
      out.push_back("half-edge '" + h + "' has no incidence");
    } else if (!attach.count(it->second) && !inner.count(it->second)) {
      out.push_back("half-edge '" + h + "' attached to unknown vertex '" +
                    it->second + "'");
    }
  }
  for (const auto& [h, v] : g.incidence)
    if (!halves.count(h))
      out.push_back("incidence on unknown half-edge '" + h + "'");
  std::map<std::string, std::size_t> uses;
  for (const auto& [h1, h2] : g.edge_pairs) {
    if (h1 == h2) out.push_back("fixpoint in edge involution at '" + h1 + "'");
    for (const auto& h : {h1, h2}) {
      if (!halves.count(h))
        out.push_back("edge references unknown half-edge '" + h + "'");
      else
        ++uses[h];
    }
  }
  for (const auto& h : g.half_edges) {
    auto it = uses.find(h);
    if (it == uses.end())
      out.push_back("half-edge '" + h + "' is unpaired");
    else if (it->second > 1)
      out.push_back("half-edge '" + h + "' paired more than once");
  }
  return out;
}

std::vector<std::string> validate(const MarkedGaf& g) {
  std::vector<std::string> out = validate(g.gaf);
  check_distinct(g.source, "source", out);
  std::set<std::string> vertices(g.gaf.attach.begin(), g.gaf.attach.end());
  vertices.insert(g.gaf.inner.begin(), g.gaf.inner.end());
  std::set<std::string> src(g.source.begin(), g.source.end());
  for (const auto& b : g.source) {
    auto it = g.marking.find(b);
    if (it == g.marking.end())
      out.push_back("source label '" + b + "' has no marking");
    else if (!vertices.count(it->second))
      out.push_back("dangling marking: '" + b + "' -> unknown vertex '" +
                    it->second + "'");
  }
  for (const auto& [b, v] : g.marking)
    if (!src.count(b))
      out.push_back("marking on unknown source label '" + b + "'");
  return out;
}

GafView make_view(const Gaf& g) {
  auto violations = validate(g);
  if (!violations.empty())
    throw GrcobError("InvalidGaf", violations.front());
  GafView v;
  v.n_attach = g.attach.size();
  v.n_inner = g.inner.size();
  for (const auto& a : g.attach) {
    v.vertex_id[a] = v.vertex_label.size();
    v.vertex_label.push_back(a);
  }
  for (const auto& w : g.inner) {
    v.vertex_id[w] = v.vertex_label.size();
    v.vertex_label.push_back(w);
  }
  for (std::size_t i = 0; i < g.half_edges.size(); ++i)
    v.half_id[g.half_edges[i]] = i;
  v.sigma.resize(g.half_edges.size());
  v.partner.resize(g.half_edges.size());
  for (std::size_t i = 0; i < g.half_edges.size(); ++i)
    v.sigma[i] = v.vertex_id.at(g.incidence.at(g.half_edges[i]));
  std::vector<std::pair<std::string, std::string>> pairs = g.edge_pairs;
  for (auto& [h1, h2] : pairs)
    if (h2 < h1) std::swap(h1, h2);
  std::sort(pairs.begin(), pairs.end());
  for (const auto& [h1, h2] : pairs) {
    std::size_t i1 = v.half_id.at(h1), i2 = v.half_id.at(h2);
    v.partner[i1] = i2;
    v.partner[i2] = i1;
    v.edges.push_back({i1, i2, v.sigma[i1], v.sigma[i2]});
  }
  v.valence.assign(v.n_vertices(), 0);
  for (std::size_t i = 0; i < v.sigma.size(); ++i) ++v.valence[v.sigma[i]];
  return v;
}

long euler_char_rel(const Gaf& g) {
  auto violations = validate(g);
  if (!violations.empty())
    throw GrcobError("InvalidGaf", violations.front());
  return static_cast<long>(g.inner.size()) -
         static_cast<long>(g.edge_pairs.size());
}

Components analyze_components(const GafView& v) {
  std::vector<std::size_t> parent(v.n_vertices());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : v.edges) parent[find(e.tail_v)] = find(e.head_v);
  Components c;
  std::map<std::size_t, int> roots;
  c.vertex_comp.resize(v.n_vertices());
  for (std::size_t i = 0; i < v.n_vertices(); ++i) {
    std::size_t r = find(i);
    auto it = roots.find(r);
    if (it == roots.end()) {
      it = roots.emplace(r, static_cast<int>(c.count++)).first;
      c.attach_count.push_back(0);
      c.vertex_count.push_back(0);
      c.edge_count.push_back(0);
    }
    c.vertex_comp[i] = it->second;
    ++c.vertex_count[it->second];
    if (v.is_attach(i)) ++c.attach_count[it->second];
  }
  for (const auto& e : v.edges) {
    int comp = c.vertex_comp[e.tail_v];
    c.edge_comp.push_back(comp);
    ++c.edge_count[comp];
  }
  return c;
}

std::vector<std::vector<std::string>> component_partition(const Gaf& g) {
  GafView v = make_view(g);
  Components c = analyze_components(v);
  std::vector<std::vector<std::string>> out(c.count);
  for (std::size_t i = 0; i < v.n_vertices(); ++i)
    out[c.vertex_comp[i]].push_back(v.vertex_label[i]);
  for (std::size_t e = 0; e < v.edges.size(); ++e) {
    const auto& edge = v.edges[e];
    std::string th, hh;
    for (const auto& [label, idx] : v.half_id) {
      if (idx == edge.tail_h) th = label;
      if (idx == edge.head_h) hh = label;
    }
    out[c.edge_comp[e]].push_back(th + "~" + hh);
  }
  return out;
}

std::vector<std::size_t> based_tree_component_ids(const GafView& v,
                                                  const Components& c) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.count; ++i)
    if (c.is_based_tree(i)) out.push_back(i);
  return out;
}

}  // namespace grcob
