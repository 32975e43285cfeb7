#include "grcob/collapse.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "grcob/errors.hpp"

namespace grcob {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

std::string fresh(std::string candidate, const std::set<std::string>& taken) {
  while (taken.count(candidate)) candidate = "_" + candidate;
  return candidate;
}

}  // namespace

GafMorphism identity_morphism(const Gaf& g) {
  GafMorphism f;
  f.src = g;
  f.dst = g;
  for (const auto& v : g.attach) f.vertex_map[v] = v;
  for (const auto& v : g.inner) f.vertex_map[v] = v;
  for (const auto& x : g.half_edges) f.half_edge_map[x] = x;
  return f;
}

GafMorphism compose(const GafMorphism& g, const GafMorphism& f) {
  GafMorphism out;
  out.src = f.src;
  out.dst = g.dst;
  for (const auto& [v, w] : f.vertex_map)
    out.vertex_map[v] = g.vertex_map.at(w);
  for (const auto& [h, s] : g.half_edge_map)
    out.half_edge_map[h] = f.half_edge_map.at(s);
  return out;
}

std::vector<std::string> validate_morphism(const GafMorphism& f) {
  std::vector<std::string> out;
  GafView sv = make_view(f.src);
  GafView dv = make_view(f.dst);

  // Totality and label sanity of the vertex map.
  for (const auto& [v, w] : f.vertex_map) {
    if (!sv.vertex_id.count(v))
      out.push_back("vertex map key '" + v + "' is not a src vertex");
    else if (!dv.vertex_id.count(w))
      out.push_back("vertex map value '" + w + "' is not a dst vertex");
  }
  for (std::size_t i = 0; i < sv.n_vertices(); ++i)
    if (!f.vertex_map.count(sv.vertex_label[i]))
      out.push_back("vertex map misses src vertex '" + sv.vertex_label[i] +
                    "'");
  // Half-edge assignment: total on dst, injective, into src halves.
  std::set<std::string> surviving;
  for (const auto& [h, s] : f.half_edge_map) {
    if (!dv.half_id.count(h))
      out.push_back("half-edge map key '" + h + "' is not a dst half-edge");
    else if (!sv.half_id.count(s))
      out.push_back("half-edge map value '" + s + "' is not a src half-edge");
    else if (!surviving.insert(s).second)
      out.push_back("src half-edge '" + s + "' survives twice");
  }
  for (const auto& h : f.dst.half_edges)
    if (!f.half_edge_map.count(h))
      out.push_back("dst half-edge '" + h + "' has no preimage");
  if (!out.empty()) return out;

  std::set<std::string> dst_attach(f.dst.attach.begin(), f.dst.attach.end());
  for (const auto& a : f.src.attach)
    if (!dst_attach.count(f.vertex_map.at(a)))
      out.push_back("attach point '" + a + "' maps to an inner vertex");

  for (const auto& [h, s] : f.half_edge_map) {
    if (f.vertex_map.at(f.src.incidence.at(s)) != f.dst.incidence.at(h))
      out.push_back("incidence not preserved at dst half-edge '" + h + "'");
    const std::string& hp = f.dst.half_edges[dv.partner[dv.half_id.at(h)]];
    const std::string& sp = f.src.half_edges[sv.partner[sv.half_id.at(s)]];
    if (f.half_edge_map.at(hp) != sp)
      out.push_back("edge involution not preserved at dst half-edge '" + h +
                    "'");
  }

  // Collapsed edges and fiber subgraphs.
  UnionFind uf(sv.n_vertices());
  std::vector<std::size_t> fiber_edges(dv.n_vertices(), 0);
  for (const auto& e : sv.edges) {
    const std::string& tl = f.src.half_edges[e.tail_h];
    const std::string& hl = f.src.half_edges[e.head_h];
    bool collapsed = !surviving.count(tl) && !surviving.count(hl);
    if (surviving.count(tl) != surviving.count(hl)) {
      out.push_back("edge '" + tl + "~" + hl +
                    "' has one half collapsed and one surviving");
      continue;
    }
    if (!collapsed) continue;
    const std::string& it = f.vertex_map.at(sv.vertex_label[e.tail_v]);
    const std::string& ih = f.vertex_map.at(sv.vertex_label[e.head_v]);
    if (it != ih) {
      out.push_back("collapsed edge '" + tl + "~" + hl +
                    "' joins different fibers");
      continue;
    }
    if (!uf.unite(e.tail_v, e.head_v))
      out.push_back("collapsed edges contain a cycle through '" + tl + "'");
    fiber_edges[dv.vertex_id.at(it)] += 1;
  }
  if (!out.empty()) return out;

  // Per fiber: component count and attach count under the collapsed edges.
  std::vector<std::size_t> fiber_size(dv.n_vertices(), 0);
  std::vector<std::size_t> fiber_attach(dv.n_vertices(), 0);
  std::vector<std::set<std::size_t>> fiber_roots(dv.n_vertices());
  std::vector<std::size_t> root_attach(sv.n_vertices(), 0);
  for (std::size_t i = 0; i < sv.n_vertices(); ++i) {
    std::size_t w = dv.vertex_id.at(f.vertex_map.at(sv.vertex_label[i]));
    fiber_size[w] += 1;
    fiber_roots[w].insert(uf.find(i));
    if (sv.is_attach(i)) {
      fiber_attach[w] += 1;
      root_attach[uf.find(i)] += 1;
    }
  }
  for (std::size_t w = 0; w < dv.n_vertices(); ++w) {
    if (dv.is_attach(w)) {
      if (fiber_size[w] == 0) {
        out.push_back("attach point '" + dv.vertex_label[w] +
                      "' has empty preimage");
        continue;
      }
      for (std::size_t r : fiber_roots[w])
        if (root_attach[r] != 1)
          out.push_back("preimage of attach point '" + dv.vertex_label[w] +
                        "' has a tree with " + std::to_string(root_attach[r]) +
                        " attach points");
    } else {
      if (fiber_roots[w].size() != 1)
        out.push_back("preimage of inner vertex '" + dv.vertex_label[w] +
                      "' is not connected");
      if (fiber_attach[w] != 0)
        out.push_back("preimage of inner vertex '" + dv.vertex_label[w] +
                      "' contains an attach point");
    }
    // Acyclicity already checked; a connected acyclic fiber is a tree.
  }
  return out;
}

std::pair<Gaf, GafMorphism> collapse_forest(
    const Gaf& g, const std::vector<std::size_t>& forest) {
  GafView v = make_view(g);
  std::set<std::size_t> fset;
  for (std::size_t e : forest) {
    if (e >= v.edges.size())
      throw GrcobError("MalformedInput",
                       "edge index " + std::to_string(e) + " out of range");
    if (!fset.insert(e).second)
      throw GrcobError("MalformedInput",
                       "edge index " + std::to_string(e) + " repeated");
  }
  UnionFind uf(v.n_vertices());
  for (std::size_t e : fset)
    if (!uf.unite(v.edges[e].tail_v, v.edges[e].head_v))
      throw GrcobError("NotAForest", "selected edges contain a cycle");
  // Representative: the attach point if the class has one (at most one),
  // else the first vertex in view order.
  std::vector<long> rep(v.n_vertices(), -1);
  for (std::size_t i = 0; i < v.n_vertices(); ++i) {
    std::size_t r = uf.find(i);
    if (v.is_attach(i)) {
      if (rep[r] >= 0 && v.is_attach(static_cast<std::size_t>(rep[r])))
        throw GrcobError("TwoAttachPointsInOneTree",
                         "tree contains '" + v.vertex_label[rep[r]] +
                             "' and '" + v.vertex_label[i] + "'");
      rep[r] = static_cast<long>(i);
    } else if (rep[r] < 0) {
      rep[r] = static_cast<long>(i);
    }
  }
  GafMorphism f;
  f.src = g;
  Gaf& q = f.dst;
  q.attach = g.attach;
  for (std::size_t i = 0; i < v.n_vertices(); ++i) {
    std::size_t r = static_cast<std::size_t>(rep[uf.find(i)]);
    f.vertex_map[v.vertex_label[i]] = v.vertex_label[r];
    if (!v.is_attach(i) && r == i) q.inner.push_back(v.vertex_label[i]);
  }
  std::set<std::size_t> dead_halves;
  for (std::size_t e : fset) {
    dead_halves.insert(v.edges[e].tail_h);
    dead_halves.insert(v.edges[e].head_h);
  }
  for (std::size_t i = 0; i < g.half_edges.size(); ++i) {
    if (dead_halves.count(i)) continue;
    const std::string& x = g.half_edges[i];
    q.half_edges.push_back(x);
    q.incidence[x] = f.vertex_map.at(g.incidence.at(x));
    f.half_edge_map[x] = x;
  }
  for (std::size_t e = 0; e < v.edges.size(); ++e) {
    if (fset.count(e)) continue;
    q.edge_pairs.emplace_back(g.half_edges[v.edges[e].tail_h],
                              g.half_edges[v.edges[e].head_h]);
  }
  return {q, f};
}

MarkedGaf reduce(const MarkedGaf& g) {
  GafView v = make_view(g.gaf);
  Components c = analyze_components(v);
  std::vector<bool> based(c.count, false);
  for (std::size_t i : based_tree_component_ids(v, c)) based[i] = true;
  // Marks per based-tree component, in B order.
  std::vector<std::vector<std::string>> marks(c.count);
  for (const auto& b : g.source) {
    std::size_t mv = v.vertex_id.at(g.marking.at(b));
    if (based[c.vertex_comp[mv]]) marks[c.vertex_comp[mv]].push_back(b);
  }
  std::vector<std::string> tree_attach(c.count);
  for (std::size_t i = 0; i < v.n_attach; ++i)
    if (based[c.vertex_comp[i]]) tree_attach[c.vertex_comp[i]] = v.vertex_label[i];

  MarkedGaf out;
  std::set<std::string> taken;
  for (std::size_t i = 0; i < v.n_attach; ++i)
    if (!based[c.vertex_comp[i]]) {
      out.gaf.attach.push_back(v.vertex_label[i]);
      taken.insert(v.vertex_label[i]);
    }
  for (std::size_t i = v.n_attach; i < v.n_vertices(); ++i)
    if (!based[c.vertex_comp[i]]) {
      out.gaf.inner.push_back(v.vertex_label[i]);
      taken.insert(v.vertex_label[i]);
    }
  // One bare attach point per mark of a based tree; a single mark keeps the
  // tree's original attach label.
  std::map<std::string, std::string> moved;  // mark -> new attach vertex
  for (std::size_t comp = 0; comp < c.count; ++comp) {
    if (!based[comp]) continue;
    if (marks[comp].size() == 1) {
      const std::string& a = tree_attach[comp];
      out.gaf.attach.push_back(a);
      taken.insert(a);
      moved[marks[comp][0]] = a;
    } else {
      for (const auto& b : marks[comp]) {
        std::string a = fresh(b, taken);
        taken.insert(a);
        out.gaf.attach.push_back(a);
        moved[b] = a;
      }
    }
  }
  for (const auto& x : g.gaf.half_edges)
    if (!based[c.vertex_comp[v.sigma[v.half_id.at(x)]]]) {
      out.gaf.half_edges.push_back(x);
      out.gaf.incidence[x] = g.gaf.incidence.at(x);
    }
  for (const auto& [x, y] : g.gaf.edge_pairs)
    if (!based[c.vertex_comp[v.sigma[v.half_id.at(x)]]])
      out.gaf.edge_pairs.emplace_back(x, y);
  out.source = g.source;
  for (const auto& b : g.source) {
    auto it = moved.find(b);
    out.marking[b] = it != moved.end() ? it->second : g.marking.at(b);
  }
  return out;
}

std::pair<Gaf, GafMorphism> minimize(const Gaf& g) {
  Gaf cur = g;
  GafMorphism total = identity_morphism(g);
  for (;;) {
    GafView v = make_view(cur);
    long leaf = -1;
    for (std::size_t i = v.n_attach; i < v.n_vertices() && leaf < 0; ++i)
      if (v.valence[i] == 1) leaf = static_cast<long>(i);
    if (leaf < 0) break;
    std::size_t eidx = 0;
    for (std::size_t e = 0; e < v.edges.size(); ++e)
      if (v.edges[e].tail_v == static_cast<std::size_t>(leaf) ||
          v.edges[e].head_v == static_cast<std::size_t>(leaf))
        eidx = e;
    auto [q, f] = collapse_forest(cur, {eidx});
    total = compose(f, total);
    cur = q;
  }
  return {cur, total};
}

Gaf forget_valence2(const Gaf& g) {
  GafView v = make_view(g);
  for (std::size_t i = v.n_attach; i < v.n_vertices(); ++i)
    if (v.valence[i] == 1)
      throw GrcobError("InvalidGaf",
                       "valence-1 inner vertex '" + v.vertex_label[i] + "'");
  // Removable: valence-2 inner vertex that is not a bare loop vertex.
  std::vector<bool> removable(v.n_vertices(), false);
  std::vector<std::vector<std::size_t>> at(v.n_vertices());
  for (std::size_t h = 0; h < v.sigma.size(); ++h) at[v.sigma[h]].push_back(h);
  for (std::size_t i = v.n_attach; i < v.n_vertices(); ++i)
    if (v.valence[i] == 2 && v.partner[at[i][0]] != at[i][1])
      removable[i] = true;

  Gaf out;
  out.attach = g.attach;
  for (std::size_t i = v.n_attach; i < v.n_vertices(); ++i)
    if (!removable[i]) out.inner.push_back(v.vertex_label[i]);
  std::vector<bool> paired(g.half_edges.size(), false);
  std::vector<bool> seen(v.n_vertices(), false);
  for (std::size_t h = 0; h < g.half_edges.size(); ++h) {
    if (removable[v.sigma[h]] || paired[h]) continue;
    std::size_t y = v.partner[h];
    while (removable[v.sigma[y]]) {
      seen[v.sigma[y]] = true;
      std::size_t other = at[v.sigma[y]][0] == y ? at[v.sigma[y]][1]
                                                 : at[v.sigma[y]][0];
      y = v.partner[other];
    }
    paired[h] = true;
    paired[y] = true;
    out.edge_pairs.emplace_back(g.half_edges[h], g.half_edges[y]);
  }
  for (std::size_t i = v.n_attach; i < v.n_vertices(); ++i)
    if (removable[i] && !seen[i])
      throw GrcobError("DegenerateCircle",
                       "circle of valence-2 inner vertices through '" +
                           v.vertex_label[i] + "'");
  for (const auto& x : g.half_edges)
    if (!removable[v.sigma[v.half_id.at(x)]]) {
      out.half_edges.push_back(x);
      out.incidence[x] = g.incidence.at(x);
    }
  return out;
}

}  // namespace grcob
