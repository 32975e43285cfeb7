#include "grcob/aut.hpp"

#include <algorithm>
#include <numeric>

#include "grcob/errors.hpp"

namespace grcob {

std::vector<std::string> check_automorphism(const Gaf& g,
                                            const GafAutomorphism& phi) {
  std::vector<std::string> out;
  GafView v = make_view(g);
  for (const auto& a : g.attach) {
    auto it = phi.vertex_map.find(a);
    if (it == phi.vertex_map.end() || it->second != a)
      out.push_back("attach point '" + a + "' is not fixed");
  }
  std::map<std::string, std::string> vm = phi.vertex_map;
  std::vector<bool> vhit(v.n_vertices(), false);
  for (const auto& [x, y] : vm) {
    if (!v.vertex_id.count(x) || !v.vertex_id.count(y)) {
      out.push_back("vertex map mentions unknown label '" + x + "' or '" + y +
                    "'");
      continue;
    }
    vhit[v.vertex_id.at(y)] = true;
  }
  if (vm.size() != v.n_vertices() ||
      !std::all_of(vhit.begin(), vhit.end(), [](bool b) { return b; }))
    out.push_back("vertex map is not a permutation of the vertices");
  std::vector<bool> hhit(g.half_edges.size(), false);
  for (const auto& [x, y] : phi.half_map) {
    if (!v.half_id.count(x) || !v.half_id.count(y)) {
      out.push_back("half-edge map mentions unknown label '" + x + "' or '" +
                    y + "'");
      continue;
    }
    hhit[v.half_id.at(y)] = true;
  }
  if (phi.half_map.size() != g.half_edges.size() ||
      !std::all_of(hhit.begin(), hhit.end(), [](bool b) { return b; }))
    out.push_back("half-edge map is not a permutation of the half-edges");
  if (!out.empty()) return out;
  for (const auto& x : g.half_edges) {
    const std::string& fx = phi.half_map.at(x);
    if (g.incidence.at(fx) != vm.at(g.incidence.at(x)))
      out.push_back("incidence not preserved at half-edge '" + x + "'");
    const std::string& px = g.half_edges[v.partner[v.half_id.at(x)]];
    const std::string& pfx = g.half_edges[v.partner[v.half_id.at(fx)]];
    if (phi.half_map.at(px) != pfx)
      out.push_back("edge involution not preserved at half-edge '" + x + "'");
  }
  return out;
}

GafAutomorphism compose(const GafAutomorphism& psi,
                        const GafAutomorphism& phi) {
  GafAutomorphism out;
  for (const auto& [x, y] : phi.vertex_map)
    out.vertex_map[x] = psi.vertex_map.at(y);
  for (const auto& [x, y] : phi.half_map) out.half_map[x] = psi.half_map.at(y);
  return out;
}

namespace {

struct Search {
  const Gaf& g;
  const GafView& v;
  std::vector<std::size_t> vperm;  // vertex id -> vertex id, attach = id
  std::vector<std::size_t> hperm;  // half index -> half index
  std::vector<bool> edge_used;     // target edge consumed
  std::vector<GafAutomorphism> found;

  void emit() {
    GafAutomorphism a;
    for (std::size_t i = 0; i < v.n_vertices(); ++i)
      a.vertex_map[v.vertex_label[i]] = v.vertex_label[vperm[i]];
    for (std::size_t i = 0; i < g.half_edges.size(); ++i)
      a.half_map[g.half_edges[i]] = g.half_edges[hperm[i]];
    found.push_back(std::move(a));
  }

  void edges(std::size_t e) {
    if (e == v.edges.size()) {
      emit();
      return;
    }
    std::size_t tu = vperm[v.edges[e].tail_v];
    std::size_t tv = vperm[v.edges[e].head_v];
    for (std::size_t f = 0; f < v.edges.size(); ++f) {
      if (edge_used[f]) continue;
      const GafView::Edge& t = v.edges[f];
      if (t.tail_v == tu && t.head_v == tv) {
        edge_used[f] = true;
        hperm[v.edges[e].tail_h] = t.tail_h;
        hperm[v.edges[e].head_h] = t.head_h;
        edges(e + 1);
        edge_used[f] = false;
      }
      // Loops admit the reversed orientation too; non-loops only when the
      // endpoint images arrive swapped.
      if (t.tail_v == tv && t.head_v == tu && !(t.tail_v == tu && !t.is_loop())) {
        edge_used[f] = true;
        hperm[v.edges[e].tail_h] = t.head_h;
        hperm[v.edges[e].head_h] = t.tail_h;
        edges(e + 1);
        edge_used[f] = false;
      }
    }
  }
};

}  // namespace

std::vector<GafAutomorphism> automorphism_group(const Gaf& g) {
  GafView v = make_view(g);
  Search s{g, v, {}, std::vector<std::size_t>(g.half_edges.size(), 0),
           std::vector<bool>(v.edges.size(), false), {}};
  std::vector<std::size_t> inner(v.n_inner);
  std::iota(inner.begin(), inner.end(), 0);
  // Walk inner permutations in lexicographic order so the identity is first.
  do {
    s.vperm.assign(v.n_vertices(), 0);
    for (std::size_t i = 0; i < v.n_attach; ++i) s.vperm[i] = i;
    bool ok = true;
    for (std::size_t i = 0; i < v.n_inner; ++i) {
      s.vperm[v.n_attach + i] = v.n_attach + inner[i];
      if (v.valence[v.n_attach + i] != v.valence[v.n_attach + inner[i]])
        ok = false;
    }
    if (ok) s.edges(0);
  } while (std::next_permutation(inner.begin(), inner.end()));
  return s.found;
}

}  // namespace grcob
