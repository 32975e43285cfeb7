#include "grcob/chain.hpp"

#include <algorithm>

namespace grcob {

RelChainComplex rel_chain_complex(const GafView& v) {
  RelChainComplex c;
  c.boundary = IntMatrix(v.n_inner, v.edges.size());
  for (std::size_t j = 0; j < v.edges.size(); ++j) {
    const auto& e = v.edges[j];
    if (!v.is_attach(e.head_v)) c.boundary.at(e.head_v - v.n_attach, j) += 1;
    if (!v.is_attach(e.tail_v)) c.boundary.at(e.tail_v - v.n_attach, j) -= 1;
  }
  return c;
}

RelChainComplex rel_chain_complex(const Gaf& g) {
  return rel_chain_complex(make_view(g));
}

namespace {

// Node = vertex with every attach point merged into a single node 0.
std::size_t node_of(const GafView& v, std::size_t vertex) {
  if (v.n_attach == 0) return vertex;
  return v.is_attach(vertex) ? 0 : vertex - v.n_attach + 1;
}

}  // namespace

IntMatrix h1_cycle_basis(const GafView& v) {
  std::size_t n_nodes = v.n_inner + (v.n_attach > 0 ? 1 : 0);
  std::vector<std::size_t> parent(n_nodes);
  for (std::size_t i = 0; i < n_nodes; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // Greedy spanning forest in view edge order; adjacency of accepted edges.
  std::vector<char> in_forest(v.edges.size(), 0);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n_nodes);
  for (std::size_t j = 0; j < v.edges.size(); ++j) {
    std::size_t a = node_of(v, v.edges[j].tail_v);
    std::size_t b = node_of(v, v.edges[j].head_v);
    if (find(a) != find(b)) {
      parent[find(a)] = find(b);
      in_forest[j] = 1;
      adj[a].emplace_back(b, j);
      adj[b].emplace_back(a, j);
    }
  }
  std::vector<std::size_t> extras;
  for (std::size_t j = 0; j < v.edges.size(); ++j)
    if (!in_forest[j]) extras.push_back(j);

  IntMatrix basis(v.edges.size(), extras.size());
  for (std::size_t k = 0; k < extras.size(); ++k) {
    std::size_t j = extras[k];
    std::size_t from = node_of(v, v.edges[j].head_v);
    std::size_t to = node_of(v, v.edges[j].tail_v);
    basis.at(j, k) = 1;
    if (from == to) continue;  // loop rel A
    // BFS path from head back to tail through the forest.
    std::vector<long> via_edge(n_nodes, -1);
    std::vector<long> pred(n_nodes, -1);
    std::vector<std::size_t> queue{from};
    std::vector<char> seen(n_nodes, 0);
    seen[from] = 1;
    for (std::size_t qi = 0; qi < queue.size() && !seen[to]; ++qi) {
      std::size_t x = queue[qi];
      for (const auto& [y, je] : adj[x]) {
        if (seen[y]) continue;
        seen[y] = 1;
        pred[y] = static_cast<long>(x);
        via_edge[y] = static_cast<long>(je);
        queue.push_back(y);
      }
    }
    for (std::size_t x = to; x != from;) {
      std::size_t je = static_cast<std::size_t>(via_edge[x]);
      std::size_t px = static_cast<std::size_t>(pred[x]);
      // Traverse je from px to x; +1 when that matches tail->head.
      std::size_t jt = node_of(v, v.edges[je].tail_v);
      basis.at(je, k) += (jt == px) ? 1 : -1;
      x = px;
    }
  }
  return basis;
}

IntMatrix h0_lift_basis(const GafView& v) {
  Components c = analyze_components(v);
  std::vector<long> rep(c.count, -1);
  for (std::size_t i = 0; i < v.n_vertices(); ++i) {
    int comp = c.vertex_comp[i];
    if (c.attach_count[comp] == 0 && rep[comp] < 0) rep[comp] = static_cast<long>(i);
  }
  std::vector<long> reps;
  for (std::size_t comp = 0; comp < c.count; ++comp)
    if (rep[comp] >= 0) reps.push_back(rep[comp]);
  IntMatrix basis(v.n_inner, reps.size());
  for (std::size_t k = 0; k < reps.size(); ++k)
    basis.at(static_cast<std::size_t>(reps[k]) - v.n_attach, k) = 1;
  return basis;
}

}  // namespace grcob
