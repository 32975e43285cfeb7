#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace grcob {

/// Half-edge graph attached to a finite set. Vertices split into attach
/// labels (A) and inner labels (V); sigma sends half-edges to vertices and
/// the edge pairs form a fixpoint-free involution on the half-edges.
struct Gaf {
  std::vector<std::string> attach;
  std::vector<std::string> inner;
  std::vector<std::string> half_edges;
  std::map<std::string, std::string> incidence;  // half-edge -> vertex label
  std::vector<std::pair<std::string, std::string>> edge_pairs;
};

/// A gaf together with a finite source set B and a marking B -> vertices;
/// the representative of a morphism B -> A in Gr.
struct MarkedGaf {
  Gaf gaf;
  std::vector<std::string> source;             // B
  std::map<std::string, std::string> marking;  // B -> vertex label
};

/// Indexed view of a valid gaf. Vertex ids: 0..|A|-1 attach (in list order),
/// then |A|..|A|+|V|-1 inner (in list order). Edges are sorted by the
/// lexicographically smaller half-edge id; that half-edge is the tail.
struct GafView {
  struct Edge {
    std::size_t tail_h, head_h;  // half-edge indices
    std::size_t tail_v, head_v;  // vertex ids
    bool is_loop() const { return tail_v == head_v; }
  };

  std::size_t n_attach = 0;
  std::size_t n_inner = 0;
  std::map<std::string, std::size_t> vertex_id;  // label -> id
  std::vector<std::string> vertex_label;         // id -> label
  std::map<std::string, std::size_t> half_id;
  std::vector<std::size_t> sigma;    // half index -> vertex id
  std::vector<std::size_t> partner;  // half index -> half index
  std::vector<Edge> edges;
  std::vector<std::size_t> valence;  // per vertex id; loops count twice

  std::size_t n_vertices() const { return n_attach + n_inner; }
  bool is_attach(std::size_t v) const { return v < n_attach; }
};

/// Every invariant violation, with a human-readable locus. Empty = valid.
std::vector<std::string> validate(const Gaf& g);
std::vector<std::string> validate(const MarkedGaf& g);

/// Requires a valid gaf; throws InvalidGaf otherwise.
GafView make_view(const Gaf& g);

/// chi(G, A) = |V| - |E|, counting inner cells only.
long euler_char_rel(const Gaf& g);

/// Connected components of A ⊔ V ⊔ E under incidence.
struct Components {
  std::size_t count = 0;
  std::vector<int> vertex_comp;  // per vertex id
  std::vector<int> edge_comp;    // per view edge index
  std::vector<std::size_t> attach_count;  // per component
  std::vector<std::size_t> vertex_count;  // per component (attach + inner)
  std::vector<std::size_t> edge_count;    // per component
  bool is_tree(std::size_t c) const {
    return edge_count[c] + 1 == vertex_count[c];
  }
  bool is_based_tree(std::size_t c) const {
    return is_tree(c) && attach_count[c] == 1;
  }
};

Components analyze_components(const GafView& v);

/// Component partition as label lists (vertices then "h1~h2" edge names),
/// isolated attach points included as singletons.
std::vector<std::vector<std::string>> component_partition(const Gaf& g);

/// Indices of components that are trees containing exactly one attach point.
std::vector<std::size_t> based_tree_component_ids(const GafView& v,
                                                  const Components& c);

}  // namespace grcob
