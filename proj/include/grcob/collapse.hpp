#pragma once

#include <map>
#include <string>
#include <vector>

#include "grcob/gaf.hpp"

namespace grcob {

/// Morphism of gafs: a quotient map collapsing disjoint subtrees. The
/// half-edge data records, for each half-edge of dst, the unique surviving
/// half-edge of src it comes from.
struct GafMorphism {
  Gaf src, dst;
  std::map<std::string, std::string> vertex_map;     // src vertex -> dst vertex
  std::map<std::string, std::string> half_edge_map;  // dst half -> src half
};

GafMorphism identity_morphism(const Gaf& g);

/// f, then g (as quotient maps: g.src must equal f.dst).
GafMorphism compose(const GafMorphism& g, const GafMorphism& f);

/// Checks every morphism condition independently; empty result = valid.
std::vector<std::string> validate_morphism(const GafMorphism& f);

/// Collapses each tree of the forest (given by view edge indices) to one
/// vertex; an attach point absorbs its tree. Throws NotAForest if the edges
/// contain a cycle, TwoAttachPointsInOneTree if a tree meets A twice.
std::pair<Gaf, GafMorphism> collapse_forest(
    const Gaf& g, const std::vector<std::size_t>& forest);

/// Replaces every based-tree component by bare marked attach points, one per
/// mark, so each based tree of the output carries exactly one mark. Unmarked
/// based trees disappear together with their attach point; the attach set of
/// the result changes accordingly. Idempotent.
MarkedGaf reduce(const MarkedGaf& g);

/// Iterated collapse of valence-1 inner vertices, with the composite
/// collapse morphism.
std::pair<Gaf, GafMorphism> minimize(const Gaf& g);

/// Concatenates edges through valence-2 inner vertices. Requires no
/// valence-1 inner vertices. A single inner vertex carrying one loop is kept
/// as is; a circle made only of valence-2 inner vertices has no surviving
/// vertex and raises DegenerateCircle.
Gaf forget_valence2(const Gaf& g);

}  // namespace grcob
