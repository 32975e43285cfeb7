#pragma once

#include <map>
#include <string>
#include <vector>

#include "grcob/gaf.hpp"

namespace grcob {

/// Gaf isomorphism over the identity of A: a permutation of inner vertices
/// and half-edges commuting with incidence and the edge involution.
struct GafAutomorphism {
  std::map<std::string, std::string> vertex_map;  // all vertices, A fixed
  std::map<std::string, std::string> half_map;
};

/// Checks the automorphism conditions; empty result = valid.
std::vector<std::string> check_automorphism(const Gaf& g,
                                            const GafAutomorphism& phi);

/// phi, then psi.
GafAutomorphism compose(const GafAutomorphism& psi, const GafAutomorphism& phi);

/// The full automorphism group over id_A, by exhaustive search; the identity
/// is always first.
std::vector<GafAutomorphism> automorphism_group(const Gaf& g);

}  // namespace grcob
