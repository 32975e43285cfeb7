#pragma once

#include <map>
#include <string>
#include <vector>

#include "grcob/gaf.hpp"

namespace grcob {

/// Relabeling of inner vertices and half-edges (attach and source labels
/// are never permuted).
struct Relabeling {
  std::map<std::string, std::string> vertex_map;  // old inner -> new inner
  std::map<std::string, std::string> half_map;    // old half -> new half
};

struct CanonicalForm {
  MarkedGaf gaf;
  Relabeling relabeling;
};

/// Canonically labeled gaf: two inputs have equal canonical forms iff they
/// are isomorphic over the identity of A and B. Inner vertices become
/// v000, v001, ... and half-edges h000, h001, ...; edge 2k/2k+1 pairing with
/// the tail half-edge h(2k) at the endpoint of smaller canonical index.
CanonicalForm canonical_form(const MarkedGaf& g);
CanonicalForm canonical_form(const Gaf& g);

/// Stable text key of the canonical form, usable for iso-class bucketing.
std::string canonical_key(const MarkedGaf& g);
std::string canonical_key(const Gaf& g);

}  // namespace grcob
