#pragma once

#include "grcob/gaf.hpp"
#include "grcob/intmat.hpp"

namespace grcob {

/// Relative chain complex of (G, A): C1 = Z^E -> C0 = Z^V with attach
/// vertices contracted away. Rows follow the inner list order, columns the
/// view edge order; each column is (head indicator) - (tail indicator),
/// where the tail carries the lexicographically smaller half-edge id.
struct RelChainComplex {
  IntMatrix boundary;
};

RelChainComplex rel_chain_complex(const GafView& v);
RelChainComplex rel_chain_complex(const Gaf& g);

/// Z-basis of H1(G, A) = ker boundary: fundamental cycles of the non-forest
/// edges for the greedy spanning forest taken in view edge order (all attach
/// points merged to one node). Rows = edges, one column per cycle.
IntMatrix h1_cycle_basis(const GafView& v);

/// Lifts of a Z-basis of H0(G, A): indicator of the least vertex id of each
/// component disjoint from A, in component order of first appearance.
/// Rows = inner vertices, one column per A-disjoint component.
IntMatrix h0_lift_basis(const GafView& v);

}  // namespace grcob
