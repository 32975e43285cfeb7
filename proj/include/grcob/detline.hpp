#pragma once

#include "grcob/aut.hpp"
#include "grcob/gr.hpp"
#include "grcob/intmat.hpp"

namespace grcob {

/// The invertible Z-module det(H0(G,A)[1])^d tensor det(H1(G,A)[1])^(-d),
/// carried by its canonical bases. Basis vectors live in the coordinates of
/// the gaf's view (rows of h0_basis = inner vertices, rows of h1_basis =
/// edges); the vectors themselves are computed on the canonical form, so
/// they do not depend on the labeling.
struct DetLineObject {
  long degree = 0;  // d * chi(G, A)
  IntMatrix h0_basis;
  IntMatrix h1_basis;
  long d = 0;
};

DetLineObject xi_object(const Gaf& g, long d);

/// Sign comparing the canonical generator of xi_d(g o h) with the image of
/// generator(h) tensor generator(g) under the isomorphism induced by the
/// long exact sequence of the gluing. Computed through the chain-level
/// Euler trivialization of each factor; +1 whenever d is even.
int xi_compose_sign(const GrMorphism& g, const GrMorphism& h, long d);

/// Koszul/base-change sign comparing the canonical generator of
/// xi_d(g tensor h) with generator(g) tensor generator(h).
int xi_tensor_sign(const GrMorphism& g, const GrMorphism& h, long d);

/// Action of an automorphism over id_A on the determinant line:
/// (det of the induced map on H0 times det on H1)^d.
/// Throws NotAnAutomorphism if phi fails the automorphism conditions.
int xi_iso_action(const Gaf& g, const GafAutomorphism& phi, long d);

}  // namespace grcob
