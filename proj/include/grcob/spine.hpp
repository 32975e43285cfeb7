#pragma once

#include <vector>

#include "grcob/gaf.hpp"
#include "grcob/intmat.hpp"

namespace grcob {

/// All connected closed gafs (A empty) with every valence at least 3 and
/// first Betti number n, one canonical representative per isomorphism
/// class. Supported for 2 <= n <= 4; throws RankTooLarge above.
std::vector<Gaf> enumerate_spine_objects(long n);

/// One k-cell of the quotient spine: an isomorphism class of chains of k
/// proper forest collapses out of a spine object, recorded as a strictly
/// nested flag of forests (view edge indices of the object). Classes with an
/// automorphism acting by -1 on the twisted line are dropped.
struct SpineCell {
  std::size_t object = 0;
  std::vector<std::vector<std::size_t>> flag;
};

struct SpineComplex {
  long n = 0;
  long d = 0;  // twist
  std::vector<Gaf> objects;
  std::vector<std::vector<SpineCell>> cells;  // per degree, killed removed
  std::vector<IntMatrix> differential;  // differential[k]: C_k -> C_(k-1)
};

/// Chain complex of the spine quotient with coefficients twisted by the
/// determinant line at twist d. n <= 3 unless allow_rank4.
SpineComplex spine_chain_complex(long n, long d, bool allow_rank4 = false);

/// Betti numbers over Q, degree 0 upward.
std::vector<long> twisted_homology(long n, long d, bool allow_rank4 = false);
std::vector<long> homology(const SpineComplex& sc);

}  // namespace grcob
