#pragma once

#include "grcob/intmat.hpp"

namespace grcob {

/// Smith normal form: u * a * v = d, with u and v unimodular and
/// d diagonal satisfying d1 | d2 | ... (nonnegative pivots).
struct SNFResult {
  IntMatrix u, d, v;
  std::size_t rank = 0;
};

SNFResult snf(const IntMatrix& a);

/// Columns form a Z-basis of ker(a) inside Z^cols.
IntMatrix kernel_basis(const IntMatrix& a);

/// Columns are lifts in Z^rows of a Z-basis of coker(a).
/// Throws TorsionPresent if coker(a) has torsion.
IntMatrix cokernel_basis(const IntMatrix& a);

/// Sign of det of the change-of-basis matrix taking b1 to b2.
/// Throws NotSameLattice if b1 and b2 do not span the same lattice.
int det_sign_of_base_change(const IntMatrix& b1, const IntMatrix& b2);

/// Solves b1 * x = b2 over Z where b1 has full column rank.
/// Throws NotSameLattice if no integral solution exists.
IntMatrix solve_in_lattice(const IntMatrix& b1, const IntMatrix& b2);

/// Exact inverse of a unimodular matrix.
IntMatrix unimodular_inverse(const IntMatrix& u);

}  // namespace grcob
