#include "grcob/snf.hpp"

#include <cstdlib>

#include "grcob/errors.hpp"

namespace grcob {

namespace {

// Smallest nonzero magnitude in the trailing submatrix, ties by (row, col).
bool find_pivot(const IntMatrix& m, std::size_t t, std::size_t& pi,
                std::size_t& pj) {
  bool found = false;
  mpz_class best;
  for (std::size_t i = t; i < m.rows(); ++i)
    for (std::size_t j = t; j < m.cols(); ++j) {
      const mpz_class& e = m.at(i, j);
      if (e == 0) continue;
      mpz_class a = abs(e);
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SNFResult snf(const IntMatrix& a) {
  SNFResult r;
  r.d = a;
  r.u = IntMatrix::identity(a.rows());
  r.v = IntMatrix::identity(a.cols());
  IntMatrix& d = r.d;
  std::size_t t = 0;
  std::size_t lim = std::min(a.rows(), a.cols());
  while (t < lim) {
    std::size_t pi, pj;
    if (!find_pivot(d, t, pi, pj)) break;
    d.swap_rows(t, pi);
    r.u.swap_rows(t, pi);
    d.swap_cols(t, pj);
    r.v.swap_cols(t, pj);

    // One Euclidean pass over the pivot column and row. If any remainder
    // survives, re-select the (now strictly smaller) global pivot; this
    // keeps intermediate entries small.
    bool clean = true;
    for (std::size_t i = t + 1; i < d.rows(); ++i) {
      if (d.at(i, t) == 0) continue;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), d.at(i, t).get_mpz_t(),
                 d.at(t, t).get_mpz_t());
      d.add_row(i, t, -q);
      r.u.add_row(i, t, -q);
      if (d.at(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < d.cols(); ++j) {
      if (d.at(t, j) == 0) continue;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), d.at(t, j).get_mpz_t(),
                 d.at(t, t).get_mpz_t());
      d.add_col(j, t, -q);
      r.v.add_col(j, t, -q);
      if (d.at(t, j) != 0) clean = false;
    }
    if (!clean) continue;
    // Pivot must divide every remaining entry.
    bool restart = false;
    for (std::size_t i = t + 1; i < d.rows() && !restart; ++i)
      for (std::size_t j = t + 1; j < d.cols() && !restart; ++j)
        if (d.at(i, j) % d.at(t, t) != 0) {
          d.add_row(t, i, 1);
          r.u.add_row(t, i, 1);
          restart = true;
        }
    if (restart) continue;
    if (d.at(t, t) < 0) {
      d.negate_row(t);
      r.u.negate_row(t);
    }
    ++t;
  }
  r.rank = t;
  return r;
}

IntMatrix kernel_basis(const IntMatrix& a) {
  SNFResult s = snf(a);
  std::size_t n = a.cols();
  std::size_t k = n - s.rank;
  IntMatrix b(n, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) b.at(i, j) = s.v.at(i, s.rank + j);
  return b;
}

IntMatrix cokernel_basis(const IntMatrix& a) {
  SNFResult s = snf(a);
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.d.at(i, i) != 1)
      throw GrcobError("TorsionPresent",
                       "cokernel has invariant factor " +
                           s.d.at(i, i).get_str());
  // coker(d) is spanned by e_i for i >= rank; pull back along u.
  std::size_t m = a.rows();
  IntMatrix uinv = unimodular_inverse(s.u);
  IntMatrix out(m, m - s.rank);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m - s.rank; ++j)
      out.at(i, j) = uinv.at(i, s.rank + j);
  return out;
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
  IntMatrix x = solve_in_lattice(u, IntMatrix::identity(u.rows()));
  return x;
}

IntMatrix solve_in_lattice(const IntMatrix& b1, const IntMatrix& b2) {
  if (b1.rows() != b2.rows())
    throw GrcobError("NotSameLattice", "ambient rank mismatch");
  SNFResult s = snf(b1);
  if (s.rank != b1.cols())
    throw GrcobError("NotSameLattice", "b1 columns are not independent");
  IntMatrix w = s.u * b2;
  IntMatrix y(b1.cols(), b2.cols());
  for (std::size_t i = 0; i < w.rows(); ++i)
    for (std::size_t j = 0; j < w.cols(); ++j) {
      if (i < s.rank) {
        if (w.at(i, j) % s.d.at(i, i) != 0)
          throw GrcobError("NotSameLattice", "no integral solution");
        y.at(i, j) = w.at(i, j) / s.d.at(i, i);
      } else if (w.at(i, j) != 0) {
        throw GrcobError("NotSameLattice", "target outside column span");
      }
    }
  return s.v * y;
}

int det_sign_of_base_change(const IntMatrix& b1, const IntMatrix& b2) {
  if (b1.cols() != b2.cols())
    throw GrcobError("NotSameLattice", "different numbers of basis vectors");
  IntMatrix x = solve_in_lattice(b1, b2);
  mpz_class dx = x.det();
  if (dx != 1 && dx != -1)
    throw GrcobError("NotSameLattice", "change of basis is not unimodular");
  return dx > 0 ? 1 : -1;
}

}  // namespace grcob
