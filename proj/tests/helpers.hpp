#pragma once

// Shared fixtures and independent oracles for the test suites. Everything
// here recomputes expected values from first principles (rational
// elimination, permutation signs, brute-force enumeration) so the library
// under test is exercised against a second code path.

#include <gmpxx.h>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "grcob/aut.hpp"
#include "grcob/canonical.hpp"
#include "grcob/chain.hpp"
#include "grcob/collapse.hpp"
#include "grcob/eval.hpp"
#include "grcob/frobenius.hpp"
#include "grcob/gaf.hpp"
#include "grcob/spine.hpp"

namespace grcob::testing {

inline std::string data_dir() {
  const char* env = std::getenv("GRCOB_DATA");
  return env ? env : "data";
}

inline std::string algebra_path(const std::string& name) {
  return data_dir() + "/algebras/" + name + ".json";
}

// ---------------------------------------------------------------- builders

/// Closed gaf with inner vertices v0..v(nv-1) and the given edges (loops
/// allowed); half-edges e<k>a / e<k>b.
inline Gaf closed_gaf(std::size_t nv,
                      const std::vector<std::pair<int, int>>& edges) {
  Gaf g;
  for (std::size_t i = 0; i < nv; ++i) g.inner.push_back("v" + std::to_string(i));
  for (std::size_t k = 0; k < edges.size(); ++k) {
    std::string ha = "e" + std::to_string(k) + "a";
    std::string hb = "e" + std::to_string(k) + "b";
    g.half_edges.push_back(ha);
    g.half_edges.push_back(hb);
    g.incidence[ha] = g.inner[static_cast<std::size_t>(edges[k].first)];
    g.incidence[hb] = g.inner[static_cast<std::size_t>(edges[k].second)];
    g.edge_pairs.emplace_back(ha, hb);
  }
  return g;
}

/// Rose with n loops at a single inner vertex.
inline Gaf rose(std::size_t n) {
  std::vector<std::pair<int, int>> edges(n, {0, 0});
  return closed_gaf(1, edges);
}

inline Gaf theta_graph() { return closed_gaf(2, {{0, 1}, {0, 1}, {0, 1}}); }

inline Gaf dumbbell() { return closed_gaf(2, {{0, 0}, {0, 1}, {1, 1}}); }

inline MarkedGaf mark(Gaf g, const std::map<std::string, std::string>& m) {
  MarkedGaf out;
  out.gaf = std::move(g);
  for (const auto& [b, v] : m) {
    out.source.push_back(b);
    out.marking[b] = v;
  }
  return out;
}

/// Equality as labeled gafs, ignoring list order and the order inside each
/// edge pair.
inline bool same_labeled_gaf(const MarkedGaf& a, const MarkedGaf& b) {
  auto sorted = [](std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  auto edge_set = [](const Gaf& g) {
    std::set<std::pair<std::string, std::string>> out;
    for (auto [x, y] : g.edge_pairs) out.emplace(std::min(x, y), std::max(x, y));
    return out;
  };
  return a.gaf.attach == b.gaf.attach && sorted(a.gaf.inner) == sorted(b.gaf.inner) &&
         sorted(a.gaf.half_edges) == sorted(b.gaf.half_edges) &&
         a.gaf.incidence == b.gaf.incidence && edge_set(a.gaf) == edge_set(b.gaf) &&
         sorted(a.source) == sorted(b.source) && a.marking == b.marking;
}

/// Pushes a marking through a collapse morphism.
inline MarkedGaf transport_marking(const MarkedGaf& g, const Gaf& q,
                                   const GafMorphism& mor) {
  MarkedGaf out;
  out.gaf = q;
  out.source = g.source;
  for (const auto& [b, v] : g.marking) out.marking[b] = mor.vertex_map.at(v);
  return out;
}

// ------------------------------------------------- rational linear algebra

struct QMat {
  std::size_t rows = 0, cols = 0;
  std::vector<mpq_class> e;

  QMat() = default;
  QMat(std::size_t r, std::size_t c) : rows(r), cols(c), e(r * c) {}

  mpq_class& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }
  const mpq_class& at(std::size_t i, std::size_t j) const {
    return e[i * cols + j];
  }
  bool operator==(const QMat&) const = default;

  static QMat id(std::size_t n) {
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  QMat operator*(const QMat& o) const {
    QMat out(rows, o.cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t k = 0; k < cols; ++k) {
        if (at(i, k) == 0) continue;
        for (std::size_t j = 0; j < o.cols; ++j)
          out.at(i, j) += at(i, k) * o.at(k, j);
      }
    return out;
  }
};

inline std::size_t qrank(QMat m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && m.at(p, c) == 0) ++p;
    if (p == m.rows) continue;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(p, j));
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      mpq_class f = m.at(i, c) / m.at(r, c);
      for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return r;
}

/// Solves a * x = b exactly; a must have full column rank and the system
/// must be consistent.
inline QMat qsolve(QMat a, QMat b) {
  if (a.rows != b.rows) throw std::runtime_error("qsolve: row mismatch");
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
    std::size_t p = r;
    while (p < a.rows && a.at(p, c) == 0) ++p;
    if (p == a.rows) throw std::runtime_error("qsolve: rank deficient");
    for (std::size_t j = 0; j < a.cols; ++j) std::swap(a.at(r, j), a.at(p, j));
    for (std::size_t j = 0; j < b.cols; ++j) std::swap(b.at(r, j), b.at(p, j));
    mpq_class piv = a.at(r, c);
    for (std::size_t j = 0; j < a.cols; ++j) a.at(r, j) /= piv;
    for (std::size_t j = 0; j < b.cols; ++j) b.at(r, j) /= piv;
    for (std::size_t i = 0; i < a.rows; ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      mpq_class f = a.at(i, c);
      for (std::size_t j = 0; j < a.cols; ++j) a.at(i, j) -= f * a.at(r, j);
      for (std::size_t j = 0; j < b.cols; ++j) b.at(i, j) -= f * b.at(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r != a.cols) throw std::runtime_error("qsolve: rank deficient");
  for (std::size_t i = r; i < a.rows; ++i)
    for (std::size_t j = 0; j < b.cols; ++j)
      if (b.at(i, j) != 0) throw std::runtime_error("qsolve: inconsistent");
  QMat x(a.cols, b.cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < b.cols; ++j) x.at(pivot_col[i], j) = b.at(i, j);
  return x;
}

inline QMat qinverse(const QMat& m) {
  if (m.rows != m.cols) throw std::runtime_error("qinverse: not square");
  return qsolve(m, QMat::id(m.rows));
}

/// Sign of det, 0 if singular.
inline int qdet_sign(QMat m) {
  if (m.rows != m.cols) throw std::runtime_error("qdet_sign: not square");
  int sign = 1;
  for (std::size_t c = 0; c < m.cols; ++c) {
    std::size_t p = c;
    while (p < m.rows && m.at(p, c) == 0) ++p;
    if (p == m.rows) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(c, j), m.at(p, j));
      sign = -sign;
    }
    if (m.at(c, c) < 0) sign = -sign;
    for (std::size_t i = c + 1; i < m.rows; ++i) {
      if (m.at(i, c) == 0) continue;
      mpq_class f = m.at(i, c) / m.at(c, c);
      for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return sign;
}

inline QMat from_intmat(const IntMatrix& m) {
  QMat out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
  return out;
}

inline QMat to_qmat(const GradedTensorMap& g) {
  std::size_t nr = 1, nc = 1;
  for (std::size_t i = 0; i < g.target_arity; ++i) nr *= g.dim;
  for (std::size_t i = 0; i < g.source_arity; ++i) nc *= g.dim;
  QMat out(nr, nc);
  for (std::size_t j = 0; j < g.columns.size(); ++j)
    for (const auto& [t, c] : g.columns[j]) out.at(tuple_index(g.dim, t), j) = c;
  return out;
}

// ---------------------------------------------- direct Frobenius operators

inline QMat gram_matrix(const FrobeniusAlgebra& f) {
  std::size_t n = f.dim();
  QMat c(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        c.at(i, j) += f.product[i][j][k] * f.counit[k];
  return c;
}

inline QMat copairing_oracle(const FrobeniusAlgebra& f) {
  return qinverse(gram_matrix(f));
}

inline GradedTensorMap shell(const FrobeniusAlgebra& f, std::size_t src,
                             std::size_t tgt, long degree) {
  GradedTensorMap g;
  g.dim = f.dim();
  g.source_arity = src;
  g.target_arity = tgt;
  g.degree = degree;
  std::size_t nc = 1;
  for (std::size_t i = 0; i < src; ++i) nc *= f.dim();
  g.columns.resize(nc);
  return g;
}

/// Delta(e_j) = sum_{k,l} u[k][l] (e_j e_k) tensor e_l, built from the
/// inverted Gram matrix.
inline GradedTensorMap delta_map(const FrobeniusAlgebra& f) {
  QMat u = copairing_oracle(f);
  GradedTensorMap g = shell(f, 1, 2, 0);
  std::size_t n = f.dim();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) {
        if (u.at(k, l) == 0) continue;
        for (std::size_t m = 0; m < n; ++m) {
          if (f.product[j][k][m] == 0) continue;
          mpq_class c = u.at(k, l) * f.product[j][k][m];
          auto& col = g.columns[j];
          auto [it, fresh_entry] = col.emplace(std::vector<std::size_t>{m, l}, c);
          if (!fresh_entry) {
            it->second += c;
            if (it->second == 0) col.erase(it);
          }
        }
      }
  return g;
}

inline GradedTensorMap counit_map(const FrobeniusAlgebra& f) {
  GradedTensorMap g = shell(f, 1, 0, 0);
  for (std::size_t j = 0; j < f.dim(); ++j)
    if (f.counit[j] != 0) g.columns[j].emplace(std::vector<std::size_t>{}, f.counit[j]);
  return g;
}

/// mu after Delta: the handle operator.
inline GradedTensorMap handle_map(const FrobeniusAlgebra& f) {
  QMat u = copairing_oracle(f);
  GradedTensorMap g = shell(f, 1, 1, -f.d);
  std::size_t n = f.dim();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) {
        if (u.at(k, l) == 0) continue;
        for (std::size_t m = 0; m < n; ++m) {
          if (f.product[j][k][m] == 0) continue;
          for (std::size_t t = 0; t < n; ++t) {
            if (f.product[m][l][t] == 0) continue;
            mpq_class c = u.at(k, l) * f.product[j][k][m] * f.product[m][l][t];
            auto& col = g.columns[j];
            auto [it, fresh_entry] = col.emplace(std::vector<std::size_t>{t}, c);
            if (!fresh_entry) {
              it->second += c;
              if (it->second == 0) col.erase(it);
            }
          }
        }
      }
  return g;
}

/// x1 tensor ... tensor xk -> ... unit inserted at position pos.
inline GradedTensorMap unit_insert_map(const FrobeniusAlgebra& f,
                                       std::size_t arity, std::size_t pos) {
  GradedTensorMap g = shell(f, arity, arity + 1, f.d);
  for (std::size_t j = 0; j < g.columns.size(); ++j) {
    std::vector<std::size_t> t = index_tuple(f.dim(), arity, j);
    t.insert(t.begin() + static_cast<long>(pos), f.unit);
    g.columns[j].emplace(t, 1);
  }
  return g;
}

inline GradedTensorMap identity_map(const FrobeniusAlgebra& f) {
  GradedTensorMap g = shell(f, 1, 1, 0);
  for (std::size_t j = 0; j < f.dim(); ++j)
    g.columns[j].emplace(std::vector<std::size_t>{j}, 1);
  return g;
}

// --------------------------------------------- permutation-sign twist oracle

template <typename T>
int perm_sign(std::vector<T> p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[j] < p[i]) sign = -sign;
  return sign;
}

/// For a closed connected gaf, the action of an automorphism on det H1 is
/// det(C1) * det(C0) of the signed permutation action on cells, because H0
/// carries the trivial action. Computed purely from permutation parities.
inline int iso_sign_oracle(const Gaf& g, const GafAutomorphism& phi, long d) {
  if (d % 2 == 0) return 1;
  GafView v = make_view(g);
  std::vector<std::size_t> pv;
  for (const auto& lbl : g.inner)
    pv.push_back(v.vertex_id.at(phi.vertex_map.at(lbl)));
  int sign_v = perm_sign(pv);

  std::map<std::size_t, std::pair<std::size_t, bool>> half_to_edge;
  for (std::size_t k = 0; k < v.edges.size(); ++k) {
    half_to_edge[v.edges[k].tail_h] = {k, true};
    half_to_edge[v.edges[k].head_h] = {k, false};
  }
  std::vector<std::string> half_label(v.sigma.size());
  for (const auto& [lbl, idx] : v.half_id) half_label[idx] = lbl;
  std::vector<std::size_t> pe;
  int rev = 1;
  for (std::size_t k = 0; k < v.edges.size(); ++k) {
    std::size_t img = v.half_id.at(phi.half_map.at(half_label[v.edges[k].tail_h]));
    auto [ek, is_tail] = half_to_edge.at(img);
    pe.push_back(ek);
    if (!is_tail) rev = -rev;
  }
  return sign_v * perm_sign(pe) * rev;
}

// --------------------------------------------- brute-force multigraph oracle

/// Canonical key of a loopful multigraph: the minimum over all vertex
/// permutations of the sorted edge-pair list.
inline std::string multigraph_key(std::size_t nv,
                                  std::vector<std::pair<int, int>> edges) {
  std::vector<int> perm(nv);
  for (std::size_t i = 0; i < nv; ++i) perm[i] = static_cast<int>(i);
  std::string best;
  do {
    std::vector<std::pair<int, int>> im;
    for (auto [a, b] : edges) {
      int x = perm[static_cast<std::size_t>(a)], y = perm[static_cast<std::size_t>(b)];
      im.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(im.begin(), im.end());
    std::string key = std::to_string(nv) + ":";
    for (auto [a, b] : im)
      key += std::to_string(a) + "-" + std::to_string(b) + ";";
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline std::string multigraph_key(const Gaf& g) {
  GafView v = make_view(g);
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : v.edges)
    edges.emplace_back(static_cast<int>(std::min(e.tail_v, e.head_v)),
                       static_cast<int>(std::max(e.tail_v, e.head_v)));
  return multigraph_key(v.n_vertices(), edges);
}

/// All iso classes of connected multigraphs with first Betti number n and
/// every valence at least 3, by exhaustive edge-multiset enumeration.
inline std::set<std::string> multigraph_classes_oracle(long n) {
  std::set<std::string> out;
  for (std::size_t nv = 1; nv <= 2 * static_cast<std::size_t>(n - 1); ++nv) {
    std::size_t ne = nv + static_cast<std::size_t>(n) - 1;
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < nv; ++i)
      for (std::size_t j = i; j < nv; ++j)
        pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    std::vector<std::pair<int, int>> chosen;
    std::vector<int> deg(nv, 0);

    auto finish = [&]() {
      for (std::size_t i = 0; i < nv; ++i)
        if (deg[i] < 3) return;
      std::vector<int> comp(nv, -1);
      std::vector<std::size_t> stack{0};
      comp[0] = 0;
      while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (auto [a, b] : chosen) {
          for (auto [x, y] : {std::pair<int, int>{a, b}, {b, a}}) {
            if (static_cast<std::size_t>(x) == v && comp[static_cast<std::size_t>(y)] < 0) {
              comp[static_cast<std::size_t>(y)] = 0;
              stack.push_back(static_cast<std::size_t>(y));
            }
          }
        }
      }
      for (std::size_t i = 0; i < nv; ++i)
        if (comp[i] < 0) return;
      out.insert(multigraph_key(nv, chosen));
    };

    auto rec = [&](auto&& self, std::size_t from, std::size_t left) -> void {
      if (left == 0) {
        finish();
        return;
      }
      // Remaining degree deficit must be coverable by the remaining edges.
      long deficit = 0;
      for (std::size_t i = 0; i < nv; ++i)
        if (deg[i] < 3) deficit += 3 - deg[i];
      if (deficit > 2 * static_cast<long>(left)) return;
      for (std::size_t t = from; t < pairs.size(); ++t) {
        auto [a, b] = pairs[t];
        chosen.push_back(pairs[t]);
        deg[static_cast<std::size_t>(a)] += a == b ? 2 : 1;
        if (a != b) deg[static_cast<std::size_t>(b)] += 1;
        self(self, t, left - 1);
        deg[static_cast<std::size_t>(a)] -= a == b ? 2 : 1;
        if (a != b) deg[static_cast<std::size_t>(b)] -= 1;
        chosen.pop_back();
      }
    };
    rec(rec, 0, ne);
  }
  return out;
}

// ----------------------------------------- averaging spine homology oracle

/// src view edge -> (dst view edge, orientation sign) under a map of
/// half-edge labels; collapsed edges get (npos, 0).
inline std::vector<std::pair<std::size_t, int>> edge_transfer(
    const GafView& vsrc, const GafView& vdst,
    const std::map<std::string, std::string>& half_to_dst) {
  std::map<std::size_t, std::pair<std::size_t, bool>> half_to_edge;
  for (std::size_t k = 0; k < vdst.edges.size(); ++k) {
    half_to_edge[vdst.edges[k].tail_h] = {k, true};
    half_to_edge[vdst.edges[k].head_h] = {k, false};
  }
  std::vector<std::string> src_label(vsrc.sigma.size());
  for (const auto& [lbl, idx] : vsrc.half_id) src_label[idx] = lbl;
  std::vector<std::pair<std::size_t, int>> out;
  for (const auto& e : vsrc.edges) {
    auto it = half_to_dst.find(src_label[e.tail_h]);
    if (it == half_to_dst.end()) {
      out.emplace_back(static_cast<std::size_t>(-1), 0);
      continue;
    }
    auto [ek, is_tail] = half_to_edge.at(vdst.half_id.at(it->second));
    out.emplace_back(ek, is_tail ? 1 : -1);
  }
  return out;
}

/// Independent columns spanning the column space.
inline QMat qcolspace(const QMat& m) {
  QMat a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
    std::size_t p = r;
    while (p < a.rows && a.at(p, c) == 0) ++p;
    if (p == a.rows) continue;
    for (std::size_t j = 0; j < a.cols; ++j) std::swap(a.at(r, j), a.at(p, j));
    for (std::size_t i = 0; i < a.rows; ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      mpq_class f = a.at(i, c) / a.at(r, c);
      for (std::size_t j = 0; j < a.cols; ++j) a.at(i, j) -= f * a.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  QMat out(m.rows, pivots.size());
  for (std::size_t j = 0; j < pivots.size(); ++j)
    for (std::size_t i = 0; i < m.rows; ++i) out.at(i, j) = m.at(i, pivots[j]);
  return out;
}

/// Twisted Betti numbers of the rank-n spine quotient, computed on the full
/// flag complex (no orbit selection) by projecting onto automorphism
/// invariants over Q. Signs come from permutation parities and rational
/// base-change determinants only.
inline std::vector<long> spine_homology_oracle(long n, long d) {
  struct Obj {
    Gaf gaf;
    GafView view;
    QMat h1;
    std::vector<std::vector<std::pair<std::size_t, int>>> aut_edges;
    std::vector<int> aut_sign;
    std::vector<std::vector<std::size_t>> forests;  // sorted edge index lists
  };
  std::vector<Gaf> raw = enumerate_spine_objects(n);
  std::vector<Obj> objs;
  std::map<std::string, std::size_t> key_to_obj;
  for (const auto& g : raw) {
    Obj o;
    o.gaf = g;
    o.view = make_view(g);
    o.h1 = from_intmat(h1_cycle_basis(o.view));
    for (const auto& aut : automorphism_group(g)) {
      o.aut_edges.push_back(edge_transfer(o.view, o.view, aut.half_map));
      o.aut_sign.push_back(iso_sign_oracle(g, aut, d));
    }
    std::size_t ne = o.view.edges.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << ne); ++mask) {
      std::vector<int> root(o.view.n_vertices());
      for (std::size_t i = 0; i < root.size(); ++i) root[i] = static_cast<int>(i);
      auto find = [&](int x) {
        while (root[static_cast<std::size_t>(x)] != x) x = root[static_cast<std::size_t>(x)];
        return x;
      };
      bool forest = true;
      std::vector<std::size_t> edges;
      for (std::size_t e = 0; e < ne && forest; ++e) {
        if (!(mask & (std::size_t{1} << e))) continue;
        int a = find(static_cast<int>(o.view.edges[e].tail_v));
        int b = find(static_cast<int>(o.view.edges[e].head_v));
        if (a == b) forest = false;
        root[static_cast<std::size_t>(a)] = b;
        edges.push_back(e);
      }
      if (forest) o.forests.push_back(edges);
    }
    key_to_obj[canonical_key(g)] = objs.size();
    objs.push_back(std::move(o));
  }

  struct Cell {
    std::size_t obj;
    std::vector<std::vector<std::size_t>> flag;
  };
  auto encode = [](std::size_t obj, const std::vector<std::vector<std::size_t>>& flag) {
    std::string s = std::to_string(obj);
    for (const auto& f : flag) {
      s += "|";
      for (std::size_t e : f) s += std::to_string(e) + ",";
    }
    return s;
  };
  auto proper_subset = [](const std::vector<std::size_t>& a,
                          const std::vector<std::size_t>& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
  };

  std::vector<std::vector<Cell>> cells;
  std::vector<std::map<std::string, std::size_t>> index;
  {
    std::vector<Cell> c0;
    for (std::size_t i = 0; i < objs.size(); ++i) c0.push_back({i, {}});
    cells.push_back(c0);
  }
  while (!cells.back().empty()) {
    std::vector<Cell> next;
    for (const auto& c : cells.back())
      for (const auto& f : objs[c.obj].forests)
        if (c.flag.empty() || proper_subset(c.flag.back(), f)) {
          Cell e = c;
          e.flag.push_back(f);
          next.push_back(std::move(e));
        }
    cells.push_back(std::move(next));
  }
  cells.pop_back();
  for (const auto& level : cells) {
    std::map<std::string, std::size_t> m;
    for (std::size_t i = 0; i < level.size(); ++i)
      m[encode(level[i].obj, level[i].flag)] = i;
    index.push_back(std::move(m));
  }
  std::size_t top = cells.size();  // degrees 0 .. top-1

  // Differentials of the full complex.
  std::vector<QMat> diff(top);  // diff[k]: C_k -> C_{k-1}, k >= 1
  for (std::size_t k = 1; k < top; ++k) {
    QMat dk(cells[k - 1].size(), cells[k].size());
    for (std::size_t ci = 0; ci < cells[k].size(); ++ci) {
      const Cell& c = cells[k][ci];
      const Obj& o = objs[c.obj];
      // Faces 1..k drop one forest, no line transport.
      for (std::size_t j = 1; j <= k; ++j) {
        auto flag = c.flag;
        flag.erase(flag.begin() + static_cast<long>(j - 1));
        dk.at(index[k - 1].at(encode(c.obj, flag)), ci) += (j % 2 == 0) ? 1 : -1;
      }
      // Face 0 collapses the innermost forest.
      auto [q, mor] = collapse_forest(o.gaf, c.flag.front());
      GafView vq = make_view(q);
      std::map<std::string, std::string> src_to_q;
      for (const auto& [dh, sh] : mor.half_edge_map) src_to_q[sh] = dh;
      auto tr_q = edge_transfer(o.view, vq, src_to_q);
      std::size_t o2i = key_to_obj.at(canonical_key(q));
      const Obj& o2 = objs[o2i];
      // q -> canonical <- o2 half-edge correspondence.
      CanonicalForm cq = canonical_form(q);
      CanonicalForm c2 = canonical_form(o2.gaf);
      std::map<std::string, std::string> canon_to_o2;
      for (const auto& [h, ch] : c2.relabeling.half_map) canon_to_o2[ch] = h;
      std::map<std::string, std::string> q_to_o2;
      for (const auto& [h, ch] : cq.relabeling.half_map)
        q_to_o2[h] = canon_to_o2.at(ch);
      auto tr_2 = edge_transfer(vq, o2.view, q_to_o2);
      std::vector<std::pair<std::size_t, int>> tr(o.view.edges.size(),
                                                  {static_cast<std::size_t>(-1), 0});
      for (std::size_t e = 0; e < tr.size(); ++e)
        if (tr_q[e].second != 0) {
          tr[e] = tr_2[tr_q[e].first];
          tr[e].second *= tr_q[e].second;
        }
      std::vector<std::vector<std::size_t>> flag2;
      for (std::size_t j = 1; j < c.flag.size(); ++j) {
        std::vector<std::size_t> f2;
        for (std::size_t e : c.flag[j])
          if (tr[e].second != 0) f2.push_back(tr[e].first);
        std::sort(f2.begin(), f2.end());
        flag2.push_back(std::move(f2));
      }
      int tsign = 1;
      if (d % 2 != 0) {
        QMat pushed(o2.view.edges.size(), o.h1.cols);
        for (std::size_t col = 0; col < o.h1.cols; ++col)
          for (std::size_t e = 0; e < tr.size(); ++e)
            if (tr[e].second != 0)
              pushed.at(tr[e].first, col) += tr[e].second * o.h1.at(e, col);
        tsign = qdet_sign(qsolve(o2.h1, pushed));
      }
      dk.at(index[k - 1].at(encode(o2i, flag2)), ci) += tsign;
    }
    diff[k] = std::move(dk);
  }
  // Averaging projectors and invariant bases. The face-0 target above is
  // only defined up to an automorphism of the target object, so the honest
  // differential to coinvariants is proj o diff; that one squares to zero.
  std::vector<QMat> basis(top), proj(top);
  for (std::size_t k = 0; k < top; ++k) {
    QMat p(cells[k].size(), cells[k].size());
    for (std::size_t ci = 0; ci < cells[k].size(); ++ci) {
      const Cell& c = cells[k][ci];
      const Obj& o = objs[c.obj];
      mpq_class w(1, static_cast<unsigned long>(o.aut_edges.size()));
      for (std::size_t a = 0; a < o.aut_edges.size(); ++a) {
        std::vector<std::vector<std::size_t>> flag2;
        for (const auto& f : c.flag) {
          std::vector<std::size_t> f2;
          for (std::size_t e : f) f2.push_back(o.aut_edges[a][e].first);
          std::sort(f2.begin(), f2.end());
          flag2.push_back(std::move(f2));
        }
        p.at(index[k].at(encode(c.obj, flag2)), ci) += o.aut_sign[a] * w;
      }
    }
    basis[k] = qcolspace(p);
    proj[k] = std::move(p);
  }
  for (std::size_t k = 2; k < top; ++k) {
    QMat z = proj[k - 2] * (diff[k - 1] * (proj[k - 1] * diff[k]));
    if (!(z == QMat(z.rows, z.cols)))
      throw std::runtime_error(
          "spine oracle: invariant differential does not square to zero");
  }

  std::vector<long> betti(top);
  std::vector<std::size_t> drank(top + 1, 0);
  for (std::size_t k = 1; k < top; ++k) {
    if (basis[k].cols == 0 || basis[k - 1].cols == 0) continue;
    drank[k] = qrank(qsolve(basis[k - 1], proj[k - 1] * (diff[k] * basis[k])));
  }
  for (std::size_t k = 0; k < top; ++k)
    betti[k] = static_cast<long>(basis[k].cols) - static_cast<long>(drank[k]) -
               static_cast<long>(drank[k + 1]);
  return betti;
}

}  // namespace grcob::testing
