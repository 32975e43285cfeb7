#include "grcob/spine.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "grcob/aut.hpp"
#include "grcob/canonical.hpp"
#include "grcob/collapse.hpp"
#include "grcob/detline.hpp"
#include "grcob/errors.hpp"
#include "grcob/snf.hpp"

namespace grcob {

namespace {

std::string pad_label(char c, std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%c%03zu", c, static_cast<std::size_t>(i));
  return buf;
}

Gaf gaf_from_multiset(std::size_t nv,
                      const std::vector<std::pair<std::size_t, std::size_t>>&
                          edges) {
  Gaf g;
  for (std::size_t i = 0; i < nv; ++i) g.inner.push_back(pad_label('v', i));
  for (std::size_t k = 0; k < edges.size(); ++k) {
    std::string a = pad_label('h', 2 * k), b = pad_label('h', 2 * k + 1);
    g.half_edges.push_back(a);
    g.half_edges.push_back(b);
    g.incidence[a] = g.inner[edges[k].first];
    g.incidence[b] = g.inner[edges[k].second];
    g.edge_pairs.emplace_back(a, b);
  }
  return g;
}

bool is_connected(std::size_t nv,
                  const std::vector<std::pair<std::size_t, std::size_t>>&
                      edges) {
  std::vector<std::size_t> p(nv);
  std::iota(p.begin(), p.end(), 0);
  auto find = [&](std::size_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  };
  std::size_t comps = nv;
  for (const auto& [a, b] : edges) {
    std::size_t ra = find(a), rb = find(b);
    if (ra != rb) {
      p[rb] = ra;
      --comps;
    }
  }
  return comps == 1;
}

}  // namespace

std::vector<Gaf> enumerate_spine_objects(long n) {
  if (n < 2) throw GrcobError("MalformedInput", "rank must be at least 2");
  if (n > 4) throw GrcobError("RankTooLarge", "rank above 4 not supported");
  std::vector<Gaf> out;
  std::set<std::string> seen;
  for (std::size_t nv = 1; nv + 1 <= 2 * static_cast<std::size_t>(n) - 1;
       ++nv) {
    std::size_t ne = nv + static_cast<std::size_t>(n) - 1;
    std::size_t cap = 2 * ne - 3 * nv + 3;  // per-vertex degree ceiling
    std::vector<std::pair<std::size_t, std::size_t>> types;
    for (std::size_t i = 0; i < nv; ++i)
      for (std::size_t j = i; j < nv; ++j) types.emplace_back(i, j);
    std::vector<std::size_t> deg(nv, 0);
    std::vector<std::pair<std::size_t, std::size_t>> chosen;
    auto rec = [&](auto&& self, std::size_t t) -> void {
      if (chosen.size() == ne) {
        for (std::size_t i = 0; i < nv; ++i)
          if (deg[i] < 3) return;
        if (!is_connected(nv, chosen)) return;
        Gaf g = gaf_from_multiset(nv, chosen);
        if (seen.insert(canonical_key(g)).second)
          out.push_back(canonical_form(g).gaf.gaf);
        return;
      }
      if (t == types.size()) return;
      std::size_t room = ne - chosen.size();
      self(self, t + 1);
      auto [i, j] = types[t];
      std::size_t w = i == j ? 2 : 1;
      for (std::size_t m = 1; m <= room; ++m) {
        deg[i] += w;
        deg[j] += i == j ? 0 : 1;
        chosen.push_back(types[t]);
        if (deg[i] > cap || deg[j] > cap) break;
        self(self, t + 1);
      }
      while (!chosen.empty() && chosen.back() == types[t]) {
        chosen.pop_back();
        deg[i] -= w;
        deg[j] -= i == j ? 0 : 1;
      }
    };
    rec(rec, 0);
  }
  // Canonical keys give a stable, label-independent order.
  std::sort(out.begin(), out.end(), [](const Gaf& a, const Gaf& b) {
    return canonical_key(a) < canonical_key(b);
  });
  return out;
}

namespace {

using Flag = std::vector<std::vector<std::size_t>>;

struct ObjectData {
  Gaf gaf;
  GafView view;
  IntMatrix h1;                      // canonical cycle basis, view coords
  std::vector<GafAutomorphism> aut;  // label form
  std::vector<std::vector<std::size_t>> aut_edge;  // edge index permutations
  std::vector<int> aut_sign;                       // twisted line action
  std::vector<std::vector<std::size_t>> forests;   // nonempty, sorted
};

Flag apply_aut(const Flag& f, const std::vector<std::size_t>& eperm) {
  Flag out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t e : f[i]) out[i].push_back(eperm[e]);
    std::sort(out[i].begin(), out[i].end());
  }
  return out;
}

// Orbit minimum of a flag under the automorphism group, with one achieving
// automorphism and the kill test for the twisted coefficient.
struct Orbit {
  Flag min;
  std::size_t witness = 0;  // automorphism index realizing the minimum
  bool killed = false;
};

Orbit orbit_of(const ObjectData& od, const Flag& f) {
  Orbit o;
  o.min = apply_aut(f, od.aut_edge[0]);
  for (std::size_t a = 0; a < od.aut_edge.size(); ++a) {
    Flag img = apply_aut(f, od.aut_edge[a]);
    if (img < o.min) {
      o.min = img;
      o.witness = a;
    }
    if (img == f && od.aut_sign[a] < 0) o.killed = true;
  }
  return o;
}

bool is_forest(const GafView& v, const std::vector<std::size_t>& edges) {
  std::vector<std::size_t> p(v.n_vertices());
  std::iota(p.begin(), p.end(), 0);
  auto find = [&](std::size_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  };
  for (std::size_t e : edges) {
    std::size_t a = find(v.edges[e].tail_v), b = find(v.edges[e].head_v);
    if (a == b) return false;
    p[b] = a;
  }
  return true;
}

}  // namespace

SpineComplex spine_chain_complex(long n, long d, bool allow_rank4) {
  if (n == 4 && !allow_rank4)
    throw GrcobError("RankTooLarge", "rank 4 is experimental; pass the flag");
  if (n > 3 && !allow_rank4)
    throw GrcobError("RankTooLarge", "rank above 3 not supported");
  SpineComplex sc;
  sc.n = n;
  sc.d = d;
  sc.objects = enumerate_spine_objects(n);

  std::vector<ObjectData> obj;
  std::map<std::string, std::size_t> key_to_obj;
  for (std::size_t i = 0; i < sc.objects.size(); ++i) {
    ObjectData od;
    od.gaf = sc.objects[i];
    od.view = make_view(od.gaf);
    od.h1 = xi_object(od.gaf, 1).h1_basis;
    od.aut = automorphism_group(od.gaf);
    std::map<std::size_t, std::size_t> edge_of_half;
    for (std::size_t k = 0; k < od.view.edges.size(); ++k) {
      edge_of_half[od.view.edges[k].tail_h] = k;
      edge_of_half[od.view.edges[k].head_h] = k;
    }
    for (const auto& phi : od.aut) {
      std::vector<std::size_t> eperm(od.view.edges.size());
      for (std::size_t k = 0; k < od.view.edges.size(); ++k) {
        const std::string& tl = od.gaf.half_edges[od.view.edges[k].tail_h];
        eperm[k] = edge_of_half.at(od.view.half_id.at(phi.half_map.at(tl)));
      }
      od.aut_edge.push_back(std::move(eperm));
      od.aut_sign.push_back(xi_iso_action(od.gaf, phi, d));
    }
    // Nonempty forests, each sorted; subsets fit in a machine word here.
    std::size_t ne = od.view.edges.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << ne); ++mask) {
      std::vector<std::size_t> f;
      for (std::size_t e = 0; e < ne; ++e)
        if (mask & (std::size_t{1} << e)) f.push_back(e);
      if (is_forest(od.view, f)) od.forests.push_back(std::move(f));
    }
    key_to_obj[canonical_key(od.gaf)] = i;
    obj.push_back(std::move(od));
  }

  // Cells by degree: flags of strictly nested forests, orbit representatives
  // only, killed classes dropped.
  std::vector<std::map<std::pair<std::size_t, Flag>, std::size_t>> index;
  sc.cells.emplace_back();
  index.emplace_back();
  for (std::size_t i = 0; i < obj.size(); ++i) {
    Orbit o = orbit_of(obj[i], {});
    if (o.killed) continue;
    index.back()[{i, {}}] = sc.cells[0].size();
    sc.cells[0].push_back({i, {}});
  }
  for (std::size_t k = 1;; ++k) {
    std::vector<SpineCell> layer;
    std::map<std::pair<std::size_t, Flag>, std::size_t> idx;
    for (std::size_t i = 0; i < obj.size(); ++i) {
      auto extend = [&](auto&& self, const Flag& f) -> void {
        if (f.size() == k) {
          Orbit o = orbit_of(obj[i], f);
          if (o.min == f && !o.killed) {
            idx[{i, f}] = layer.size();
            layer.push_back({i, f});
          }
          return;
        }
        for (const auto& g : obj[i].forests) {
          if (!f.empty()) {
            const auto& prev = f.back();
            if (g.size() <= prev.size() ||
                !std::includes(g.begin(), g.end(), prev.begin(), prev.end()))
              continue;
          }
          Flag f2 = f;
          f2.push_back(g);
          self(self, f2);
        }
      };
      extend(extend, {});
    }
    if (layer.empty()) break;
    sc.cells.push_back(std::move(layer));
    index.push_back(std::move(idx));
  }

  // Differential. The face at position 0 collapses the first forest and
  // re-expresses the rest in the quotient; the other faces drop one level.
  auto face_zero = [&](const SpineCell& c, std::size_t& tobj, Flag& tflag,
                       int& sign) {
    const ObjectData& od = obj[c.object];
    std::vector<std::size_t> phi1 = c.flag[0];
    auto [q, fmor] = collapse_forest(od.gaf, phi1);
    (void)fmor;
    CanonicalForm cf = canonical_form(q);
    tobj = key_to_obj.at(canonical_key(q));
    const ObjectData& td = obj[tobj];
    // Surviving edge of the object -> edge index of the target object,
    // through the quotient labels and the canonical relabeling.
    std::map<std::size_t, std::pair<std::size_t, int>> tgt_edge_of_half;
    for (std::size_t k2 = 0; k2 < td.view.edges.size(); ++k2) {
      tgt_edge_of_half[td.view.edges[k2].tail_h] = {k2, 1};
      tgt_edge_of_half[td.view.edges[k2].head_h] = {k2, -1};
    }
    std::set<std::size_t> dead(phi1.begin(), phi1.end());
    std::vector<long> edge_img(od.view.edges.size(), -1);
    std::vector<int> edge_sgn(od.view.edges.size(), 1);
    for (std::size_t e = 0; e < od.view.edges.size(); ++e) {
      if (dead.count(e)) continue;
      const std::string& tl = od.gaf.half_edges[od.view.edges[e].tail_h];
      std::string lab = cf.relabeling.half_map.at(tl);
      auto [k2, s] = tgt_edge_of_half.at(td.view.half_id.at(lab));
      edge_img[e] = static_cast<long>(k2);
      edge_sgn[e] = s;
    }
    tflag.clear();
    for (std::size_t lvl = 1; lvl < c.flag.size(); ++lvl) {
      std::vector<std::size_t> img;
      for (std::size_t e : c.flag[lvl])
        if (!dead.count(e)) img.push_back(static_cast<std::size_t>(edge_img[e]));
      std::sort(img.begin(), img.end());
      tflag.push_back(std::move(img));
    }
    Orbit o = orbit_of(td, tflag);
    if (o.killed) {
      sign = 0;
      return;
    }
    tflag = o.min;
    if (d % 2 == 0) {
      sign = 1;
      return;
    }
    // Push the cycle basis through collapse, relabeling, and the witness.
    IntMatrix pushed(td.h1.rows(), od.h1.cols());
    for (std::size_t e = 0; e < od.view.edges.size(); ++e) {
      if (edge_img[e] < 0) continue;
      // Orientation through the witness: where its half-edge map sends the
      // tail of the intermediate edge.
      const std::string& tl =
          td.gaf.half_edges[td.view.edges[edge_img[e]].tail_h];
      const std::string& wl = td.aut[o.witness].half_map.at(tl);
      auto [k3, s3] = tgt_edge_of_half.at(td.view.half_id.at(wl));
      for (std::size_t col = 0; col < od.h1.cols(); ++col)
        pushed.at(k3, col) += edge_sgn[e] * s3 * od.h1.at(e, col);
    }
    sign = det_sign_of_base_change(td.h1, pushed);
  };

  for (std::size_t k = 1; k < sc.cells.size(); ++k) {
    IntMatrix m(sc.cells[k - 1].size(), sc.cells[k].size());
    for (std::size_t col = 0; col < sc.cells[k].size(); ++col) {
      const SpineCell& c = sc.cells[k][col];
      const ObjectData& od = obj[c.object];
      for (std::size_t i = 0; i <= k; ++i) {
        std::size_t tobj;
        Flag tflag;
        int sign;
        if (i == 0) {
          face_zero(c, tobj, tflag, sign);
        } else {
          tobj = c.object;
          tflag = c.flag;
          tflag.erase(tflag.begin() + static_cast<long>(i) - 1);
          Orbit o = orbit_of(od, tflag);
          if (o.killed) {
            sign = 0;
          } else {
            tflag = o.min;
            sign = d % 2 == 0 ? 1 : od.aut_sign[o.witness];
          }
        }
        if (sign == 0) continue;
        auto it = index[k - 1].find({tobj, tflag});
        if (it == index[k - 1].end())
          throw GrcobError("InternalError", "face class not found");
        m.at(it->second, col) += (i % 2 == 0 ? 1 : -1) * sign;
      }
    }
    sc.differential.push_back(std::move(m));
  }
  return sc;
}

std::vector<long> homology(const SpineComplex& sc) {
  std::vector<long> betti;
  for (std::size_t k = 0; k < sc.cells.size(); ++k) {
    long dim = static_cast<long>(sc.cells[k].size());
    long rk = k > 0 ? static_cast<long>(sc.differential[k - 1].rank()) : 0;
    long rk1 = k < sc.differential.size()
                   ? static_cast<long>(sc.differential[k].rank())
                   : 0;
    betti.push_back(dim - rk - rk1);
  }
  return betti;
}

std::vector<long> twisted_homology(long n, long d, bool allow_rank4) {
  return homology(spine_chain_complex(n, d, allow_rank4));
}

}  // namespace grcob
