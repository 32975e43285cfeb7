#include "grcob/gr.hpp"

#include <algorithm>
#include <set>

#include "grcob/errors.hpp"

namespace grcob {

namespace {

void require_valid(const MarkedGaf& g) {
  auto v = validate(g);
  if (!v.empty()) throw GrcobError("InvalidGaf", v.front());
}

bool label_collision(const MarkedGaf& g, const MarkedGaf& h) {
  std::set<std::string> gv(g.gaf.attach.begin(), g.gaf.attach.end());
  gv.insert(g.gaf.inner.begin(), g.gaf.inner.end());
  for (const auto& x : h.gaf.inner)
    if (gv.count(x)) return true;
  for (const auto& x : h.gaf.attach)
    if (gv.count(x)) return true;
  std::set<std::string> gh(g.gaf.half_edges.begin(), g.gaf.half_edges.end());
  for (const auto& x : h.gaf.half_edges)
    if (gh.count(x)) return true;
  return false;
}

std::string fresh(std::string candidate, const std::set<std::string>& taken) {
  while (taken.count(candidate)) candidate = "_" + candidate;
  return candidate;
}

}  // namespace

GrMorphism identity(const std::vector<std::string>& a) {
  GrMorphism m;
  m.rep.gaf.attach = a;
  m.rep.source = a;
  for (const auto& x : a) m.rep.marking[x] = x;
  require_valid(m.rep);
  return m;
}

GrMorphism compose(const GrMorphism& g, const GrMorphism& h,
                   bool force_prefix) {
  if (std::set<std::string>(g.source().begin(), g.source().end()) !=
      std::set<std::string>(h.target().begin(), h.target().end()))
    throw GrcobError("SourceTargetMismatch",
                     "inner morphism target differs from outer source");
  bool prefix = force_prefix || label_collision(g.rep, h.rep);
  auto pv = [&](const std::string& x, bool left) {
    return prefix ? (left ? "L." : "R.") + x : x;
  };

  GrMorphism out;
  Gaf& k = out.rep.gaf;
  k.attach = g.rep.gaf.attach;
  std::set<std::string> vtaken(k.attach.begin(), k.attach.end());
  std::map<std::string, std::string> gv, hv;  // inner renamings
  for (const auto& v : g.rep.gaf.inner) {
    std::string nv = fresh(pv(v, true), vtaken);
    vtaken.insert(nv);
    gv[v] = nv;
    k.inner.push_back(nv);
  }
  for (const auto& v : h.rep.gaf.inner) {
    std::string nv = fresh(pv(v, false), vtaken);
    vtaken.insert(nv);
    hv[v] = nv;
    k.inner.push_back(nv);
  }
  // Resolve where a vertex of h lands in the composite.
  std::set<std::string> h_attach(h.rep.gaf.attach.begin(),
                                 h.rep.gaf.attach.end());
  std::set<std::string> g_attach(g.rep.gaf.attach.begin(),
                                 g.rep.gaf.attach.end());
  auto resolve_g = [&](const std::string& v) {
    return g_attach.count(v) ? v : gv.at(v);
  };
  auto resolve_h = [&](const std::string& v) {
    if (h_attach.count(v)) return resolve_g(g.rep.marking.at(v));
    return hv.at(v);
  };
  std::set<std::string> htaken;
  std::map<std::string, std::string> gh, hh;  // half renamings
  for (const auto& x : g.rep.gaf.half_edges) {
    std::string nx = fresh(pv(x, true), htaken);
    htaken.insert(nx);
    gh[x] = nx;
    k.half_edges.push_back(nx);
    k.incidence[nx] = resolve_g(g.rep.gaf.incidence.at(x));
  }
  for (const auto& x : h.rep.gaf.half_edges) {
    std::string nx = fresh(pv(x, false), htaken);
    htaken.insert(nx);
    hh[x] = nx;
    k.half_edges.push_back(nx);
    k.incidence[nx] = resolve_h(h.rep.gaf.incidence.at(x));
  }
  for (const auto& [x, y] : g.rep.gaf.edge_pairs)
    k.edge_pairs.emplace_back(gh.at(x), gh.at(y));
  for (const auto& [x, y] : h.rep.gaf.edge_pairs)
    k.edge_pairs.emplace_back(hh.at(x), hh.at(y));
  out.rep.source = h.rep.source;
  for (const auto& c : h.rep.source)
    out.rep.marking[c] = resolve_h(h.rep.marking.at(c));
  require_valid(out.rep);
  return out;
}

GrMorphism tensor(const GrMorphism& g, const GrMorphism& h,
                  bool force_prefix) {
  bool prefix = force_prefix || label_collision(g.rep, h.rep);
  if (!prefix) {
    std::set<std::string> gb(g.source().begin(), g.source().end());
    for (const auto& b : h.source())
      if (gb.count(b)) prefix = true;
  }
  auto pv = [&](const std::string& x, bool left) {
    return prefix ? (left ? "L." : "R.") + x : x;
  };
  GrMorphism out;
  Gaf& k = out.rep.gaf;
  auto add = [&](const MarkedGaf& m, bool left) {
    for (const auto& a : m.gaf.attach) k.attach.push_back(pv(a, left));
    for (const auto& v : m.gaf.inner) k.inner.push_back(pv(v, left));
    for (const auto& x : m.gaf.half_edges) {
      k.half_edges.push_back(pv(x, left));
      k.incidence[pv(x, left)] = pv(m.gaf.incidence.at(x), left);
    }
    for (const auto& [x, y] : m.gaf.edge_pairs)
      k.edge_pairs.emplace_back(pv(x, left), pv(y, left));
    for (const auto& b : m.source) {
      out.rep.source.push_back(pv(b, left));
      out.rep.marking[pv(b, left)] = pv(m.marking.at(b), left);
    }
  };
  add(g.rep, true);
  add(h.rep, false);
  require_valid(out.rep);
  return out;
}

GrMorphism op1(const std::vector<std::string>& b,
               const std::vector<std::string>& a,
               const std::map<std::string, std::string>& f) {
  GrMorphism out;
  out.rep.gaf.attach = a;
  out.rep.source = b;
  std::set<std::string> av(a.begin(), a.end());
  for (const auto& x : b) {
    auto it = f.find(x);
    if (it == f.end() || !av.count(it->second))
      throw GrcobError("UnknownLabel", "map not total into A at '" + x + "'");
    out.rep.marking[x] = it->second;
  }
  require_valid(out.rep);
  return out;
}

GrMorphism op2(const std::vector<std::string>& a) {
  GrMorphism out;
  out.rep.gaf.attach = a;
  std::set<std::string> taken(a.begin(), a.end());
  std::string nv = fresh("new", taken);
  out.rep.gaf.inner.push_back(nv);
  out.rep.source = a;
  for (const auto& x : a) out.rep.marking[x] = x;
  out.rep.source.push_back(nv);
  out.rep.marking[nv] = nv;
  require_valid(out.rep);
  return out;
}

GrMorphism op3(const std::vector<std::string>& a, const std::string& a1,
               const std::string& a2) {
  std::set<std::string> av(a.begin(), a.end());
  if (!av.count(a1) || !av.count(a2))
    throw GrcobError("UnknownLabel", "op3 endpoints must lie in A");
  GrMorphism out;
  out.rep.gaf.attach = a;
  out.rep.gaf.half_edges = {"i0", "i1"};
  out.rep.gaf.incidence["i0"] = a1;
  out.rep.gaf.incidence["i1"] = a2;
  out.rep.gaf.edge_pairs.emplace_back("i0", "i1");
  out.rep.source = a;
  for (const auto& x : a) out.rep.marking[x] = x;
  require_valid(out.rep);
  return out;
}

HomotopyInvariants homotopy_invariants(const GrMorphism& g) {
  GafView v = make_view(g.rep.gaf);
  Components c = analyze_components(v);
  std::vector<HomotopyInvariants::Component> comps(c.count);
  for (std::size_t i = 0; i < v.n_vertices(); ++i)
    if (v.is_attach(i))
      comps[c.vertex_comp[i]].attach.push_back(v.vertex_label[i]);
  for (std::size_t comp = 0; comp < c.count; ++comp) {
    long inner = static_cast<long>(c.vertex_count[comp]) -
                 static_cast<long>(c.attach_count[comp]);
    comps[comp].h1_rank = static_cast<long>(c.edge_count[comp]) - inner +
                          (c.attach_count[comp] == 0 ? 1 : 0);
  }
  for (const auto& b : g.rep.source) {
    std::size_t mv = v.vertex_id.at(g.rep.marking.at(b));
    comps[c.vertex_comp[mv]].marks.push_back(b);
  }
  for (auto& comp : comps) {
    std::sort(comp.attach.begin(), comp.attach.end());
    std::sort(comp.marks.begin(), comp.marks.end());
  }
  HomotopyInvariants out;
  out.components = std::move(comps);
  std::sort(out.components.begin(), out.components.end());
  return out;
}

}  // namespace grcob
