#include "grcob/canonical.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <sstream>

#include "grcob/errors.hpp"

namespace grcob {

namespace {

using Encoding = std::vector<long>;

std::string pad_label(char prefix, std::size_t n) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%c%03zu", prefix, n);
  return buf;
}

struct Search {
  const GafView& view;
  std::vector<std::vector<std::size_t>> marks_at;  // vertex id -> B indices
  std::optional<Encoding> best;
  std::vector<std::size_t> best_rank;  // inner offset -> rank

  // Order-compatible refinement: colors are re-numbered preserving the old
  // color order, splitting classes by the multiset of neighbor colors.
  void refine(std::vector<long>& col) const {
    const std::size_t n = view.n_vertices();
    if (n == 0) return;
    while (true) {
      std::vector<std::pair<std::vector<long>, std::size_t>> sigs(n);
      for (std::size_t v = 0; v < n; ++v) sigs[v].second = v;
      for (std::size_t v = 0; v < n; ++v) sigs[v].first.push_back(col[v]);
      for (std::size_t h = 0; h < view.sigma.size(); ++h)
        sigs[view.sigma[h]].first.push_back(col[view.sigma[view.partner[h]]]);
      for (std::size_t v = 0; v < n; ++v)
        std::sort(sigs[v].first.begin() + 1, sigs[v].first.end());
      std::sort(sigs.begin(), sigs.end());
      long ncolors = 0;
      std::vector<long> next(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && sigs[i].first != sigs[i - 1].first) ++ncolors;
        next[sigs[i].second] = ncolors;
      }
      bool changed = false;
      for (std::size_t v = 0; v < n; ++v)
        if (next[v] != col[v]) changed = true;
      // Colors are always 0..k in both old and new numbering; stabilize when
      // the class count stops growing.
      long old_max = *std::max_element(col.begin(), col.end());
      long new_max = *std::max_element(next.begin(), next.end());
      col = next;
      if (!changed || new_max == old_max) break;
    }
  }

  Encoding encode(const std::vector<std::size_t>& rank) const {
    // rank: inner offset -> position among inner vertices.
    auto num = [&](std::size_t v) -> long {
      if (view.is_attach(v)) return static_cast<long>(v);
      return static_cast<long>(view.n_attach + rank[v - view.n_attach]);
    };
    Encoding e;
    e.push_back(static_cast<long>(view.n_attach));
    e.push_back(static_cast<long>(view.n_inner));
    e.push_back(static_cast<long>(view.edges.size()));
    std::vector<std::pair<long, long>> edges;
    for (const auto& ed : view.edges) {
      long u = num(ed.tail_v), w = num(ed.head_v);
      edges.emplace_back(std::min(u, w), std::max(u, w));
    }
    std::sort(edges.begin(), edges.end());
    for (const auto& [u, w] : edges) {
      e.push_back(u);
      e.push_back(w);
    }
    return e;
  }

  void leaf(const std::vector<long>& col,
            const std::vector<std::size_t>& mark_vertex) {
    // All inner classes are singletons; rank inner vertices by color.
    std::vector<std::pair<long, std::size_t>> order;
    for (std::size_t i = 0; i < view.n_inner; ++i)
      order.emplace_back(col[view.n_attach + i], i);
    std::sort(order.begin(), order.end());
    std::vector<std::size_t> rank(view.n_inner);
    for (std::size_t pos = 0; pos < order.size(); ++pos)
      rank[order[pos].second] = pos;
    Encoding e = encode(rank);
    auto num = [&](std::size_t v) -> long {
      if (view.is_attach(v)) return static_cast<long>(v);
      return static_cast<long>(view.n_attach + rank[v - view.n_attach]);
    };
    for (std::size_t mv : mark_vertex) e.push_back(num(mv));
    if (!best || e < *best) {
      best = e;
      best_rank = rank;
    }
  }

  bool all_inner_singleton(const std::vector<long>& col) const {
    std::map<long, int> cnt;
    for (std::size_t i = 0; i < view.n_inner; ++i)
      ++cnt[col[view.n_attach + i]];
    for (const auto& [c, k] : cnt)
      if (k > 1) return false;
    return true;
  }

  void search(std::vector<long> col,
              const std::vector<std::size_t>& mark_vertex) {
    refine(col);
    if (all_inner_singleton(col)) {
      leaf(col, mark_vertex);
      return;
    }
    // First non-singleton inner class in color order.
    std::map<long, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < view.n_inner; ++i)
      classes[col[view.n_attach + i]].push_back(view.n_attach + i);
    for (const auto& [c, members] : classes) {
      if (members.size() < 2) continue;
      for (std::size_t v : members) {
        std::vector<long> col2 = col;
        // Place the individualized vertex strictly before its class.
        for (auto& x : col2) x *= 2;
        col2[v] -= 1;
        search(std::move(col2), mark_vertex);
      }
      return;
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const MarkedGaf& g) {
  auto violations = validate(g);
  if (!violations.empty())
    throw GrcobError("InvalidGaf", violations.front());
  GafView view = make_view(g.gaf);

  Search s{view, {}, std::nullopt, {}};
  s.marks_at.assign(view.n_vertices(), {});
  std::vector<std::size_t> mark_vertex;
  for (std::size_t b = 0; b < g.source.size(); ++b) {
    std::size_t v = view.vertex_id.at(g.marking.at(g.source[b]));
    s.marks_at[v].push_back(b);
    mark_vertex.push_back(v);
  }

  // Initial colors: attach fixed and pairwise distinct, inner by
  // (valence, marking fiber), numbered after every attach color.
  std::vector<long> col(view.n_vertices());
  for (std::size_t a = 0; a < view.n_attach; ++a) col[a] = static_cast<long>(a);
  {
    std::vector<std::pair<std::vector<long>, std::size_t>> sigs;
    for (std::size_t i = 0; i < view.n_inner; ++i) {
      std::size_t v = view.n_attach + i;
      std::vector<long> sig{static_cast<long>(view.valence[v])};
      for (std::size_t b : s.marks_at[v]) sig.push_back(static_cast<long>(b));
      sigs.emplace_back(std::move(sig), v);
    }
    std::sort(sigs.begin(), sigs.end());
    long c = static_cast<long>(view.n_attach);
    for (std::size_t i = 0; i < sigs.size(); ++i) {
      if (i > 0 && sigs[i].first != sigs[i - 1].first) ++c;
      col[sigs[i].second] = c;
    }
  }

  s.search(col, mark_vertex);
  if (view.n_inner == 0 && !s.best) s.leaf(col, mark_vertex);

  const std::vector<std::size_t>& rank = s.best_rank;
  auto num = [&](std::size_t v) -> std::size_t {
    if (view.is_attach(v)) return v;
    return view.n_attach + rank[v - view.n_attach];
  };

  CanonicalForm out;
  Gaf& cg = out.gaf.gaf;
  cg.attach = g.gaf.attach;
  for (std::size_t i = 0; i < view.n_inner; ++i)
    cg.inner.push_back(pad_label('v', i));
  auto vertex_name = [&](std::size_t number) -> std::string {
    if (number < view.n_attach) return cg.attach[number];
    return cg.inner[number - view.n_attach];
  };
  for (std::size_t i = 0; i < view.n_inner; ++i)
    out.relabeling.vertex_map[view.vertex_label[view.n_attach + i]] =
        cg.inner[rank[i]];

  // Sort original edges into canonical slots.
  struct E {
    std::size_t lo, hi;    // canonical endpoint numbers, lo <= hi
    std::size_t h_lo, h_hi;  // original half indices at lo / hi endpoint
  };
  std::vector<E> edges;
  for (const auto& ed : view.edges) {
    std::size_t u = num(ed.tail_v), w = num(ed.head_v);
    if (u <= w)
      edges.push_back({u, w, ed.tail_h, ed.head_h});
    else
      edges.push_back({w, u, ed.head_h, ed.tail_h});
  }
  std::sort(edges.begin(), edges.end(), [](const E& a, const E& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    if (a.hi != b.hi) return a.hi < b.hi;
    return std::min(a.h_lo, a.h_hi) < std::min(b.h_lo, b.h_hi);
  });
  std::vector<std::string> orig_half_label(view.sigma.size());
  for (const auto& [label, idx] : view.half_id) orig_half_label[idx] = label;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    std::string ht = pad_label('h', 2 * k), hh = pad_label('h', 2 * k + 1);
    cg.half_edges.push_back(ht);
    cg.half_edges.push_back(hh);
    cg.incidence[ht] = vertex_name(edges[k].lo);
    cg.incidence[hh] = vertex_name(edges[k].hi);
    cg.edge_pairs.emplace_back(ht, hh);
    std::size_t a = edges[k].h_lo, b = edges[k].h_hi;
    if (edges[k].lo == edges[k].hi && orig_half_label[a] > orig_half_label[b])
      std::swap(a, b);
    out.relabeling.half_map[orig_half_label[a]] = ht;
    out.relabeling.half_map[orig_half_label[b]] = hh;
  }

  out.gaf.source = g.source;
  for (const auto& b : g.source)
    out.gaf.marking[b] = vertex_name(num(view.vertex_id.at(g.marking.at(b))));
  return out;
}

CanonicalForm canonical_form(const Gaf& g) {
  MarkedGaf m;
  m.gaf = g;
  return canonical_form(m);
}

std::string canonical_key(const MarkedGaf& g) {
  CanonicalForm c = canonical_form(g);
  std::ostringstream os;
  os << "A:";
  for (const auto& a : c.gaf.gaf.attach) os << a << ",";
  os << "|V:" << c.gaf.gaf.inner.size() << "|E:";
  for (const auto& [h1, h2] : c.gaf.gaf.edge_pairs)
    os << c.gaf.gaf.incidence.at(h1) << "-" << c.gaf.gaf.incidence.at(h2)
       << ";";
  os << "|M:";
  for (const auto& b : c.gaf.source) os << b << ">" << c.gaf.marking.at(b)
                                        << ";";
  return os.str();
}

std::string canonical_key(const Gaf& g) {
  MarkedGaf m;
  m.gaf = g;
  return canonical_key(m);
}

}  // namespace grcob
