#include "grcob/pool.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace grcob {

Pool::Pool(std::uint64_t seed, PoolBounds bounds)
    : rng_(seed), bounds_(bounds) {}

std::size_t Pool::uniform(std::size_t n) { return rng_() % n; }

MarkedGaf Pool::random_gaf(const std::vector<std::string>& attach) {
  MarkedGaf g;
  g.gaf.attach = attach;
  std::size_t nv = uniform(bounds_.v_max + 1);
  for (std::size_t i = 0; i < nv; ++i)
    g.gaf.inner.push_back("v" + std::to_string(i));
  std::vector<std::string> verts = g.gaf.attach;
  verts.insert(verts.end(), g.gaf.inner.begin(), g.gaf.inner.end());
  std::size_t ne = verts.empty() ? 0 : uniform(bounds_.e_max + 1);
  for (std::size_t k = 0; k < ne; ++k) {
    std::string x = "h" + std::to_string(2 * k);
    std::string y = "h" + std::to_string(2 * k + 1);
    g.gaf.half_edges.push_back(x);
    g.gaf.half_edges.push_back(y);
    g.gaf.incidence[x] = verts[uniform(verts.size())];
    g.gaf.incidence[y] = verts[uniform(verts.size())];
    g.gaf.edge_pairs.emplace_back(x, y);
  }
  std::size_t nb = verts.empty() ? 0 : uniform(bounds_.b_max + 1);
  for (std::size_t i = 0; i < nb; ++i) {
    std::string b = "b" + std::to_string(i);
    g.source.push_back(b);
    g.marking[b] = verts[uniform(verts.size())];
  }
  return g;
}

MarkedGaf Pool::next_gaf() {
  std::size_t na = uniform(bounds_.a_max + 1);
  std::vector<std::string> attach;
  for (std::size_t i = 0; i < na; ++i)
    attach.push_back("a" + std::to_string(i));
  return random_gaf(attach);
}

std::pair<GrMorphism, GrMorphism> Pool::next_composable_pair() {
  GrMorphism g{next_gaf()};
  GrMorphism h{random_gaf(g.source())};
  return {g, h};
}

std::tuple<GrMorphism, GrMorphism, GrMorphism>
Pool::next_composable_triple() {
  auto [g, h] = next_composable_pair();
  GrMorphism k{random_gaf(h.source())};
  return {g, h, k};
}

std::pair<MarkedGaf, std::vector<std::size_t>> Pool::next_forest() {
  MarkedGaf g = next_gaf();
  GafView v = make_view(g.gaf);
  // Grow a random legal forest greedily.
  std::vector<std::size_t> parent(v.n_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::size_t> attach_in_class(v.n_vertices(), 0);
  for (std::size_t i = 0; i < v.n_attach; ++i) attach_in_class[i] = 1;
  std::vector<std::size_t> order(v.edges.size());
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = order.size(); i > 1; --i)
    std::swap(order[i - 1], order[uniform(i)]);
  std::vector<std::size_t> forest;
  for (std::size_t e : order) {
    if (uniform(2) == 0) continue;
    std::size_t a = find(v.edges[e].tail_v), b = find(v.edges[e].head_v);
    if (a == b || attach_in_class[a] + attach_in_class[b] > 1) continue;
    parent[b] = a;
    attach_in_class[a] += attach_in_class[b];
    forest.push_back(e);
  }
  std::sort(forest.begin(), forest.end());
  return {g, forest};
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* s = std::getenv("GRCOB_SEED");
  if (!s || !*s) return fallback;
  return std::strtoull(s, nullptr, 10);
}

}  // namespace grcob
