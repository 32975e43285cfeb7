#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grcob/canonical.hpp"
#include "grcob/errors.hpp"
#include "grcob/gr.hpp"
#include "grcob/pool.hpp"
#include "helpers.hpp"

using namespace grcob;
using namespace grcob::testing;

namespace {

/// Interval from attach a to a marked inner vertex v.
GrMorphism hook() {
  MarkedGaf g;
  g.gaf.attach = {"a"};
  g.gaf.inner = {"v"};
  g.gaf.half_edges = {"h1", "h2"};
  g.gaf.incidence = {{"h1", "a"}, {"h2", "v"}};
  g.gaf.edge_pairs = {{"h1", "h2"}};
  g.source = {"b"};
  g.marking = {{"b", "v"}};
  return {g};
}

}  // namespace

TEST_CASE("identity and unit laws") {
  GrMorphism id = identity({"a", "b"});
  REQUIRE(id.source() == id.target());
  REQUIRE(id.rep.gaf.inner.empty());
  REQUIRE(id.rep.gaf.edge_pairs.empty());

  GrMorphism g = op3({"a", "b"}, "a", "b");
  REQUIRE(canonical_key(compose(identity({"a", "b"}), g).rep) ==
          canonical_key(g.rep));
  REQUIRE(canonical_key(compose(g, identity({"a", "b"})).rep) ==
          canonical_key(g.rep));
}

TEST_CASE("composition glues along the marking") {
  // Two loops at the same attach point compose to a rose at the attach.
  GrMorphism loop = op3({"a"}, "a", "a");
  GrMorphism two = compose(loop, loop);
  REQUIRE(two.target() == std::vector<std::string>{"a"});
  REQUIRE(two.source() == std::vector<std::string>{"a"});
  MarkedGaf expect;
  expect.gaf.attach = {"a"};
  expect.gaf.half_edges = {"p1", "p2", "q1", "q2"};
  expect.gaf.incidence = {{"p1", "a"}, {"p2", "a"}, {"q1", "a"}, {"q2", "a"}};
  expect.gaf.edge_pairs = {{"p1", "p2"}, {"q1", "q2"}};
  expect.source = {"a"};
  expect.marking = {{"a", "a"}};
  REQUIRE(canonical_key(two.rep) == canonical_key(expect));

  // Gluing onto a marked inner vertex hangs the loop off the interval.
  GrMorphism g = hook();
  GrMorphism h = op3({"b"}, "b", "b");
  GrMorphism k = compose(g, h);
  REQUIRE(k.target() == std::vector<std::string>{"a"});
  MarkedGaf expect2 = hook().rep;
  expect2.gaf.half_edges.push_back("l1");
  expect2.gaf.half_edges.push_back("l2");
  expect2.gaf.incidence["l1"] = "v";
  expect2.gaf.incidence["l2"] = "v";
  expect2.gaf.edge_pairs.emplace_back("l1", "l2");
  REQUIRE(canonical_key(k.rep) == canonical_key(expect2));

  REQUIRE_THROWS_AS(compose(hook(), op3({"c"}, "c", "c")), GrcobError);
}

TEST_CASE("composition is associative up to canonical form") {
  Pool pool(99);
  for (int i = 0; i < 50; ++i) {
    auto [g, h, k] = pool.next_composable_triple();
    REQUIRE(canonical_key(compose(compose(g, h), k).rep) ==
            canonical_key(compose(g, compose(h, k)).rep));
  }
}

TEST_CASE("tensor is a disjoint union") {
  GrMorphism t = tensor(hook(), op3({"c"}, "c", "c"));
  REQUIRE(t.target() == std::vector<std::string>({"a", "c"}));
  REQUIRE(t.rep.gaf.inner.size() == 1);
  REQUIRE(t.rep.gaf.edge_pairs.size() == 2);

  // Colliding labels get the L./R. prefixes.
  GrMorphism clash = tensor(hook(), hook());
  REQUIRE(clash.target() == std::vector<std::string>({"L.a", "R.a"}));
  REQUIRE(clash.source() == std::vector<std::string>({"L.b", "R.b"}));
  REQUIRE(validate(clash.rep).empty());

  Pool pool(5);
  for (int i = 0; i < 20; ++i) {
    MarkedGaf a = pool.next_gaf(), b = pool.next_gaf();
    GrMorphism t2 = tensor({a}, {b}, true);
    REQUIRE(validate(t2.rep).empty());
    REQUIRE(euler_char_rel(t2.rep.gaf) ==
            euler_char_rel(a.gaf) + euler_char_rel(b.gaf));
  }
}

TEST_CASE("generating operations") {
  GrMorphism fold = op1({"b1", "b2"}, {"a"}, {{"b1", "a"}, {"b2", "a"}});
  REQUIRE(fold.rep.gaf.inner.empty());
  REQUIRE(fold.rep.marking.at("b1") == "a");
  REQUIRE(fold.rep.marking.at("b2") == "a");
  REQUIRE_THROWS_AS(op1({"b"}, {"a"}, {{"b", "zzz"}}), GrcobError);
  REQUIRE_THROWS_AS(op1({"b"}, {"a"}, {}), GrcobError);

  GrMorphism free = op2({"a"});
  REQUIRE(free.target() == std::vector<std::string>{"a"});
  REQUIRE(free.rep.gaf.inner.size() == 1);
  REQUIRE(free.source().size() == 2);
  REQUIRE(free.rep.marking.at(free.rep.gaf.inner[0]) == free.rep.gaf.inner[0]);

  GrMorphism edge = op3({"a", "b"}, "a", "b");
  REQUIRE(edge.rep.gaf.edge_pairs.size() == 1);
  REQUIRE(euler_char_rel(edge.rep.gaf) == -1);
  REQUIRE_THROWS_AS(op3({"a"}, "a", "zzz"), GrcobError);
}

TEST_CASE("homotopy invariants distinguish and agree") {
  GrMorphism loop = op3({"a"}, "a", "a");
  GrMorphism two = compose(loop, loop);
  REQUIRE(homotopy_invariants(loop) != homotopy_invariants(two));
  REQUIRE(homotopy_invariants(two).components[0].h1_rank == 2);

  // Invariants see the marking multiset.
  GrMorphism fold = op1({"b1", "b2"}, {"a"}, {{"b1", "a"}, {"b2", "a"}});
  GrMorphism drop = op1({"b1"}, {"a"}, {{"b1", "a"}});
  REQUIRE(homotopy_invariants(fold) != homotopy_invariants(drop));

  // A closed component has no attach labels and counts its own rank.
  MarkedGaf closed = mark(theta_graph(), {});
  REQUIRE(homotopy_invariants({closed}).components[0].h1_rank == 2);
  REQUIRE(homotopy_invariants({closed}).components[0].attach.empty());

  // Isomorphic representatives share invariants.
  Pool pool(17);
  for (int i = 0; i < 30; ++i) {
    MarkedGaf g = pool.next_gaf();
    CanonicalForm c = canonical_form(g);
    REQUIRE(homotopy_invariants({g}) == homotopy_invariants({c.gaf}));
  }
}
