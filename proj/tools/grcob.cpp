#include <iostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "grcob/canonical.hpp"
#include "grcob/collapse.hpp"
#include "grcob/detline.hpp"
#include "grcob/errors.hpp"
#include "grcob/eval.hpp"
#include "grcob/gr.hpp"
#include "grcob/json_io.hpp"
#include "grcob/pool.hpp"
#include "grcob/spine.hpp"

namespace {

using grcob::GrcobError;
using nlohmann::json;

json invariants_to_json(const grcob::HomotopyInvariants& inv) {
  json out = json::array();
  for (const auto& c : inv.components)
    out.push_back({{"attach", c.attach},
                   {"h1_rank", c.h1_rank},
                   {"marks", c.marks}});
  return out;
}

json eval_to_json(const grcob::GradedTensorMap& m,
                  const grcob::FrobeniusAlgebra& f) {
  json entries = json::array();
  for (std::size_t col = 0; col < m.columns.size(); ++col) {
    json in = json::array();
    for (std::size_t x : grcob::index_tuple(m.dim, m.source_arity, col))
      in.push_back(f.names[x]);
    for (const auto& [t, c] : m.columns[col]) {
      json out = json::array();
      for (std::size_t x : t) out.push_back(f.names[x]);
      entries.push_back(
          {{"in", in}, {"out", out}, {"coeff", c.get_str()}});
    }
  }
  return {{"degree", m.degree},
          {"source_arity", m.source_arity},
          {"target_arity", m.target_arity},
          {"entries", entries}};
}

int run_check(const std::string& suite, std::uint64_t seed, std::size_t n,
              const std::vector<std::string>& algebra_paths) {
  std::vector<grcob::FrobeniusAlgebra> algs;
  for (const auto& p : algebra_paths) algs.push_back(grcob::load_frobenius(p));
  std::size_t failures = 0;
  if (suite == "functoriality") {
    if (algs.empty()) throw GrcobError("MalformedInput", "needs --algebra");
    grcob::Pool pool(seed);
    for (std::size_t i = 0; i < n; ++i) {
      auto [g, h] = pool.next_composable_pair();
      for (const auto& f : algs)
        if (!grcob::check_functoriality(f, g, h)) ++failures;
    }
  } else if (suite == "collapse") {
    if (algs.empty()) throw GrcobError("MalformedInput", "needs --algebra");
    grcob::Pool pool(seed);
    for (std::size_t i = 0; i < n; ++i) {
      auto [g, forest] = pool.next_forest();
      auto [q, f] = grcob::collapse_forest(g.gaf, forest);
      grcob::MarkedGaf qm{q, g.source, {}};
      for (const auto& b : g.source)
        qm.marking[b] = f.vertex_map.at(g.marking.at(b));
      bool ok = grcob::euler_char_rel(g.gaf) == grcob::euler_char_rel(q) &&
                grcob::homotopy_invariants({g}) ==
                    grcob::homotopy_invariants({qm});
      for (const auto& a : algs)
        ok = ok && grcob::evaluate(g, a) == grcob::evaluate(qm, a);
      if (!ok) ++failures;
    }
  } else if (suite == "xi-assoc") {
    grcob::Pool pool(seed);
    for (std::size_t i = 0; i < n; ++i) {
      auto [g, h, k] = pool.next_composable_triple();
      for (long d = 1; d <= 3; ++d) {
        int lhs = grcob::xi_compose_sign(grcob::compose(g, h), k, d) *
                  grcob::xi_compose_sign(g, h, d);
        int rhs = grcob::xi_compose_sign(g, grcob::compose(h, k), d) *
                  grcob::xi_compose_sign(h, k, d);
        if (lhs != rhs) ++failures;
      }
    }
  } else if (suite == "degree") {
    if (algs.empty()) throw GrcobError("MalformedInput", "needs --algebra");
    grcob::Pool pool(seed);
    for (std::size_t i = 0; i < n; ++i) {
      grcob::MarkedGaf g = pool.next_gaf();
      long chi = grcob::euler_char_rel(g.gaf);
      for (const auto& a : algs)
        if (grcob::evaluate(g, a).degree != a.d * chi) ++failures;
      if (grcob::xi_object(g.gaf, 3).degree != 3 * chi) ++failures;
    }
  } else {
    throw GrcobError("MalformedInput", "unknown suite '" + suite + "'");
  }
  if (failures > 0) {
    std::cout << suite << ": " << failures << " failures over " << n
              << " cases\n";
    return 1;
  }
  std::cout << suite << ": ok (" << n << " cases)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorial workbench for graph cobordisms"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string file_a, file_b, algebra_path, suite, compose_with;
  long dval = 1;
  long rank = 2;
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::size_t v_max = 5, e_max = 6;
  bool spine_list = false, spine_complex = false, spine_homology = false;
  bool rank4 = false;
  std::vector<std::string> algebra_paths;

  auto* c_validate = app.add_subcommand("validate", "check gaf invariants");
  c_validate->add_option("file", file_a)->required();

  auto* c_compose = app.add_subcommand("compose", "compose two morphisms");
  c_compose->add_option("outer", file_a)->required();
  c_compose->add_option("inner", file_b)->required();

  auto* c_tensor = app.add_subcommand("tensor", "disjoint union");
  c_tensor->add_option("left", file_a)->required();
  c_tensor->add_option("right", file_b)->required();

  auto* c_chi = app.add_subcommand("chi", "relative Euler characteristic");
  c_chi->add_option("file", file_a)->required();

  auto* c_inv = app.add_subcommand("invariants", "per-component invariants");
  c_inv->add_option("file", file_a)->required();

  auto* c_xi = app.add_subcommand("xi", "determinant line data");
  c_xi->add_option("file", file_a)->required();
  c_xi->add_option("-d", dval, "twist");
  c_xi->add_option("--compose", compose_with, "inner morphism for the sign");

  auto* c_reduce = app.add_subcommand("reduce", "drop based trees");
  c_reduce->add_option("file", file_a)->required();

  auto* c_min = app.add_subcommand("minimize", "collapse valence-1 vertices");
  c_min->add_option("file", file_a)->required();

  auto* c_spine = app.add_subcommand("spine", "spine of outer space");
  c_spine->add_option("-n", rank, "rank")->required();
  c_spine->add_flag("--list", spine_list);
  c_spine->add_flag("--complex", spine_complex);
  c_spine->add_flag("--homology", spine_homology);
  c_spine->add_option("-d", dval, "twist");
  c_spine->add_flag("--rank4", rank4, "allow the experimental rank 4");

  auto* c_eval = app.add_subcommand("eval", "Frobenius state sum");
  c_eval->add_option("file", file_a)->required();
  c_eval->add_option("--algebra", algebra_path)->required();

  auto* c_check = app.add_subcommand("check", "property suites");
  c_check->add_option("--suite", suite)->required();
  c_check->add_option("--seed", seed);
  c_check->add_option("--n", count);
  c_check->add_option("--algebra", algebra_paths);

  auto* c_pool = app.add_subcommand("pool", "dump a seeded random pool");
  c_pool->add_option("--seed", seed);
  c_pool->add_option("--n", count);
  c_pool->add_option("--v-max", v_max);
  c_pool->add_option("--e-max", e_max);

  CLI11_PARSE(app, argc, argv);
  seed = grcob::seed_from_env(seed);

  try {
    if (*c_validate) {
      auto g = grcob::load_gaf(file_a);
      auto bad = grcob::validate(g);
      if (bad.empty()) {
        std::cout << (as_json ? "{\"valid\":true}" : "valid") << "\n";
        return 0;
      }
      if (as_json) {
        std::cout << json{{"valid", false}, {"violations", bad}} << "\n";
      } else {
        for (const auto& v : bad) std::cout << v << "\n";
      }
      return 1;
    }
    if (*c_compose || *c_tensor) {
      grcob::GrMorphism g{grcob::load_gaf(file_a)};
      grcob::GrMorphism h{grcob::load_gaf(file_b)};
      grcob::GrMorphism k =
          *c_compose ? grcob::compose(g, h) : grcob::tensor(g, h);
      std::cout << grcob::gaf_to_json(k.rep).dump(2) << "\n";
      return 0;
    }
    if (*c_chi) {
      std::cout << grcob::euler_char_rel(grcob::load_gaf(file_a).gaf) << "\n";
      return 0;
    }
    if (*c_inv) {
      auto inv = grcob::homotopy_invariants({grcob::load_gaf(file_a)});
      std::cout << invariants_to_json(inv).dump(2) << "\n";
      return 0;
    }
    if (*c_xi) {
      grcob::GrMorphism g{grcob::load_gaf(file_a)};
      grcob::DetLineObject x = grcob::xi_object(g.rep.gaf, dval);
      json out = {{"degree", x.degree},
                  {"h0_basis", grcob::intmat_to_json(x.h0_basis)},
                  {"h1_basis", grcob::intmat_to_json(x.h1_basis)}};
      if (!compose_with.empty()) {
        grcob::GrMorphism h{grcob::load_gaf(compose_with)};
        out["compose_sign"] = grcob::xi_compose_sign(g, h, dval);
      }
      if (as_json) {
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "degree " << x.degree << ", h0 rank "
                  << x.h0_basis.cols() << ", h1 rank " << x.h1_basis.cols();
        if (out.contains("compose_sign"))
          std::cout << ", compose sign "
                    << out["compose_sign"].get<int>();
        std::cout << "\n";
      }
      return 0;
    }
    if (*c_reduce) {
      std::cout << grcob::gaf_to_json(grcob::reduce(grcob::load_gaf(file_a)))
                       .dump(2)
                << "\n";
      return 0;
    }
    if (*c_min) {
      grcob::MarkedGaf g = grcob::load_gaf(file_a);
      auto [q, f] = grcob::minimize(g.gaf);
      grcob::MarkedGaf out{q, g.source, {}};
      for (const auto& b : g.source)
        out.marking[b] = f.vertex_map.at(g.marking.at(b));
      std::cout << grcob::gaf_to_json(out).dump(2) << "\n";
      return 0;
    }
    if (*c_spine) {
      if (spine_homology || spine_complex) {
        grcob::SpineComplex sc =
            grcob::spine_chain_complex(rank, dval, rank4);
        if (spine_homology) {
          json out = grcob::homology(sc);
          std::cout << out.dump() << "\n";
        } else {
          json degrees = json::array();
          for (std::size_t k = 0; k < sc.cells.size(); ++k)
            degrees.push_back(sc.cells[k].size());
          json diffs = json::array();
          for (const auto& m : sc.differential)
            diffs.push_back(grcob::intmat_to_json(m));
          std::cout << json{{"n", sc.n},
                            {"d", sc.d},
                            {"dimensions", degrees},
                            {"differentials", diffs}}
                           .dump(2)
                    << "\n";
        }
      } else {
        auto objs = grcob::enumerate_spine_objects(rank);
        if (spine_list) {
          for (const auto& g : objs)
            std::cout << grcob::gaf_to_json({g, {}, {}}).dump() << "\n";
        } else {
          std::cout << objs.size() << "\n";
        }
      }
      return 0;
    }
    if (*c_eval) {
      grcob::MarkedGaf g = grcob::load_gaf(file_a);
      grcob::FrobeniusAlgebra f = grcob::load_frobenius(algebra_path);
      std::cout << eval_to_json(grcob::evaluate(g, f), f).dump(2) << "\n";
      return 0;
    }
    if (*c_check) return run_check(suite, seed, count, algebra_paths);
    if (*c_pool) {
      grcob::Pool pool(seed, {v_max, e_max, 3, 3});
      json out = json::array();
      for (std::size_t i = 0; i < count; ++i)
        out.push_back(grcob::gaf_to_json(pool.next_gaf()));
      std::cout << out.dump(2) << "\n";
      return 0;
    }
  } catch (const GrcobError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 0;
}
