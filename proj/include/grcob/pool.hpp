#pragma once

#include <cstdint>
#include <random>
#include <tuple>

#include "grcob/gr.hpp"

namespace grcob {

struct PoolBounds {
  std::size_t v_max = 5;
  std::size_t e_max = 6;
  std::size_t a_max = 3;
  std::size_t b_max = 3;
};

/// Seeded generator of valid marked gafs and derived structured inputs.
/// Identical seeds give identical output on every platform (the raw
/// mt19937_64 stream is reduced without distribution objects).
class Pool {
 public:
  explicit Pool(std::uint64_t seed, PoolBounds bounds = {});

  MarkedGaf next_gaf();
  std::pair<GrMorphism, GrMorphism> next_composable_pair();
  std::tuple<GrMorphism, GrMorphism, GrMorphism> next_composable_triple();
  /// A marked gaf and a legal forest (view edge indices).
  std::pair<MarkedGaf, std::vector<std::size_t>> next_forest();

 private:
  std::size_t uniform(std::size_t n);  // in [0, n); n >= 1
  MarkedGaf random_gaf(const std::vector<std::string>& attach);

  std::mt19937_64 rng_;
  PoolBounds bounds_;
};

/// GRCOB_SEED environment override, else the fallback.
std::uint64_t seed_from_env(std::uint64_t fallback);

}  // namespace grcob
