#pragma once

#include <map>
#include <vector>

#include "grcob/frobenius.hpp"
#include "grcob/gr.hpp"

namespace grcob {

/// Linear map between tensor powers of a graded algebra, stored one sparse
/// column per source basis tuple. Source factors follow the sorted attach
/// labels, target factors the sorted source (B) labels.
struct GradedTensorMap {
  std::size_t dim = 0;  // algebra dimension
  std::size_t source_arity = 0;
  std::size_t target_arity = 0;
  long degree = 0;
  std::vector<std::map<std::vector<std::size_t>, mpq_class>> columns;

  bool operator==(const GradedTensorMap& o) const;
};

std::size_t tuple_index(std::size_t dim, const std::vector<std::size_t>& t);
std::vector<std::size_t> index_tuple(std::size_t dim, std::size_t arity,
                                     std::size_t idx);

/// second after first (first feeds into second).
GradedTensorMap compose(const GradedTensorMap& second,
                        const GradedTensorMap& first);

/// State-sum value of a marked gaf: a map from the tensor power over the
/// attach set A to the tensor power over the source set B, of degree
/// d * chi(G, A). Deterministic: all processing follows the canonical form.
GradedTensorMap evaluate(const MarkedGaf& g, const FrobeniusAlgebra& f);

/// evaluate(compose(g, h)) == compose(evaluate(h) after evaluate(g)).
bool check_functoriality(const FrobeniusAlgebra& f, const GrMorphism& g,
                         const GrMorphism& h);

}  // namespace grcob
