#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace grcob {

/// Graded commutative Frobenius algebra over Q with exact structure
/// constants. The unit sits in degree d, the counit is supported in degree
/// 0, and the product lowers degree by d (homological grading).
struct FrobeniusAlgebra {
  long d = 0;
  std::vector<std::string> names;
  std::vector<long> deg;
  std::size_t unit = 0;
  std::vector<std::vector<std::vector<mpq_class>>> product;  // [i][j] -> vec
  std::vector<mpq_class> counit;

  std::size_t dim() const { return names.size(); }
  std::size_t index(const std::string& name) const;
};

FrobeniusAlgebra frobenius_from_json(const nlohmann::json& j);
FrobeniusAlgebra load_frobenius(const std::string& path);

/// Every axiom violation on all basis tuples; empty = valid.
std::vector<std::string> validate_frobenius(const FrobeniusAlgebra& f);

/// u[i][j] = coefficient of e_i tensor e_j in the copairing, the inverse of
/// the Gram matrix c(a,b) = counit(ab). Throws SingularPairing.
std::vector<std::vector<mpq_class>> copairing(const FrobeniusAlgebra& f);

}  // namespace grcob
