#include "grcob/frobenius.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "grcob/errors.hpp"

namespace grcob {

using nlohmann::json;

std::size_t FrobeniusAlgebra::index(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  throw GrcobError("UnknownLabel", "no basis element named '" + name + "'");
}

namespace {

mpq_class rational_from_json(const json& j) {
  mpq_class q;
  if (j.is_number_integer()) {
    q = static_cast<long>(j.get<long long>());
  } else if (j.is_string()) {
    if (q.set_str(j.get<std::string>(), 10) != 0)
      throw GrcobError("MalformedInput",
                       "bad rational '" + j.get<std::string>() + "'");
  } else {
    throw GrcobError("MalformedInput", "rational must be integer or string");
  }
  q.canonicalize();
  return q;
}

}  // namespace

FrobeniusAlgebra frobenius_from_json(const json& j) {
  try {
    FrobeniusAlgebra f;
    f.d = j.at("d").get<long>();
    for (const auto& b : j.at("basis")) {
      f.names.push_back(b.at("name").get<std::string>());
      f.deg.push_back(b.at("deg").get<long>());
    }
    std::size_t n = f.names.size();
    f.unit = f.index(j.at("unit").get<std::string>());
    f.product.assign(n, std::vector<std::vector<mpq_class>>(
                            n, std::vector<mpq_class>(n)));
    for (const auto& [key, val] : j.at("product").items()) {
      auto comma = key.find(',');
      if (comma == std::string::npos)
        throw GrcobError("MalformedInput", "product key '" + key +
                                               "' is not 'a,b'");
      std::size_t a = f.index(key.substr(0, comma));
      std::size_t b = f.index(key.substr(comma + 1));
      for (const auto& term : val)
        f.product[a][b][f.index(term.at(0).get<std::string>())] +=
            rational_from_json(term.at(1));
    }
    f.counit.assign(n, 0);
    for (const auto& [key, val] : j.at("counit").items())
      f.counit[f.index(key)] = rational_from_json(val);
    return f;
  } catch (const json::exception& e) {
    throw GrcobError("MalformedInput", e.what());
  }
}

FrobeniusAlgebra load_frobenius(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GrcobError("MalformedInput", "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw GrcobError("MalformedInput", e.what());
  }
  return frobenius_from_json(j);
}

namespace {

// a*b as a coefficient vector.
std::vector<mpq_class> mul(const FrobeniusAlgebra& f, std::size_t a,
                           std::size_t b) {
  return f.product[a][b];
}

std::vector<mpq_class> mul(const FrobeniusAlgebra& f,
                           const std::vector<mpq_class>& a, std::size_t b) {
  std::vector<mpq_class> out(f.dim());
  for (std::size_t i = 0; i < f.dim(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t k = 0; k < f.dim(); ++k)
      out[k] += a[i] * f.product[i][b][k];
  }
  return out;
}

}  // namespace

std::vector<std::string> validate_frobenius(const FrobeniusAlgebra& f) {
  std::vector<std::string> out;
  std::size_t n = f.dim();
  if (n == 0) {
    out.push_back("empty basis");
    return out;
  }
  if (f.deg[f.unit] != f.d)
    out.push_back("unit '" + f.names[f.unit] + "' has degree " +
                  std::to_string(f.deg[f.unit]) + ", not d = " +
                  std::to_string(f.d));
  for (std::size_t i = 0; i < n; ++i)
    if (f.counit[i] != 0 && f.deg[i] != 0)
      out.push_back("counit nonzero on '" + f.names[i] + "' of degree " +
                    std::to_string(f.deg[i]));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (f.product[i][j][k] != 0 &&
            f.deg[k] != f.deg[i] + f.deg[j] - f.d)
          out.push_back("product " + f.names[i] + "*" + f.names[j] +
                        " hits '" + f.names[k] + "' in the wrong degree");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      mpq_class left = f.product[f.unit][i][k];
      mpq_class right = f.product[i][f.unit][k];
      mpq_class want = k == i ? 1 : 0;
      if (left != want || right != want) {
        out.push_back("unit law fails at '" + f.names[i] + "'");
        break;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // Koszul parity in the dimension-shifted grading, where the unit is
      // even; for even d this is the plain degree parity.
      long sgn = ((f.deg[i] - f.d) * (f.deg[j] - f.d)) % 2 == 0 ? 1 : -1;
      for (std::size_t k = 0; k < n; ++k)
        if (f.product[i][j][k] != sgn * f.product[j][i][k]) {
          out.push_back("graded commutativity fails at " + f.names[i] + "," +
                        f.names[j]);
          break;
        }
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        // (e_i e_j) e_k vs e_i (e_j e_k)
        std::vector<mpq_class> l = mul(f, mul(f, i, j), k);
        std::vector<mpq_class> r(f.dim());
        const auto& jk = f.product[j][k];
        for (std::size_t m = 0; m < n; ++m) {
          if (jk[m] == 0) continue;
          for (std::size_t t = 0; t < n; ++t)
            r[t] += jk[m] * f.product[i][m][t];
        }
        if (l != r)
          out.push_back("associativity fails at " + f.names[i] + "," +
                        f.names[j] + "," + f.names[k]);
      }
  try {
    copairing(f);
  } catch (const GrcobError&) {
    out.push_back("pairing counit(a*b) is degenerate");
  }
  return out;
}

std::vector<std::vector<mpq_class>> copairing(const FrobeniusAlgebra& f) {
  std::size_t n = f.dim();
  // Gram matrix c(i,j) = counit(e_i e_j), inverted by exact elimination on
  // the augmented matrix.
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        m[i][j] += f.product[i][j][k] * f.counit[k];
    m[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m[p][col] == 0) ++p;
    if (p == n) throw GrcobError("SingularPairing", "Gram matrix is singular");
    std::swap(m[col], m[p]);
    mpq_class piv = m[col][col];
    for (auto& e : m[col]) e /= piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      mpq_class c = m[r][col];
      for (std::size_t j = 0; j < 2 * n; ++j) m[r][j] -= c * m[col][j];
    }
  }
  std::vector<std::vector<mpq_class>> u(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) u[i][j] = m[i][n + j];
  return u;
}

}  // namespace grcob
