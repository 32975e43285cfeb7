#include "grcob/eval.hpp"

#include <algorithm>

#include "grcob/canonical.hpp"
#include "grcob/errors.hpp"

namespace grcob {

namespace {

using State = std::map<std::vector<std::size_t>, mpq_class>;

void add_term(State& s, const std::vector<std::size_t>& t,
              const mpq_class& c) {
  if (c == 0) return;
  auto it = s.find(t);
  if (it == s.end()) {
    s.emplace(t, c);
  } else {
    it->second += c;
    if (it->second == 0) s.erase(it);
  }
}

struct Machine {
  const FrobeniusAlgebra& f;
  std::vector<std::vector<mpq_class>> u;  // copairing coefficients

  // All Koszul signs use the dimension-shifted parity, under which the unit
  // is even and the product is an even operator.
  bool odd(std::size_t basis_elt) const {
    return (f.deg[basis_elt] - f.d) % 2 != 0;
  }

  // Transpose factors p and p+1.
  State swap_adjacent(const State& s, std::size_t p) const {
    State out;
    for (const auto& [t, c] : s) {
      std::vector<std::size_t> t2 = t;
      std::swap(t2[p], t2[p + 1]);
      bool neg = odd(t[p]) && odd(t[p + 1]);
      add_term(out, t2, neg ? -c : c);
    }
    return out;
  }

  // Shifted parity of the prefix t[0..p).
  bool odd_prefix(const std::vector<std::size_t>& t, std::size_t p) const {
    bool o = false;
    for (std::size_t j = 0; j < p; ++j) o ^= odd(t[j]);
    return o;
  }

  State move_factor(State s, std::size_t from, std::size_t to) const {
    while (from > to) s = swap_adjacent(s, --from);
    while (from < to) s = swap_adjacent(s, from++);
    return s;
  }

  // Multiply factors p and p+1; even in the shifted grading, no sign.
  State mu(const State& s, std::size_t p) const {
    State out;
    for (const auto& [t, c] : s) {
      const auto& prod = f.product[t[p]][t[p + 1]];
      std::vector<std::size_t> t2;
      t2.reserve(t.size() - 1);
      t2.insert(t2.end(), t.begin(), t.begin() + static_cast<long>(p));
      t2.push_back(0);
      t2.insert(t2.end(), t.begin() + static_cast<long>(p) + 2, t.end());
      for (std::size_t k = 0; k < f.dim(); ++k) {
        if (prod[k] == 0) continue;
        t2[p] = k;
        mpq_class coeff = c * prod[k];
        add_term(out, t2, coeff);
      }
    }
    return out;
  }

  // Split factor p: Delta(a) = sum u[k][l] (a e_k) tensor e_l. Shifted
  // parity d, so it picks up a Koszul sign from the factors it passes.
  State delta(const State& s, std::size_t p) const {
    State out;
    for (const auto& [t, c] : s) {
      bool neg = f.d % 2 != 0 && odd_prefix(t, p);
      std::vector<std::size_t> t2;
      t2.reserve(t.size() + 1);
      t2.insert(t2.end(), t.begin(), t.begin() + static_cast<long>(p));
      t2.push_back(0);
      t2.push_back(0);
      t2.insert(t2.end(), t.begin() + static_cast<long>(p) + 1, t.end());
      for (std::size_t k = 0; k < f.dim(); ++k)
        for (std::size_t l = 0; l < f.dim(); ++l) {
          if (u[k][l] == 0) continue;
          const auto& prod = f.product[t[p]][k];
          for (std::size_t m = 0; m < f.dim(); ++m) {
            if (prod[m] == 0) continue;
            t2[p] = m;
            t2[p + 1] = l;
            mpq_class coeff = c * u[k][l] * prod[m];
            add_term(out, t2, neg ? mpq_class(-coeff) : coeff);
          }
        }
    }
    return out;
  }

  // Remove factor p through the counit; shifted parity d, same prefix sign.
  State counit(const State& s, std::size_t p) const {
    State out;
    for (const auto& [t, c] : s) {
      if (f.counit[t[p]] == 0) continue;
      bool neg = f.d % 2 != 0 && odd_prefix(t, p);
      std::vector<std::size_t> t2;
      t2.reserve(t.size() - 1);
      t2.insert(t2.end(), t.begin(), t.begin() + static_cast<long>(p));
      t2.insert(t2.end(), t.begin() + static_cast<long>(p) + 1, t.end());
      mpq_class coeff = c * f.counit[t[p]];
      add_term(out, t2, neg ? mpq_class(-coeff) : coeff);
    }
    return out;
  }
};

}  // namespace

bool GradedTensorMap::operator==(const GradedTensorMap& o) const {
  return dim == o.dim && source_arity == o.source_arity &&
         target_arity == o.target_arity && degree == o.degree &&
         columns == o.columns;
}

std::size_t tuple_index(std::size_t dim, const std::vector<std::size_t>& t) {
  std::size_t idx = 0;
  for (std::size_t x : t) idx = idx * dim + x;
  return idx;
}

std::vector<std::size_t> index_tuple(std::size_t dim, std::size_t arity,
                                     std::size_t idx) {
  std::vector<std::size_t> t(arity);
  for (std::size_t i = arity; i-- > 0;) {
    t[i] = idx % dim;
    idx /= dim;
  }
  return t;
}

GradedTensorMap compose(const GradedTensorMap& second,
                        const GradedTensorMap& first) {
  if (first.dim != second.dim || first.target_arity != second.source_arity)
    throw GrcobError("SourceMismatch",
                     "tensor map shapes do not compose");
  GradedTensorMap out;
  out.dim = first.dim;
  out.source_arity = first.source_arity;
  out.target_arity = second.target_arity;
  out.degree = first.degree + second.degree;
  out.columns.resize(first.columns.size());
  for (std::size_t j = 0; j < first.columns.size(); ++j)
    for (const auto& [t, c] : first.columns[j])
      for (const auto& [t2, c2] : second.columns[tuple_index(first.dim, t)])
        add_term(out.columns[j], t2, c * c2);
  return out;
}

GradedTensorMap evaluate(const MarkedGaf& g, const FrobeniusAlgebra& f) {
  {
    auto bad = validate_frobenius(f);
    if (!bad.empty()) throw GrcobError("InvalidAlgebra", bad.front());
    auto badg = validate(g);
    if (!badg.empty()) throw GrcobError("InvalidGaf", badg.front());
  }
  Machine m{f, copairing(f)};
  MarkedGaf cg = canonical_form(g).gaf;
  GafView v = make_view(cg.gaf);

  std::vector<std::string> a_sorted = cg.gaf.attach;
  std::sort(a_sorted.begin(), a_sorted.end());
  std::vector<std::string> b_sorted = cg.source;
  std::sort(b_sorted.begin(), b_sorted.end());

  // Slot per vertex: sorted attach labels first, then canonical inner order.
  std::map<std::string, std::size_t> slot;
  for (std::size_t i = 0; i < a_sorted.size(); ++i) slot[a_sorted[i]] = i;
  for (std::size_t i = 0; i < cg.gaf.inner.size(); ++i)
    slot[cg.gaf.inner[i]] = a_sorted.size() + i;
  std::size_t n_slots = slot.size();

  // Fibers of the marking, per slot, marks sorted.
  std::vector<std::vector<std::string>> fiber(n_slots);
  for (const auto& b : b_sorted) fiber[slot.at(cg.marking.at(b))].push_back(b);

  GradedTensorMap out;
  out.dim = f.dim();
  out.source_arity = a_sorted.size();
  out.target_arity = b_sorted.size();
  out.degree = f.d * euler_char_rel(cg.gaf);
  std::size_t n_cols = 1;
  for (std::size_t i = 0; i < out.source_arity; ++i) n_cols *= f.dim();
  out.columns.resize(n_cols);

  for (std::size_t col = 0; col < n_cols; ++col) {
    std::vector<std::size_t> start =
        index_tuple(f.dim(), out.source_arity, col);
    for (std::size_t i = 0; i < cg.gaf.inner.size(); ++i)
      start.push_back(f.unit);
    State s;
    s.emplace(start, 1);

    for (const auto& e : v.edges) {
      std::size_t p = slot.at(v.vertex_label[e.tail_v]);
      std::size_t q = slot.at(v.vertex_label[e.head_v]);
      if (p == q) {
        s = m.mu(m.delta(s, p), p);
      } else {
        if (p > q) std::swap(p, q);
        s = m.move_factor(s, q, p + 1);
        s = m.delta(m.mu(s, p), p);
        s = m.move_factor(s, p + 1, q);
      }
    }

    // Marking pushforward, right to left so positions stay valid.
    for (std::size_t w = n_slots; w-- > 0;) {
      if (fiber[w].empty()) {
        s = m.counit(s, w);
      } else {
        for (std::size_t i = 1; i < fiber[w].size(); ++i) s = m.delta(s, w);
      }
    }
    std::vector<std::string> labels;
    for (std::size_t w = 0; w < n_slots; ++w)
      labels.insert(labels.end(), fiber[w].begin(), fiber[w].end());

    // Reorder the output factors to sorted B order.
    for (std::size_t i = 0; i < b_sorted.size(); ++i) {
      std::size_t j = i;
      while (labels[j] != b_sorted[i]) ++j;
      while (j > i) {
        s = m.swap_adjacent(s, j - 1);
        std::swap(labels[j - 1], labels[j]);
        --j;
      }
    }
    out.columns[col] = std::move(s);
  }
  return out;
}

bool check_functoriality(const FrobeniusAlgebra& f, const GrMorphism& g,
                         const GrMorphism& h) {
  GrMorphism k = compose(g, h);
  GradedTensorMap lhs = evaluate(k.rep, f);
  GradedTensorMap rhs = compose(evaluate(h.rep, f), evaluate(g.rep, f));
  return lhs == rhs;
}

}  // namespace grcob
