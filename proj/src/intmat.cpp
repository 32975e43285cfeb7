#include "grcob/intmat.hpp"

#include <cassert>
#include <stdexcept>

namespace grcob {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols,
                     std::initializer_list<long> entries)
    : IntMatrix(rows, cols) {
  assert(entries.size() == rows * cols);
  std::size_t k = 0;
  for (long e : entries) entries_[k++] = e;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpz_class& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool IntMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (e != 0) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::add_row(std::size_t a, std::size_t b, const mpz_class& c) {
  for (std::size_t j = 0; j < cols_; ++j) at(a, j) += c * at(b, j);
}

void IntMatrix::add_col(std::size_t a, std::size_t b, const mpz_class& c) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, a) += c * at(i, b);
}

void IntMatrix::negate_row(std::size_t a) {
  for (std::size_t j = 0; j < cols_; ++j) at(a, j) = -at(a, j);
}

void IntMatrix::negate_col(std::size_t a) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, a) = -at(i, a);
}

IntMatrix IntMatrix::column(std::size_t j) const {
  IntMatrix c(rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) c.at(i, 0) = at(i, j);
  return c;
}

IntMatrix IntMatrix::hcat(const IntMatrix& o) const {
  if (rows_ != o.rows_) throw std::invalid_argument("hcat row mismatch");
  IntMatrix r(rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

mpz_class IntMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

std::size_t IntMatrix::rank() const {
  IntMatrix m = *this;
  std::size_t r = 0;
  mpz_class prev = 1;
  for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
    std::size_t p = r;
    while (p < rows_ && m.at(p, col) == 0) ++p;
    if (p == rows_) continue;
    m.swap_rows(r, p);
    for (std::size_t i = r + 1; i < rows_; ++i) {
      for (std::size_t j = col + 1; j < cols_; ++j) {
        mpz_class t = m.at(i, j) * m.at(r, col) - m.at(i, col) * m.at(r, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, col) = 0;
    }
    prev = m.at(r, col);
    ++r;
  }
  return r;
}

}  // namespace grcob
