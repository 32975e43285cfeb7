#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace grcob {

/// Dense matrix with unbounded exact integer entries, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, mpz_class(0)) {}
  IntMatrix(std::size_t rows, std::size_t cols,
            std::initializer_list<long> entries);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpz_class& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const mpz_class& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  bool operator==(const IntMatrix& o) const = default;

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix transpose() const;
  bool is_zero() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[a] += c * row[b]
  void add_row(std::size_t a, std::size_t b, const mpz_class& c);
  void add_col(std::size_t a, std::size_t b, const mpz_class& c);
  void negate_row(std::size_t a);
  void negate_col(std::size_t a);

  IntMatrix column(std::size_t j) const;
  /// Horizontal concatenation [this | o]; row counts must agree.
  IntMatrix hcat(const IntMatrix& o) const;

  /// Exact determinant via Bareiss fraction-free elimination (square only).
  mpz_class det() const;
  /// Rank over Q via fraction-free elimination.
  std::size_t rank() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> entries_;
};

}  // namespace grcob
