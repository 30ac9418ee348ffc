#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "trcalc/integer.hpp"

namespace trcalc {

/// Dense row-major matrix of arbitrary-precision integers.  Zero-sized
/// dimensions are allowed (a 0 x k or k x 0 matrix is the zero map).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_diagonal() const;

  IntMatrix transpose() const;
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  IntMatrix column(std::size_t j) const { return block(0, j, rows_, 1); }

  // [A | B], same row count.
  static IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);
  // [A ; B], same column count.
  static IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b);

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row a += c * row b
  void add_row_multiple(std::size_t a, std::size_t b, const Integer& c);
  // col a += c * col b
  void add_col_multiple(std::size_t a, std::size_t b, const Integer& c);
  void negate_row(std::size_t a);
  void negate_col(std::size_t a);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& a);

/// D = U * A * V with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.
/// The inverses are tracked alongside so no matrix inversion is ever needed.
struct SmithForm {
  IntMatrix U, U_inv;
  IntMatrix D;
  IntMatrix V, V_inv;

  std::size_t rank() const;
  std::vector<Integer> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

}  // namespace trcalc
