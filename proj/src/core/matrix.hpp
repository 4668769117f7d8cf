#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "numeric.hpp"

namespace gia {

/// Dense exact-integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix& other) const;
  IntMatrix transposed() const;
  IntMatrix select(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;

  bool is_lower_unitriangular() const;
  std::string to_csv(const std::vector<std::string>& labels = {}) const;
  std::string to_text() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Literal power for k >= 0.
IntMatrix matrix_power(const IntMatrix& m, unsigned k);
/// Rank by fraction-free (Bareiss) elimination.
std::size_t exact_rank(const IntMatrix& m);
/// Inverse of a lower unitriangular matrix by forward elimination.
IntMatrix unitriangular_inverse(const IntMatrix& e);
/// x with E x = v, E lower unitriangular.
std::vector<Rational> solve_lower_unitriangular(const IntMatrix& e, std::span<const Rational> v);
/// x with x E = v (row vector), E lower unitriangular.
std::vector<Rational> solve_left_unitriangular(const IntMatrix& e, std::span<const Rational> v);

/// Exact solution of A x = b when A has full column rank and the system is consistent.
std::optional<std::vector<Rational>> solve_full_column_rank(const std::vector<std::vector<Rational>>& a,
                                                            std::span<const Rational> b);

}  // namespace gia
