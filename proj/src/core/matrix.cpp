#include "matrix.hpp"

#include <sstream>

#include "error.hpp"

namespace gia {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == cols, ErrorCode::InvalidArgument, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  require(cols_ == other.rows_, ErrorCode::InvalidArgument, "matrix dimension mismatch");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

bool IntMatrix::operator==(const IntMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

IntMatrix IntMatrix::select(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
  IntMatrix out(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j) out(i, j) = (*this)(row_idx[i], col_idx[j]);
  return out;
}

bool IntMatrix::is_lower_unitriangular() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if ((*this)(i, i) != 1) return false;
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != 0) return false;
  }
  return true;
}

std::string IntMatrix::to_csv(const std::vector<std::string>& labels) const {
  std::ostringstream out;
  const bool labeled = labels.size() == rows_ && rows_ == cols_;
  if (labeled) {
    for (const auto& l : labels) out << "," << l;
    out << "\n";
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    if (labeled) out << labels[i] << ",";
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? "," : "") << (*this)(i, j).get_str();
    out << "\n";
  }
  return out.str();
}

std::string IntMatrix::to_text() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? " " : "") << (*this)(i, j).get_str();
    out << "\n";
  }
  return out.str();
}

IntMatrix matrix_power(const IntMatrix& m, unsigned k) {
  require(m.rows() == m.cols(), ErrorCode::InvalidArgument, "power of a non-square matrix");
  IntMatrix out = IntMatrix::identity(m.rows());
  for (unsigned i = 0; i < k; ++i) out = out * m;
  return out;
}

std::size_t exact_rank(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(pivot, j), a(rank, j));
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a(i, j) = a(rank, c) * a(i, j) - a(i, c) * a(rank, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(rank, c);
    ++rank;
  }
  return rank;
}

IntMatrix unitriangular_inverse(const IntMatrix& e) {
  require(e.is_lower_unitriangular(), ErrorCode::Precondition, "matrix is not lower unitriangular");
  const std::size_t n = e.rows();
  IntMatrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    inv(j, j) = 1;
    for (std::size_t i = j + 1; i < n; ++i) {
      BigInt acc = 0;
      for (std::size_t k = j; k < i; ++k) acc += e(i, k) * inv(k, j);
      inv(i, j) = -acc;
    }
  }
  return inv;
}

std::vector<Rational> solve_lower_unitriangular(const IntMatrix& e, std::span<const Rational> v) {
  require(e.is_lower_unitriangular(), ErrorCode::Precondition, "matrix is not lower unitriangular");
  require(v.size() == e.rows(), ErrorCode::InvalidArgument, "right-hand side has wrong length");
  std::vector<Rational> x(v.begin(), v.end());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t k = 0; k < i; ++k)
      if (e(i, k) != 0) x[i] -= Rational(e(i, k)) * x[k];
  return x;
}

std::vector<Rational> solve_left_unitriangular(const IntMatrix& e, std::span<const Rational> v) {
  require(e.is_lower_unitriangular(), ErrorCode::Precondition, "matrix is not lower unitriangular");
  require(v.size() == e.rows(), ErrorCode::InvalidArgument, "right-hand side has wrong length");
  std::vector<Rational> c(v.begin(), v.end());
  for (std::size_t jj = c.size(); jj-- > 0;)
    for (std::size_t i = jj + 1; i < c.size(); ++i)
      if (e(i, jj) != 0) c[jj] -= c[i] * Rational(e(i, jj));
  return c;
}

std::optional<std::vector<Rational>> solve_full_column_rank(const std::vector<std::vector<Rational>>& a,
                                                            std::span<const Rational> b) {
  const std::size_t rows = a.size();
  require(b.size() == rows, ErrorCode::InvalidArgument, "right-hand side has wrong length");
  const std::size_t cols = rows ? a.front().size() : 0;
  std::vector<std::vector<Rational>> m(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    require(a[i].size() == cols, ErrorCode::InvalidArgument, "ragged system");
    m[i] = a[i];
    m[i].push_back(b[i]);
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) return std::nullopt;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (m[i][cols] != 0) return std::nullopt;
  std::vector<Rational> x(cols);
  for (std::size_t c = 0; c < cols; ++c) x[c] = m[c][cols] / m[c][c];
  return x;
}

}  // namespace gia
