#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace brauer {

/// Dense row-major matrix over the integers. Empty shapes (0×n, n×0) are legal.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const std::vector<mpz_class>& d);
  /// Single column from the given entries.
  static IntMatrix column(const std::vector<mpz_class>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;
  IntMatrix columns(std::size_t begin, std::size_t end) const;
  IntMatrix rows_range(std::size_t begin, std::size_t end) const;
  IntMatrix select_rows(const std::vector<std::size_t>& idx) const;
  IntMatrix select_columns(const std::vector<std::size_t>& idx) const;
  std::vector<mpz_class> column_vector(std::size_t c) const;
  void set_block(std::size_t r0, std::size_t c0, const IntMatrix& block);
  void add_block(std::size_t r0, std::size_t c0, const IntMatrix& block);

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const mpz_class& k, const IntMatrix& a);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks);

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  explicit RationalMatrix(const IntMatrix& m);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  mpq_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpq_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  bool is_symmetric() const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const mpq_class& k, const RationalMatrix& a);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> data_;
};

/// u * a * v == s, with s diagonal, d_i >= 0 and d_i | d_{i+1}.
struct SmithDecomposition {
  IntMatrix u;
  IntMatrix s;
  IntMatrix v;

  std::vector<mpz_class> diagonal() const;
  std::size_t rank() const;
};

SmithDecomposition smith(const IntMatrix& a);

/// Diagonal of the Smith form only (no transforms tracked).
std::vector<mpz_class> smith_diagonal(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);

/// Basis (as columns) of {x : a x = 0}; saturated and in column Hermite form.
IntMatrix kernel_basis(const IntMatrix& a);

/// Invariant factors of Z^rows / im(a): nontrivial factors ascending, then one 0 per free rank.
std::vector<mpz_class> cokernel_invariants(const IntMatrix& a);

/// Column Hermite normal form of the lattice spanned by the columns of a, zero columns dropped.
/// Pivot rows increase left to right; pivots are positive and the entries left of a pivot
/// in its row lie in [0, pivot).
IntMatrix column_hnf(const IntMatrix& a);

/// Exact solution x of b x = y for b of full column rank, if an integral one exists.
std::optional<IntMatrix> solve_integer(const IntMatrix& b, const IntMatrix& y);

mpz_class determinant(const IntMatrix& a);

/// Exact determinant; 1 for the 0×0 matrix. Throws std::invalid_argument if not square.
mpq_class rational_det(const RationalMatrix& a);

/// Membership test for the column lattice im(a), via a Smith decomposition of a.
class ImageLattice {
 public:
  explicit ImageLattice(const IntMatrix& a);

  bool contains(const std::vector<mpz_class>& x) const;
  bool contains_columns(const IntMatrix& x) const;
  std::size_t ambient_dimension() const { return u_.rows(); }

 private:
  IntMatrix u_;
  std::vector<mpz_class> diag_;
};

std::string to_string(const mpq_class& q);

/// base^e for any integer e (base nonzero when e < 0).
mpq_class rational_power(const mpq_class& base, long e);

}  // namespace brauer
