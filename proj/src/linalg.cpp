#include "brauer/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace brauer {

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<mpz_class>& d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

IntMatrix IntMatrix::column(const std::vector<mpz_class>& v) {
  IntMatrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::columns(std::size_t begin, std::size_t end) const {
  IntMatrix m(rows_, end - begin);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = begin; c < end; ++c) m(r, c - begin) = (*this)(r, c);
  return m;
}

IntMatrix IntMatrix::rows_range(std::size_t begin, std::size_t end) const {
  IntMatrix m(end - begin, cols_);
  for (std::size_t r = begin; r < end; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r - begin, c) = (*this)(r, c);
  return m;
}

IntMatrix IntMatrix::select_rows(const std::vector<std::size_t>& idx) const {
  IntMatrix m(idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t c = 0; c < cols_; ++c) m(i, c) = (*this)(idx[i], c);
  return m;
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& idx) const {
  IntMatrix m(rows_, idx.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t i = 0; i < idx.size(); ++i) m(r, i) = (*this)(r, idx[i]);
  return m;
}

std::vector<mpz_class> IntMatrix::column_vector(std::size_t c) const {
  std::vector<mpz_class> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void IntMatrix::set_block(std::size_t r0, std::size_t c0, const IntMatrix& block) {
  for (std::size_t r = 0; r < block.rows(); ++r)
    for (std::size_t c = 0; c < block.cols(); ++c) (*this)(r0 + r, c0 + c) = block(r, c);
}

void IntMatrix::add_block(std::size_t r0, std::size_t c0, const IntMatrix& block) {
  for (std::size_t r = 0; r < block.rows(); ++r)
    for (std::size_t c = 0; c < block.cols(); ++c) (*this)(r0 + r, c0 + c) += block(r, c);
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const mpz_class& x) { return x == 0; });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) mpz_swap((*this)(a, c).get_mpz_t(), (*this)(b, c).get_mpz_t());
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) mpz_swap((*this)(r, a).get_mpz_t(), (*this)(r, b).get_mpz_t());
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& k) {
  if (k == 0) return;
  mpz_class* d = &data_[dst * cols_];
  const mpz_class* s = &data_[src * cols_];
  for (std::size_t c = 0; c < cols_; ++c)
    if (s[c] != 0) mpz_addmul(d[c].get_mpz_t(), k.get_mpz_t(), s[c].get_mpz_t());
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    const mpz_class& s = (*this)(r, src);
    if (s != 0) mpz_addmul((*this)(r, dst).get_mpz_t(), k.get_mpz_t(), s.get_mpz_t());
  }
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix product: shape mismatch");
  IntMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const mpz_class& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const mpz_class& y = b(k, j);
        if (y != 0) mpz_addmul(m(i, j).get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      }
    }
  return m;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("IntMatrix sum: shape mismatch");
  IntMatrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("IntMatrix difference: shape mismatch");
  IntMatrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

IntMatrix operator*(const mpz_class& k, const IntMatrix& a) {
  IntMatrix m = a;
  for (auto& x : m.data_) x *= k;
  return m;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  IntMatrix m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
  IntMatrix m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  IntMatrix m(r, c);
  r = c = 0;
  for (const auto& b : blocks) {
    m.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return m;
}

// ---------------------------------------------------------------------------
// RationalMatrix

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(const IntMatrix& m) : RationalMatrix(m.rows(), m.cols()) {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = mpq_class(m(r, c));
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RationalMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("RationalMatrix product: shape mismatch");
  RationalMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) m(i, j) += a(i, k) * b(k, j);
    }
  return m;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("RationalMatrix sum: shape mismatch");
  RationalMatrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

RationalMatrix operator*(const mpq_class& k, const RationalMatrix& a) {
  RationalMatrix m = a;
  for (auto& x : m.data_) x *= k;
  return m;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

bool abs_less(const mpz_class& a, const mpz_class& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }

// Pivot: minimal nonzero |entry| in the trailing submatrix, ties broken by row then column.
void smith_in_place(IntMatrix& s, IntMatrix* u, IntMatrix* v) {
  const std::size_t m = s.rows(), n = s.cols();
  const std::size_t steps = std::min(m, n);
  mpz_class q;
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (s(i, j) == 0) continue;
          if (bi == m || abs_less(s(i, j), s(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      if (bi == m) return;  // trailing block is zero
      s.swap_rows(t, bi);
      if (u) u->swap_rows(t, bi);
      s.swap_cols(t, bj);
      if (v) v->swap_cols(t, bj);

      bool remainder = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
        q = -q;
        s.add_row_multiple(i, t, q);
        if (u) u->add_row_multiple(i, t, q);
        if (s(i, t) != 0) remainder = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
        q = -q;
        s.add_col_multiple(j, t, q);
        if (v) v->add_col_multiple(j, t, q);
        if (s(t, j) != 0) remainder = true;
      }
      if (remainder) continue;

      bool fixed_divisibility = false;
      for (std::size_t i = t + 1; i < m && !fixed_divisibility; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            s.add_row_multiple(t, i, 1);
            if (u) u->add_row_multiple(t, i, 1);
            fixed_divisibility = true;
            break;
          }
        }
      if (fixed_divisibility) continue;

      if (s(t, t) < 0) {
        s.negate_row(t);
        if (u) u->negate_row(t);
      }
      break;
    }
  }
}

// Row echelon form by integer row operations, optionally accumulating them in u.
// Returns pivot columns; rows [0, pivots.size()) are the nonzero rows.
std::vector<std::size_t> row_echelon(IntMatrix& t, IntMatrix* u) {
  const std::size_t m = t.rows(), n = t.cols();
  std::vector<std::size_t> pivots;
  std::size_t piv = 0;
  mpz_class q;
  for (std::size_t c = 0; c < n && piv < m; ++c) {
    for (;;) {
      std::size_t best = m;
      for (std::size_t r = piv; r < m; ++r) {
        if (t(r, c) == 0) continue;
        if (best == m || abs_less(t(r, c), t(best, c))) best = r;
      }
      if (best == m) break;
      t.swap_rows(piv, best);
      if (u) u->swap_rows(piv, best);
      bool others = false;
      for (std::size_t r = piv + 1; r < m; ++r) {
        if (t(r, c) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), t(r, c).get_mpz_t(), t(piv, c).get_mpz_t());
        q = -q;
        t.add_row_multiple(r, piv, q);
        if (u) u->add_row_multiple(r, piv, q);
        if (t(r, c) != 0) others = true;
      }
      if (!others) {
        pivots.push_back(c);
        ++piv;
        break;
      }
    }
  }
  return pivots;
}

// Reduce an echelon matrix to row Hermite form: positive pivots, entries above each pivot in [0, pivot).
void row_hermite_reduce(IntMatrix& t, const std::vector<std::size_t>& pivots, IntMatrix* u) {
  mpz_class q;
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    const std::size_t c = pivots[k];
    if (t(k, c) < 0) {
      t.negate_row(k);
      if (u) u->negate_row(k);
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (t(j, c) == 0) continue;
      mpz_fdiv_q(q.get_mpz_t(), t(j, c).get_mpz_t(), t(k, c).get_mpz_t());
      q = -q;
      t.add_row_multiple(j, k, q);
      if (u) u->add_row_multiple(j, k, q);
    }
  }
}

}  // namespace

std::vector<mpz_class> SmithDecomposition::diagonal() const {
  std::vector<mpz_class> d;
  for (std::size_t i = 0; i < std::min(s.rows(), s.cols()); ++i) d.push_back(s(i, i));
  return d;
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < std::min(s.rows(), s.cols()); ++i)
    if (s(i, i) != 0) ++r;
  return r;
}

SmithDecomposition smith(const IntMatrix& a) {
  SmithDecomposition d{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols())};
  smith_in_place(d.s, &d.u, &d.v);
  return d;
}

std::vector<mpz_class> smith_diagonal(const IntMatrix& a) {
  // Row echelon first (left-unimodular, so the invariants are unchanged), then Smith on the nonzero rows.
  IntMatrix e = a;
  auto pivots = row_echelon(e, nullptr);
  IntMatrix reduced = e.rows_range(0, pivots.size());
  smith_in_place(reduced, nullptr, nullptr);
  std::vector<mpz_class> d;
  for (std::size_t i = 0; i < pivots.size(); ++i) d.push_back(reduced(i, i));
  d.resize(std::min(a.rows(), a.cols()), 0);
  return d;
}

std::size_t rank(const IntMatrix& a) {
  IntMatrix t = a;
  return row_echelon(t, nullptr).size();
}

IntMatrix kernel_basis(const IntMatrix& a) {
  IntMatrix t = a.transpose();
  IntMatrix u = IntMatrix::identity(a.cols());
  const std::size_t r = row_echelon(t, &u).size();
  IntMatrix k = u.rows_range(r, a.cols()).transpose();
  return column_hnf(k);
}

std::vector<mpz_class> cokernel_invariants(const IntMatrix& a) {
  auto d = smith_diagonal(a);
  std::vector<mpz_class> out;
  std::size_t r = 0;
  for (const auto& x : d) {
    if (x == 0) continue;
    ++r;
    if (x != 1) out.push_back(x);
  }
  for (std::size_t i = r; i < a.rows(); ++i) out.emplace_back(0);
  return out;
}

IntMatrix column_hnf(const IntMatrix& a) {
  IntMatrix t = a.transpose();
  auto pivots = row_echelon(t, nullptr);
  row_hermite_reduce(t, pivots, nullptr);
  return t.rows_range(0, pivots.size()).transpose();
}

std::optional<IntMatrix> solve_integer(const IntMatrix& b, const IntMatrix& y) {
  if (b.rows() != y.rows()) throw std::invalid_argument("solve_integer: row mismatch");
  const std::size_t k = b.cols();
  IntMatrix e = b.transpose();
  IntMatrix u = IntMatrix::identity(k);
  auto pivots = row_echelon(e, &u);
  if (pivots.size() != k) throw std::invalid_argument("solve_integer: matrix lacks full column rank");
  // b = e^T u^{-T};  b x = y  <=>  e^T z = y with x = u^T z.
  IntMatrix z(k, y.cols());
  mpz_class acc;
  for (std::size_t col = 0; col < y.cols(); ++col) {
    for (std::size_t i = 0; i < k; ++i) {
      acc = y(pivots[i], col);
      for (std::size_t j = 0; j < i; ++j) acc -= e(j, pivots[i]) * z(j, col);
      if (!mpz_divisible_p(acc.get_mpz_t(), e(i, pivots[i]).get_mpz_t())) return std::nullopt;
      mpz_divexact(z(i, col).get_mpz_t(), acc.get_mpz_t(), e(i, pivots[i]).get_mpz_t());
    }
  }
  if (!(e.transpose() * z == y)) return std::nullopt;
  return u.transpose() * z;
}

mpz_class determinant(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant: non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix m = a;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class x = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

mpq_class rational_det(const RationalMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("rational_det: non-square matrix");
  const std::size_t n = a.rows();
  RationalMatrix m = a;
  mpq_class det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(p, c));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      mpq_class f = m(i, k) / m(k, k);
      for (std::size_t c = k; c < n; ++c) m(i, c) -= f * m(k, c);
    }
  }
  return det;
}

// ---------------------------------------------------------------------------

ImageLattice::ImageLattice(const IntMatrix& a) {
  auto d = smith(a);
  u_ = std::move(d.u);
  diag_ = d.diagonal();
}

bool ImageLattice::contains(const std::vector<mpz_class>& x) const {
  if (x.size() != u_.rows()) throw std::invalid_argument("ImageLattice: dimension mismatch");
  mpz_class y;
  for (std::size_t i = 0; i < u_.rows(); ++i) {
    y = 0;
    for (std::size_t j = 0; j < u_.cols(); ++j)
      if (x[j] != 0 && u_(i, j) != 0) mpz_addmul(y.get_mpz_t(), u_(i, j).get_mpz_t(), x[j].get_mpz_t());
    if (i < diag_.size() && diag_[i] != 0) {
      if (!mpz_divisible_p(y.get_mpz_t(), diag_[i].get_mpz_t())) return false;
    } else if (y != 0) {
      return false;
    }
  }
  return true;
}

bool ImageLattice::contains_columns(const IntMatrix& x) const {
  for (std::size_t c = 0; c < x.cols(); ++c)
    if (!contains(x.column_vector(c))) return false;
  return true;
}

std::string to_string(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_str();
}

mpq_class rational_power(const mpq_class& base, long e) {
  if (e < 0 && base == 0) throw std::domain_error("rational_power: zero to a negative power");
  mpq_class b = e < 0 ? mpq_class(1) / base : base;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), k);
  mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), k);
  r.canonicalize();
  return r;
}

}  // namespace brauer
