#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "adjsq/polynomial.hpp"
#include "adjsq/rational.hpp"

namespace adjsq {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::span<Rational> row(std::size_t i) { return {a_.data() + i * cols_, cols_}; }
  std::span<const Rational> row(std::size_t i) const { return {a_.data() + i * cols_, cols_}; }

  Vector column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  const std::vector<Rational>& data() const { return a_; }

  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x == 0; });
  }

  Rational max_abs() const {
    Rational m = 0;
    for (const auto& x : a_) {
      const Rational ax = abs(x);
      if (ax > m) m = ax;
    }
    return m;
  }

  Rational trace() const {
    Rational t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  Matrix& operator*=(const Rational& s) {
    for (auto& x : a_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape");
    Matrix c(a.rows_, b.cols_);
    Rational t;
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Rational& bkj = b(k, j);
          if (bkj == 0) continue;
          t = aik * bkj;
          c(i, j) += t;
        }
      }
    }
    return c;
  }

  friend Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape");
    Vector out(a.rows_, Rational(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        if (a(i, j) != 0 && v[j] != 0) out[i] += a(i, j) * v[j];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

/// Row-compressed sparse matrix over Q; used for operators whose action is
/// applied repeatedly to dense blocks.
class SparseMatrix {
 public:
  struct Entry {
    std::size_t col;
    Rational value;
  };

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), r_(rows) {}

  explicit SparseMatrix(const Matrix& m) : SparseMatrix(m.rows(), m.cols()) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(i, j) != 0) r_[i].push_back({j, m(i, j)});
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Entry>& row(std::size_t i) const { return r_[i]; }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& row : r_) n += row.size();
    return n;
  }

  /// Accumulates value into (i, j); entries that cancel are dropped.
  void add(std::size_t i, std::size_t j, const Rational& value) {
    if (value == 0) return;
    auto& row = r_[i];
    auto it = std::lower_bound(row.begin(), row.end(), j, [](const Entry& e, std::size_t c) { return e.col < c; });
    if (it != row.end() && it->col == j) {
      it->value += value;
      if (it->value == 0) row.erase(it);
    } else {
      row.insert(it, Entry{j, value});
    }
  }

  Rational at(std::size_t i, std::size_t j) const {
    for (const auto& e : r_[i])
      if (e.col == j) return e.value;
    return 0;
  }

  Matrix to_dense() const {
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (const auto& e : r_[i]) m(i, e.col) = e.value;
    return m;
  }

  SparseMatrix transpose() const {
    SparseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (const auto& e : r_[i]) t.r_[e.col].push_back({i, e.value});
    return t;
  }

  friend Vector operator*(const SparseMatrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw Error(ErrorKind::DimensionMismatch, "sparse matrix-vector shape");
    Vector out(a.rows_, Rational(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (const auto& e : a.r_[i])
        if (v[e.col] != 0) out[i] += e.value * v[e.col];
    return out;
  }

  friend Matrix operator*(const SparseMatrix& a, const Matrix& b) {
    if (a.cols_ != b.rows()) throw Error(ErrorKind::DimensionMismatch, "sparse-dense product shape");
    Matrix c(a.rows_, b.cols());
    Rational t;
    for (std::size_t i = 0; i < a.rows_; ++i) {
      auto out = c.row(i);
      for (const auto& e : a.r_[i]) {
        auto in = b.row(e.col);
        for (std::size_t j = 0; j < in.size(); ++j) {
          if (in[j] == 0) continue;
          t = e.value * in[j];
          out[j] += t;
        }
      }
    }
    return c;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "sparse product shape");
    SparseMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (const auto& e : a.r_[i])
        for (const auto& f : b.r_[e.col]) c.add(i, f.col, e.value * f.value);
    return c;
  }

  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "sparse sum shape");
    SparseMatrix c = a;
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (const auto& e : b.r_[i]) c.add(i, e.col, e.value);
    return c;
  }

  friend SparseMatrix operator*(const Rational& s, SparseMatrix a) {
    if (s == 0) return SparseMatrix(a.rows_, a.cols_);
    for (auto& row : a.r_)
      for (auto& e : row) e.value *= s;
    return a;
  }

  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return a + Rational(-1) * b; }

  static SparseMatrix identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.r_[i].push_back({i, Rational(1)});
    return m;
  }

  bool is_zero() const {
    return std::all_of(r_.begin(), r_.end(), [](const auto& row) { return row.empty(); });
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.rows_; ++i) {
      if (a.r_[i].size() != b.r_[i].size()) return false;
      for (std::size_t k = 0; k < a.r_[i].size(); ++k)
        if (a.r_[i][k].col != b.r_[i][k].col || a.r_[i][k].value != b.r_[i][k].value) return false;
    }
    return true;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<Entry>> r_;
};

namespace detail {

/// Clears denominators row by row; row scaling does not change rank.
inline std::vector<std::vector<Integer>> integer_rows(const Matrix& m) {
  std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (const auto& x : m.row(i)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = Rational(m(i, j) * l).get_num();
  }
  return out;
}

}  // namespace detail

/// Rank by Bareiss fraction-free elimination on the row-scaled integer matrix.
inline std::size_t rank(const Matrix& m) {
  auto a = detail::integer_rows(m);
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

/// Exact inverse: fraction-free forward elimination of [SA | S] (S clears
/// the row denominators of A), then rational back substitution.
inline Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto a = detail::integer_rows(aug);
  Integer prev = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw Error(ErrorKind::DegenerateForm, "singular matrix");
    std::swap(a[piv], a[c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < 2 * n; ++j) {
        a[i][j] = a[c][c] * a[i][j] - a[i][c] * a[c][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[c][c];
  }
  Matrix inv(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t ii = n; ii-- > 0;) {
      Rational s = Rational(a[ii][n + col]);
      for (std::size_t j = ii + 1; j < n; ++j) s -= Rational(a[ii][j]) * inv(j, col);
      inv(ii, col) = s / Rational(a[ii][ii]);
    }
  }
  return inv;
}

/// Incrementally maintained reduced row-echelon basis of a subspace of Q^dim.
/// Optionally records each stored vector as a combination of the inserted
/// inputs, which is what dependency extraction needs.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim, bool track = false) : dim_(dim), track_(track) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return dim_; }

  /// Reduces v against the basis. Returns the residual.
  Vector reduce(Vector v, Vector* combo = nullptr) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rational f = v[pivots_[k]];
      if (f == 0) continue;
      const Vector& row = rows_[k];
      for (std::size_t j = pivots_[k]; j < dim_; ++j)
        if (row[j] != 0) v[j] -= f * row[j];
      if (combo) {
        const Vector& cr = combos_[k];
        for (std::size_t j = 0; j < cr.size(); ++j)
          if (cr[j] != 0) (*combo)[j] -= f * cr[j];
      }
    }
    return v;
  }

  bool contains(const Vector& v) const {
    const Vector r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
  }

  /// Inserts v; returns true if it enlarged the span. When tracking and v is
  /// dependent, `dependency` receives coefficients c with sum c_i input_i = 0
  /// and c_new = 1.
  bool insert(const Vector& v, Vector* dependency = nullptr) {
    if (v.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "echelon insert");
    Vector combo;
    if (track_) {
      combo.assign(inputs_ + 1, Rational(0));
      combo[inputs_] = 1;
      for (auto& c : combos_) c.resize(inputs_ + 1, Rational(0));
    }
    Vector r = reduce(v, track_ ? &combo : nullptr);
    ++inputs_;
    std::size_t p = 0;
    while (p < dim_ && r[p] == 0) ++p;
    if (p == dim_) {
      if (dependency) *dependency = combo;
      return false;
    }
    const Rational inv = 1 / r[p];
    for (std::size_t j = p; j < dim_; ++j) r[j] *= inv;
    if (track_)
      for (auto& c : combo) c *= inv;
    // Keep the basis fully reduced so reduce() touches each pivot once.
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rational f = rows_[k][p];
      if (f == 0) continue;
      for (std::size_t j = p; j < dim_; ++j)
        if (r[j] != 0) rows_[k][j] -= f * r[j];
      if (track_)
        for (std::size_t j = 0; j < combo.size(); ++j)
          if (combo[j] != 0) combos_[k][j] -= f * combo[j];
    }
    const auto pos = static_cast<std::ptrdiff_t>(
        std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin());
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(r));
    if (track_) combos_.insert(combos_.begin() + pos, std::move(combo));
    return true;
  }

 private:
  std::size_t dim_;
  bool track_;
  std::size_t inputs_ = 0;
  std::vector<std::size_t> pivots_;
  std::vector<Vector> rows_;
  std::vector<Vector> combos_;
};

/// Evaluates p(op) * rhs by Horner's rule, with op applied from the left so
/// a sparse op is never densified.
inline Matrix apply_polynomial(const SparseMatrix& op, const Polynomial& p, const Matrix& rhs) {
  Matrix acc(rhs.rows(), rhs.cols());
  for (int k = p.degree(); k >= 0; --k) {
    acc = op * acc;
    if (p.coeff(k) != 0) acc += p.coeff(k) * rhs;
  }
  return acc;
}

inline Matrix evaluate_polynomial(const SparseMatrix& op, const Polynomial& p) {
  return apply_polynomial(op, p, Matrix::identity(op.rows()));
}

/// Monic minimal polynomial of a square operator, found as the first linear
/// dependency among I, op, op^2, ... (vectorized).
inline Polynomial minimal_polynomial(const SparseMatrix& op) {
  if (op.rows() != op.cols()) throw Error(ErrorKind::DimensionMismatch, "minimal polynomial of non-square");
  const std::size_t n = op.rows();
  EchelonBasis basis(n * n, /*track=*/true);
  Matrix power = Matrix::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    Vector dep;
    if (!basis.insert(power.data(), &dep)) {
      return Polynomial(dep);
    }
    power = op * power;
  }
  throw Error(ErrorKind::BadParam, "no dependency found among operator powers");
}

}  // namespace adjsq
