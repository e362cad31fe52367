#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "adjsq/casdecomp.hpp"
#include "adjsq/matrix.hpp"
#include "adjsq/rootsys.hpp"

namespace adjsq {

namespace detail {

inline Rational trace_product(const SparseMatrix& x, const SparseMatrix& y) {
  Rational t = 0;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (const auto& e : x.row(i)) {
      const Rational v = y.at(e.col, i);
      if (v != 0) t += e.value * v;
    }
  return t;
}

inline SparseMatrix bracket(const SparseMatrix& x, const SparseMatrix& y) { return x * y - y * x; }

inline SparseMatrix unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
  SparseMatrix m(n, n);
  m.add(i, j, 1);
  return m;
}

}  // namespace detail

/// Scale c making c * trace(XY) the normalized invariant form. The first
/// `cartan_dim` basis elements must be diagonal and the rest eigenvectors
/// of their adjoint action.
inline Rational calibrate(const std::vector<SparseMatrix>& basis, std::size_t cartan_dim) {
  if (cartan_dim == 0 || cartan_dim > basis.size()) throw Error(ErrorKind::DegenerateForm, "no Cartan subalgebra");
  Matrix kh(cartan_dim, cartan_dim);
  for (std::size_t i = 0; i < cartan_dim; ++i)
    for (std::size_t j = 0; j < cartan_dim; ++j) kh(i, j) = detail::trace_product(basis[i], basis[j]);
  if (rank(kh) != cartan_dim) throw Error(ErrorKind::DegenerateForm, "trace form degenerate on the Cartan subalgebra");
  const Matrix khi = inverse(kh);
  Rational longest = 0;
  for (std::size_t b = cartan_dim; b < basis.size(); ++b) {
    const SparseMatrix& x = basis[b];
    if (x.is_zero()) throw Error(ErrorKind::DegenerateForm, "zero basis element");
    Vector alpha(cartan_dim);
    std::size_t pi = 0, pj = 0;
    for (std::size_t i = 0; i < x.rows(); ++i)
      if (!x.row(i).empty()) {
        pi = i;
        pj = x.row(i).front().col;
        break;
      }
    for (std::size_t k = 0; k < cartan_dim; ++k) {
      const SparseMatrix h = detail::bracket(basis[k], x);
      alpha[k] = h.at(pi, pj) / x.at(pi, pj);
      if (!(h == alpha[k] * x)) throw Error(ErrorKind::DegenerateForm, "basis element is not a root vector");
    }
    const Rational len = std::inner_product(alpha.begin(), alpha.end(), (khi * alpha).begin(), Rational(0));
    if (len > longest) longest = len;
  }
  if (longest == 0) throw Error(ErrorKind::DegenerateForm, "no roots: the invariant form vanishes");
  return longest / 2;
}

struct MatrixLieAlgebra {
  AlgebraId algebra;
  std::size_t n = 0;
  std::size_t cartan_dim = 0;
  std::vector<SparseMatrix> basis;
  Rational calib;
  Matrix gram;
  Matrix gram_inv;
  /// ad[a](c, b) is the coefficient of X_c in [X_a, X_b].
  std::vector<SparseMatrix> ad;
  /// Weight of each basis element in root-system coordinates.
  std::vector<Weight> weights;

  std::size_t dim() const { return basis.size(); }

  Rational form(const SparseMatrix& x, const SparseMatrix& y) const { return calib * detail::trace_product(x, y); }

  /// Coordinates of Y in the basis, via the dual basis. Throws if Y is not
  /// in the span.
  Vector coordinates(const SparseMatrix& y) const {
    Vector pair(dim());
    for (std::size_t a = 0; a < dim(); ++a) pair[a] = form(basis[a], y);
    Vector c = gram_inv * pair;
    if (!(element(c) == y)) throw Error(ErrorKind::DimensionMismatch, "matrix is not in the algebra");
    return c;
  }

  SparseMatrix element(const Vector& c) const {
    SparseMatrix m(n, n);
    for (std::size_t a = 0; a < dim(); ++a)
      if (c[a] != 0) m = m + c[a] * basis[a];
    return m;
  }

  /// Root-system weight from the eigenvalues of the Cartan basis elements.
  Weight weight_from_cartan_values(const Vector& v) const {
    if (algebra.family == Family::A) {
      Weight mu(n);
      for (std::size_t i = 1; i < n; ++i) mu[i] = mu[i - 1] - v[i - 1];
      Rational s = 0;
      for (const auto& x : mu.coords) s += x;
      for (auto& x : mu.coords) x -= s / static_cast<long>(n);
      return mu;
    }
    return Weight(v);
  }
};

namespace detail {

/// Basis of {X : X^T B + B X = 0} built by projecting matrix units.
inline std::vector<SparseMatrix> form_algebra_basis(std::size_t n, bool symplectic, std::size_t& cartan_dim) {
  auto partner = [n](std::size_t i) { return n - 1 - i; };
  auto sign = [&](std::size_t i) { return symplectic && i >= n / 2 ? Rational(-1) : Rational(1); };
  // E_ij - B^{-1} E_ji B is the matrix unit E_ij plus a multiple of E_{j'i'}.
  std::vector<SparseMatrix> cartan, rest;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t pi = partner(j), pj = partner(i);
      if (std::make_pair(pi, pj) < std::make_pair(i, j)) continue;
      SparseMatrix x(n, n);
      x.add(i, j, 1);
      x.add(pi, pj, -sign(i) * sign(j));
      if (x.is_zero()) continue;
      if (x.at(i, j) == 2) x = rat(1, 2) * x;
      (i == j ? cartan : rest).push_back(std::move(x));
    }
  cartan_dim = cartan.size();
  cartan.insert(cartan.end(), rest.begin(), rest.end());
  return cartan;
}

inline bool preserves_form(const SparseMatrix& x, const SparseMatrix& b) {
  return (x.transpose() * b + b * x).is_zero();
}

inline SparseMatrix antidiagonal_form(std::size_t n, bool symplectic) {
  SparseMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i) b.add(i, n - 1 - i, symplectic && i >= n / 2 ? -1 : 1);
  return b;
}

inline MatrixLieAlgebra finish_realization(AlgebraId a, std::size_t n, std::vector<SparseMatrix> basis,
                                           std::size_t cartan_dim) {
  MatrixLieAlgebra L;
  L.algebra = a;
  L.n = n;
  L.cartan_dim = cartan_dim;
  L.basis = std::move(basis);
  L.calib = calibrate(L.basis, cartan_dim);
  const std::size_t d = L.dim();
  L.gram = Matrix(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) L.gram(i, j) = L.form(L.basis[i], L.basis[j]);
  if (rank(L.gram) != d) throw Error(ErrorKind::DegenerateForm, "invariant form is degenerate");
  L.gram_inv = inverse(L.gram);
  L.ad.assign(d, SparseMatrix(d, d));
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      const Vector c = L.coordinates(bracket(L.basis[x], L.basis[y]));
      for (std::size_t z = 0; z < d; ++z) L.ad[x].add(z, y, c[z]);
    }
  for (std::size_t b = 0; b < d; ++b) {
    Vector v(cartan_dim);
    for (std::size_t k = 0; k < cartan_dim; ++k) v[k] = L.ad[k].at(b, b);
    L.weights.push_back(L.weight_from_cartan_values(v));
  }
  return L;
}

inline MatrixLieAlgebra build_realization(const AlgebraId& a) {
  a.validate();
  const std::size_t n = static_cast<std::size_t>(a.n);
  switch (a.family) {
    case Family::A: {
      if (n > 6) break;
      std::vector<SparseMatrix> basis;
      for (std::size_t i = 0; i + 1 < n; ++i) basis.push_back(unit_matrix(n, i, i) - unit_matrix(n, i + 1, i + 1));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j) basis.push_back(unit_matrix(n, i, j));
      return finish_realization(a, n, std::move(basis), n - 1);
    }
    case Family::B:
    case Family::D:
    case Family::C: {
      const bool symplectic = a.family == Family::C;
      if (symplectic ? n > 6 : (n < 5 || n > 8)) break;
      std::size_t cartan_dim = 0;
      auto basis = form_algebra_basis(n, symplectic, cartan_dim);
      const SparseMatrix b = antidiagonal_form(n, symplectic);
      for (const auto& x : basis)
        if (!preserves_form(x, b)) throw Error(ErrorKind::DegenerateForm, "basis element does not preserve the form");
      return finish_realization(a, n, std::move(basis), cartan_dim);
    }
    default: break;
  }
  throw Error(ErrorKind::UnsupportedRealization, "no matrix realization for " + a.name());
}

}  // namespace detail

/// Cached realization: su(n) 2..6, so(n) 5..8 and sp(n) 2, 4, 6, with the
/// orthogonal and symplectic forms antidiagonal so the Cartan subalgebra is
/// diagonal.
inline std::shared_ptr<const MatrixLieAlgebra> realize(const AlgebraId& a) {
  static std::mutex mu;
  static std::map<AlgebraId, std::shared_ptr<const MatrixLieAlgebra>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(a); it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const MatrixLieAlgebra>(detail::build_realization(a));
  std::lock_guard lock(mu);
  return cache.emplace(a, std::move(built)).first->second;
}

struct TensorSquareOperator {
  Part part;
  std::size_t dim = 0;
  SparseMatrix matrix;
};

namespace detail {

/// Index of the basis element of S^2 or wedge^2 attached to (k, l), k <= l
/// (k < l for wedge); -1 where there is none.
inline std::vector<std::vector<long>> part_index(Part part, std::size_t d) {
  std::vector<std::vector<long>> idx(d, std::vector<long>(d, -1));
  long next = 0;
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = part == Part::Sym ? k : k + 1; l < d; ++l) idx[k][l] = next++;
  return idx;
}

/// Restricts an operator on g (x) g that commutes with the swap. `image`
/// maps (i, j) to the coefficients of T(e_i (x) e_j) keyed by k * d + l.
template <class Image>
SparseMatrix restrict_to_part(Part part, std::size_t d, Image&& image) {
  const auto idx = part_index(part, d);
  const std::size_t dim = part == Part::Sym ? d * (d + 1) / 2 : d * (d - 1) / 2;
  SparseMatrix m(dim, dim);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = part == Part::Sym ? i : i + 1; j < d; ++j) {
      const auto col = static_cast<std::size_t>(idx[i][j]);
      const std::map<std::size_t, Rational> t = image(i, j);
      // The image of e_i e_j + e_j e_i is T + swap(T) by swap-equivariance.
      for (const auto& [key, v] : t) {
        const std::size_t k = key / d, l = key % d;
        if (part == Part::Alt) {
          if (k != l) m.add(static_cast<std::size_t>(idx[std::min(k, l)][std::max(k, l)]), col, k < l ? v : Rational(-v));
        } else if (k == l) {
          m.add(static_cast<std::size_t>(idx[k][k]), col, i == j ? v : Rational(2 * v));
        } else {
          m.add(static_cast<std::size_t>(idx[std::min(k, l)][std::max(k, l)]), col, i == j ? Rational(v / 2) : v);
        }
      }
    }
  return m;
}

struct AdColumns {
  /// cols[a][i]: nonzero entries of ad(X_a) e_i.
  std::vector<std::vector<std::vector<std::pair<std::size_t, Rational>>>> cols;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> gram_inv_rows;

  explicit AdColumns(const MatrixLieAlgebra& L) {
    const std::size_t d = L.dim();
    cols.assign(d, std::vector<std::vector<std::pair<std::size_t, Rational>>>(d));
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t c = 0; c < d; ++c)
        for (const auto& e : L.ad[a].row(c)) cols[a][e.col].emplace_back(c, e.value);
    gram_inv_rows.resize(d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        if (L.gram_inv(a, b) != 0) gram_inv_rows[a].emplace_back(b, L.gram_inv(a, b));
  }
};

}  // namespace detail

/// Matrix of sum_{a,b} (gram^{-1})_{ab} ad(X_a) (x) ad(X_b) on the chosen part.
inline TensorSquareOperator split_casimir_matrix(const MatrixLieAlgebra& L, Part part) {
  const std::size_t d = L.dim();
  const detail::AdColumns ac(L);
  auto image = [&](std::size_t i, std::size_t j) {
    std::map<std::size_t, Rational> t;
    for (std::size_t a = 0; a < d; ++a) {
      const auto& u = ac.cols[a][i];
      if (u.empty()) continue;
      for (const auto& [b, g] : ac.gram_inv_rows[a]) {
        const auto& w = ac.cols[b][j];
        for (const auto& [k, x] : u)
          for (const auto& [l, y] : w) t[k * d + l] += g * x * y;
      }
    }
    return t;
  };
  const std::size_t dim = part == Part::Sym ? d * (d + 1) / 2 : d * (d - 1) / 2;
  return TensorSquareOperator{part, dim, detail::restrict_to_part(part, d, image)};
}

/// Action of X_a on the part, i.e. ad(X_a) (x) 1 + 1 (x) ad(X_a) restricted.
inline SparseMatrix part_action(const MatrixLieAlgebra& L, Part part, std::size_t a) {
  const std::size_t d = L.dim();
  const detail::AdColumns ac(L);
  auto image = [&](std::size_t i, std::size_t j) {
    std::map<std::size_t, Rational> t;
    for (const auto& [k, x] : ac.cols[a][i]) t[k * d + j] += x;
    for (const auto& [l, y] : ac.cols[a][j]) t[i * d + l] += y;
    return t;
  };
  return detail::restrict_to_part(part, d, image);
}

/// Max-abs entry of prod (op - r I); zero means the roots annihilate op.
inline Rational verify_annihilation(const TensorSquareOperator& op, const std::vector<Rational>& roots) {
  Matrix m = Matrix::identity(op.dim);
  for (const auto& r : roots) m = op.matrix * m - r * m;
  return m.max_abs();
}

/// Lagrange projector onto the eigs[r]-eigenspace. Throws IncompleteSpectrum
/// when the result is not idempotent.
inline Matrix projector_matrix(const TensorSquareOperator& op, const std::vector<Rational>& eigs, std::size_t r) {
  const Matrix p = evaluate_polynomial(op.matrix, lagrange_projector_poly(eigs, r));
  if (!(SparseMatrix(p) * p == p))
    throw Error(ErrorKind::IncompleteSpectrum, "projector for " + to_display(eigs[r]) + " is not idempotent");
  return p;
}

inline std::size_t projector_rank(const TensorSquareOperator& op, const std::vector<Rational>& eigs, std::size_t r) {
  return rank(projector_matrix(op, eigs, r));
}

/// kappa([X_a, X_b], X_c) + kappa(X_b, [X_a, X_c]) = 0 for all triples,
/// i.e. ad(X_a)^T G + G ad(X_a) = 0.
inline bool form_is_invariant(const MatrixLieAlgebra& L) {
  const SparseMatrix g(L.gram);
  for (const auto& a : L.ad)
    if (!(a.transpose() * g + g * a).is_zero()) return false;
  return true;
}

/// sum_{a,b} (gram^{-1})_{ab} kappa(X_a, Y) X_b = Y for every basis Y.
inline bool expansion_identity_holds(const MatrixLieAlgebra& L) {
  for (const auto& y : L.basis) {
    SparseMatrix sum(L.n, L.n);
    for (std::size_t a = 0; a < L.dim(); ++a) {
      const Rational k = L.form(L.basis[a], y);
      if (k == 0) continue;
      for (std::size_t b = 0; b < L.dim(); ++b)
        if (L.gram_inv(a, b) != 0) sum = sum + (L.gram_inv(a, b) * k) * L.basis[b];
    }
    if (!(sum == y)) return false;
  }
  return true;
}

/// Index of the basis element of the given weight; throws if absent.
inline std::size_t basis_index_of_weight(const MatrixLieAlgebra& L, const Weight& w) {
  for (std::size_t b = L.cartan_dim; b < L.dim(); ++b)
    if (L.weights[b] == w) return b;
  throw Error(ErrorKind::BadParam, "no root vector of weight " + w.to_string());
}

}  // namespace adjsq
