#pragma once

#include <deque>
#include <memory>
#include <vector>

#include "adjsq/dimform.hpp"
#include "adjsq/matrep.hpp"

namespace adjsq {

/// A module of a realized algebra. The pairing is contravariant for the
/// transpose involution: <X u, w> = <u, X^T w>; over Q it stands in for the
/// compact-form inner product.
struct RealizedModule {
  std::shared_ptr<const MatrixLieAlgebra> L;
  std::vector<SparseMatrix> action;
  Matrix form;
  IrrepLabel hw_label;
  /// Weight of each module basis vector; the Cartan basis acts diagonally.
  std::vector<Weight> weights;

  std::size_t dim() const { return form.rows(); }

  Rational pair(const Vector& u, const Vector& w) const {
    const Vector fw = form * w;
    Rational s = 0;
    for (std::size_t k = 0; k < u.size(); ++k) s += u[k] * fw[k];
    return s;
  }

  Vector act(std::size_t a, const Vector& v) const { return action[a] * v; }
};

namespace detail {

inline std::vector<Weight> diagonal_weights(const MatrixLieAlgebra& L, const std::vector<SparseMatrix>& action) {
  const std::size_t m = action.empty() ? 0 : action[0].rows();
  std::vector<Weight> out;
  for (std::size_t i = 0; i < m; ++i) {
    Vector v(L.cartan_dim);
    for (std::size_t k = 0; k < L.cartan_dim; ++k) {
      if (action[k].row(i).size() > 1 || (action[k].row(i).size() == 1 && action[k].row(i)[0].col != i))
        throw Error(ErrorKind::BadParam, "Cartan elements must act diagonally");
      v[k] = action[k].at(i, i);
    }
    out.push_back(L.weight_from_cartan_values(v));
  }
  return out;
}

inline void exponent_vectors(std::size_t n, long k, std::vector<long>& cur, std::vector<std::vector<long>>& out) {
  if (cur.size() + 1 == n) {
    cur.push_back(k);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (long a = k; a >= 0; --a) {
    cur.push_back(a);
    exponent_vectors(n, k - a, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// The adjoint module of a realized algebra with <u, w> = kappa(u^T, w).
inline RealizedModule adjoint_module(std::shared_ptr<const MatrixLieAlgebra> L) {
  const std::size_t d = L->dim();
  Matrix form(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) form(a, b) = L->form(L->basis[a].transpose(), L->basis[b]);
  auto rs = root_system(L->algebra);
  RealizedModule M{L, L->ad, std::move(form), IrrepLabel(rs, rs->highest_root()), {}};
  M.weights = detail::diagonal_weights(*L, M.action);
  return M;
}

/// Homogeneous polynomials of degree k on the natural module of su(n), with
/// the Fischer pairing <x^a, x^b> = delta_ab a!. For su(2) this is D^{k/2}.
inline RealizedModule sym_power_module(long k, std::size_t n = 2) {
  if (k < 0) throw Error(ErrorKind::BadParam, "negative degree");
  auto L = realize(AlgebraId::su(static_cast<int>(n)));
  std::vector<std::vector<long>> mono;
  std::vector<long> cur;
  detail::exponent_vectors(n, k, cur, mono);
  const std::size_t m = mono.size();
  auto index = [&](const std::vector<long>& e) {
    return static_cast<std::size_t>(std::find(mono.begin(), mono.end(), e) - mono.begin());
  };
  std::vector<SparseMatrix> action;
  for (const auto& x : L->basis) {
    SparseMatrix rho(m, m);
    // x_i d/dx_j for each entry A_ij.
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& e : x.row(i)) {
        const std::size_t j = e.col;
        for (std::size_t c = 0; c < m; ++c) {
          if (mono[c][j] == 0) continue;
          std::vector<long> t = mono[c];
          const long coeff = t[j];
          --t[j];
          ++t[i];
          rho.add(index(t), c, e.value * coeff);
        }
      }
    action.push_back(std::move(rho));
  }
  Matrix form(m, m);
  for (std::size_t c = 0; c < m; ++c) {
    Integer f = 1;
    for (long a : mono[c]) f *= factorial(a);
    form(c, c) = Rational(f);
  }
  auto rs = root_system(L->algebra);
  Weight hw(n);
  hw[0] = k;
  RealizedModule M{L, std::move(action), std::move(form), IrrepLabel(rs, rs->project(hw)), {}};
  M.weights = detail::diagonal_weights(*L, M.action);
  return M;
}

/// Coordinates of H_v = sum_{a,b} (gram^{-1})_{ab} <v, X_a v> X_b.
inline Vector h_vector(const RealizedModule& M, const Vector& v) {
  if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; }))
    throw Error(ErrorKind::ZeroVector, "H_v of the zero vector");
  const std::size_t d = M.L->dim();
  Vector pairing(d);
  for (std::size_t a = 0; a < d; ++a) pairing[a] = M.pair(v, M.act(a, v));
  return M.L->gram_inv * pairing;
}

/// Action of an algebra element given by coordinates.
inline Vector act_element(const RealizedModule& M, const Vector& coords, const Vector& v) {
  Vector out(v.size(), Rational(0));
  for (std::size_t a = 0; a < coords.size(); ++a) {
    if (coords[a] == 0) continue;
    const Vector w = M.act(a, v);
    for (std::size_t k = 0; k < w.size(); ++k) out[k] += coords[a] * w[k];
  }
  return out;
}

inline Vector tensor_power(const Vector& v, int m) {
  Vector out{Rational(1)};
  for (int p = 0; p < m; ++p) {
    Vector next;
    next.reserve(out.size() * v.size());
    for (const auto& x : out)
      for (const auto& y : v) next.push_back(x * y);
    out = std::move(next);
  }
  return out;
}

/// Dimension of the submodule of the m-th tensor power generated by w.
inline std::size_t generated_dim(const RealizedModule& M, const Vector& w, int m = 2) {
  std::size_t total = 1;
  for (int p = 0; p < m; ++p) total *= M.dim();
  if (w.size() != total) throw Error(ErrorKind::DimensionMismatch, "vector is not in the tensor power");
  if (std::all_of(w.begin(), w.end(), [](const Rational& x) { return x == 0; }))
    throw Error(ErrorKind::ZeroVector, "generated submodule of the zero vector");
  const std::size_t md = M.dim();
  // cols[a][c]: entries of X_a e_c.
  std::vector<std::vector<std::vector<std::pair<std::size_t, Rational>>>> cols(M.action.size());
  for (std::size_t a = 0; a < M.action.size(); ++a) {
    cols[a].resize(md);
    for (std::size_t r = 0; r < md; ++r)
      for (const auto& e : M.action[a].row(r)) cols[a][e.col].emplace_back(r, e.value);
  }
  auto apply = [&](std::size_t a, const Vector& x) {
    Vector out(total, Rational(0));
    std::size_t stride = 1;
    for (int f = 0; f < m; ++f, stride *= md)
      for (std::size_t idx = 0; idx < total; ++idx) {
        if (x[idx] == 0) continue;
        const std::size_t c = (idx / stride) % md;
        const std::size_t base = idx - c * stride;
        for (const auto& [r, val] : cols[a][c]) out[base + r * stride] += val * x[idx];
      }
    return out;
  };
  EchelonBasis span(total);
  std::deque<Vector> todo;
  span.insert(w);
  todo.push_back(w);
  while (!todo.empty()) {
    const Vector x = std::move(todo.front());
    todo.pop_front();
    for (std::size_t a = 0; a < M.action.size(); ++a) {
      Vector y = apply(a, x);
      if (span.insert(y)) todo.push_back(std::move(y));
    }
  }
  return span.dim();
}

inline bool is_highest_weight_vector(const RealizedModule& M, const Vector& v) {
  const IrrepLabel square(M.hw_label.rs, Rational(2) * M.hw_label.hw);
  return Integer(static_cast<unsigned long>(generated_dim(M, tensor_power(v, 2)))) == weyl_dim(square);
}

/// sum_{j=|m|}^{l} dim D^{2j}: the module generated by the square of a
/// weight-m vector in D^l.
inline long so3_law(long l, long m) {
  if (l < 0 || m > l || m < -l) throw Error(ErrorKind::BadParam, "need |m| <= l");
  long s = 0;
  for (long j = m < 0 ? -m : m; j <= l; ++j) s += 4 * j + 1;
  return s;
}

}  // namespace adjsq
