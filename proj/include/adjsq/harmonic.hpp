#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "adjsq/matrix.hpp"

namespace adjsq {

/// Contraction operators on S^2(wedge^2 V) for V = Q^n with the split
/// symmetric form b (antidiagonal ones). Elements of S^2(wedge^2 V) use the
/// basis s_pq = w_p (x) w_q + w_q (x) w_p (p < q), s_pp = w_p (x) w_p over
/// w_p = e_i ^ e_j (i < j); elements of S^2 V use e_a e_b + e_b e_a (a < b)
/// and e_a (x) e_a.
struct HarmonicOps {
  std::size_t n = 0;
  Matrix b13;       ///< S^2(wedge^2 V) -> S^2 V
  Matrix b13_dual;  ///< S^2 V -> S^2(wedge^2 V), with b13 * b13_dual = n
  Matrix p13;       ///< n^{-1} b13_dual * b13
  Matrix p24;       ///< n^{-1} b_hat b24 on S^2 V
  Vector b_hat;     ///< dual form as an element of S^2 V
  Vector b24;       ///< contraction S^2 V -> Q, as a row

  std::size_t wedge_dim() const { return n * (n - 1) / 2; }
  std::size_t dim() const { return wedge_dim() * (wedge_dim() + 1) / 2; }
  std::size_t sym_v_dim() const { return n * (n + 1) / 2; }
};

namespace detail {

struct Tensor4 {
  std::size_t n;
  std::vector<Rational> t;
  explicit Tensor4(std::size_t n_) : n(n_), t(n_ * n_ * n_ * n_, Rational(0)) {}
  Rational& operator()(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    return t[((a * n + b) * n + c) * n + d];
  }
  const Rational& operator()(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    return t[((a * n + b) * n + c) * n + d];
  }
  bool operator==(const Tensor4&) const = default;
};

inline std::vector<std::array<std::size_t, 2>> wedge_pairs(std::size_t n) {
  std::vector<std::array<std::size_t, 2>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.push_back({i, j});
  return out;
}

inline void add_wedge_product(Tensor4& t, std::array<std::size_t, 2> p, std::array<std::size_t, 2> q, const Rational& c) {
  t(p[0], p[1], q[0], q[1]) += c;
  t(p[1], p[0], q[0], q[1]) -= c;
  t(p[0], p[1], q[1], q[0]) -= c;
  t(p[1], p[0], q[1], q[0]) += c;
}

inline Tensor4 embed(std::size_t n, const Vector& coords) {
  const auto pairs = wedge_pairs(n);
  Tensor4 t(n);
  std::size_t k = 0;
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (std::size_t q = p; q < pairs.size(); ++q, ++k) {
      if (coords[k] == 0) continue;
      add_wedge_product(t, pairs[p], pairs[q], coords[k]);
      if (p != q) add_wedge_product(t, pairs[q], pairs[p], coords[k]);
    }
  return t;
}

/// Coordinates of a tensor assumed to lie in S^2(wedge^2 V).
inline Vector extract(const Tensor4& t) {
  const auto pairs = wedge_pairs(t.n);
  Vector out;
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (std::size_t q = p; q < pairs.size(); ++q) out.push_back(t(pairs[p][0], pairs[p][1], pairs[q][0], pairs[q][1]));
  return out;
}

inline Matrix split_form(std::size_t n) {
  Matrix b(n, n);
  for (std::size_t i = 0; i < n; ++i) b(i, n - 1 - i) = 1;
  return b;
}

/// Contraction of positions 1 and 3 with b, as S^2 V coordinates.
inline Vector contract13(const Tensor4& t, const Matrix& b) {
  const std::size_t n = t.n;
  Matrix out(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      if (b(a, c) == 0) continue;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (t(a, x, c, y) != 0) out(x, y) += b(a, c) * t(a, x, c, y);
    }
  Vector v;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y) v.push_back(out(x, y));
  return v;
}

inline Matrix sym_v_tensor(std::size_t n, const Vector& w) {
  Matrix m(n, n);
  std::size_t k = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y, ++k) {
      m(x, y) += w[k];
      if (x != y) m(y, x) += w[k];
    }
  return m;
}

/// Inserts b_hat into positions 1, 3 and w into 2, 4, then projects onto
/// S^2(wedge^2 V).
inline Vector insert13(std::size_t n, const Matrix& bhat, const Vector& w) {
  const Matrix wm = sym_v_tensor(n, w);
  Tensor4 t(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          const Rational v = bhat(a, c) * wm(b, d) - bhat(b, c) * wm(a, d) - bhat(a, d) * wm(b, c) + bhat(b, d) * wm(a, c);
          if (v != 0) t(a, b, c, d) = v / 4;
        }
  return extract(t);
}

inline Matrix columns_to_matrix(const std::vector<Vector>& cols) {
  Matrix m(cols.empty() ? 0 : cols[0].size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i) m(i, j) = cols[j][i];
  return m;
}

}  // namespace detail

/// b13_dual is the projected insertion of b_hat rescaled so that
/// b13 * b13_dual = n on S^2 V; the rescaling acts by separate scalars on
/// the trace part and the trace-free part.
inline HarmonicOps harmonic_ops(std::size_t n) {
  if (n < 5 || n > 8) throw Error(ErrorKind::UnsupportedRealization, "harmonic operators need 5 <= n <= 8");
  HarmonicOps h;
  h.n = n;
  const Matrix b = detail::split_form(n);
  const Matrix bhat = inverse(b);
  std::vector<Vector> cols;
  for (std::size_t k = 0; k < h.dim(); ++k) {
    Vector e(h.dim(), Rational(0));
    e[k] = 1;
    cols.push_back(detail::contract13(detail::embed(n, e), b));
  }
  h.b13 = detail::columns_to_matrix(cols);
  cols.clear();
  for (std::size_t k = 0; k < h.sym_v_dim(); ++k) {
    Vector e(h.sym_v_dim(), Rational(0));
    e[k] = 1;
    cols.push_back(detail::insert13(n, bhat, e));
  }
  const Matrix insert = detail::columns_to_matrix(cols);
  const Rational nn(static_cast<long>(n));
  h.b13_dual = nn * (insert * inverse(h.b13 * insert));
  h.p13 = (1 / nn) * (h.b13_dual * h.b13);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y) {
      h.b_hat.push_back(bhat(x, y));
      h.b24.push_back(x == y ? b(x, x) : Rational(2 * b(x, y)));
    }
  h.p24 = Matrix(h.sym_v_dim(), h.sym_v_dim());
  for (std::size_t i = 0; i < h.sym_v_dim(); ++i)
    for (std::size_t j = 0; j < h.sym_v_dim(); ++j) h.p24(i, j) = h.b_hat[i] * h.b24[j] / nn;
  return h;
}

struct HarmonicParts {
  Vector harmonic;     ///< (1 - p13) A
  Vector trace_free;   ///< n^{-1} b13_dual [(1 - p24) b13 A]
  Vector scalar;       ///< n^{-2} b13_dual b_hat [b24 b13 A]
};

inline HarmonicParts harmonic_decompose(const HarmonicOps& h, const Vector& a) {
  if (a.size() != h.dim()) throw Error(ErrorKind::DimensionMismatch, "tensor is not in S^2(wedge^2 V)");
  const Rational nn(static_cast<long>(h.n));
  HarmonicParts out;
  const Vector pa = h.p13 * a;
  for (std::size_t k = 0; k < a.size(); ++k) out.harmonic.push_back(a[k] - pa[k]);
  const Vector w = h.b13 * a;
  const Vector pw = h.p24 * w;
  Vector free(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) free[k] = w[k] - pw[k];
  out.trace_free = h.b13_dual * free;
  for (auto& x : out.trace_free) x /= nn;
  Rational s = 0;
  for (std::size_t k = 0; k < w.size(); ++k) s += h.b24[k] * w[k];
  Vector sb(h.b_hat.size());
  for (std::size_t k = 0; k < sb.size(); ++k) sb[k] = s * h.b_hat[k];
  out.scalar = h.b13_dual * sb;
  for (auto& x : out.scalar) x /= nn * nn;
  return out;
}

/// The totally antisymmetric tensors e_i ^ e_j ^ e_k ^ e_l as elements of
/// S^2(wedge^2 V).
inline std::vector<Vector> wedge4_spanning_set(std::size_t n) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) {
          detail::Tensor4 t(n);
          std::array<std::size_t, 4> idx{i, j, k, l};
          std::array<int, 4> perm{0, 1, 2, 3};
          do {
            int inversions = 0;
            for (int a = 0; a < 4; ++a)
              for (int b = a + 1; b < 4; ++b)
                if (perm[a] > perm[b]) ++inversions;
            t(idx[perm[0]], idx[perm[1]], idx[perm[2]], idx[perm[3]]) = inversions % 2 ? -1 : 1;
          } while (std::next_permutation(perm.begin(), perm.end()));
          Vector c = detail::extract(t);
          if (!(detail::embed(n, c) == t)) throw Error(ErrorKind::DimensionMismatch, "wedge^4 tensor outside S^2(wedge^2 V)");
          out.push_back(std::move(c));
        }
  return out;
}

/// Literal contraction of an S^2(wedge^2 V) element on positions 1 and 3.
inline Vector contract13(std::size_t n, const Vector& a) {
  return detail::contract13(detail::embed(n, a), detail::split_form(n));
}

}  // namespace adjsq
