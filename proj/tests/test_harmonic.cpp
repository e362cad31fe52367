#include <gtest/gtest.h>

#include <random>

#include "adjsq/harmonic.hpp"

using namespace adjsq;

namespace {

Vector random_tensor(std::mt19937& gen, std::size_t dim) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  Vector v(dim);
  for (auto& x : v) x = rat(num(gen), den(gen));
  return v;
}

Vector sum(const Vector& a, const Vector& b) {
  Vector c(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) c[k] = a[k] + b[k];
  return c;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

Rational dot(const Vector& a, const Vector& b) {
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

}  // namespace

TEST(Harmonic, DualCompositionAndProjections) {
  for (std::size_t n : {5u, 6u}) {
    const HarmonicOps h = harmonic_ops(n);
    EXPECT_EQ(h.dim(), n == 5 ? 55u : 120u);
    EXPECT_EQ(h.b13 * h.b13_dual, Rational(static_cast<long>(n)) * Matrix::identity(h.sym_v_dim()));
    EXPECT_EQ(h.p13 * h.p13, h.p13);
    EXPECT_EQ(h.p24 * h.p24, h.p24);
    EXPECT_EQ(dot(h.b24, h.b_hat), static_cast<long>(n));
    const Matrix q = Matrix::identity(h.dim()) - h.p13;
    const std::size_t expect = n * (n - 3) * (n * n + n + 2) / 8;
    EXPECT_EQ(rank(q), expect);
    // ker p13 = ker b13, and b13 is onto S^2 V.
    EXPECT_EQ(rank(h.b13), h.sym_v_dim());
    EXPECT_EQ(h.dim() - h.sym_v_dim(), expect);
    EXPECT_TRUE((h.b13 * q).is_zero());
  }
  EXPECT_EQ(rank(Matrix::identity(55) - harmonic_ops(5).p13), 40u);
}

TEST(Harmonic, LiteralContractionAgreesWithFourTermFormula) {
  const std::size_t n = 5;
  const HarmonicOps h = harmonic_ops(n);
  std::mt19937 gen(7);
  for (int trial = 0; trial < 5; ++trial) {
    const Vector a = random_tensor(gen, h.dim());
    EXPECT_EQ(contract13(n, a), h.b13 * a);
  }
  // (e0 ^ e1) (x)_S (e3 ^ e4): b(e0, e4) = b(e1, e3) = 1 in the split form.
  const auto pairs = detail::wedge_pairs(n);
  Vector a(h.dim(), Rational(0));
  std::size_t k = 0;
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (std::size_t q = p; q < pairs.size(); ++q, ++k)
      if (pairs[p] == std::array<std::size_t, 2>{0, 1} && pairs[q] == std::array<std::size_t, 2>{3, 4}) a[k] = 1;
  // b(u,x) v y - b(v,x) u y - b(u,y) v x + b(v,y) u x with u=e0, v=e1,
  // x=e3, y=e4 leaves -e0 e4 - e1 e3; the swapped factor adds the transpose.
  Matrix expect(n, n);
  expect(0, 4) = -1;
  expect(1, 3) = -1;
  const Matrix full = expect + expect.transpose();
  Vector coords;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y) coords.push_back(full(x, y));
  EXPECT_EQ(h.b13 * a, coords);
}

TEST(Harmonic, DecompositionReassembles) {
  for (std::size_t n : {5u, 6u}) {
    const HarmonicOps h = harmonic_ops(n);
    std::mt19937 gen(static_cast<unsigned>(n));
    for (int trial = 0; trial < 25; ++trial) {
      const Vector a = random_tensor(gen, h.dim());
      const HarmonicParts parts = harmonic_decompose(h, a);
      EXPECT_EQ(sum(sum(parts.harmonic, parts.trace_free), parts.scalar), a);
      EXPECT_TRUE(is_zero(h.b13 * parts.harmonic));
      EXPECT_EQ(dot(h.b24, h.b13 * parts.trace_free), 0);
      // The scalar part is a multiple of b13_dual(b_hat).
      const Vector unit = h.b13_dual * h.b_hat;
      const Rational ratio = dot(h.b24, h.b13 * parts.scalar) / dot(h.b24, h.b13 * unit);
      Vector scaled(unit.size());
      for (std::size_t k = 0; k < unit.size(); ++k) scaled[k] = ratio * unit[k];
      EXPECT_EQ(parts.scalar, scaled);
    }
  }
}

TEST(Harmonic, PureTraceAndWedgeFour) {
  const HarmonicOps h5 = harmonic_ops(5);
  const Vector pure = h5.b13_dual * h5.b_hat;
  const HarmonicParts p = harmonic_decompose(h5, pure);
  EXPECT_TRUE(is_zero(p.harmonic));
  EXPECT_TRUE(is_zero(p.trace_free));
  EXPECT_EQ(p.scalar, pure);

  const HarmonicOps h6 = harmonic_ops(6);
  const auto w4 = wedge4_spanning_set(6);
  EXPECT_EQ(w4.size(), 15u);
  EXPECT_EQ(rank(detail::columns_to_matrix(w4)), 15u);
  for (const auto& a : w4) {
    EXPECT_TRUE(is_zero(contract13(6, a)));
    const HarmonicParts q = harmonic_decompose(h6, a);
    EXPECT_EQ(q.harmonic, a);
    EXPECT_TRUE(is_zero(q.trace_free));
    EXPECT_TRUE(is_zero(q.scalar));
  }
}

TEST(Harmonic, RangeAndShapeErrors) {
  EXPECT_THROW(harmonic_ops(4), Error);
  EXPECT_THROW(harmonic_ops(9), Error);
  EXPECT_THROW(harmonic_decompose(harmonic_ops(5), Vector(3)), Error);
}
