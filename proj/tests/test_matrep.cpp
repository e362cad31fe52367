#include <gtest/gtest.h>

#include <map>
#include <set>

#include "adjsq/matrep.hpp"

using namespace adjsq;

namespace {

std::vector<Rational> rs(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

/// Eigenvalue -> total dimension, from the decomposition table.
std::map<Rational, Integer> table_spectrum(const AlgebraId& a, Part part) {
  std::map<Rational, Integer> out;
  for (const auto& c : tensor_square_table(a, part).constituents) out[c.split_eig] += c.dim;
  return out;
}

/// Gram matrix of the induced form on the part in the basis used by
/// split_casimir_matrix, by expanding each basis element in g (x) g.
Matrix induced_form(const MatrixLieAlgebra& L, Part part) {
  struct Term {
    std::size_t a, b;
    long c;
  };
  const std::size_t d = L.dim();
  std::vector<std::vector<Term>> basis;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = part == Part::Sym ? i : i + 1; j < d; ++j) {
      if (i == j)
        basis.push_back({{i, i, 1}});
      else
        basis.push_back({{i, j, 1}, {j, i, part == Part::Sym ? 1 : -1}});
    }
  const Matrix& g = L.gram;
  Matrix f(basis.size(), basis.size());
  for (std::size_t p = 0; p < basis.size(); ++p)
    for (std::size_t q = 0; q < basis.size(); ++q)
      for (const auto& s : basis[p])
        for (const auto& t : basis[q]) f(p, q) += Rational(s.c * t.c) * g(s.a, t.a) * g(s.b, t.b);
  return f;
}

}  // namespace

TEST(Realize, CalibrationAndInvariants) {
  const std::map<Family, Rational> calib{{Family::A, 1}, {Family::B, rat(1, 2)}, {Family::D, rat(1, 2)}, {Family::C, 1}};
  std::vector<AlgebraId> all;
  for (int n = 2; n <= 6; ++n) all.push_back(AlgebraId::su(n));
  for (int n = 5; n <= 8; ++n) all.push_back(AlgebraId::so(n));
  for (int n : {2, 4, 6}) all.push_back(AlgebraId::sp(n));
  for (const auto& a : all) {
    auto L = realize(a);
    EXPECT_EQ(static_cast<long>(L->dim()), a.dim()) << a.name();
    EXPECT_EQ(L->calib, calib.at(a.family)) << a.name();
    EXPECT_EQ(L->gram, L->gram.transpose());
    EXPECT_TRUE(form_is_invariant(*L)) << a.name();
    EXPECT_TRUE(expansion_identity_holds(*L)) << a.name();
    // Root-vector weights are exactly the roots of the abstract system.
    auto sys = root_system(a);
    auto roots = sys->roots();
    std::multiset<Weight> expect(roots.begin(), roots.end());
    std::multiset<Weight> got;
    for (std::size_t b = 0; b < L->dim(); ++b) {
      if (b < L->cartan_dim)
        EXPECT_TRUE(L->weights[b].is_zero());
      else
        got.insert(L->weights[b]);
    }
    EXPECT_EQ(got, expect) << a.name();
  }
}

TEST(Realize, OutOfRangeAndDegenerate) {
  for (const auto& a : {AlgebraId::su(7), AlgebraId::so(9), AlgebraId::sp(8), AlgebraId::g2(), AlgebraId::e8()}) {
    try {
      realize(a);
      FAIL() << a.name();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::UnsupportedRealization) << a.name();
    }
  }
  // The diagonal algebra of 2x2 trace-zero matrices is abelian.
  std::vector<SparseMatrix> abelian{detail::unit_matrix(2, 0, 0) - detail::unit_matrix(2, 1, 1)};
  try {
    calibrate(abelian, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateForm);
  }
  std::vector<SparseMatrix> zero{SparseMatrix(2, 2), detail::unit_matrix(2, 0, 1)};
  EXPECT_THROW(calibrate(zero, 1), Error);
}

TEST(Realize, CoordinatesRejectForeignMatrices) {
  auto L = realize(AlgebraId::su(3));
  EXPECT_THROW(L->coordinates(detail::unit_matrix(3, 0, 0)), Error);
  auto so5 = realize(AlgebraId::so(5));
  EXPECT_THROW(so5->coordinates(detail::unit_matrix(5, 0, 1)), Error);
}

TEST(SplitCasimir, Sizes) {
  const std::vector<std::tuple<AlgebraId, std::size_t, std::size_t>> cases{
      {AlgebraId::su(3), 36, 28}, {AlgebraId::su(4), 120, 105}, {AlgebraId::so(6), 120, 105}, {AlgebraId::sp(4), 55, 45}};
  for (const auto& [a, s, w] : cases) {
    auto L = realize(a);
    EXPECT_EQ(split_casimir_matrix(*L, Part::Sym).dim, s);
    EXPECT_EQ(split_casimir_matrix(*L, Part::Alt).matrix.rows(), w);
  }
}

TEST(SplitCasimir, Su2Su3Annihilation) {
  const auto s2 = split_casimir_matrix(*realize(AlgebraId::su(2)), Part::Sym);
  EXPECT_EQ(verify_annihilation(s2, rs({2, -4})), 0);
  EXPECT_EQ(projector_rank(s2, rs({2, -4}), 0), 5u);
  EXPECT_EQ(projector_rank(s2, rs({2, -4}), 1), 1u);

  const auto s3 = split_casimir_matrix(*realize(AlgebraId::su(3)), Part::Sym);
  EXPECT_EQ(verify_annihilation(s3, rs({2, -3, -6})), 0);
  EXPECT_NE(verify_annihilation(s3, rs({2, -3})), 0);
  EXPECT_EQ(projector_rank(s3, rs({2, -3, -6}), 0), 27u);
  try {
    projector_rank(s3, rs({2, -3}), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IncompleteSpectrum);
  }
}

TEST(SplitCasimir, AltSatisfiesQuadratic) {
  for (int n = 2; n <= 4; ++n) {
    const auto a = split_casimir_matrix(*realize(AlgebraId::su(n)), Part::Alt);
    EXPECT_EQ(verify_annihilation(a, rs({0, -n})), 0) << n;
    EXPECT_NE(verify_annihilation(a, rs({0})), 0) << n;
  }
}

TEST(SplitCasimir, So6AndSu4CharacteristicEquations) {
  const auto so6 = split_casimir_matrix(*realize(AlgebraId::so(6)), Part::Sym);
  EXPECT_EQ(verify_annihilation(so6, rs({2, -4, -2, -8})), 0);
  EXPECT_EQ(projector_rank(so6, rs({2, -4, -2, -8}), 1), 15u);
  const auto su4 = split_casimir_matrix(*realize(AlgebraId::su(4)), Part::Sym);
  EXPECT_EQ(verify_annihilation(su4, rs({2, -2, -4, -8})), 0);
  EXPECT_EQ(projector_rank(su4, rs({2, -2, -4, -8}), 1), 20u);
}

TEST(SplitCasimir, CommutesWithActionAndIsSelfAdjoint) {
  for (const auto& a : {AlgebraId::su(3), AlgebraId::so(5), AlgebraId::sp(4)}) {
    auto L = realize(a);
    for (Part part : {Part::Sym, Part::Alt}) {
      const auto op = split_casimir_matrix(*L, part);
      for (std::size_t x = 0; x < L->dim(); ++x) {
        const SparseMatrix act = part_action(*L, part, x);
        EXPECT_EQ(act * op.matrix, op.matrix * act) << a.name() << " " << x;
      }
      const Matrix f = induced_form(*L, part);
      const Matrix fm = f * op.matrix.to_dense();
      EXPECT_EQ(fm, fm.transpose()) << a.name();
    }
  }
}

TEST(SplitCasimir, ProjectorRanksMatchTables) {
  for (const auto& a : {AlgebraId::su(2), AlgebraId::su(3), AlgebraId::su(4), AlgebraId::so(5), AlgebraId::so(6),
                        AlgebraId::sp(4)}) {
    auto L = realize(a);
    for (Part part : {Part::Sym, Part::Alt}) {
      const auto op = split_casimir_matrix(*L, part);
      const auto spec = table_spectrum(a, part);
      std::vector<Rational> eigs;
      for (const auto& [e, _] : spec) eigs.push_back(e);
      EXPECT_EQ(verify_annihilation(op, eigs), 0) << a.name() << to_string(part);
      Matrix sum(op.dim, op.dim);
      std::vector<Matrix> ps;
      for (std::size_t r = 0; r < eigs.size(); ++r) {
        ps.push_back(projector_matrix(op, eigs, r));
        EXPECT_EQ(Integer(static_cast<unsigned long>(rank(ps.back()))), spec.at(eigs[r])) << a.name();
        sum += ps.back();
      }
      EXPECT_EQ(sum, Matrix::identity(op.dim));
      for (std::size_t r = 0; r < ps.size(); ++r)
        for (std::size_t s = r + 1; s < ps.size(); ++s) EXPECT_TRUE((ps[r] * ps[s]).is_zero());
    }
  }
}

TEST(SplitCasimir, MinimalPolynomialMatchesTable) {
  for (const auto& a : {AlgebraId::su(3), AlgebraId::sp(4), AlgebraId::so(5)}) {
    const auto op = split_casimir_matrix(*realize(a), Part::Sym);
    auto roots = minimal_polynomial(op.matrix).rational_roots();
    auto expect = characteristic_poly(a, Part::Sym).minimal.roots;
    std::sort(roots.begin(), roots.end());
    std::sort(expect.begin(), expect.end());
    EXPECT_EQ(roots, expect) << a.name();
    EXPECT_EQ(minimal_polynomial(op.matrix).degree(), static_cast<int>(expect.size()));
  }
}

TEST(Realize, HighestRootVectorIsIsotropic) {
  for (int n = 2; n <= 4; ++n) {
    auto L = realize(AlgebraId::su(n));
    const std::size_t t = basis_index_of_weight(*L, root_system(AlgebraId::su(n))->highest_root());
    EXPECT_EQ(L->form(L->basis[t], L->basis[t]), 0);
    const std::size_t f = basis_index_of_weight(*L, Rational(-1) * root_system(AlgebraId::su(n))->highest_root());
    EXPECT_EQ(L->form(L->basis[t], L->basis[f]), 1);
  }
}
