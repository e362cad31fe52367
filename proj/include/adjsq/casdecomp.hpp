#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "adjsq/dimform.hpp"
#include "adjsq/polynomial.hpp"
#include "adjsq/rootsys.hpp"

namespace adjsq {

enum class Part { Sym, Alt };

inline std::string to_string(Part p) { return p == Part::Sym ? "sym" : "alt"; }

inline Part parse_part(std::string_view s) {
  if (s == "sym") return Part::Sym;
  if (s == "alt") return Part::Alt;
  throw Error(ErrorKind::BadParam, "part must be sym or alt, got '" + std::string(s) + "'");
}

struct Constituent {
  std::string tag;
  std::optional<IrrepLabel> label;
  Integer dim;
  Rational casimir;
  /// Eigenvalue of the split Casimir on this constituent inside g (x) g.
  Rational split_eig;
};

/// A flagged departure from a published coefficient.
struct TableNote {
  std::string code;
  std::string constituent;
  std::string printed;
  std::string used;
  std::string reason;
};

struct DecompTable {
  AlgebraId algebra;
  Part part = Part::Sym;
  std::vector<Constituent> constituents;
  Integer parent_dim;
  std::vector<TableNote> notes;

  Integer dim_sum() const {
    Integer s = 0;
    for (const auto& c : constituents) s += c.dim;
    return s;
  }

  std::vector<Integer> dims() const {
    std::vector<Integer> out;
    for (const auto& c : constituents) out.push_back(c.dim);
    std::sort(out.rbegin(), out.rend());
    return out;
  }

  const Constituent* find(std::string_view tag) const {
    for (const auto& c : constituents)
      if (c.tag == tag) return &c;
    return nullptr;
  }
};

inline Rational casimir_eigenvalue(const IrrepLabel& label) {
  const RootSystem& rs = *label.rs;
  return rs.inner(label.hw, label.hw + rs.two_delta());
}

inline Rational casimir_eigenvalue(const std::shared_ptr<const RootSystem>& rs, const Weight& hw) {
  return casimir_eigenvalue(IrrepLabel(rs, hw));
}

/// (c_sub - c1 - c2)/2: the split Casimir on a constituent with Casimir
/// c_sub inside a product of modules with Casimirs c1 and c2.
inline Rational split_eigenvalue(const Rational& c_sub, const Rational& c1, const Rational& c2) {
  return (c_sub - c1 - c2) / 2;
}

inline Rational adjoint_casimir(const std::shared_ptr<const RootSystem>& rs) {
  return casimir_eigenvalue(rs, rs->highest_root());
}

/// Vogel parameters (alpha, beta, gamma) in the normalization where the
/// long roots have length 2. Reference data only.
struct VogelParams {
  Rational alpha, beta, gamma;
  Rational t() const { return alpha + beta + gamma; }
};

inline VogelParams vogel_parameters(const AlgebraId& a) {
  a.validate();
  switch (a.family) {
    case Family::A: return {-2, 2, a.n};
    case Family::B:
    case Family::D: return {-2, 4, a.n - 4};
    case Family::C: return {-2, 1, rat(a.n + 4, 2)};
    case Family::G2: return {-2, rat(10, 3), rat(8, 3)};
    case Family::F4: return {-2, 5, 6};
    case Family::E6: return {-2, 6, 8};
    case Family::E7: return {-2, 8, 12};
    case Family::E8: return {-2, 12, 20};
  }
  return {};
}

namespace detail {

inline Weight epsilon_sum(std::size_t dim, std::initializer_list<std::pair<std::size_t, long>> terms) {
  Weight w(dim);
  for (auto [i, c] : terms) w[i] += c;
  return w;
}

struct TableBuilder {
  std::shared_ptr<const RootSystem> rs;
  Rational c_adj;
  DecompTable table;

  TableBuilder(const AlgebraId& a, Part part) : rs(root_system(a)), c_adj(adjoint_casimir(rs)) {
    table.algebra = a;
    table.part = part;
    const Integer d = a.dim();
    table.parent_dim = part == Part::Sym ? Integer(d * (d + 1) / 2) : Integer(d * (d - 1) / 2);
  }

  void add(const std::string& tag, const Weight& hw, const Integer& dim) {
    if (dim == 0) return;
    IrrepLabel label(rs, hw);
    const Rational c = casimir_eigenvalue(label);
    table.constituents.push_back({tag, label, dim, c, split_eigenvalue(c, c_adj, c_adj)});
  }

  DecompTable finish() {
    if (table.dim_sum() != table.parent_dim) {
      throw Error(ErrorKind::DimensionMismatch, table.algebra.name() + " " + to_string(table.part) +
                                                    ": constituent dimensions sum to " + table.dim_sum().get_str() +
                                                    ", expected " + table.parent_dim.get_str());
    }
    return std::move(table);
  }
};

/// Simple roots alpha with theta - alpha a root; 2 theta - alpha is then the
/// highest weight of an irreducible in the alternating square.
inline std::vector<Weight> alt_star_weights(const RootSystem& rs) {
  const Weight theta = rs.highest_root();
  std::vector<Weight> out;
  const auto& pos = rs.positive_roots();
  for (const auto& a : rs.simple_roots()) {
    const Weight t = theta - a;
    if (std::find(pos.begin(), pos.end(), t) != pos.end()) out.push_back(theta + t);
  }
  return out;
}

inline DecompTable su_table(const AlgebraId& a, Part part) {
  const long n = a.n;
  TableBuilder b(a, part);
  const std::size_t dim = static_cast<std::size_t>(n);
  const std::size_t last = dim - 1;
  const Weight theta = b.rs->highest_root();
  if (part == Part::Sym) {
    b.add("g^(2)", Rational(2) * theta, cartan_power_dim(n, 2));
    if (n >= 3) b.add("g^(1^2)", epsilon_sum(dim, {{0, 1}, {1, 1}, {last - 1, -1}, {last, -1}}), wedge_power_dim(n, 2));
    if (n >= 3) b.add("adjoint", theta, a.dim());
    b.add("trivial", b.rs->zero(), 1);
  } else {
    if (n >= 3) {
      b.add("g^(1^2,2)", epsilon_sum(dim, {{0, 2}, {last - 1, -1}, {last, -1}}), mixed_dim(n, 2));
      b.add("g^(2,1^2)", epsilon_sum(dim, {{0, 1}, {1, 1}, {last, -2}}), mixed_dim(n, 2));
    }
    b.add("adjoint", theta, a.dim());
  }
  return b.finish();
}

inline DecompTable so_table(const AlgebraId& a, Part part) {
  const long n = a.n;
  TableBuilder b(a, part);
  const std::size_t ell = static_cast<std::size_t>(a.rank());
  const Weight theta = b.rs->highest_root();
  if (part == Part::Sym) {
    b.add("g^(2)", Rational(2) * theta, so_rect_dim(n, 2, 2));
    if (n == 8) {
      b.add("wedge4V_plus", Weight{1, 1, 1, 1}, binomial(8, 4) / 2);
      b.add("wedge4V_minus", Weight{1, 1, 1, -1}, binomial(8, 4) / 2);
    } else {
      Weight w(ell);
      for (long i = 0; i < std::min(4L, n - 4); ++i) w[static_cast<std::size_t>(i)] = 1;
      b.add("wedge4V", w, binomial(n, 4));
    }
    b.add("S2bV", epsilon_sum(ell, {{0, 2}}), Integer((n - 1) * (n + 2) / 2));
    b.add("trivial", b.rs->zero(), 1);
  } else {
    b.add("adjoint", theta, binomial(n, 2));
    const auto stars = alt_star_weights(*b.rs);
    const Integer star = Integer(n * (n - 1) * (n - 3) * (n + 2) / 8);
    if (stars.size() == 1) {
      b.add("star", stars[0], star);
    } else {
      // so(6): the two weights 2e1 + e2 +- e3.
      for (const auto& w : stars) b.add(w[2] > 0 ? "star_plus" : "star_minus", w, star / 2);
    }
  }
  return b.finish();
}

inline DecompTable sp_table(const AlgebraId& a, Part part) {
  const long n = a.n;
  TableBuilder b(a, part);
  const std::size_t ell = static_cast<std::size_t>(a.rank());
  if (part == Part::Sym) {
    b.add("S4V", epsilon_sum(ell, {{0, 4}}), binomial(n + 3, 4));
    if (n >= 4) {
      b.add("T22", epsilon_sum(ell, {{0, 2}, {1, 2}}), Integer(n * (n - 1) * (n - 2) * (n + 3) / 12));
      b.add("wedge2bV", epsilon_sum(ell, {{0, 1}, {1, 1}}), Integer((n * n - n - 2) / 2));
      b.table.notes.push_back({"coefficient_corrected", "wedge2bV", "1/8", "1/2",
                               "dimension sum rule: 1/8 (n^2-n-2) leaves the symmetric square short"});
    }
    b.add("trivial", b.rs->zero(), 1);
  } else {
    b.add("adjoint", b.rs->highest_root(), Integer(n * (n + 1) / 2));
    if (n >= 4) b.add("star", epsilon_sum(ell, {{0, 3}, {1, 1}}), Integer(n * (n + 1) * (n + 3) * (n - 2) / 8));
  }
  return b.finish();
}

/// Dynkin labels of the second irreducible in S^2 g for the exceptional
/// algebras (Bourbaki numbering).
inline std::vector<long> exceptional_sym_star(Family f) {
  switch (f) {
    case Family::G2: return {2, 0};
    case Family::F4: return {0, 0, 0, 2};
    case Family::E6: return {1, 0, 0, 0, 0, 1};
    case Family::E7: return {0, 0, 0, 0, 0, 1, 0};
    case Family::E8: return {1, 0, 0, 0, 0, 0, 0, 0};
    default: return {};
  }
}

inline DecompTable exceptional_table_for(const AlgebraId& a, Part part) {
  TableBuilder b(a, part);
  const Integer d = a.dim();
  const Weight theta = b.rs->highest_root();
  if (part == Part::Sym) {
    const Integer cartan_square = weyl_dim(IrrepLabel(b.rs, Rational(2) * theta));
    b.add("trivial", b.rs->zero(), 1);
    b.add("g^(2)", Rational(2) * theta, cartan_square);
    b.add("star", b.rs->from_dynkin(exceptional_sym_star(a.family)), d * (d + 1) / 2 - 1 - cartan_square);
  } else {
    b.add("adjoint", theta, d);
    const auto stars = alt_star_weights(*b.rs);
    b.add("star", stars.at(0), d * (d - 1) / 2 - d);
  }
  return b.finish();
}

}  // namespace detail

/// Constituents of S^2 g or wedge^2 g with closed-form dimensions, Casimir
/// values and split-Casimir eigenvalues. Zero-dimensional constituents at
/// small n are omitted.
inline DecompTable tensor_square_table(const AlgebraId& a, Part part) {
  a.validate();
  switch (a.family) {
    case Family::A: return detail::su_table(a, part);
    case Family::B:
    case Family::D:
      if (a.n == 4) throw Error(ErrorKind::UnsupportedAlgebra, "so(4) is not simple");
      return detail::so_table(a, part);
    case Family::C: return detail::sp_table(a, part);
    default: return detail::exceptional_table_for(a, part);
  }
}

/// Sym and alt tables for g2, f4, e6, e7, e8 in that order.
inline std::vector<DecompTable> exceptional_table() {
  std::vector<DecompTable> out;
  for (auto a : {AlgebraId::g2(), AlgebraId::f4(), AlgebraId::e6(), AlgebraId::e7(), AlgebraId::e8()}) {
    out.push_back(detail::exceptional_table_for(a, Part::Sym));
    out.push_back(detail::exceptional_table_for(a, Part::Alt));
  }
  return out;
}

struct CharPoly {
  std::vector<Rational> roots;
  Polynomial poly() const { return Polynomial::from_roots(roots); }
};

struct CharPolys {
  /// Roots present in the table: the minimal polynomial of the operator.
  CharPoly minimal;
  /// The family-wide root set, before small-n degeneracies.
  CharPoly generic;
};

inline CharPolys characteristic_poly(const AlgebraId& a, Part part) {
  if (!a.is_classical()) throw Error(ErrorKind::UnsupportedAlgebra, a.name() + " is not a classical family");
  const DecompTable t = tensor_square_table(a, part);
  auto dedup = [](std::vector<Rational> v) {
    std::vector<Rational> out;
    for (auto& x : v)
      if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    return out;
  };
  std::vector<Rational> present;
  for (const auto& c : t.constituents) present.push_back(c.split_eig);
  const Rational n = a.n;
  std::vector<Rational> generic;
  if (part == Part::Sym) {
    switch (a.family) {
      case Family::A: generic = {2, -2, -n, -2 * n}; break;
      case Family::C: generic = {2, -1, -(n + 4) / 2, -(n + 2)}; break;
      default: generic = {2, -4, 4 - n, 4 - 2 * n}; break;
    }
  } else {
    switch (a.family) {
      case Family::A: generic = {0, -n}; break;
      case Family::C: generic = {0, -(n + 2) / 2}; break;
      default: generic = {0, -(n - 2)}; break;
    }
  }
  return {{dedup(present)}, {dedup(generic)}};
}

/// prod_{j != r} (x - c_j)/(c_r - c_j).
inline Polynomial lagrange_projector_poly(const std::vector<Rational>& eigs, std::size_t r) {
  if (r >= eigs.size()) throw Error(ErrorKind::BadParam, "projector index out of range");
  for (std::size_t i = 0; i < eigs.size(); ++i)
    for (std::size_t j = i + 1; j < eigs.size(); ++j)
      if (eigs[i] == eigs[j]) throw Error(ErrorKind::RepeatedEigenvalue, "eigenvalue " + to_display(eigs[i]) + " repeated");
  Polynomial p = Polynomial::constant(1);
  for (std::size_t j = 0; j < eigs.size(); ++j) {
    if (j == r) continue;
    p = p * Polynomial({Rational(-eigs[j] / (eigs[r] - eigs[j])), Rational(1 / (eigs[r] - eigs[j]))});
  }
  return p;
}

struct SchurIdentity {
  Integer sym_lhs, sym_rhs;
  Integer alt_lhs, alt_rhs;
  Integer virt_lhs, virt_rhs;

  bool holds() const { return sym_lhs == sym_rhs && alt_lhs == alt_rhs && virt_lhs == virt_rhs; }
};

/// Dimension identities for S^k hom(V) and wedge^k hom(V) over partitions of k.
inline SchurIdentity schur_sum_identity(long n, long k) {
  SchurIdentity s;
  Rational virt = 0;
  for (const auto& mu : partitions(k)) {
    const Integer d = hook_content_dim(mu, n);
    const Integer dc = hook_content_dim(mu.conjugate(), n);
    s.sym_lhs += d * d;
    s.alt_lhs += d * dc;
    virt += Rational((d - dc) * (d - dc)) / 2;
  }
  s.virt_lhs = virt.get_num();
  s.sym_rhs = binomial(n * n + k - 1, k);
  s.alt_rhs = binomial(n * n, k);
  s.virt_rhs = s.sym_rhs - s.alt_rhs;
  return s;
}

/// At k = 3 the virtual difference is a perfect square:
/// returns (dim S^3 hom(V) - dim wedge^3 hom(V), (dim S^3 V - dim wedge^3 V)^2).
inline std::pair<Integer, Integer> cube_virtual_identity(long n) {
  const Integer lhs = binomial(n * n + 2, 3) - binomial(n * n, 3);
  const Integer diff = binomial(n + 2, 3) - binomial(n, 3);
  return {lhs, diff * diff};
}

}  // namespace adjsq
