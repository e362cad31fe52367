#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "adjsq/adjsq.hpp"

using namespace adjsq;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string list(const std::vector<Integer>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return "{" + s + "}";
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

Vector unit_vector(std::size_t m, std::size_t i) {
  Vector v(m, Rational(0));
  v[i] = 1;
  return v;
}

std::set<Weight> weyl_orbit(const RootSystem& rs, const Weight& w) {
  std::set<Weight> seen{w};
  std::vector<Weight> todo{w};
  while (!todo.empty()) {
    const Weight x = todo.back();
    todo.pop_back();
    for (std::size_t i = 0; i < static_cast<std::size_t>(rs.rank()); ++i) {
      const Weight y = rs.reflect(i, x);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen;
}

std::map<Rational, Integer> table_spectrum(const AlgebraId& a, Part part) {
  std::map<Rational, Integer> out;
  for (const auto& c : tensor_square_table(a, part).constituents) out[c.split_eig] += c.dim;
  return out;
}

Outcome unitary_dimension_tables() {
  Outcome o;
  for (long n = 2; n <= 10; ++n) {
    const Integer d = n * n - 1;
    // Closed forms, keeping only constituents that exist at this n.
    std::vector<Integer> sym{cartan_power_dim(n, 2), Integer(1)};
    if (n >= 3) {
      const Integer w = wedge_power_dim(n, 2);
      if (w != 0) sym.push_back(w);
      sym.push_back(d);
    }
    std::vector<Integer> alt{d};
    if (n >= 3) {
      alt.push_back(mixed_dim(n, 2));
      alt.push_back(mixed_dim(n, 2));
    }
    Integer ssum = 0, asum = 0;
    for (const auto& x : sym) ssum += x;
    for (const auto& x : alt) asum += x;
    o.require(ssum == d * (d + 1) / 2, "su(" + std::to_string(n) + ") sym sum " + ssum.get_str());
    o.require(asum == d * (d - 1) / 2, "su(" + std::to_string(n) + ") alt sum " + asum.get_str());
    std::sort(sym.rbegin(), sym.rend());
    std::sort(alt.rbegin(), alt.rend());
    o.require(tensor_square_table(AlgebraId::su(static_cast<int>(n)), Part::Sym).dims() == sym,
              "su(" + std::to_string(n) + ") sym table");
    o.require(tensor_square_table(AlgebraId::su(static_cast<int>(n)), Part::Alt).dims() == alt,
              "su(" + std::to_string(n) + ") alt table");
    if (n == 3) {
      o.require(sym == std::vector<Integer>{27, 8, 1}, "su(3) sym " + list(sym));
      o.detail = "su(3) sym " + list(sym) + ", alt " + list(alt);
    }
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const std::vector<AlgebraId> algebras{AlgebraId::su(2), AlgebraId::su(3), AlgebraId::su(4), AlgebraId::su(5),
                                        AlgebraId::so(5), AlgebraId::so(6), AlgebraId::so(7), AlgebraId::so(8),
                                        AlgebraId::sp(4), AlgebraId::sp(6), AlgebraId::g2(),  AlgebraId::f4()};
  std::map<std::string, std::vector<Integer>> seen;
  for (const auto& a : algebras) {
    auto [sym, alt] = sym_alt_square(adjoint_character(root_system(a)));
    for (Part part : {Part::Sym, Part::Alt}) {
      const Decomposition d = decompose(part == Part::Sym ? sym : alt);
      for (const auto& e : d.entries) o.require(e.multiplicity == 1, a.name() + " multiplicity > 1");
      const auto table = tensor_square_table(a, part).dims();
      o.require(d.dims() == table, a.name() + " " + to_string(part) + " oracle " + list(d.dims()) + " vs " + list(table));
      seen[a.name() + " " + to_string(part)] = d.dims();
    }
  }
  o.require(seen["su(3) alt"] == std::vector<Integer>{10, 10, 8}, "su(3) alt");
  o.require(seen["so(8) sym"] == std::vector<Integer>{300, 35, 35, 35, 1}, "so(8) sym");
  o.require(seen["g2 sym"] == std::vector<Integer>{77, 27, 1}, "g2 sym");
  if (o.pass) o.detail = "12 algebras x {sym,alt}; su(3) alt {10,10,8}, so(8) sym {300,35,35,35,1}, g2 sym {77,27,1}";
  return o;
}

Outcome split_casimir_spectra(bool large) {
  Outcome o;
  auto poly = [](std::initializer_list<long> roots) {
    std::vector<Rational> r;
    for (long x : roots) r.emplace_back(x);
    return r;
  };
  const std::vector<std::pair<AlgebraId, std::vector<Rational>>> cases{
      {AlgebraId::su(3), poly({2, -3, -6})},
      {AlgebraId::su(4), poly({2, -2, -4, -8})},
      {AlgebraId::so(6), poly({2, -4, -2, -8})},
  };
  std::string detail;
  for (const auto& [a, roots] : cases) {
    const auto op = split_casimir_matrix(*realize(a), Part::Sym);
    const Rational res = verify_annihilation(op, roots);
    o.require(res == 0, a.name() + " residual " + to_pq(res));
    detail += a.name() + " residual " + to_pq(res) + "; ";
  }
  {
    const AlgebraId a = AlgebraId::sp(4);
    const auto op = split_casimir_matrix(*realize(a), Part::Sym);
    const Polynomial m = minimal_polynomial(op.matrix);
    std::vector<Rational> roots = m.rational_roots();
    std::vector<Rational> table;
    for (const auto& [e, _] : table_spectrum(a, Part::Sym)) table.push_back(e);
    o.require(static_cast<std::size_t>(m.degree()) == roots.size(), "sp(4) minimal polynomial not split over Q");
    o.require(roots == table, "sp(4) minimal polynomial roots differ from table split eigenvalues");
    o.require(verify_annihilation(op, table) == 0, "sp(4) residual");
    std::string rs;
    for (std::size_t i = 0; i < roots.size(); ++i) rs += (i ? "," : "") + to_display(roots[i]);
    detail += "sp(4) minimal polynomial " + m.to_string() + ", roots {" + rs + "}";
  }
  if (large) {
    const AlgebraId a = AlgebraId::so(8);
    const auto op = split_casimir_matrix(*realize(a), Part::Sym);
    const Rational res = verify_annihilation(op, poly({2, -4, -12}));
    o.require(op.dim == 406 && res == 0, "so(8) residual " + to_pq(res));
    detail += "; so(8) 406x406 residual " + to_pq(res);
  }
  if (o.pass) o.detail = detail;
  return o;
}

Outcome projector_ranks() {
  Outcome o;
  const std::vector<std::tuple<AlgebraId, Part, std::vector<Integer>>> cases{
      {AlgebraId::su(3), Part::Sym, {27, 8, 1}},
      {AlgebraId::su(4), Part::Sym, {84, 20, 15, 1}},
      {AlgebraId::su(4), Part::Alt, {45, 45, 15}},
  };
  std::string detail;
  for (const auto& [a, part, expected] : cases) {
    const std::string name = a.name() + " " + to_string(part);
    const auto table = tensor_square_table(a, part);
    o.require(table.dims() == expected, name + " table " + list(table.dims()));
    const auto spec = table_spectrum(a, part);
    std::vector<Rational> eigs;
    for (const auto& [e, _] : spec) eigs.push_back(e);
    const auto op = split_casimir_matrix(*realize(a), part);
    std::vector<Matrix> ps;
    Matrix sum(op.dim, op.dim);
    std::vector<Integer> ranks;
    for (std::size_t r = 0; r < eigs.size(); ++r) {
      Matrix p = projector_matrix(op, eigs, r);
      o.require(p * p == p, name + " projector not idempotent");
      const Integer rk(static_cast<unsigned long>(rank(p)));
      // Conjugate constituents share an eigenvalue; the projector then has
      // the combined rank.
      o.require(rk == spec.at(eigs[r]), name + " rank " + rk.get_str() + " at " + to_display(eigs[r]));
      ranks.push_back(rk);
      sum += p;
      ps.push_back(std::move(p));
    }
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = 0; j < ps.size(); ++j)
        if (i != j) o.require((ps[i] * ps[j]).is_zero(), name + " projectors not orthogonal");
    o.require(sum == Matrix::identity(op.dim), name + " projectors do not sum to identity");
    std::sort(ranks.rbegin(), ranks.rend());
    detail += name + " ranks " + list(ranks) + "; ";
  }
  if (o.pass) o.detail = detail + "su(4) alt 90 = 45+45 (shared eigenvalue)";
  return o;
}

Outcome exceptional_table_values() {
  Outcome o;
  const std::vector<Integer> squares{77, 1053, 2430, 7371, 27000};
  const std::vector<Integer> sym{27, 324, 650, 1539, 3875};
  const std::vector<Integer> alt{77, 1274, 2925, 8645, 30380};
  const auto tables = exceptional_table();
  for (std::size_t i = 0; i < 5; ++i) {
    const DecompTable& s = tables[2 * i];
    const DecompTable& a = tables[2 * i + 1];
    const std::string name = s.algebra.name();
    auto rs = root_system(s.algebra);
    o.require(weyl_dim(IrrepLabel(rs, Rational(2) * rs->highest_root())) == squares[i], name + " Cartan square");
    o.require(s.find("g^(2)") && s.find("g^(2)")->dim == squares[i], name + " table Cartan square");
    o.require(s.find("star") && s.find("star")->dim == sym[i], name + " sym complement");
    o.require(a.find("star") && a.find("star")->dim == alt[i], name + " alt complement");
    // The complement label is an actual irreducible of that dimension.
    o.require(s.find("star") && s.find("star")->label && weyl_dim(*s.find("star")->label) == sym[i], name + " sym label");
    o.require(a.find("star") && a.find("star")->label && weyl_dim(*a.find("star")->label) == alt[i], name + " alt label");
  }
  if (o.pass) o.detail = "squares {77,1053,2430,7371,27000}, sym {27,324,650,1539,3875}, alt {77,1274,2925,8645,30380}";
  return o;
}

Outcome g2_worked_example() {
  Outcome o;
  auto rs = root_system(AlgebraId::g2());
  const Weight theta = rs->highest_root();
  // The roots not orthogonal to theta, found directly.
  std::vector<Weight> factor_roots;
  for (const auto& a : rs->positive_roots())
    if (rs->inner(theta, a) != 0) factor_roots.push_back(a);
  o.require(factor_roots.size() == 5, "expected five non-orthogonal roots");
  const std::vector<long> expected{14, 77, 273};
  for (long k = 1; k <= 3; ++k) {
    const Weight hw = Rational(k) * theta;
    Rational direct = 1;
    for (const auto& a : factor_roots)
      direct *= (rs->inner(hw, a) + rs->inner(rs->two_delta(), a) / 2) / (rs->inner(rs->two_delta(), a) / 2);
    const auto f = weyl_factors(IrrepLabel(rs, hw));
    Rational product = 1;
    for (const auto& x : f) product *= x;
    o.require(f.size() == 5, "factor list length " + std::to_string(f.size()));
    o.require(direct == expected[static_cast<std::size_t>(k - 1)] && product == direct,
              std::to_string(k) + "theta gives " + to_pq(product));
  }
  if (o.pass) o.detail = "14, 77, 273 from five factors each";
  return o;
}

Outcome schur_identities() {
  Outcome o;
  for (long n = 1; n <= 4; ++n)
    for (long k = 1; k <= 4; ++k) {
      const SchurIdentity s = schur_sum_identity(n, k);
      const std::string at = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      o.require(s.sym_lhs == binomial(n * n + k - 1, k), at + " sym");
      o.require(s.alt_lhs == binomial(n * n, k), at + " alt");
      o.require(s.virt_lhs == binomial(n * n + k - 1, k) - binomial(n * n, k), at + " virtual");
    }
  for (long n = 1; n <= 4; ++n) {
    const auto [lhs, rhs] = cube_virtual_identity(n);
    const Integer s3 = binomial(n + 2, 3), w3 = binomial(n, 3);
    o.require(lhs == rhs && rhs == (s3 - w3) * (s3 - w3), "k=3 special identity at n=" + std::to_string(n));
  }
  const auto [l2, r2] = cube_virtual_identity(2);
  o.require(l2 == 16 && r2 == 16, "n=2 gives " + l2.get_str());
  if (o.pass) o.detail = "n<=4, k<=4; k=3 at n=2: 16=16";
  return o;
}

Outcome harmonic_machinery() {
  Outcome o;
  for (std::size_t n : {5u, 6u}) {
    const HarmonicOps h = harmonic_ops(n);
    const std::string at = "n=" + std::to_string(n);
    const Rational nn(static_cast<long>(n));
    o.require(h.b13 * h.b13_dual == nn * Matrix::identity(h.sym_v_dim()), at + " b13 b13_dual");
    o.require(h.p13 * h.p13 == h.p13, at + " p13 idempotent");
    const std::size_t expect = n * (n - 3) * (n * n + n + 2) / 8;
    const std::size_t rk = rank(Matrix::identity(h.dim()) - h.p13);
    o.require(rk == expect, at + " rank(1-p13) " + std::to_string(rk));
    std::mt19937 gen(static_cast<unsigned>(100 + n));
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    for (int trial = 0; trial < 25; ++trial) {
      Vector a(h.dim());
      for (auto& x : a) x = rat(num(gen), den(gen));
      const HarmonicParts p = harmonic_decompose(h, a);
      bool same = true;
      for (std::size_t k = 0; k < a.size(); ++k) same = same && p.harmonic[k] + p.trace_free[k] + p.scalar[k] == a[k];
      o.require(same, at + " reassembly");
      o.require(is_zero(contract13(n, p.harmonic)), at + " harmonic part not harmonic");
    }
    for (const auto& w : wedge4_spanning_set(n)) o.require(is_zero(contract13(n, w)), at + " wedge^4 element");
  }
  if (o.pass) o.detail = "so(5) rank 40, so(6) rank 99; 25 reassemblies each";
  return o;
}

Outcome highest_weight_criterion() {
  Outcome o;
  std::vector<RealizedModule> mods;
  for (long l = 0; l <= 3; ++l) mods.push_back(sym_power_module(2 * l));
  mods.push_back(adjoint_module(realize(AlgebraId::su(3))));
  std::size_t tested = 0;
  for (const auto& M : mods) {
    const auto& L = *M.L;
    const auto& rs = *M.hw_label.rs;
    const auto orbit = weyl_orbit(rs, M.hw_label.hw);
    const Rational ll = rs.inner(M.hw_label.hw, M.hw_label.hw);
    for (std::size_t i = 0; i < M.dim(); ++i) {
      const Vector v = unit_vector(M.dim(), i);
      const bool on_orbit = orbit.count(M.weights[i]) > 0;
      o.require(is_highest_weight_vector(M, v) == on_orbit, "criterion at weight " + M.weights[i].to_string());
      ++tested;
      const Vector h = h_vector(M, v);
      const Rational vv = M.pair(v, v);
      for (std::size_t a = 0; a < L.dim(); ++a)
        o.require(L.form(L.element(h), L.basis[a]) == M.pair(v, M.act(a, v)), "Riesz identity");
      if (on_orbit) {
        Vector expect = v;
        for (auto& x : expect) x *= vv * ll;
        o.require(act_element(M, h, v) == expect, "H_v eigenvalue");
        o.require(L.form(L.element(h), L.element(h)) == vv * vv * ll, "kappa(H_v, H_v)");
      }
    }
  }
  for (long l = 0; l <= 3; ++l) {
    const RealizedModule M = sym_power_module(2 * l);
    for (std::size_t i = 0; i < M.dim(); ++i) {
      const long m = M.weights[i][0].get_num().get_si();
      const auto g = static_cast<long>(generated_dim(M, tensor_power(unit_vector(M.dim(), i), 2)));
      o.require(g == so3_law(l, m), "so3_law l=" + std::to_string(l) + " m=" + std::to_string(m));
    }
  }
  for (int n = 2; n <= 4; ++n) {
    auto L = realize(AlgebraId::su(n));
    const std::size_t t = basis_index_of_weight(*L, root_system(AlgebraId::su(n))->highest_root());
    o.require(L->form(L->basis[t], L->basis[t]) == 0, "kappa(e_theta, e_theta) in su(" + std::to_string(n) + ")");
  }
  if (o.pass) o.detail = std::to_string(tested) + " basis vectors; so3_law for l<=3; kappa(e_theta,e_theta)=0 for n<=4";
  return o;
}

Outcome symplectic_note() {
  Outcome o;
  const DecompTable t = tensor_square_table(AlgebraId::sp(4), Part::Sym);
  o.require(t.dims() == std::vector<Integer>{35, 14, 5, 1}, "sp(4) sym dims " + list(t.dims()));
  o.require(t.dim_sum() == 55 && t.parent_dim == 55, "sum rule " + t.dim_sum().get_str());
  const auto* c = t.find("wedge2bV");
  o.require(c && c->dim == 5 && c->dim == Integer((4 * 4 - 4 - 2) / 2), "wedge2bV constituent");
  bool noted = false;
  for (const auto& note : t.notes)
    noted = noted || (note.code == "coefficient_corrected" && note.constituent == "wedge2bV" && note.printed == "1/8" &&
                      note.used == "1/2");
  o.require(noted, "missing machine-readable coefficient note");
  if (o.pass) o.detail = "55 = 14+35+5+1; note coefficient_corrected printed 1/8 used 1/2";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  bool large = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--large") == 0) large = true;

  struct Criterion {
    int id;
    std::string name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "unitary dimension tables", 1, unitary_dimension_tables},
      {2, "oracle equivalence", 60, oracle_equivalence},
      {3, "split-Casimir spectra", 120, [large] { return split_casimir_spectra(large); }},
      {4, "projector ranks", 0, projector_ranks},
      {5, "exceptional table", 5, exceptional_table_values},
      {6, "G2 worked example", 0, g2_worked_example},
      {7, "Schur identities", 0, schur_identities},
      {8, "harmonic machinery", 0, harmonic_machinery},
      {9, "highest-weight-vector criterion", 0, highest_weight_criterion},
      {10, "symplectic coefficient note", 0, symplectic_note},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs >= c.limit_s) out.require(false, "runtime over " + std::to_string(c.limit_s) + " s");
    std::ostringstream line;
    line << (out.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << out.detail << " ("
         << static_cast<long>(secs * 1000) << " ms)";
    std::cout << line.str() << "\n";
    failed += !out.pass;
  }
  std::cout << (10 - failed) << "/10 criteria passed" << (large ? " (with so(8) 406x406)" : "") << "\n";
  return failed == 0 ? 0 : 1;
}
