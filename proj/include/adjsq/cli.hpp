#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "adjsq/casdecomp.hpp"
#include "adjsq/harmonic.hpp"
#include "adjsq/hwv.hpp"
#include "adjsq/matrep.hpp"
#include "adjsq/oracle.hpp"

namespace adjsq::cli {

using json = nlohmann::ordered_json;

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kResource = 3 };

struct Check {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
};

/// Rows for the aligned text rendering; `results` carries the same data
/// for --json.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  std::string command;
  std::string algebra;
  json results = json::object();
  std::vector<Table> tables;
  std::vector<Check> checks;
  std::vector<std::string> warnings;
  double timing_ms = 0;

  void check(std::string name, bool pass, std::string expected, std::string actual) {
    checks.push_back({std::move(name), pass, std::move(expected), std::move(actual)});
  }

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }

  json to_json() const {
    json j;
    j["command"] = command;
    j["algebra"] = algebra;
    j["results"] = results;
    j["checks"] = json::array();
    for (const auto& c : checks)
      j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"expected", c.expected}, {"actual", c.actual}});
    j["warnings"] = warnings;
    j["timing_ms"] = timing_ms;
    return j;
  }

  std::string to_text() const {
    std::ostringstream os;
    os << "command: " << command << "\n";
    if (!algebra.empty()) os << "algebra: " << algebra << "\n";
    for (const auto& t : tables) {
      std::vector<std::size_t> w(t.header.size(), 0);
      for (std::size_t c = 0; c < t.header.size(); ++c) w[c] = t.header[c].size();
      for (const auto& r : t.rows)
        for (std::size_t c = 0; c < r.size(); ++c) w[c] = std::max(w[c], r[c].size());
      auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t c = 0; c < r.size(); ++c) {
          if (c + 1 == r.size()) {
            os << r[c];
            break;
          }
          os << std::left << std::setw(static_cast<int>(w[c])) << r[c] << "  ";
        }
        os << "\n";
      };
      line(t.header);
      for (const auto& r : t.rows) line(r);
    }
    if (!checks.empty()) {
      std::size_t wn = 0;
      for (const auto& c : checks) wn = std::max(wn, c.name.size());
      std::size_t passed = 0;
      for (const auto& c : checks) {
        passed += c.pass;
        os << (c.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(wn)) << c.name
           << "  expected " << c.expected << "  actual " << c.actual << "\n";
      }
      os << passed << "/" << checks.size() << " checks passed\n";
    }
    for (const auto& w : warnings) os << "warning: " << w << "\n";
    return os.str();
  }
};

inline json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

inline std::string str(const Integer& x) { return x.get_str(); }

inline json weight_json(const Weight& w) {
  json a = json::array();
  for (const auto& x : w.coords) a.push_back(to_pq(x));
  return a;
}

inline std::string join(const std::vector<Integer>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return "{" + s + "}";
}

struct Options {
  std::string algebra;
  int n = 0;
  bool json = false;
  std::string out;
  long max_dim = 0;
  bool large = false;
  std::string hw;
  long cartan_power = 0;
  long wedge_power = 0;
  std::string part = "sym";
  bool oracle = false;
  std::string suite = "all";
};

inline AlgebraId algebra_from(const Options& o) {
  if (o.algebra.empty()) throw Error(ErrorKind::BadParam, "--algebra is required");
  const bool classical = o.algebra == "su" || o.algebra == "so" || o.algebra == "sp";
  if (classical && o.n == 0) throw Error(ErrorKind::BadParam, "--n is required for " + o.algebra);
  return parse_algebra(o.algebra, o.n);
}

/// "theta", "3theta", "3*theta", or comma-separated coordinates.
inline Weight parse_hw(const RootSystem& rs, const std::string& text) {
  static const std::regex multiple(R"(^\s*(\d*)\s*\*?\s*theta\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, multiple)) {
    const long k = m[1].str().empty() ? 1 : std::stol(m[1].str());
    return Rational(k) * rs.highest_root();
  }
  Weight w = parse_weight(text);
  if (w.size() != rs.ambient_dim())
    throw Error(ErrorKind::DimensionMismatch, "weight has " + std::to_string(w.size()) + " coordinates, expected " +
                                                  std::to_string(rs.ambient_dim()));
  return w;
}

inline void cmd_dims(const Options& o, Report& r) {
  const AlgebraId a = algebra_from(o);
  auto rs = root_system(a);
  r.algebra = a.name();
  Table t{{"quantity", "dimension", "formula"}, {}};
  json rows = json::array();
  auto add = [&](const std::string& q, const Integer& d, const std::string& f) {
    t.rows.push_back({q, str(d), f});
    rows.push_back({{"quantity", q}, {"dimension", integer_json(d)}, {"formula", f}});
  };
  bool any = false;
  if (!o.hw.empty()) {
    const IrrepLabel label(rs, parse_hw(*rs, o.hw));
    add("irrep " + label.hw.to_string(), weyl_dim(label), "weyl");
    any = true;
  }
  if (o.cartan_power > 0) {
    const IrrepLabel label(rs, Rational(o.cartan_power) * rs->highest_root());
    if (a.family == Family::A) {
      const Integer closed = cartan_power_dim(a.n, o.cartan_power);
      if (closed != weyl_dim(label)) throw Error(ErrorKind::BadParam, "closed form disagrees with the Weyl formula");
      add("cartan power " + std::to_string(o.cartan_power), closed, "cartan_power_dim");
    } else {
      add("cartan power " + std::to_string(o.cartan_power), weyl_dim(label), "weyl");
    }
    any = true;
  }
  if (o.wedge_power > 0) {
    if (a.family != Family::A) throw Error(ErrorKind::UnsupportedAlgebra, "--wedge-power is defined for su(n)");
    add("wedge-type power " + std::to_string(o.wedge_power), wedge_power_dim(a.n, o.wedge_power), "wedge_power_dim");
    any = true;
  }
  if (!any) add("adjoint", Integer(a.dim()), "rank + roots");
  r.results["dimensions"] = rows;
  r.tables.push_back(std::move(t));
}

inline void cmd_decompose(const Options& o, Report& r) {
  const AlgebraId a = algebra_from(o);
  const Part part = parse_part(o.part);
  r.algebra = a.name();
  const DecompTable table = tensor_square_table(a, part);
  Table t{{"tag", "dim", "mult", "casimir", "split_eig", "highest_weight"}, {}};
  json rows = json::array();
  for (const auto& c : table.constituents) {
    const std::string hw = c.label ? c.label->hw.to_string() : "-";
    t.rows.push_back({c.tag, str(c.dim), "1", to_display(c.casimir), to_display(c.split_eig), hw});
    json row{{"tag", c.tag}, {"dim", integer_json(c.dim)}, {"multiplicity", 1}, {"casimir", to_pq(c.casimir)},
             {"split_eigenvalue", to_pq(c.split_eig)}};
    row["highest_weight"] = c.label ? weight_json(c.label->hw) : json(nullptr);
    rows.push_back(row);
  }
  r.results["part"] = to_string(part);
  r.results["parent_dim"] = integer_json(table.parent_dim);
  r.results["constituents"] = rows;
  json notes = json::array();
  for (const auto& n : table.notes)
    notes.push_back({{"code", n.code}, {"constituent", n.constituent}, {"printed", n.printed}, {"used", n.used},
                     {"reason", n.reason}});
  r.results["notes"] = notes;
  r.tables.push_back(std::move(t));
  r.check("sum_rule", table.dim_sum() == table.parent_dim, str(table.parent_dim), str(table.dim_sum()));
  if (o.oracle) {
    const long cap = o.max_dim > 0 ? o.max_dim : kDefaultOracleCap;
    auto rs = root_system(a);
    auto [sym, alt] = sym_alt_square(adjoint_character(rs));
    const Decomposition d = decompose(part == Part::Sym ? sym : alt, cap);
    const bool agree = d.dims() == table.dims();
    r.results["oracle"] = {{"dims", json::array()}, {"agree", agree}};
    for (const auto& x : d.dims()) r.results["oracle"]["dims"].push_back(integer_json(x));
    r.check("oracle_agreement", agree, join(table.dims()), join(d.dims()));
  }
}

namespace detail {

inline std::vector<AlgebraId> selected(const Options& o, std::vector<AlgebraId> defaults) {
  if (!o.algebra.empty()) return {algebra_from(o)};
  return defaults;
}

inline std::size_t matrix_cap(const Options& o) { return o.max_dim > 0 ? static_cast<std::size_t>(o.max_dim) : 406; }

inline std::map<Rational, Integer> spectrum(const DecompTable& t) {
  std::map<Rational, Integer> out;
  for (const auto& c : t.constituents) out[c.split_eig] += c.dim;
  return out;
}

inline TensorSquareOperator operator_for(const Options& o, const AlgebraId& a, Part part) {
  const long d = a.dim();
  const std::size_t size = static_cast<std::size_t>(part == Part::Sym ? d * (d + 1) / 2 : d * (d - 1) / 2);
  if (size > matrix_cap(o))
    throw Error(ErrorKind::TooLarge, a.name() + " " + to_string(part) + " needs a " + std::to_string(size) +
                                         "x" + std::to_string(size) + " matrix; raise --max-dim");
  return split_casimir_matrix(*realize(a), part);
}

inline std::string roots_text(const std::vector<Rational>& roots) {
  std::string s;
  for (std::size_t i = 0; i < roots.size(); ++i) s += (i ? "," : "") + to_display(roots[i]);
  return "{" + s + "}";
}

inline void suite_casimir(const Options& o, Report& r) {
  std::vector<AlgebraId> defaults{AlgebraId::su(3), AlgebraId::su(4), AlgebraId::so(6), AlgebraId::sp(4)};
  if (o.large) defaults.push_back(AlgebraId::so(8));
  for (const auto& a : selected(o, defaults)) {
    auto L = realize(a);
    const Rational c = a.is_orthogonal() ? rat(1, 2) : Rational(1);
    r.check("casimir/" + a.name() + "/calibration", L->calib == c, to_pq(c), to_pq(L->calib));
    r.check("casimir/" + a.name() + "/form_invariance", form_is_invariant(*L), "true",
            form_is_invariant(*L) ? "true" : "false");
    for (Part part : {Part::Sym, Part::Alt}) {
      const auto op = operator_for(o, a, part);
      const auto roots = characteristic_poly(a, part).minimal.roots;
      const Rational res = verify_annihilation(op, roots);
      r.check("casimir/" + a.name() + "/" + to_string(part) + "/annihilation " + roots_text(roots), res == 0, "0",
              to_pq(res));
    }
  }
}

inline void suite_projectors(const Options& o, Report& r) {
  std::vector<AlgebraId> defaults{AlgebraId::su(3), AlgebraId::su(4), AlgebraId::so(6), AlgebraId::sp(4)};
  for (const auto& a : selected(o, defaults)) {
    for (Part part : {Part::Sym, Part::Alt}) {
      const auto op = operator_for(o, a, part);
      const auto spec = spectrum(tensor_square_table(a, part));
      std::vector<Rational> eigs;
      for (const auto& [e, _] : spec) eigs.push_back(e);
      const std::string base = "projectors/" + a.name() + "/" + to_string(part);
      Matrix sum(op.dim, op.dim);
      std::vector<Matrix> ps;
      for (std::size_t k = 0; k < eigs.size(); ++k) {
        std::string actual;
        bool ok = false;
        try {
          ps.push_back(projector_matrix(op, eigs, k));
          const Integer rk(static_cast<unsigned long>(rank(ps.back())));
          sum += ps.back();
          actual = str(rk);
          ok = rk == spec.at(eigs[k]);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::IncompleteSpectrum) throw;
          actual = "not idempotent";
        }
        r.check(base + "/rank@" + to_display(eigs[k]), ok, str(spec.at(eigs[k])), actual);
      }
      bool orthogonal = true;
      for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j) orthogonal = orthogonal && (ps[i] * ps[j]).is_zero();
      r.check(base + "/orthogonal", orthogonal, "true", orthogonal ? "true" : "false");
      const bool complete = ps.size() == eigs.size() && sum == Matrix::identity(op.dim);
      r.check(base + "/sum_to_identity", complete, "true", complete ? "true" : "false");
    }
  }
}

inline void suite_harmonic(const Options& o, Report& r) {
  std::vector<std::size_t> ns{5, 6};
  if (o.n != 0) ns = {static_cast<std::size_t>(o.n)};
  for (std::size_t n : ns) {
    const HarmonicOps h = harmonic_ops(n);
    const std::string base = "harmonic/n=" + std::to_string(n);
    const Rational nn(static_cast<long>(n));
    const bool dual = h.b13 * h.b13_dual == nn * Matrix::identity(h.sym_v_dim());
    r.check(base + "/b13_dual", dual, "n*id", dual ? "n*id" : "other");
    const bool idem = h.p13 * h.p13 == h.p13;
    r.check(base + "/p13_idempotent", idem, "true", idem ? "true" : "false");
    const std::size_t rk = rank(Matrix::identity(h.dim()) - h.p13);
    const std::size_t expect = n * (n - 3) * (n * n + n + 2) / 8;
    r.check(base + "/rank(1-p13)", rk == expect, std::to_string(expect), std::to_string(rk));
    std::mt19937 gen(static_cast<unsigned>(n));
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    std::size_t ok = 0;
    for (int trial = 0; trial < 25; ++trial) {
      Vector a(h.dim());
      for (auto& x : a) x = rat(num(gen), den(gen));
      const HarmonicParts p = harmonic_decompose(h, a);
      bool same = true;
      for (std::size_t k = 0; k < a.size(); ++k) same = same && p.harmonic[k] + p.trace_free[k] + p.scalar[k] == a[k];
      ok += same;
    }
    r.check(base + "/reassembly", ok == 25, "25", std::to_string(ok));
    std::size_t killed = 0;
    const auto w4 = wedge4_spanning_set(n);
    for (const auto& a : w4) {
      const Vector c = contract13(n, a);
      killed += std::all_of(c.begin(), c.end(), [](const Rational& x) { return x == 0; });
    }
    r.check(base + "/wedge4_harmonic", killed == w4.size(), std::to_string(w4.size()), std::to_string(killed));
  }
}

inline void suite_hwv(const Options&, Report& r) {
  for (long l = 0; l <= 3; ++l) {
    const RealizedModule M = sym_power_module(2 * l);
    for (std::size_t i = 0; i < M.dim(); ++i) {
      const long m = M.weights[i][0].get_num().get_si();
      Vector v(M.dim(), Rational(0));
      v[i] = 1;
      const std::size_t g = generated_dim(M, tensor_power(v, 2));
      r.check("hwv/so3_law/l=" + std::to_string(l) + "/m=" + std::to_string(m), static_cast<long>(g) == so3_law(l, m),
              std::to_string(so3_law(l, m)), std::to_string(g));
    }
  }
  const RealizedModule ad = adjoint_module(realize(AlgebraId::su(3)));
  const auto roots = ad.hw_label.rs->roots();
  const std::set<Weight> orbit(roots.begin(), roots.end());
  std::size_t agree = 0;
  for (std::size_t i = 0; i < ad.dim(); ++i) {
    Vector v(ad.dim(), Rational(0));
    v[i] = 1;
    agree += is_highest_weight_vector(ad, v) == (orbit.count(ad.weights[i]) > 0);
  }
  r.check("hwv/su(3)/criterion_on_basis", agree == ad.dim(), std::to_string(ad.dim()), std::to_string(agree));
  for (int n = 2; n <= 4; ++n) {
    auto L = realize(AlgebraId::su(n));
    const std::size_t t = basis_index_of_weight(*L, root_system(AlgebraId::su(n))->highest_root());
    const Rational k = L->form(L->basis[t], L->basis[t]);
    r.check("hwv/" + L->algebra.name() + "/kappa(e_theta,e_theta)", k == 0, "0", to_pq(k));
  }
}

inline void suite_schur(const Options& o, Report& r) {
  std::vector<long> ns{2, 3, 4};
  if (o.n != 0) ns = {o.n};
  for (long n : ns) {
    for (long k = 1; k <= 4; ++k) {
      const SchurIdentity s = schur_sum_identity(n, k);
      const std::string base = "schur/n=" + std::to_string(n) + "/k=" + std::to_string(k);
      r.check(base + "/sym", s.sym_lhs == s.sym_rhs, str(s.sym_rhs), str(s.sym_lhs));
      r.check(base + "/alt", s.alt_lhs == s.alt_rhs, str(s.alt_rhs), str(s.alt_lhs));
      r.check(base + "/virtual", s.virt_lhs == s.virt_rhs, str(s.virt_rhs), str(s.virt_lhs));
    }
    const auto [lhs, rhs] = cube_virtual_identity(n);
    r.check("schur/n=" + std::to_string(n) + "/k=3_virtual_square", lhs == rhs, str(rhs), str(lhs));
  }
}

}  // namespace detail

inline void cmd_verify(const Options& o, Report& r) {
  static const std::vector<std::string> suites{"casimir", "projectors", "harmonic", "hwv", "schur"};
  if (o.suite != "all" && std::find(suites.begin(), suites.end(), o.suite) == suites.end())
    throw Error(ErrorKind::BadParam, "unknown suite '" + o.suite + "'");
  if (!o.algebra.empty()) r.algebra = algebra_from(o).name();
  auto want = [&](const std::string& s) { return o.suite == "all" || o.suite == s; };
  // Filters apply to the suites they make sense for; --all keeps defaults
  // for the others.
  Options plain = o;
  if (o.suite == "all") {
    plain.algebra.clear();
    plain.n = 0;
  }
  if (want("casimir")) detail::suite_casimir(o.suite == "all" ? plain : o, r);
  if (want("projectors")) detail::suite_projectors(o.suite == "all" ? plain : o, r);
  if (want("harmonic")) detail::suite_harmonic(o.suite == "all" ? plain : o, r);
  if (want("hwv")) detail::suite_hwv(o, r);
  if (want("schur")) detail::suite_schur(o.suite == "all" ? plain : o, r);
  std::sort(r.checks.begin(), r.checks.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
  r.results["suite"] = o.suite;
  r.results["passed"] = std::count_if(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.pass; });
  r.results["total"] = r.checks.size();
}

inline int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::TooLarge: return kResource;
    case ErrorKind::IncompleteSpectrum:
    case ErrorKind::NotACharacter:
    case ErrorKind::DegenerateForm: return kFail;
    default: return kUsage;
  }
}

/// Entry point shared by the executable and the tests.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact decompositions of adjoint tensor squares"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Emit a JSON report");
  app.add_option("--out", o.out, "Write the report to FILE instead of stdout");
  app.add_option("--max-dim", o.max_dim, "Override oracle and matrix size caps")->check(CLI::PositiveNumber);
  app.add_flag("--large", o.large, "Include the so(8) split-Casimir matrices");

  auto common = [&](CLI::App* sub) {
    sub->add_option("--algebra", o.algebra, "su|so|sp|g2|f4|e6|e7|e8")
        ->check(CLI::IsMember({"su", "so", "sp", "g2", "f4", "e6", "e7", "e8"}));
    sub->add_option("--n", o.n, "Matrix size for su/so/sp");
  };
  auto* dims = app.add_subcommand("dims", "Dimensions from the closed forms and the Weyl formula");
  common(dims);
  dims->add_option("--hw", o.hw, "Highest weight: coordinates \"a,b,...\" or \"k theta\"");
  dims->add_option("--cartan-power", o.cartan_power, "k for the Cartan power of the adjoint")->check(CLI::PositiveNumber);
  dims->add_option("--wedge-power", o.wedge_power, "k for the wedge-type su(n) constituent")->check(CLI::PositiveNumber);
  auto* dec = app.add_subcommand("decompose", "Constituents of the symmetric or alternating square");
  common(dec);
  dec->add_option("--part", o.part, "sym|alt")->check(CLI::IsMember({"sym", "alt"}));
  dec->add_flag("--oracle", o.oracle, "Cross-check with the character oracle");
  auto* ver = app.add_subcommand("verify", "Run verification suites");
  common(ver);
  ver->add_option("--suite", o.suite, "casimir|projectors|harmonic|hwv|schur|all")
      ->check(CLI::IsMember({"casimir", "projectors", "harmonic", "hwv", "schur", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  Report r;
  for (int i = 1; i < argc; ++i) r.command += (i > 1 ? " " : "") + std::string(argv[i]);
  if (o.max_dim > 0) {
    const std::string w = "caps overridden by --max-dim " + std::to_string(o.max_dim);
    r.warnings.push_back(w);
    err << "warning: " << w << "\n";
  }
  const auto start = std::chrono::steady_clock::now();
  int code = kPass;
  try {
    if (*dims) cmd_dims(o, r);
    if (*dec) cmd_decompose(o, r);
    if (*ver) cmd_verify(o, r);
    if (!r.all_pass()) code = kFail;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const std::string text = o.json ? r.to_json().dump(2) + "\n" : r.to_text();
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) {
      err << "error: cannot write " << o.out << "\n";
      return kUsage;
    }
    f << text;
  } else {
    out << text;
  }
  return code;
}

}  // namespace adjsq::cli
