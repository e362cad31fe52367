#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "adjsq/matrix.hpp"
#include "adjsq/rational.hpp"

namespace adjsq {

enum class Family { A, B, C, D, G2, F4, E6, E7, E8 };

/// Identifies a simple Lie algebra. Classical families are parametrised by
/// the dimension n of the natural module: su(n) is A_{n-1}, so(n) is B or D,
/// sp(n) is C_{n/2}.
struct AlgebraId {
  Family family = Family::A;
  int n = 0;

  static AlgebraId su(int n) { return {Family::A, n}; }
  static AlgebraId so(int n) { return {n % 2 == 1 ? Family::B : Family::D, n}; }
  static AlgebraId sp(int n) { return {Family::C, n}; }
  static AlgebraId g2() { return {Family::G2, 0}; }
  static AlgebraId f4() { return {Family::F4, 0}; }
  static AlgebraId e6() { return {Family::E6, 0}; }
  static AlgebraId e7() { return {Family::E7, 0}; }
  static AlgebraId e8() { return {Family::E8, 0}; }

  bool is_classical() const {
    return family == Family::A || family == Family::B || family == Family::C || family == Family::D;
  }
  bool is_orthogonal() const { return family == Family::B || family == Family::D; }

  void validate() const {
    auto fail = [this](const std::string& why) {
      throw Error(ErrorKind::UnsupportedAlgebra, name() + ": " + why);
    };
    switch (family) {
      case Family::A: if (n < 2) fail("su(n) requires n >= 2"); break;
      case Family::B: if (n < 5 || n % 2 == 0) fail("odd so(n) requires odd n >= 5"); break;
      case Family::D: if (n < 4 || n % 2 == 1) fail("even so(n) requires even n >= 4"); break;
      case Family::C: if (n < 2 || n % 2 == 1) fail("sp(n) requires even n >= 2"); break;
      default: break;
    }
  }

  int rank() const {
    validate();
    switch (family) {
      case Family::A: return n - 1;
      case Family::B: return (n - 1) / 2;
      case Family::C:
      case Family::D: return n / 2;
      case Family::G2: return 2;
      case Family::F4: return 4;
      case Family::E6: return 6;
      case Family::E7: return 7;
      case Family::E8: return 8;
    }
    return 0;
  }

  /// Dimension of the algebra itself.
  long dim() const {
    validate();
    switch (family) {
      case Family::A: return static_cast<long>(n) * n - 1;
      case Family::B:
      case Family::D: return static_cast<long>(n) * (n - 1) / 2;
      case Family::C: return static_cast<long>(n) * (n + 1) / 2;
      case Family::G2: return 14;
      case Family::F4: return 52;
      case Family::E6: return 78;
      case Family::E7: return 133;
      case Family::E8: return 248;
    }
    return 0;
  }

  std::string name() const {
    switch (family) {
      case Family::A: return "su(" + std::to_string(n) + ")";
      case Family::B:
      case Family::D: return "so(" + std::to_string(n) + ")";
      case Family::C: return "sp(" + std::to_string(n) + ")";
      case Family::G2: return "g2";
      case Family::F4: return "f4";
      case Family::E6: return "e6";
      case Family::E7: return "e7";
      case Family::E8: return "e8";
    }
    return "?";
  }

  friend auto operator<=>(const AlgebraId&, const AlgebraId&) = default;
};

/// Parses the CLI spelling: su|so|sp need n; g2|f4|e6|e7|e8 ignore it.
inline AlgebraId parse_algebra(std::string_view kind, int n) {
  AlgebraId id;
  if (kind == "su") id = AlgebraId::su(n);
  else if (kind == "so") id = AlgebraId::so(n);
  else if (kind == "sp") id = AlgebraId::sp(n);
  else if (kind == "g2") id = AlgebraId::g2();
  else if (kind == "f4") id = AlgebraId::f4();
  else if (kind == "e6") id = AlgebraId::e6();
  else if (kind == "e7") id = AlgebraId::e7();
  else if (kind == "e8") id = AlgebraId::e8();
  else throw Error(ErrorKind::UnsupportedAlgebra, "unknown algebra '" + std::string(kind) + "'");
  id.validate();
  return id;
}

/// A weight in ambient epsilon-coordinates.
struct Weight {
  std::vector<Rational> coords;

  Weight() = default;
  explicit Weight(std::size_t dim) : coords(dim, Rational(0)) {}
  explicit Weight(std::vector<Rational> c) : coords(std::move(c)) {}
  Weight(std::initializer_list<long> c) {
    for (long x : c) coords.emplace_back(x);
  }

  std::size_t size() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  Rational& operator[](std::size_t i) { return coords[i]; }

  bool is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rational& x) { return x == 0; });
  }

  Weight& operator+=(const Weight& o) {
    check(o);
    for (std::size_t i = 0; i < size(); ++i) coords[i] += o.coords[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    check(o);
    for (std::size_t i = 0; i < size(); ++i) coords[i] -= o.coords[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& s, Weight a) {
    for (auto& x : a.coords) x *= s;
    return a;
  }
  friend bool operator==(const Weight&, const Weight&) = default;
  friend bool operator<(const Weight& a, const Weight& b) { return a.coords < b.coords; }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < size(); ++i) s += (i ? "," : "") + to_display(coords[i]);
    return s + ")";
  }

 private:
  void check(const Weight& o) const {
    if (o.size() != size()) throw Error(ErrorKind::DimensionMismatch, "weight lengths differ");
  }
};

inline Weight parse_weight(std::string_view text) {
  Weight w;
  std::string s(text);
  if (!s.empty() && s.front() == '(') s.erase(s.begin());
  if (!s.empty() && s.back() == ')') s.pop_back();
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) w.coords.push_back(parse_rational(item));
  if (w.coords.empty()) throw Error(ErrorKind::BadParam, "empty weight");
  return w;
}

/// Root data of one algebra, with the invariant form normalized so that long
/// roots have squared length 2. Immutable once built.
class RootSystem {
 public:
  const AlgebraId& algebra() const { return algebra_; }
  int rank() const { return static_cast<int>(simple_.size()); }
  std::size_t ambient_dim() const { return ambient_; }

  const std::vector<Weight>& simple_roots() const { return simple_; }
  const std::vector<Weight>& positive_roots() const { return positive_; }
  /// Positive roots as nonnegative integer combinations of simple roots.
  const std::vector<std::vector<long>>& positive_root_coefficients() const { return positive_coeffs_; }
  const Weight& two_delta() const { return two_delta_; }
  const std::vector<Weight>& fundamental_weights() const { return fundamental_; }
  /// Gram matrix (alpha_i, alpha_j) of the simple roots.
  const Matrix& gram() const { return gram_; }
  /// Cartan matrix A_ij = <alpha_i, alpha_j^vee>.
  const std::vector<std::vector<long>>& cartan_matrix() const { return cartan_; }
  /// The ambient form is form_scale() times the Euclidean dot product.
  const Rational& form_scale() const { return scale_; }

  Rational inner(const Weight& a, const Weight& b) const {
    if (a.size() != ambient_ || b.size() != ambient_) {
      throw Error(ErrorKind::DimensionMismatch, algebra_.name() + " weights have " + std::to_string(ambient_) +
                                                    " coordinates");
    }
    Rational s = 0;
    for (std::size_t i = 0; i < ambient_; ++i)
      if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s * scale_;
  }

  Weight highest_root() const { return highest_; }

  Weight zero() const { return Weight(ambient_); }

  /// Dynkin labels 2(lambda, alpha_i)/(alpha_i, alpha_i).
  std::vector<Rational> to_dynkin(const Weight& w) const {
    std::vector<Rational> out(simple_.size());
    for (std::size_t i = 0; i < simple_.size(); ++i) out[i] = 2 * inner(w, simple_[i]) / gram_(i, i);
    return out;
  }

  Weight from_dynkin(const std::vector<Rational>& labels) const {
    if (labels.size() != simple_.size()) throw Error(ErrorKind::DimensionMismatch, "Dynkin label count");
    Weight w(ambient_);
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] != 0) w += labels[i] * fundamental_[i];
    return w;
  }

  Weight from_dynkin(const std::vector<long>& labels) const {
    std::vector<Rational> r(labels.begin(), labels.end());
    return from_dynkin(r);
  }

  /// Orthogonal projection onto the span of the roots. For su(n) this is
  /// the sum-zero hyperplane.
  Weight project(const Weight& w) const { return from_dynkin(to_dynkin(w)); }

  bool in_root_span(const Weight& w) const { return project(w) == w; }

  bool is_dominant(const Weight& w) const {
    for (const auto& a : simple_)
      if (inner(w, a) < 0) return false;
    return true;
  }

  Weight reflect(std::size_t i, const Weight& w) const {
    const Rational f = 2 * inner(w, simple_[i]) / gram_(i, i);
    return w - f * simple_[i];
  }

  /// All roots (positive and negative).
  std::vector<Weight> roots() const {
    std::vector<Weight> out = positive_;
    for (const auto& r : positive_) out.push_back(Rational(-1) * r);
    return out;
  }

 private:
  friend RootSystem build_root_system(const AlgebraId& algebra);

  AlgebraId algebra_;
  std::size_t ambient_ = 0;
  Rational scale_ = 1;
  std::vector<Weight> simple_;
  std::vector<Weight> positive_;
  std::vector<std::vector<long>> positive_coeffs_;
  std::vector<Weight> fundamental_;
  Weight two_delta_;
  Weight highest_;
  Matrix gram_;
  std::vector<std::vector<long>> cartan_;
};

namespace detail {

inline Weight unit(std::size_t dim, std::size_t i, long s = 1) {
  Weight w(dim);
  w[i] = s;
  return w;
}

/// Bourbaki simple roots of E8; E6 and E7 take the first six or seven.
inline std::vector<Weight> e8_simple_roots() {
  std::vector<Weight> s;
  Weight a1(8);
  a1[0] = rat(1, 2);
  a1[7] = rat(1, 2);
  for (std::size_t i = 1; i <= 6; ++i) a1[i] = rat(-1, 2);
  s.push_back(a1);
  s.push_back(unit(8, 0) + unit(8, 1));
  for (std::size_t i = 0; i < 6; ++i) s.push_back(unit(8, i + 1) - unit(8, i));
  return s;
}

/// Hard-coded Cartan matrices (Bourbaki numbering) that the exceptional
/// embeddings must reproduce.
inline std::vector<std::vector<long>> exceptional_cartan(Family f) {
  switch (f) {
    case Family::G2: return {{2, -1}, {-3, 2}};
    case Family::F4: return {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
    case Family::E6:
    case Family::E7:
    case Family::E8: {
      const int r = f == Family::E6 ? 6 : (f == Family::E7 ? 7 : 8);
      std::vector<std::vector<long>> a(static_cast<std::size_t>(r), std::vector<long>(static_cast<std::size_t>(r), 0));
      auto link = [&](int i, int j) {
        if (i <= r && j <= r) {
          a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = -1;
          a[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = -1;
        }
      };
      for (int i = 0; i < r; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
      link(1, 3);
      link(3, 4);
      link(4, 5);
      link(5, 6);
      link(6, 7);
      link(7, 8);
      link(2, 4);
      return a;
    }
    default: return {};
  }
}

}  // namespace detail

inline RootSystem build_root_system(const AlgebraId& algebra) {
  algebra.validate();
  RootSystem rs;
  rs.algebra_ = algebra;
  const int r = algebra.rank();
  const std::size_t m = static_cast<std::size_t>(r);
  using detail::unit;

  switch (algebra.family) {
    case Family::A: {
      rs.ambient_ = static_cast<std::size_t>(algebra.n);
      for (std::size_t i = 0; i < m; ++i) rs.simple_.push_back(unit(rs.ambient_, i) - unit(rs.ambient_, i + 1));
      break;
    }
    case Family::B:
    case Family::C:
    case Family::D: {
      rs.ambient_ = m;
      for (std::size_t i = 0; i + 1 < m; ++i) rs.simple_.push_back(unit(m, i) - unit(m, i + 1));
      if (algebra.family == Family::B) rs.simple_.push_back(unit(m, m - 1));
      if (algebra.family == Family::C) {
        rs.simple_.push_back(unit(m, m - 1, 2));
        rs.scale_ = rat(1, 2);
      }
      if (algebra.family == Family::D) rs.simple_.push_back(unit(m, m - 2) + unit(m, m - 1));
      break;
    }
    case Family::G2: {
      // Coordinates of the su(3) Cartan subalgebra (components sum to zero).
      rs.ambient_ = 3;
      rs.simple_ = {Weight{1, -1, 0}, Weight{-2, 1, 1}};
      rs.scale_ = rat(1, 3);
      break;
    }
    case Family::F4: {
      rs.ambient_ = 4;
      Weight a4(4);
      a4[0] = rat(1, 2);
      for (std::size_t i = 1; i < 4; ++i) a4[i] = rat(-1, 2);
      rs.simple_ = {unit(4, 1) - unit(4, 2), unit(4, 2) - unit(4, 3), unit(4, 3), a4};
      break;
    }
    case Family::E6:
    case Family::E7:
    case Family::E8: {
      rs.ambient_ = 8;
      auto all = detail::e8_simple_roots();
      rs.simple_.assign(all.begin(), all.begin() + r);
      break;
    }
  }

  rs.gram_ = Matrix(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) rs.gram_(i, j) = rs.inner(rs.simple_[i], rs.simple_[j]);

  rs.cartan_.assign(m, std::vector<long>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) rs.cartan_[i][j] = to_int64(2 * rs.gram_(i, j) / rs.gram_(j, j));

  if (!algebra.is_classical() && rs.cartan_ != detail::exceptional_cartan(algebra.family)) {
    throw Error(ErrorKind::UnsupportedAlgebra, algebra.name() + ": embedding does not reproduce its Cartan matrix");
  }

  // Positive roots by increasing height, closing under simple root strings.
  std::set<std::vector<long>> seen;
  std::vector<std::vector<long>> layer;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<long> e(m, 0);
    e[i] = 1;
    layer.push_back(e);
    seen.insert(e);
  }
  while (!layer.empty()) {
    std::vector<std::vector<long>> next;
    for (const auto& beta : layer) {
      rs.positive_coeffs_.push_back(beta);
      for (std::size_t i = 0; i < m; ++i) {
        // p: how far the i-string extends downwards from beta.
        long p = 0;
        std::vector<long> down = beta;
        while (true) {
          down[i] -= 1;
          if (!seen.count(down)) break;
          ++p;
        }
        long pairing = 0;
        for (std::size_t j = 0; j < m; ++j) pairing += beta[j] * rs.cartan_[j][i];
        const long q = p - pairing;
        if (q > 0) {
          std::vector<long> up = beta;
          up[i] += 1;
          if (seen.insert(up).second) next.push_back(up);
        }
      }
    }
    std::sort(next.begin(), next.end());
    layer = std::move(next);
  }
  for (const auto& c : rs.positive_coeffs_) {
    Weight w(rs.ambient_);
    for (std::size_t i = 0; i < m; ++i)
      if (c[i] != 0) w += Rational(c[i]) * rs.simple_[i];
    rs.positive_.push_back(w);
  }

  rs.two_delta_ = Weight(rs.ambient_);
  for (const auto& a : rs.positive_) rs.two_delta_ += a;

  // Highest root: maximal height; ties (only so(4)) go to the
  // lexicographically largest coordinates.
  std::size_t best = 0;
  auto height = [&](std::size_t k) {
    return std::accumulate(rs.positive_coeffs_[k].begin(), rs.positive_coeffs_[k].end(), 0L);
  };
  for (std::size_t k = 1; k < rs.positive_.size(); ++k) {
    if (height(k) > height(best) || (height(k) == height(best) && rs.positive_[best] < rs.positive_[k])) best = k;
  }
  rs.highest_ = rs.positive_[best];

  // Fundamental weights: alpha_i = sum_j A_ij omega_j.
  Matrix cart(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) cart(i, j) = rs.cartan_[i][j];
  const Matrix cinv = inverse(cart);
  for (std::size_t i = 0; i < m; ++i) {
    Weight w(rs.ambient_);
    for (std::size_t j = 0; j < m; ++j)
      if (cinv(i, j) != 0) w += cinv(i, j) * rs.simple_[j];
    rs.fundamental_.push_back(w);
  }
  return rs;
}

/// Shared, lazily built root systems.
inline std::shared_ptr<const RootSystem> root_system(const AlgebraId& algebra) {
  static std::mutex mu;
  static std::map<AlgebraId, std::shared_ptr<const RootSystem>> cache;
  algebra.validate();
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(algebra);
  if (it != cache.end()) return it->second;
  auto rs = std::make_shared<const RootSystem>(build_root_system(algebra));
  cache.emplace(algebra, rs);
  return rs;
}

}  // namespace adjsq
