#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "adjsq/dimform.hpp"
#include "adjsq/rootsys.hpp"

namespace adjsq {

/// Weight keys are Dynkin labels, which are integral for every weight of a
/// finite-dimensional module and so keep the oracle in machine integers.
using DynkinKey = std::vector<long>;

/// Integer-scaled copy of the invariant form in the fundamental-weight basis.
class ScaledForm {
 public:
  explicit ScaledForm(const RootSystem& rs) : r_(static_cast<std::size_t>(rs.rank())) {
    std::vector<Rational> entries;
    Integer lcm = 1;
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < r_; ++j) {
        const Rational v = rs.inner(rs.fundamental_weights()[i], rs.fundamental_weights()[j]);
        entries.push_back(v);
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
      }
    scale_ = lcm;
    for (const auto& v : entries) m_.push_back(to_int64(v * scale_));
    for (std::size_t i = 0; i < r_; ++i) {
      DynkinKey row(r_);
      for (std::size_t j = 0; j < r_; ++j) row[j] = rs.cartan_matrix()[i][j];
      simple_.push_back(row);
    }
  }

  /// scale() * (x, y).
  long operator()(const DynkinKey& x, const DynkinKey& y) const {
    long s = 0;
    for (std::size_t i = 0; i < r_; ++i) {
      if (x[i] == 0) continue;
      long t = 0;
      for (std::size_t j = 0; j < r_; ++j) t += m_[i * r_ + j] * y[j];
      s += x[i] * t;
    }
    return s;
  }

  const Rational& scale() const { return scale_; }
  /// Dynkin labels of the simple roots (rows of the Cartan matrix).
  const std::vector<DynkinKey>& simple() const { return simple_; }

 private:
  std::size_t r_;
  Rational scale_;
  std::vector<long> m_;
  std::vector<DynkinKey> simple_;
};

/// Finitely supported weight multiplicities of a module (or virtual module).
class FormalCharacter {
 public:
  explicit FormalCharacter(std::shared_ptr<const RootSystem> rs) : rs_(std::move(rs)) {}

  const RootSystem& root_system() const { return *rs_; }
  const std::shared_ptr<const RootSystem>& root_system_ptr() const { return rs_; }
  const std::map<DynkinKey, long>& weights() const { return w_; }

  long multiplicity(const DynkinKey& k) const {
    auto it = w_.find(k);
    return it == w_.end() ? 0 : it->second;
  }
  long multiplicity(const Weight& w) const { return multiplicity(key_of(w)); }

  void add(const DynkinKey& k, long m) {
    if (m == 0) return;
    auto& slot = w_[k];
    slot += m;
    if (slot == 0) w_.erase(k);
  }

  long total() const {
    long s = 0;
    for (const auto& [k, m] : w_) s += m;
    return s;
  }

  DynkinKey key_of(const Weight& w) const {
    DynkinKey k;
    for (const auto& x : rs_->to_dynkin(w)) {
      if (!is_integer(x)) throw Error(ErrorKind::BadParam, w.to_string() + " is not an integral weight");
      k.push_back(to_int64(x));
    }
    return k;
  }

  Weight weight_of(const DynkinKey& k) const { return rs_->from_dynkin(k); }

  FormalCharacter& operator+=(const FormalCharacter& o) {
    check(o);
    for (const auto& [k, m] : o.w_) add(k, m);
    return *this;
  }
  FormalCharacter& operator-=(const FormalCharacter& o) {
    check(o);
    for (const auto& [k, m] : o.w_) add(k, -m);
    return *this;
  }
  friend FormalCharacter operator+(FormalCharacter a, const FormalCharacter& b) { return a += b; }
  friend FormalCharacter operator-(FormalCharacter a, const FormalCharacter& b) { return a -= b; }

  friend FormalCharacter operator*(long s, FormalCharacter a) {
    if (s == 0) a.w_.clear();
    for (auto& [k, m] : a.w_) m *= s;
    return a;
  }

  /// Character of the tensor product.
  friend FormalCharacter operator*(const FormalCharacter& a, const FormalCharacter& b) {
    a.check(b);
    FormalCharacter out(a.rs_);
    for (const auto& [ka, ma] : a.w_)
      for (const auto& [kb, mb] : b.w_) {
        DynkinKey k(ka.size());
        for (std::size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
        out.add(k, ma * mb);
      }
    return out;
  }

  /// Every weight doubled (the second Adams operation).
  FormalCharacter adams2() const {
    FormalCharacter out(rs_);
    for (const auto& [k, m] : w_) {
      DynkinKey d = k;
      for (auto& x : d) x *= 2;
      out.add(d, m);
    }
    return out;
  }

  /// Multiplicities are invariant under every simple reflection.
  bool is_weyl_invariant() const {
    const auto& cart = rs_->cartan_matrix();
    for (const auto& [k, m] : w_) {
      for (std::size_t i = 0; i < k.size(); ++i) {
        DynkinKey r = k;
        for (std::size_t j = 0; j < k.size(); ++j) r[j] -= k[i] * cart[i][j];
        if (multiplicity(r) != m) return false;
      }
    }
    return true;
  }

  friend bool operator==(const FormalCharacter& a, const FormalCharacter& b) {
    return a.rs_->algebra() == b.rs_->algebra() && a.w_ == b.w_;
  }

 private:
  void check(const FormalCharacter& o) const {
    if (!(o.rs_->algebra() == rs_->algebra())) throw Error(ErrorKind::DimensionMismatch, "characters of different algebras");
  }

  std::shared_ptr<const RootSystem> rs_;
  std::map<DynkinKey, long> w_;
};

inline constexpr long kDefaultOracleCap = 5000;

namespace detail {

inline FormalCharacter freudenthal(const std::shared_ptr<const RootSystem>& rs, const DynkinKey& top) {
  const ScaledForm q(*rs);
  const std::size_t r = top.size();

  std::vector<DynkinKey> pos;
  for (const auto& c : rs->positive_root_coefficients()) {
    DynkinKey k(r, 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) k[j] += c[i] * q.simple()[i][j];
    pos.push_back(k);
  }
  const DynkinKey rho(r, 1);
  auto shifted_norm = [&](const DynkinKey& mu) {
    DynkinKey s = mu;
    for (std::size_t i = 0; i < r; ++i) s[i] += rho[i];
    return q(s, s);
  };
  const long top_norm = shifted_norm(top);

  FormalCharacter chi(rs);
  chi.add(top, 1);
  std::vector<DynkinKey> layer{top};
  while (!layer.empty()) {
    std::map<DynkinKey, bool> candidates;
    for (const auto& nu : layer)
      for (std::size_t i = 0; i < r; ++i) {
        DynkinKey mu = nu;
        for (std::size_t j = 0; j < r; ++j) mu[j] -= q.simple()[i][j];
        candidates.emplace(mu, true);
      }
    std::vector<DynkinKey> next;
    for (const auto& [mu, unused] : candidates) {
      (void)unused;
      long acc = 0;
      for (const auto& a : pos) {
        DynkinKey up = mu;
        while (true) {
          for (std::size_t j = 0; j < r; ++j) up[j] += a[j];
          const long m = chi.multiplicity(up);
          if (m == 0) break;
          acc += m * q(up, a);
        }
      }
      const long denom = top_norm - shifted_norm(mu);
      if (acc == 0 || denom == 0) continue;
      if ((2 * acc) % denom != 0) throw Error(ErrorKind::NotACharacter, "non-integral Freudenthal multiplicity");
      chi.add(mu, 2 * acc / denom);
      next.push_back(mu);
    }
    layer = std::move(next);
  }
  return chi;
}

}  // namespace detail

/// Weight system of the irreducible with the given highest weight, by
/// Freudenthal's recursion. Characters above `cap` dimensions are refused.
inline FormalCharacter irrep_character(const IrrepLabel& label, long cap = kDefaultOracleCap) {
  const Integer d = weyl_dim(label);
  if (d > cap) {
    throw Error(ErrorKind::TooLarge, "irreducible of dimension " + d.get_str() + " exceeds the oracle cap " +
                                         std::to_string(cap));
  }
  FormalCharacter probe(label.rs);
  const DynkinKey top = probe.key_of(label.hw);

  static std::mutex mu;
  static std::map<std::pair<AlgebraId, DynkinKey>, FormalCharacter> cache;
  const auto key = std::make_pair(label.rs->algebra(), top);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  FormalCharacter chi = detail::freudenthal(label.rs, top);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, chi);
  return chi;
}

/// Adjoint character written down directly: every root once, zero rank times.
inline FormalCharacter adjoint_character(const std::shared_ptr<const RootSystem>& rs) {
  FormalCharacter chi(rs);
  for (const auto& r : rs->roots()) chi.add(chi.key_of(r), 1);
  chi.add(DynkinKey(static_cast<std::size_t>(rs->rank()), 0), rs->rank());
  return chi;
}

/// (sym, alt) = ((chi^2 + psi2 chi)/2, (chi^2 - psi2 chi)/2).
inline std::pair<FormalCharacter, FormalCharacter> sym_alt_square(const FormalCharacter& chi) {
  const FormalCharacter sq = chi * chi;
  const FormalCharacter ad = chi.adams2();
  FormalCharacter sym(chi.root_system_ptr()), alt(chi.root_system_ptr());
  for (const auto& [k, m] : sq.weights()) {
    const long a = ad.multiplicity(k);
    sym.add(k, (m + a) / 2);
    alt.add(k, (m - a) / 2);
  }
  for (const auto& [k, a] : ad.weights()) {
    if (sq.multiplicity(k) == 0) {
      sym.add(k, a / 2);
      alt.add(k, -a / 2);
    }
  }
  return {sym, alt};
}

struct DecompositionEntry {
  DynkinKey dynkin;
  Weight hw;
  long multiplicity = 0;
  Integer dim;
};

struct Decomposition {
  std::shared_ptr<const RootSystem> rs;
  std::vector<DecompositionEntry> entries;

  Integer total() const {
    Integer t = 0;
    for (const auto& e : entries) t += e.dim * e.multiplicity;
    return t;
  }

  /// Dimension multiset, each dimension repeated by multiplicity, sorted
  /// descending.
  std::vector<Integer> dims() const {
    std::vector<Integer> out;
    for (const auto& e : entries)
      for (long i = 0; i < e.multiplicity; ++i) out.push_back(e.dim);
    std::sort(out.rbegin(), out.rend());
    return out;
  }
};

/// Strips irreducible characters off from the top until nothing is left.
inline Decomposition decompose(const FormalCharacter& chi, long cap = kDefaultOracleCap) {
  const auto& rs = chi.root_system_ptr();
  const ScaledForm q(*rs);
  const DynkinKey two_rho(static_cast<std::size_t>(rs->rank()), 2);
  FormalCharacter rest = chi;
  Decomposition out{rs, {}};
  while (!rest.weights().empty()) {
    const DynkinKey* best = nullptr;
    long best_height = 0;
    for (const auto& [k, m] : rest.weights()) {
      if (m < 0) throw Error(ErrorKind::NotACharacter, "negative multiplicity during stripping");
      const long h = q(k, two_rho);
      if (!best || h > best_height || (h == best_height && *best < k)) {
        best = &k;
        best_height = h;
      }
    }
    const DynkinKey top = *best;
    const long m = rest.multiplicity(top);
    for (long x : top)
      if (x < 0) throw Error(ErrorKind::NotACharacter, "highest surviving weight is not dominant");
    IrrepLabel label(rs, rs->from_dynkin(top));
    const FormalCharacter irr = irrep_character(label, cap);
    rest -= m * irr;
    out.entries.push_back({top, label.hw, m, weyl_dim(label)});
  }
  return out;
}

}  // namespace adjsq
