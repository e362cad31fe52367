#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "adjsq/rational.hpp"
#include "adjsq/rootsys.hpp"

namespace adjsq {

/// A dominant weight of a fixed root system, labelling an irreducible.
struct IrrepLabel {
  std::shared_ptr<const RootSystem> rs;
  Weight hw;

  /// Type-A weights are projected onto the sum-zero hyperplane first, so
  /// (1,1,0,0) and (1/2,1/2,-1/2,-1/2) label the same su(4)-module.
  IrrepLabel(std::shared_ptr<const RootSystem> system, const Weight& w) : rs(std::move(system)) {
    if (w.size() != rs->ambient_dim()) {
      throw Error(ErrorKind::DimensionMismatch, rs->algebra().name() + " weights have " +
                                                    std::to_string(rs->ambient_dim()) + " coordinates");
    }
    hw = rs->algebra().family == Family::A ? rs->project(w) : w;
    if (!rs->is_dominant(hw)) throw Error(ErrorKind::NonDominantWeight, hw.to_string() + " is not dominant");
  }

  friend bool operator==(const IrrepLabel& a, const IrrepLabel& b) {
    return a.rs->algebra() == b.rs->algebra() && a.hw == b.hw;
  }
};

/// Per-root factors 1 + (lambda, alpha)/(delta, alpha) that differ from 1,
/// in positive-root order.
inline std::vector<Rational> weyl_factors(const IrrepLabel& label) {
  const RootSystem& rs = *label.rs;
  std::vector<Rational> out;
  const Weight shifted = Rational(2) * label.hw + rs.two_delta();
  for (const auto& a : rs.positive_roots()) {
    const Rational num = rs.inner(shifted, a);
    const Rational den = rs.inner(rs.two_delta(), a);
    if (num != den) out.push_back(num / den);
  }
  return out;
}

inline Integer weyl_dim(const IrrepLabel& label) {
  Rational d = 1;
  for (const auto& f : weyl_factors(label)) d *= f;
  if (!is_integer(d)) throw Error(ErrorKind::BadParam, "non-integral Weyl dimension " + to_pq(d));
  return d.get_num();
}

inline Integer weyl_dim(const AlgebraId& algebra, const Weight& hw) {
  return weyl_dim(IrrepLabel(root_system(algebra), hw));
}

/// Type-A product over i<j of (l_i - l_j + j - i)/(j - i); accepts any
/// weakly decreasing vector, no projection needed.
inline Integer su_dim(const std::vector<Rational>& lambda) {
  Rational d = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (std::size_t j = i + 1; j < lambda.size(); ++j) {
      const Rational gap = static_cast<long>(j - i);
      d *= (lambda[i] - lambda[j] + gap) / gap;
    }
  return d.get_num();
}

/// Weakly decreasing positive parts.
struct Partition {
  std::vector<long> parts;

  Partition() = default;
  explicit Partition(std::vector<long> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] <= 0 || (i > 0 && parts[i] > parts[i - 1]))
        throw Error(ErrorKind::BadParam, "not a partition");
    }
  }

  long size() const {
    long s = 0;
    for (long p : parts) s += p;
    return s;
  }
  std::size_t length() const { return parts.size(); }

  Partition conjugate() const {
    std::vector<long> c;
    if (!parts.empty()) {
      for (long j = 1; j <= parts.front(); ++j) {
        long count = 0;
        for (long p : parts) count += (p >= j);
        c.push_back(count);
      }
    }
    return Partition(std::move(c));
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
    return s + ")";
  }

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// All partitions of k, in reverse lexicographic order.
inline std::vector<Partition> partitions(long k) {
  std::vector<Partition> out;
  std::vector<long> cur;
  auto rec = [&](auto&& self, long remaining, long max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (long p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  if (k >= 0) rec(rec, k, k);
  return out;
}

/// dim S_mu(C^n) = prod over cells of (n + content)/hook.
inline Integer hook_content_dim(const Partition& mu, long n) {
  const Partition conj = mu.conjugate();
  Rational d = 1;
  for (std::size_t i = 0; i < mu.parts.size(); ++i) {
    for (long j = 0; j < mu.parts[i]; ++j) {
      const long content = j - static_cast<long>(i);
      const long hook = (mu.parts[i] - j - 1) + (conj.parts[static_cast<std::size_t>(j)] - static_cast<long>(i) - 1) + 1;
      d *= rat(n + content, hook);
    }
  }
  return d.get_num();
}

namespace detail {

/// Double product over j in (c, d], i in (a, b] of (j - i + m)/(j - i);
/// empty ranges give 1.
inline Rational phi_product(long m, long a, long b, long c, long d) {
  Rational out = 1;
  for (long j = c + 1; j <= d; ++j)
    for (long i = a + 1; i <= b; ++i) out *= rat(j - i + m, j - i);
  out.canonicalize();
  return out;
}

inline void require_range(long a, long b, long c, long d) {
  if (!(a < b && b <= c && c < d)) {
    throw Error(ErrorKind::BadRange, "need a < b <= c < d, got (" + std::to_string(a) + "," + std::to_string(b) +
                                         ";" + std::to_string(c) + "," + std::to_string(d) + ")");
  }
}

}  // namespace detail

inline Rational phi(long m, long a, long b, long c, long d) {
  detail::require_range(a, b, c, d);
  if (m < 1) throw Error(ErrorKind::BadRange, "phi needs m >= 1");
  return detail::phi_product(m, a, b, c, d);
}

inline Rational psi1(long a, long b, long c, long d) {
  detail::require_range(a, b, c, d);
  Rational out = rat(c - b + 1, d - a + 1) * Rational(binomial(d - a + 1, d - c) * binomial(d - a + 1, b - a));
  out.canonicalize();
  return out;
}

/// dim of the Cartan power g^(k) of the su(n) adjoint, highest weight (k,0,...,0,-k).
inline Integer cartan_power_dim(long n, long k) {
  if (n < 2 || k < 1) throw Error(ErrorKind::BadParam, "cartan_power_dim needs n >= 2, k >= 1");
  const Integer b = binomial(n + k - 2, k);
  Rational d = rat(n + 2 * k - 1, n - 1) * Rational(b * b);
  return d.get_num();
}

/// dim g^(1^k), highest weight (1^k,0,...,0,(-1)^k). Zero at n = 2k - 1.
inline Integer wedge_power_dim(long n, long k) {
  if (n < 2 || k < 1 || 2 * k > n + 1) throw Error(ErrorKind::BadParam, "wedge_power_dim needs n >= 2, 1 <= k <= (n+1)/2");
  const Integer b = binomial(n + 1, k);
  Rational d = rat(n - 2 * k + 1, n + 1) * Rational(b * b);
  return d.get_num();
}

/// dim g^(1^k,-k), highest weight (1^k,0,...,0,-k).
inline Integer mixed_dim(long n, long k) {
  if (k < 1 || k > n - 1) throw Error(ErrorKind::BadParam, "mixed_dim needs 1 <= k <= n-1");
  return binomial(n - 1, k) * binomial(n + k, k);
}

/// The same dimension as the product prod_{r<=k}(n^2 - r^2)/(k!)^2.
inline Integer mixed_dim_product(long n, long k) {
  if (k < 1 || k > n - 1) throw Error(ErrorKind::BadParam, "mixed_dim needs 1 <= k <= n-1");
  Integer num = 1;
  for (long r = 1; r <= k; ++r) num *= Integer(n * n - r * r);
  const Integer f = factorial(k);
  return num / (f * f);
}

/// Component of the tensor square of wedge^k C^n indexed by r.
inline Integer wedge_tensor_component_dim(long n, long k, long r) {
  if (r < 0 || r >= std::min(k, n - k)) throw Error(ErrorKind::BadParam, "need 0 <= r < min(k, n-k)");
  Rational d = rat(2 * r + 1, n + 1) * Rational(binomial(n + 1, k - r) * binomial(n + 1, n - k - r));
  return d.get_num();
}

/// dim of the so(n)-module with highest weight (m^b, 0, ...). At even n with
/// b equal to the rank the weight splits into two conjugate halves; the
/// value returned is their sum (the O(n)-irreducible), e.g. C(8,4) = 70.
inline Integer so_rect_dim(long n, long m, long b) {
  const long ell = n / 2;
  if (n < 5 || m < 1 || b < 1 || b > ell) throw Error(ErrorKind::BadParam, "so_rect_dim needs n >= 5, m >= 1, 1 <= b <= rank");
  if (n % 2 == 0 && b == ell) {
    std::vector<Rational> hw(static_cast<std::size_t>(ell), Rational(m));
    return 2 * weyl_dim(AlgebraId::so(static_cast<int>(n)), Weight(hw));
  }
  Rational d = detail::phi_product(m, 0, b, b, n - b - 1);
  for (long i = 1; i <= b; ++i)
    for (long j = i; j <= b; ++j) d *= rat(2 * m + n - i - j, n - i - j);
  d.canonicalize();
  return d.get_num();
}

}  // namespace adjsq
