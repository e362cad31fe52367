#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "adjsq/rational.hpp"

namespace adjsq {

/// Univariate polynomial over Q, coefficients stored lowest degree first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const Rational& a) { return Polynomial({a}); }
  static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }

  static Polynomial from_roots(std::span<const Rational> roots) {
    Polynomial p = constant(1);
    for (const auto& r : roots) p = p * Polynomial({Rational(-r), Rational(1)});
    return p;
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(i)];
  }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return Polynomial(std::move(out));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + b * constant(-1);
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(const Rational& s, const Polynomial& p) {
    return constant(s) * p;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Quotient and remainder of a / b.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw Error(ErrorKind::BadParam, "polynomial division by zero");
    std::vector<Rational> rem = a.c_;
    const int db = b.degree();
    std::vector<Rational> quot(static_cast<std::size_t>(std::max(0, a.degree() - db + 1)), Rational(0));
    for (int k = a.degree() - db; k >= 0; --k) {
      const Rational q = rem[static_cast<std::size_t>(k + db)] / b.c_.back();
      quot[static_cast<std::size_t>(k)] = q;
      for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.c_[static_cast<std::size_t>(j)];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  /// Distinct rational roots, by the rational root test on the cleared
  /// integer polynomial. Only suitable for the small degrees used here.
  std::vector<Rational> rational_roots() const;

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      const Rational& a = c_[static_cast<std::size_t>(i)];
      if (a == 0) continue;
      if (!s.empty()) s += (a < 0) ? " - " : " + ";
      else if (a < 0) s += "-";
      const Rational m = abs(a);
      if (i == 0 || m != 1) s += to_display(m);
      if (i >= 1) s += (i == 1) ? "x" : "x^" + std::to_string(i);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

namespace detail {

inline std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> out;
  if (n == 0) return out;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

}  // namespace detail

inline std::vector<Rational> Polynomial::rational_roots() const {
  std::vector<Rational> roots;
  if (degree() <= 0) return roots;
  Polynomial p = *this;
  if (p.coeff(0) == 0) {
    roots.emplace_back(0);
    while (p.coeff(0) == 0) p = divmod(p, x()).first;
  }
  if (p.degree() <= 0) return roots;
  Integer lcm = 1;
  for (const auto& a : p.c_) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a.get_den_mpz_t());
  const Integer lead = Rational(p.c_.back() * lcm).get_num();
  const Integer tail = Rational(p.c_.front() * lcm).get_num();
  for (const auto& num : detail::divisors(tail)) {
    for (const auto& den : detail::divisors(lead)) {
      for (int sign : {1, -1}) {
        Rational cand(num * sign, den);
        cand.canonicalize();
        if (p(cand) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace adjsq
