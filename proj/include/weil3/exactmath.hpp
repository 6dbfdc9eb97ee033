/*
   Copyright 2026 The weil3 Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef WEIL3_EXACTMATH_HPP
#define WEIL3_EXACTMATH_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace weil3 {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

/// Dense univariate polynomial, coefficients in ascending degree.
/// The zero polynomial has no coefficients and degree -1.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial monomial(const T& c, std::size_t deg) {
    std::vector<T> v(deg + 1, T(0));
    v[deg] = c;
    return Polynomial(std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const std::vector<T>& coefficients() const { return coeffs_; }
  const T& leading() const { return coeffs_.back(); }

  /// Coefficient of t^i; zero past the degree.
  T operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<T> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return Polynomial(std::move(d));
  }

  /// Horner evaluation in any ring that accepts T by construction.
  template <class U>
  U evaluate(const U& x) const {
    U acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * x;
      acc = acc + U(*it);
    }
    return acc;
  }

  Polynomial operator-() const {
    std::vector<T> v(coeffs_);
    for (auto& c : v) c = -c;
    return Polynomial(std::move(v));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> v(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> v(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const T& c, const Polynomial& a) {
    std::vector<T> v(a.coeffs_);
    for (auto& x : v) x *= c;
    return Polynomial(std::move(v));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(char var = 't') const;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<T> coeffs_;
};

using IntPolynomial = Polynomial<Integer>;
using RationalPolynomial = Polynomial<Rational>;

extern template class Polynomial<Integer>;
extern template class Polynomial<Rational>;

RationalPolynomial to_rational(const IntPolynomial& f);
/// Exact conversion; empty when some coefficient is not an integer.
std::optional<IntPolynomial> to_integer(const RationalPolynomial& f);
/// Integer multiple of f with coprime coefficients and positive leading coefficient.
IntPolynomial primitive_part(const RationalPolynomial& f);

/// Euclidean division; throws std::domain_error on division by zero.
std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                         const RationalPolynomial& b);
/// Monic gcd (zero if both are zero).
RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b);
/// Quotient a / b when b divides a in Z[t].
std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b);

/// f / gcd(f, f'), made monic.
RationalPolynomial squarefree_part(const RationalPolynomial& f);
/// Yun's decomposition: result[k-1] is the monic product of the roots of
/// multiplicity exactly k, so f = lc(f) * prod result[k-1]^k.
std::vector<RationalPolynomial> squarefree_decomposition(const RationalPolynomial& f);

/// Resultant by fraction-free elimination of the Sylvester matrix.
Integer resultant(const IntPolynomial& a, const IntPolynomial& b);
/// disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f).
Integer discriminant(const IntPolynomial& f);

/// Exact element a + b*sqrt(m) of a real quadratic field (or of Q when b = 0).
///
/// A perfect-square radicand is folded into the rational part at
/// construction, so b != 0 always means sqrt(m) is irrational.
class SurdValue {
 public:
  SurdValue() : SurdValue(Rational(0)) {}
  SurdValue(const Rational& a);  // NOLINT(google-explicit-constructor)
  SurdValue(const Integer& a) : SurdValue(Rational(a)) {}  // NOLINT
  SurdValue(long a) : SurdValue(Rational(a)) {}             // NOLINT
  SurdValue(const Rational& a, const Rational& b, const Integer& m);

  /// sqrt(m) for m > 0.
  static SurdValue sqrt(const Integer& m) { return SurdValue(0, 1, m); }

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  const Integer& radicand() const { return m_; }
  bool is_rational() const { return b_ == 0; }

  int sign() const;
  /// Floating approximation, for diagnostics only.
  double approx() const;

  friend SurdValue operator+(const SurdValue& x, const SurdValue& y);
  friend SurdValue operator-(const SurdValue& x, const SurdValue& y);
  friend SurdValue operator*(const SurdValue& x, const SurdValue& y);
  friend SurdValue operator-(const SurdValue& x) { return SurdValue(-x.a_, -x.b_, x.m_, Normalized{}); }
  friend bool operator==(const SurdValue& x, const SurdValue& y) { return (x - y).sign() == 0; }
  friend bool operator<(const SurdValue& x, const SurdValue& y) { return (x - y).sign() < 0; }
  friend bool operator<=(const SurdValue& x, const SurdValue& y) { return (x - y).sign() <= 0; }
  friend bool operator>(const SurdValue& x, const SurdValue& y) { return (x - y).sign() > 0; }
  friend bool operator>=(const SurdValue& x, const SurdValue& y) { return (x - y).sign() >= 0; }

  std::string to_string() const;

 private:
  struct Normalized {};
  // m is known to be non-square (or b == 0).
  SurdValue(Rational a, Rational b, Integer m, Normalized);

  Rational a_;
  Rational b_;
  Integer m_;
};

/// Exact sign of a + b*sqrt(m).
inline int surd_sign(const SurdValue& v) { return v.sign(); }

/// Number of distinct real roots of f in (lo, hi].
///
/// f must be squarefree; throws std::invalid_argument otherwise, or when
/// lo >= hi.
int sturm_count(const RationalPolynomial& f, const SurdValue& lo, const SurdValue& hi);

/// r with r^k = x, if x >= 0 is a perfect k-th power.
std::optional<Integer> integer_kth_root(const Integer& x, unsigned long k);
Integer floor_sqrt(const Integer& x);
Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);

bool is_prime(const Integer& x);

struct PrimePower {
  Integer p;
  int n = 0;
};
/// (p, n) with q = p^n by trial division; empty when q is not a prime power.
std::optional<PrimePower> prime_power_decompose(const Integer& q);

/// Prime factorisation of |x| (x != 0), ascending primes.
std::vector<std::pair<Integer, int>> factorize(const Integer& x);
/// Positive divisors of |x| (x != 0), ascending.
std::vector<Integer> divisors(const Integer& x);

}  // namespace weil3

#endif  // WEIL3_EXACTMATH_HPP
