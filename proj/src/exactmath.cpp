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

#include "weil3/exactmath.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace weil3 {

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) { return x.get_str(); }

template <class T>
std::string Polynomial<T>::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const T& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    T mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) {
      os << mag.get_str();
      if (i > 0) os << "*";
    }
    if (i > 0) os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

template class Polynomial<Integer>;
template class Polynomial<Rational>;

RationalPolynomial to_rational(const IntPolynomial& f) {
  std::vector<Rational> v;
  v.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients()) v.emplace_back(c);
  return RationalPolynomial(std::move(v));
}

std::optional<IntPolynomial> to_integer(const RationalPolynomial& f) {
  std::vector<Integer> v;
  v.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients()) {
    if (c.get_den() != 1) return std::nullopt;
    v.emplace_back(c.get_num());
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial primitive_part(const RationalPolynomial& f) {
  if (f.is_zero()) return {};
  Integer den = 1;
  for (const auto& c : f.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> v;
  Integer content = 0;
  for (const auto& c : f.coefficients()) {
    Integer x = c.get_num() * (den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
    v.push_back(x);
  }
  if (f.leading() < 0) content = -content;
  for (auto& x : v) x /= content;
  return IntPolynomial(std::move(v));
}

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                         const RationalPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {RationalPolynomial{}, a};
  std::vector<Rational> rem(a.coefficients());
  const auto& bc = b.coefficients();
  const int db = b.degree();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  for (int i = a.degree(); i >= db; --i) {
    Rational c = rem[static_cast<std::size_t>(i)] / b.leading();
    quo[static_cast<std::size_t>(i - db)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * bc[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RationalPolynomial(std::move(quo)), RationalPolynomial(std::move(rem))};
}

namespace {

RationalPolynomial make_monic(const RationalPolynomial& f) {
  if (f.is_zero()) return f;
  Rational inv = 1 / f.leading();
  return inv * f;
}

}  // namespace

RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.is_zero()) {
    RationalPolynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  auto [quo, rem] = divmod(to_rational(a), to_rational(b));
  if (!rem.is_zero()) return std::nullopt;
  return to_integer(quo);
}

RationalPolynomial squarefree_part(const RationalPolynomial& f) {
  if (f.degree() <= 0) return make_monic(f);
  RationalPolynomial g = gcd(f, f.derivative());
  return make_monic(divmod(f, g).first);
}

std::vector<RationalPolynomial> squarefree_decomposition(const RationalPolynomial& f) {
  std::vector<RationalPolynomial> out;
  if (f.degree() <= 0) return out;
  RationalPolynomial a = make_monic(f);
  RationalPolynomial b = a.derivative();
  RationalPolynomial c = gcd(a, b);
  RationalPolynomial w = divmod(a, c).first;
  RationalPolynomial y = divmod(b, c).first;
  RationalPolynomial z = y - w.derivative();
  while (w.degree() > 0) {
    RationalPolynomial g = gcd(w, z);
    out.push_back(g);
    w = divmod(w, g).first;
    y = divmod(z, g).first;
    z = y - w.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

Integer resultant(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const int m = a.degree();
  const int n = b.degree();
  if (m == 0 && n == 0) return 1;
  if (m == 0) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), a[0].get_mpz_t(), static_cast<unsigned long>(n));
    return r;
  }
  if (n == 0) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b[0].get_mpz_t(), static_cast<unsigned long>(m));
    return r;
  }
  const int size = m + n;
  std::vector<std::vector<Integer>> mat(static_cast<std::size_t>(size),
                                        std::vector<Integer>(static_cast<std::size_t>(size), Integer(0)));
  for (int row = 0; row < n; ++row)
    for (int j = 0; j <= m; ++j) mat[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + j)] = a[static_cast<std::size_t>(m - j)];
  for (int row = 0; row < m; ++row)
    for (int j = 0; j <= n; ++j)
      mat[static_cast<std::size_t>(n + row)][static_cast<std::size_t>(row + j)] = b[static_cast<std::size_t>(n - j)];

  // Bareiss fraction-free elimination.
  Integer prev = 1;
  int sign = 1;
  const auto sz = static_cast<std::size_t>(size);
  for (std::size_t k = 0; k + 1 < sz; ++k) {
    if (mat[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < sz && mat[swap_row][k] == 0) ++swap_row;
      if (swap_row == sz) return 0;
      std::swap(mat[k], mat[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < sz; ++i) {
      for (std::size_t j = k + 1; j < sz; ++j) {
        Integer t = mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j];
        mpz_divexact(mat[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      mat[i][k] = 0;
    }
    prev = mat[k][k];
  }
  Integer det = mat[sz - 1][sz - 1];
  return sign > 0 ? det : Integer(-det);
}

Integer discriminant(const IntPolynomial& f) {
  const int d = f.degree();
  if (d < 1) throw std::invalid_argument("discriminant of a constant");
  if (d == 1) return 1;
  Integer r = resultant(f, f.derivative());
  Integer out;
  mpz_divexact(out.get_mpz_t(), r.get_mpz_t(), f.leading().get_mpz_t());
  if ((d * (d - 1) / 2) % 2 == 1) out = -out;
  return out;
}

// ---------------------------------------------------------------------------
// SurdValue

SurdValue::SurdValue(const Rational& a) : a_(a), b_(0), m_(1) {}

SurdValue::SurdValue(const Rational& a, const Rational& b, const Integer& m) : a_(a), b_(b), m_(m) {
  if (m_ <= 0) throw std::invalid_argument("surd radicand must be positive");
  if (b_ == 0) {
    m_ = 1;
    return;
  }
  if (auto r = integer_kth_root(m_, 2)) {
    a_ += b_ * *r;
    b_ = 0;
    m_ = 1;
  }
}

SurdValue::SurdValue(Rational a, Rational b, Integer m, Normalized)
    : a_(std::move(a)), b_(std::move(b)), m_(std::move(m)) {
  if (b_ == 0) m_ = 1;
}

int SurdValue::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with b^2 m.
  Rational lhs = a_ * a_;
  Rational rhs = b_ * b_ * m_;
  int c = cmp(lhs, rhs);
  if (c == 0) return 0;
  return c > 0 ? sa : sb;
}

double SurdValue::approx() const { return a_.get_d() + b_.get_d() * std::sqrt(m_.get_d()); }

namespace {

Integer common_radicand(const SurdValue& x, const SurdValue& y) {
  if (x.is_rational()) return y.radicand();
  if (y.is_rational()) return x.radicand();
  if (x.radicand() != y.radicand()) throw std::domain_error("surd arithmetic across different quadratic fields");
  return x.radicand();
}

}  // namespace

SurdValue operator+(const SurdValue& x, const SurdValue& y) {
  Integer m = common_radicand(x, y);
  return SurdValue(x.a_ + y.a_, x.b_ + y.b_, m, SurdValue::Normalized{});
}

SurdValue operator-(const SurdValue& x, const SurdValue& y) {
  Integer m = common_radicand(x, y);
  return SurdValue(x.a_ - y.a_, x.b_ - y.b_, m, SurdValue::Normalized{});
}

SurdValue operator*(const SurdValue& x, const SurdValue& y) {
  Integer m = common_radicand(x, y);
  Rational a = x.a_ * y.a_ + x.b_ * y.b_ * m;
  Rational b = x.a_ * y.b_ + x.b_ * y.a_;
  return SurdValue(a, b, m, SurdValue::Normalized{});
}

std::string SurdValue::to_string() const {
  if (is_rational()) return a_.get_str();
  std::ostringstream os;
  os << a_.get_str() << (b_ < 0 ? " - " : " + ") << Rational(abs(b_)).get_str() << "*sqrt(" << m_.get_str() << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// Sturm sequences

namespace {

int sign_variations(const std::vector<RationalPolynomial>& chain, const SurdValue& x) {
  int variations = 0;
  int last = 0;
  for (const auto& p : chain) {
    int s = p.evaluate(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

}  // namespace

int sturm_count(const RationalPolynomial& f, const SurdValue& lo, const SurdValue& hi) {
  if (f.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("sturm_count: empty interval");
  if (f.degree() == 0) return 0;
  if (gcd(f, f.derivative()).degree() > 0) throw std::invalid_argument("sturm_count: polynomial is not squarefree");
  std::vector<RationalPolynomial> chain{f, f.derivative()};
  while (true) {
    RationalPolynomial r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

// ---------------------------------------------------------------------------
// Integer utilities

std::optional<Integer> integer_kth_root(const Integer& x, unsigned long k) {
  if (k == 0) throw std::invalid_argument("integer_kth_root: k must be positive");
  if (x < 0) return std::nullopt;
  Integer r;
  if (mpz_root(r.get_mpz_t(), x.get_mpz_t(), k) == 0) return std::nullopt;
  return r;
}

Integer floor_sqrt(const Integer& x) {
  if (x < 0) throw std::domain_error("floor_sqrt of a negative number");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

bool is_prime(const Integer& x) {
  if (x < 2) return false;
  return mpz_probab_prime_p(x.get_mpz_t(), 40) > 0;
}

std::optional<PrimePower> prime_power_decompose(const Integer& q) {
  if (q < 2) return std::nullopt;
  Integer p = 0;
  constexpr unsigned long kTrialLimit = 1000000;
  for (unsigned long d = 2; d <= kTrialLimit; d += (d == 2 ? 1 : 2)) {
    if (Integer(d) * d > q) break;
    if (mpz_divisible_ui_p(q.get_mpz_t(), d)) {
      p = d;
      break;
    }
  }
  if (p == 0) {
    // No small factor: q is prime or a power of a prime above the trial limit.
    for (unsigned long k = static_cast<unsigned long>(mpz_sizeinbase(q.get_mpz_t(), 2)); k >= 1; --k) {
      if (auto r = integer_kth_root(q, k); r && is_prime(*r)) return PrimePower{*r, static_cast<int>(k)};
    }
    return std::nullopt;
  }
  Integer rest = q;
  int n = 0;
  while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
    rest /= p;
    ++n;
  }
  if (rest != 1) return std::nullopt;
  return PrimePower{p, n};
}

namespace {

Integer pollard_brent(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1;
    constexpr unsigned long m = 128;
    auto step = [&](const Integer& v) {
      Integer t = v * v + c;
      Integer out;
      mpz_mod(out.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      return out;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          Integer diff = abs(x - y);
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Integer& n, std::vector<Integer>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  Integer d = pollard_brent(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

}  // namespace

std::vector<std::pair<Integer, int>> factorize(const Integer& x) {
  if (x == 0) throw std::invalid_argument("factorize(0)");
  Integer n = abs(x);
  std::vector<Integer> primes;
  for (unsigned long d = 2; d < 10000; d += (d == 2 ? 1 : 2)) {
    if (Integer(d) * d > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      primes.emplace_back(d);
      n /= d;
    }
  }
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Integer, int>> out;
  for (const auto& p : primes) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1);
    }
  }
  return out;
}

std::vector<Integer> divisors(const Integer& x) {
  std::vector<Integer> out{1};
  for (const auto& [p, e] : factorize(x)) {
    const std::size_t base = out.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace weil3
