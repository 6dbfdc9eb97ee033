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

#include "weil3/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace weil3 {

namespace {

constexpr int kMaxIterations = 500;

long double to_long_double(const Rational& x) {
  // Monic factors of monic integer polynomials have integer coefficients,
  // so the numerator carries the value.
  if (x.get_den() == 1) return static_cast<long double>(x.get_num().get_d());
  return static_cast<long double>(x.get_d());
}

// Simultaneous Newton with the Aberth correction, updated in place.
std::vector<Complex> aberth(const std::vector<long double>& c) {
  const std::size_t d = c.size() - 1;
  if (d == 1) return {Complex(-c[0] / c[1], 0)};

  long double r0 = std::pow(std::fabs(c[0] / c[d]), 1.0L / static_cast<long double>(d));
  if (r0 == 0) r0 = 1;
  std::vector<Complex> z(d);
  for (std::size_t k = 0; k < d; ++k) {
    const long double angle = 2 * std::numbers::pi_v<long double> * static_cast<long double>(k) /
                                  static_cast<long double>(d) +
                              0.4L;
    z[k] = std::polar(r0, angle);
  }

  // A root is final once |p(z)| is within the rounding error of Horner's
  // scheme at z; near-multiple roots never reach a small step size.
  const long double eps = 8 * std::numeric_limits<long double>::epsilon();
  std::vector<bool> done(d, false);
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    bool all_done = true;
    for (std::size_t k = 0; k < d; ++k) {
      if (done[k]) continue;
      Complex pv(c[d], 0);
      Complex dv(0, 0);
      long double scale = std::fabs(c[d]);
      const long double az = std::abs(z[k]);
      for (std::size_t i = d; i-- > 0;) {
        dv = dv * z[k] + pv;
        pv = pv * z[k] + c[i];
        scale = scale * az + std::fabs(c[i]);
      }
      if (std::abs(pv) <= eps * scale) {
        done[k] = true;
        continue;
      }
      all_done = false;
      const Complex ratio = pv / dv;
      Complex repulsion(0, 0);
      for (std::size_t j = 0; j < d; ++j)
        if (j != k) repulsion += 1.0L / (z[k] - z[j]);
      z[k] -= ratio / (1.0L - ratio * repulsion);
    }
    if (all_done) return z;
  }
  throw std::runtime_error("Aberth iteration did not converge");
}

// Greedy matching of each root with the nearest conjugate.
std::vector<std::size_t> pair_conjugates(const std::vector<Complex>& roots, long double tol) {
  const std::size_t none = roots.size();
  std::vector<std::size_t> pairing(roots.size(), none);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (pairing[i] != none) continue;
    const Complex target = std::conj(roots[i]);
    std::size_t best = none;
    long double best_dist = 0;
    for (std::size_t j = i; j < roots.size(); ++j) {
      if (pairing[j] != none) continue;
      const long double dist = std::abs(roots[j] - target);
      if (best == none || dist < best_dist) {
        best = j;
        best_dist = dist;
      }
    }
    if (best_dist > tol * std::max(1.0L, std::abs(roots[i])))
      throw std::runtime_error("numeric roots are not closed under conjugation");
    pairing[i] = best;
    pairing[best] = i;
  }
  return pairing;
}

RootSet roots_with_pairing(const IntPolynomial& f, long double pair_tol) {
  if (f.degree() < 1) throw std::invalid_argument("numeric_roots: polynomial must be non-constant");
  RootSet out;
  const auto parts = squarefree_decomposition(to_rational(f));
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const RationalPolynomial& g = parts[k];
    if (g.degree() < 1) continue;
    std::vector<long double> c;
    c.reserve(g.coefficients().size());
    for (const Rational& x : g.coefficients()) c.push_back(to_long_double(x));
    for (const Complex& z : aberth(c))
      for (std::size_t m = 0; m <= k; ++m) out.roots.push_back(z);
  }
  out.pairing = pair_conjugates(out.roots, pair_tol);
  return out;
}

}  // namespace

RootSet numeric_roots(const IntPolynomial& f) { return roots_with_pairing(f, 1e-6L); }

bool numeric_weil_check(const WeilCandidate& w, double tol) {
  if (!(tol >= 1e-12 && tol <= 1e-6)) throw std::invalid_argument("numeric_weil_check: tol must lie in [1e-12, 1e-6]");
  const long double root_q = std::sqrt(static_cast<long double>(w.q.get_d()));
  const RootSet rs = numeric_roots(w.polynomial());
  for (const Complex& z : rs.roots)
    if (!(std::fabs(std::abs(z) - root_q) < static_cast<long double>(tol) * root_q)) return false;
  return true;
}

bool sturm_weil_check(const WeilCandidate& w) {
  // p(t) = prod (t^2 + x_i t + q) gives e1 = a1, e2 = a2 - 3q, e3 = a3 - 2q a1
  // for the elementary symmetric functions of the x_i.
  const Rational q(w.q);
  const RationalPolynomial cubic({Rational(w.a3) - 2 * q * Rational(w.a1), Rational(w.a2) - 3 * q, Rational(w.a1),
                                  Rational(1)});
  const SurdValue bound(Rational(0), Rational(2), w.q);
  const SurdValue lower = -bound;
  const auto parts = squarefree_decomposition(cubic);
  int total = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const RationalPolynomial& g = parts[k];
    if (g.degree() < 1) continue;
    int inside = sturm_count(g, lower, bound);
    if (g.evaluate(lower).sign() == 0) ++inside;
    total += static_cast<int>(k + 1) * inside;
  }
  return total == 3;
}

std::optional<std::pair<IntPolynomial, IntPolynomial>> numeric_factor_search(const IntPolynomial& f, double tol) {
  if (f.degree() != 6 || !f.is_monic()) throw std::invalid_argument("numeric_factor_search: f must be monic of degree 6");
  const RootSet rs = roots_with_pairing(f, static_cast<long double>(tol) * 1e3L);
  const std::size_t d = rs.roots.size();
  for (unsigned mask = 1; mask + 1 < (1u << d); ++mask) {
    bool closed = true;
    for (std::size_t i = 0; i < d && closed; ++i)
      if ((mask >> i & 1u) && !(mask >> rs.pairing[i] & 1u)) closed = false;
    if (!closed) continue;

    std::vector<Complex> prod{Complex(1, 0)};
    for (std::size_t i = 0; i < d; ++i) {
      if (!(mask >> i & 1u)) continue;
      std::vector<Complex> next(prod.size() + 1, Complex(0, 0));
      for (std::size_t j = 0; j < prod.size(); ++j) {
        next[j + 1] += prod[j];
        next[j] -= prod[j] * rs.roots[i];
      }
      prod = std::move(next);
    }

    std::vector<Integer> coeffs;
    bool integral = true;
    for (const Complex& c : prod) {
      const long double rounded = std::round(c.real());
      if (std::fabs(c.real() - rounded) > 0.25L || std::fabs(c.imag()) > 0.25L) {
        integral = false;
        break;
      }
      coeffs.emplace_back(static_cast<double>(rounded));
    }
    if (!integral) continue;
    IntPolynomial g(std::move(coeffs));
    if (auto h = divide_exact(f, g)) return std::make_pair(std::move(g), std::move(*h));
  }
  return std::nullopt;
}

namespace {

long vp(const Integer& x, const Integer& p) {
  Integer rest = x;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

// g(x) mod m by Horner, reducing as it goes; `acc` is scratch.
const Integer& residue_mod(const IntPolynomial& g, const Integer& x, const Integer& m, Integer& acc) {
  const auto& c = g.coefficients();
  acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    mpz_mul(acc.get_mpz_t(), acc.get_mpz_t(), x.get_mpz_t());
    mpz_add(acc.get_mpz_t(), acc.get_mpz_t(), it->get_mpz_t());
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
  }
  return acc;
}

struct OpenClass {
  Integer x;  // representative in [0, p^k)
  int k;
};

}  // namespace

TowerResult lifting_tower(const IntPolynomial& f, const Integer& p, int max_depth) {
  if (!f.is_monic()) throw std::invalid_argument("lifting_tower: polynomial must be monic");
  if (max_depth < 1) throw std::invalid_argument("lifting_tower: max_depth must be positive");
  TowerResult out;
  out.resolved = true;
  if (f.degree() < 1) return out;
  std::vector<Integer> g = primitive_part(squarefree_part(to_rational(f))).coefficients();
  if (g.front() == 0) {
    // Squarefree, so t divides g once.
    out.zero_root = true;
    g.erase(g.begin());
  }
  if (g.size() < 2) return out;

  // A nonzero root r has v(r) <= v(g(0)). For each candidate v, the roots of
  // valuation v are the unit roots of g(p^v u), so only unit classes u are lifted.
  const long top = vp(g.front(), p);
  Integer acc;
  for (long v = 0; v <= top; ++v) {
    std::vector<Integer> hc(g.size());
    Integer pv;
    mpz_pow_ui(pv.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(v));
    Integer scale = 1;
    for (std::size_t i = 0; i < g.size(); ++i, scale *= pv) hc[i] = g[i] * scale;
    const IntPolynomial h = primitive_part(to_rational(IntPolynomial(std::move(hc))));
    const IntPolynomial dh = h.derivative();

    std::vector<OpenClass> open;
    for (Integer u = 1; u < p; ++u)
      if (residue_mod(h, u, p, acc) == 0) open.push_back({u, 1});
    while (!open.empty()) {
      OpenClass cls = std::move(open.back());
      open.pop_back();
      out.depth = std::max(out.depth, cls.k);
      const Integer hx = h.evaluate(cls.x);
      const Integer dx = dh.evaluate(cls.x);
      if (dx != 0) {
        const long b = vp(dx, p);
        // Hensel with b = v(h'(x)) < k: a unique root r has v(r - x) >= v(h(x)) - b,
        // so it lies in this class once v(h(x)) >= k + b. Weaker bounds would let
        // neighbouring classes certify the same root.
        if (cls.k > b && (hx == 0 || vp(hx, p) >= cls.k + b)) {
          out.valuations.push_back(v);
          continue;
        }
      }
      if (cls.k >= max_depth) {
        out.resolved = false;
        continue;
      }
      Integer pk;
      mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(cls.k));
      const Integer pk1 = pk * p;
      Integer y = cls.x;
      for (Integer digit = 0; digit < p; ++digit, y += pk)
        if (residue_mod(h, y, pk1, acc) == 0) open.push_back({y, cls.k + 1});
    }
  }
  std::sort(out.valuations.begin(), out.valuations.end());
  return out;
}

}  // namespace weil3
