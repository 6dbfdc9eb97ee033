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

#include "weil3/padic.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace weil3 {

long Valuation::value() const {
  if (infinite_) throw std::logic_error("valuation of zero is infinite");
  return value_;
}

Valuation valuation(const Integer& x, const Integer& p) {
  if (x == 0) return Valuation::infinity();
  Integer rest;
  return Valuation::finite(static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t())));
}

// ---------------------------------------------------------------------------
// Newton polygons

std::vector<Rational> NewtonPolygon::root_valuations() const {
  std::vector<Rational> out;
  for (const auto& s : segments)
    for (int k = 0; k < s.length; ++k) out.push_back(s.slope);
  return out;
}

NewtonPolygon newton_polygon(const IntPolynomial& f, const Integer& p) {
  if (f.is_zero()) throw std::invalid_argument("Newton polygon of the zero polynomial");
  std::vector<NewtonVertex> pts;
  for (int i = 0; i <= f.degree(); ++i) {
    const Valuation v = valuation(f[static_cast<std::size_t>(i)], p);
    if (!v.is_infinite()) pts.push_back({i, v.value()});
  }
  // Monotone chain, lower hull; collinear interior points are dropped.
  std::vector<NewtonVertex> hull;
  for (const auto& c : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      const long cross = (b.i - a.i) * (c.v - b.v) - (b.v - a.v) * (c.i - b.i);
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.push_back(c);
  }
  NewtonPolygon g;
  g.zero_roots = hull.front().i;
  g.vertices = hull;
  for (std::size_t k = hull.size(); k-- > 1;) {
    const auto& a = hull[k - 1];
    const auto& b = hull[k];
    g.segments.push_back({Rational(a.v - b.v, b.i - a.i), b.i - a.i});
  }
  for (auto& s : g.segments) s.slope.canonicalize();
  return g;
}

const char* to_string(PolygonType t) {
  switch (t) {
    case PolygonType::Ordinary:
      return "Ordinary";
    case PolygonType::PRank2:
      return "PRank2";
    case PolygonType::PRank1:
      return "PRank1";
    case PolygonType::OneThird:
      return "OneThird";
    case PolygonType::Supersingular:
      return "Supersingular";
    case PolygonType::Other:
      return "Other";
  }
  return "Other";
}

PolygonType polygon_type(const NewtonPolygon& g, int n) {
  if (g.degree() != 6 || g.zero_roots != 0) throw std::invalid_argument("polygon_type expects a sextic with p(0) != 0");
  if (n < 1) throw std::invalid_argument("polygon_type: n must be positive");
  std::map<Rational, int> shape;
  for (const auto& s : g.segments) shape[s.slope / n] += s.length;
  using Shape = std::map<Rational, int>;
  const Rational half(1, 2);
  const std::pair<PolygonType, Shape> table[] = {
      {PolygonType::Ordinary, {{0, 3}, {1, 3}}},
      {PolygonType::PRank2, {{0, 2}, {half, 2}, {1, 2}}},
      {PolygonType::PRank1, {{0, 1}, {half, 4}, {1, 1}}},
      {PolygonType::OneThird, {{Rational(1, 3), 3}, {Rational(2, 3), 3}}},
      {PolygonType::Supersingular, {{half, 6}}},
  };
  for (const auto& [type, expected] : table)
    if (shape == expected) return type;
  return PolygonType::Other;
}

// ---------------------------------------------------------------------------
// Polynomials over F_p, enough to find roots.

namespace {

using FpPoly = std::vector<Integer>;  // ascending, trimmed

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Integer mod(const Integer& x, const Integer& p) {
  Integer r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
  return r;
}

Integer inverse(const Integer& x, const Integer& p) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()) == 0) throw std::logic_error("non-invertible residue");
  return r;
}

FpPoly reduce(const IntPolynomial& f, const Integer& p) {
  FpPoly a;
  for (const auto& c : f.coefficients()) a.push_back(mod(c, p));
  trim(a);
  return a;
}

// a mod b, b nonzero.
FpPoly fp_rem(FpPoly a, const FpPoly& b, const Integer& p) {
  const Integer inv = inverse(b.back(), p);
  const std::size_t db = b.size() - 1;
  while (a.size() > db && !a.empty()) {
    const Integer c = mod(a.back() * inv, p);
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] = mod(a[shift + j] - c * b[j], p);
    trim(a);
  }
  return a;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, const Integer& p) {
  if (a.empty() || b.empty()) return {};
  FpPoly c(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  for (auto& x : c) x = mod(x, p);
  trim(c);
  return fp_rem(std::move(c), m, p);
}

FpPoly fp_powmod(FpPoly base, Integer e, const FpPoly& m, const Integer& p) {
  FpPoly result{Integer(1)};
  result = fp_rem(result, m, p);
  base = fp_rem(std::move(base), m, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = fp_mulmod(result, base, m, p);
    base = fp_mulmod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, const Integer& p) {
  while (!b.empty()) {
    FpPoly r = fp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Integer inv = inverse(a.back(), p);
    for (auto& x : a) x = mod(x * inv, p);
  }
  return a;
}

FpPoly fp_sub(FpPoly a, const FpPoly& b, const Integer& p) {
  if (a.size() < b.size()) a.resize(b.size(), Integer(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod(a[i] - b[i], p);
  trim(a);
  return a;
}

FpPoly fp_div(FpPoly a, const FpPoly& b, const Integer& p) {
  const Integer inv = inverse(b.back(), p);
  const std::size_t db = b.size() - 1;
  FpPoly q(a.size() >= b.size() ? a.size() - db : 0, Integer(0));
  while (a.size() > db && !a.empty()) {
    const Integer c = mod(a.back() * inv, p);
    const std::size_t shift = a.size() - 1 - db;
    q[shift] = c;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] = mod(a[shift + j] - c * b[j], p);
    trim(a);
  }
  trim(q);
  return q;
}

// h is monic, squarefree and splits into distinct linear factors.
void split_linear(const FpPoly& h, const Integer& p, std::mt19937_64& rng, std::vector<Integer>& roots) {
  if (h.size() <= 1) return;
  if (h.size() == 2) {
    roots.push_back(mod(-h[0] * inverse(h[1], p), p));
    return;
  }
  const Integer half = (p - 1) / 2;
  while (true) {
    Integer a = static_cast<unsigned long>(rng());
    a = mod(a, p);
    FpPoly probe = fp_powmod({a, Integer(1)}, half, h, p);
    FpPoly g = fp_gcd(h, fp_sub(probe, {Integer(1)}, p), p);
    if (g.size() > 1 && g.size() < h.size()) {
      split_linear(g, p, rng, roots);
      split_linear(fp_div(h, g, p), p, rng, roots);
      return;
    }
  }
}

constexpr unsigned long kBruteForceLimit = 1024;

}  // namespace

std::vector<Integer> roots_mod_p(const IntPolynomial& f, const Integer& p) {
  FpPoly a = reduce(f, p);
  if (a.empty()) throw std::invalid_argument("roots_mod_p: polynomial vanishes mod p");
  std::vector<Integer> roots;
  if (a.size() == 1) return roots;
  if (p <= kBruteForceLimit) {
    for (Integer x = 0; x < p; ++x) {
      Integer acc = 0;
      for (auto it = a.rbegin(); it != a.rend(); ++it) acc = mod(acc * x + *it, p);
      if (acc == 0) roots.push_back(x);
    }
    return roots;
  }
  // gcd(f, x^p - x) collects the distinct linear factors.
  const Integer inv = inverse(a.back(), p);
  for (auto& c : a) c = mod(c * inv, p);
  FpPoly xp = fp_powmod({Integer(0), Integer(1)}, p, a, p);
  FpPoly h = fp_gcd(a, fp_sub(xp, {Integer(0), Integer(1)}, p), p);
  std::mt19937_64 rng(0x5eed);
  split_linear(h, p, rng, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

// ---------------------------------------------------------------------------
// Root existence in Z_p

namespace {

// h(r + p u) with the p-content divided out.
IntPolynomial shift_and_rescale(const IntPolynomial& h, const Integer& r, const Integer& p) {
  // Taylor shift by r, then scale the variable by p.
  std::vector<Integer> c(h.coefficients());
  const std::size_t d = c.size();
  for (std::size_t i = 0; i + 1 < d; ++i)
    for (std::size_t j = d - 1; j > i; --j) c[j - 1] += r * c[j];
  Integer pk = 1;
  for (auto& x : c) {
    x *= pk;
    pk *= p;
  }
  long content = -1;
  for (const auto& x : c) {
    const Valuation v = valuation(x, p);
    if (!v.is_infinite() && (content < 0 || v.value() < content)) content = v.value();
  }
  Integer scale;
  mpz_pow_ui(scale.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(content));
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), scale.get_mpz_t());
  return IntPolynomial(std::move(c));
}

bool has_root_in_class(const IntPolynomial& h, const Integer& p, bool units_only, int depth, int depth_cap) {
  if (depth > depth_cap) throw std::logic_error("p-adic root search exceeded its depth bound");
  const IntPolynomial dh = h.derivative();
  for (const Integer& r : roots_mod_p(h, p)) {
    if (units_only && r == 0) continue;
    if (!mpz_divisible_p(Integer(dh.evaluate(r)).get_mpz_t(), p.get_mpz_t())) return true;  // Hensel
    if (has_root_in_class(shift_and_rescale(h, r, p), p, false, depth + 1, depth_cap)) return true;
  }
  return false;
}

}  // namespace

bool zp_root_exists(const IntPolynomial& f, const Integer& p, const Rational& target) {
  if (!f.is_monic()) throw std::invalid_argument("zp_root_exists: polynomial must be monic");
  Rational target_valuation = target;
  target_valuation.canonicalize();  // callers may pass e.g. 2/2
  if (target_valuation < 0) throw std::invalid_argument("zp_root_exists: negative valuation");
  if (target_valuation.get_den() != 1) return false;
  if (!target_valuation.get_num().fits_slong_p()) throw std::invalid_argument("zp_root_exists: valuation too large");
  const long v = target_valuation.get_num().get_si();

  // Drop the roots at 0 and repeated roots; neither changes the answer.
  std::size_t low = 0;
  while (f[low] == 0) ++low;
  std::vector<Integer> stripped(f.coefficients().begin() + static_cast<long>(low), f.coefficients().end());
  auto sf = to_integer(squarefree_part(to_rational(IntPolynomial(std::move(stripped)))));
  if (!sf) throw std::logic_error("squarefree part of a monic integer polynomial is not integral");
  if (sf->degree() < 1) return false;

  // g(u) = sf(p^v u) / p^c has unit roots exactly where sf has roots of valuation v.
  std::vector<Integer> c(sf->coefficients());
  Integer pv;
  mpz_pow_ui(pv.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(v));
  Integer scale = 1;
  for (auto& x : c) {
    x *= scale;
    scale *= pv;
  }
  long content = -1;
  for (const auto& x : c) {
    const Valuation cv = valuation(x, p);
    if (!cv.is_infinite() && (content < 0 || cv.value() < content)) content = cv.value();
  }
  Integer div;
  mpz_pow_ui(div.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(content));
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), div.get_mpz_t());
  const IntPolynomial g(std::move(c));

  // Two roots of a node polynomial at depth j sharing a residue are closer
  // than p^-(j+v); the discriminant of the monic sf bounds that distance.
  const Valuation dv = valuation(discriminant(*sf), p);
  const int cap = static_cast<int>(dv.value()) + 1;
  return has_root_in_class(g, p, true, 0, cap);
}

bool has_qp_root(const IntPolynomial& f, const Integer& p) {
  if (!f.is_monic()) throw std::invalid_argument("has_qp_root: polynomial must be monic");
  if (f.degree() < 1) return false;
  if (f[0] == 0) return true;
  // Roots of a monic integer polynomial are integral; their valuations are
  // the polygon slopes.
  for (const auto& s : newton_polygon(f, p).segments) {
    if (s.slope.get_den() == 1 && zp_root_exists(f, p, s.slope)) return true;
  }
  return false;
}

}  // namespace weil3
