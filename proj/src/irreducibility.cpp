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

#include "weil3/irreducibility.hpp"

#include <stdexcept>

namespace weil3 {

IntPolynomial real_weil_cubic(const WeilCandidate& w) {
  return IntPolynomial({w.a3 - 2 * w.q * w.a1, w.a2 - 3 * w.q, w.a1, Integer(1)});
}

CardanData cardan_quantities(const WeilCandidate& w) {
  const Rational a1(w.a1);
  const Rational a2(w.a2);
  const Rational q(w.q);
  CardanData c;
  c.r = -a1 * a1 / 3 + a2 - 3 * q;
  c.s = Rational(2, 27) * a1 * a1 * a1 - a1 * a2 / 3 - q * a1 + Rational(w.a3);
  c.delta = c.s * c.s - Rational(4, 27) * c.r * c.r * c.r;
  c.u_rational_part = -c.s / 2;
  c.u_radicand = c.delta;
  return c;
}

namespace {

template <class Visit>
std::optional<Integer> scan_integer_roots(const IntPolynomial& f, Visit&& visit) {
  if (!f.is_monic()) throw std::invalid_argument("integer_roots: polynomial must be monic");
  if (f.degree() < 1) return std::nullopt;
  std::size_t low = 0;
  while (f[low] == 0) ++low;
  if (low > 0 && visit(Integer(0))) return Integer(0);
  if (static_cast<int>(low) == f.degree()) return std::nullopt;
  // Nonzero roots divide the lowest nonzero coefficient.
  for (const Integer& d : divisors(f[low])) {
    for (const Integer& cand : {d, Integer(-d)}) {
      if (f.evaluate(cand) == 0 && visit(cand)) return cand;
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<Integer> integer_roots(const IntPolynomial& f) {
  std::vector<Integer> roots;
  scan_integer_roots(f, [&](const Integer& r) {
    roots.push_back(r);
    return false;
  });
  return roots;
}

std::optional<Integer> first_integer_root(const IntPolynomial& f) {
  return scan_integer_roots(f, [](const Integer&) { return true; });
}

bool is_irreducible(const WeilCandidate& w) {
  if (special_form_check(w)) return false;
  if (auto s = integer_kth_root(w.q, 2)) {
    const IntPolynomial p = w.polynomial();
    if (p.evaluate(*s) == 0 || p.evaluate(Integer(-*s)) == 0) return false;
  }
  return !first_integer_root(real_weil_cubic(w)).has_value();
}

std::optional<std::pair<IntPolynomial, IntPolynomial>> weil_factorization(const WeilCandidate& w) {
  if (auto beta = special_form_check(w)) {
    const IntPolynomial t2q({-w.q, Integer(0), Integer(1)});
    return std::make_pair(t2q * t2q, IntPolynomial({w.q, *beta, Integer(1)}));
  }
  auto root = first_integer_root(real_weil_cubic(w));
  if (!root) return std::nullopt;
  const IntPolynomial factor({w.q, Integer(-*root), Integer(1)});
  auto cofactor = divide_exact(w.polynomial(), factor);
  if (!cofactor) throw std::logic_error("real cubic root does not yield a factor of p(t)");
  return std::make_pair(factor, *cofactor);
}

}  // namespace weil3
