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

#ifndef WEIL3_IRREDUCIBILITY_HPP
#define WEIL3_IRREDUCIBILITY_HPP

#include <optional>
#include <vector>

#include "weil3/exactmath.hpp"
#include "weil3/weilcheck.hpp"

namespace weil3 {

/// f(t) = t^3 + a1 t^2 + (a2 - 3q) t + (a3 - 2q a1), so that
/// p(t) = prod (t^2 + x_i t + q) with f(t) = prod (t + x_i).
IntPolynomial real_weil_cubic(const WeilCandidate& w);

/// Depressed-cubic data of f: f(t) = h(t + a1/3) with h(t) = t^3 + r t + s,
/// delta = s^2 - 4 r^3 / 27 and u = (-s + sqrt(delta)) / 2.
struct CardanData {
  Rational r;
  Rational s;
  Rational delta;
  Rational u_rational_part;  // -s/2
  Rational u_radicand;       // delta; u = u_rational_part + sqrt(u_radicand) / 2
};

CardanData cardan_quantities(const WeilCandidate& w);

/// Distinct integer roots of a monic integer polynomial, by trial over the
/// divisors of the constant term in order 0, 1, -1, 2, -2, ...
/// Throws std::invalid_argument for non-monic input.
std::vector<Integer> integer_roots(const IntPolynomial& f);

/// First integer root in the same trial order, if any.
std::optional<Integer> first_integer_root(const IntPolynomial& f);

/// Irreducibility of p(t) over Q for a Weil candidate.
bool is_irreducible(const WeilCandidate& w);

/// An explicit factorisation p = first * second when p(t) is reducible:
/// the special form gives (t^2 - q)^2 and t^2 + beta t + q, otherwise an
/// integer root -x of the real cubic gives the factor t^2 + x t + q.
std::optional<std::pair<IntPolynomial, IntPolynomial>> weil_factorization(const WeilCandidate& w);

}  // namespace weil3

#endif  // WEIL3_IRREDUCIBILITY_HPP
