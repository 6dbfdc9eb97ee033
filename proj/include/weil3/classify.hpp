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

#ifndef WEIL3_CLASSIFY_HPP
#define WEIL3_CLASSIFY_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "weil3/exactmath.hpp"
#include "weil3/padic.hpp"
#include "weil3/weilcheck.hpp"

namespace weil3 {

/// beta when p(t) = (t^2 + beta t + q)^3.
std::optional<Integer> detect_cube_of_quadratic(const WeilCandidate& w);

/// Whether (t^2 + beta t + q)^3 is the characteristic polynomial of a simple
/// threefold: 3 | n and beta = a q^(1/3) with gcd(a, p) = 1. False when
/// beta^2 >= 4q, where t^2 + beta t + q has real roots.
bool xing_e3_is_char(const Integer& q, const Integer& p, int n, const Integer& beta);

/// Phi_m for m in {7, 9, 28, 36}; throws std::invalid_argument otherwise.
IntPolynomial build_cyclotomic(int m);

enum class SupersingularFamily { Zeta7, Zeta9, Zeta28, Zeta36 };

const char* to_string(SupersingularFamily f);

/// A supersingular sextic sqrt(q)-scaled root-of-unity pattern; sign is the
/// sign of the leading odd coefficient (a1, or a3 when a1 = 0).
struct SupersingularForm {
  SupersingularFamily family;
  int sign = 1;
};

/// The pattern of (a1, a2, a3) with its side conditions, if any matches.
std::optional<SupersingularForm> match_supersingular_form(const WeilCandidate& w);

/// Checks p(t) against the cyclotomic polynomial it comes from:
/// p(t) = q^3 Phi_m(+-t/sqrt(q)) for m = 7, 9 and
/// p(t) p(-t) = q^6 Phi_m(t/sqrt(q)) for m = 28, 36, as exact integer identities.
bool cyclotomic_identity_holds(const WeilCandidate& w, SupersingularFamily family);

/// True iff w is one of the listed supersingular characteristic polynomials.
/// Throws std::logic_error if a matched pattern fails its cyclotomic identity.
bool supersingular_list_check(const WeilCandidate& w);

struct NotWeil {
  int failed_condition = 0;
};
struct ReducibleWeil {
  std::vector<IntPolynomial> factors;
};
struct CubeOfQuadratic {
  Integer beta;
  bool is_char = false;
};
struct IrreducibleChar {
  int p_rank = 0;
  PolygonType ptype = PolygonType::Other;
  bool supersingular = false;
};
struct IrreducibleNotChar {
  std::string reason;
};

using Verdict = std::variant<NotWeil, ReducibleWeil, CubeOfQuadratic, IrreducibleChar, IrreducibleNotChar>;

struct Classification {
  Verdict verdict;
  /// Human-readable trace of the decisions taken.
  std::vector<std::string> reasons;

  const char* tag() const;
  template <class V>
  bool is() const {
    return std::holds_alternative<V>(verdict);
  }
  template <class V>
  const V& as() const {
    return std::get<V>(verdict);
  }
};

/// Which of the five valuation patterns of an irreducible Weil sextic hold
/// (1-based case numbers; at most one for a valid input).
std::vector<int> valuation_patterns(const WeilCandidate& w);

Classification classify(const WeilCandidate& w);

/// p-rank when c is a characteristic-polynomial verdict.
std::optional<int> p_rank(const Classification& c);

}  // namespace weil3

#endif  // WEIL3_CLASSIFY_HPP
