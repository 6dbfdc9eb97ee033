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

#ifndef WEIL3_WEILCHECK_HPP
#define WEIL3_WEILCHECK_HPP

#include <functional>
#include <vector>
#include <optional>
#include <string>
#include <utility>

#include "weil3/exactmath.hpp"

namespace weil3 {

/// One symmetric sextic
///   p(t) = t^6 + a1 t^5 + a2 t^4 + a3 t^3 + q a2 t^2 + q^2 a1 t + q^3
/// over F_q with q = p^n.
struct WeilCandidate {
  Integer q;
  Integer p;
  int n = 0;
  Integer a1;
  Integer a2;
  Integer a3;

  /// Derives (p, n) from q; throws std::invalid_argument if q is not a prime power.
  static WeilCandidate make(const Integer& q, const Integer& a1, const Integer& a2, const Integer& a3);
  /// Validates p prime and q = p^n.
  static WeilCandidate make(const Integer& q, const Integer& p, int n, const Integer& a1, const Integer& a2,
                            const Integer& a3);

  IntPolynomial polynomial() const;
  /// Image under t -> -t: (a1, a2, a3) -> (-a1, a2, -a3).
  WeilCandidate mirror() const;

  friend bool operator==(const WeilCandidate&, const WeilCandidate&) = default;
};

/// Coefficients of a monic cubic t^3 + r1 t^2 + r2 t + r3.
struct CubicCoefficients {
  SurdValue r1;
  SurdValue r2;
  SurdValue r3;
};

/// True iff the cubic has three real, strictly positive roots.
bool lemma_cubic_all_real_positive(const CubicCoefficients& c);

/// The cubics with roots 2 sqrt(q) + x_i and 2 sqrt(q) - x_i, where
/// p(t) = prod (t^2 + x_i t + q).
std::pair<CubicCoefficients, CubicCoefficients> associated_cubics(const WeilCandidate& w);

/// beta when p(t) = (t^2 - q)^2 (t^2 + beta t + q) with beta^2 < 4q.
std::optional<Integer> special_form_check(const WeilCandidate& w);

/// Which of the four coefficient inequalities fail; all decided in integers.
struct ConditionReport {
  bool cond1 = false;  // |a1| < 6 sqrt(q)
  bool cond2 = false;  // 4 sqrt(q)|a1| - 9q < a2 <= a1^2/3 + 3q
  bool cond3 = false;  // (27 a3 + 2 a1^3 - 9 a1 a2 - 27 q a1)^2 <= 4 (a1^2 - 3 a2 + 9q)^3
  bool cond4 = false;  // |a3 + 2 q a1| < 2 sqrt(q) (a2 + q)

  bool all() const { return cond1 && cond2 && cond3 && cond4; }
  /// Number of the first failing condition, 0 if none fails.
  int first_failure() const;
};

ConditionReport evaluate_conditions(const WeilCandidate& w);

/// The four inequalities alone. On square q this misses Weil polynomials
/// with a real root +-sqrt(q) outside the special form; see boundary_root_check.
inline bool classical_conditions(const WeilCandidate& w) { return evaluate_conditions(w).all(); }

/// For square q = s^2: p(t) = (t^2 + x t + q) g(t) with x = +-2s and g(t) a
/// Weil quartic, i.e. the real cubic has the root -x and its cofactor has
/// both roots in [-2s, 2s]. Returns x.
std::optional<Integer> boundary_root_check(const WeilCandidate& w);

enum class WeilBranch { NotWeil, SpecialForm, Conditions, BoundaryRoot };

/// Decision with the branch that accepted (or the first failing condition).
struct WeilDecision {
  WeilBranch branch = WeilBranch::NotWeil;
  ConditionReport conditions;
  std::optional<Integer> beta;  // special form
  std::optional<Integer> boundary_x;

  bool is_weil() const { return branch != WeilBranch::NotWeil; }
};

WeilDecision decide_weil(const WeilCandidate& w);

/// Whether p(t) is a Weil polynomial (all roots of absolute value sqrt(q)).
inline bool theorem1_check(const WeilCandidate& w) { return decide_weil(w).is_weil(); }

/// Integer search ranges; a3 bounds depend on (a1, a2).
struct CoefficientBox {
  Integer q;
  Integer p;
  int n = 0;
  int widen = 0;

  Integer a1_min() const;
  Integer a1_max() const;
  std::pair<Integer, Integer> a2_range(const Integer& a1) const;
  /// Possibly empty (first > second).
  std::pair<Integer, Integer> a3_range(const Integer& a1, const Integer& a2) const;

  /// Calls visit(a1, a2, a3) for every triple in the box with a1 fixed.
  void for_each_with_a1(const Integer& a1,
                        const std::function<void(const Integer&, const Integer&, const Integer&)>& visit) const;
};

/// Scan box: |a1| <= 6 sqrt(q), 4 sqrt(q)|a1| - 9q <= a2 <= a1^2/3 + 3q, a3 in
/// the intersection of the (closed) condition-3 and condition-4 intervals.
/// `widen` pads each coordinate by that many integers.
CoefficientBox enumeration_box(const Integer& q, const Integer& p, int n, int widen = 0);

/// All Weil triples, lexicographic in (a1, a2, a3).
std::vector<WeilCandidate> enumerate_box(const Integer& q, const Integer& p, int n);
/// The same, visiting only the given a1 (used for partitioned scans).
std::vector<WeilCandidate> enumerate_box_slice(const Integer& q, const Integer& p, int n, const Integer& a1);

}  // namespace weil3

#endif  // WEIL3_WEILCHECK_HPP
