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

#include "weil3/weilcheck.hpp"

#include <algorithm>
#include <stdexcept>

namespace weil3 {

WeilCandidate WeilCandidate::make(const Integer& q, const Integer& a1, const Integer& a2, const Integer& a3) {
  auto pp = prime_power_decompose(q);
  if (!pp) throw std::invalid_argument(q.get_str() + " is not a prime power");
  return WeilCandidate{q, pp->p, pp->n, a1, a2, a3};
}

WeilCandidate WeilCandidate::make(const Integer& q, const Integer& p, int n, const Integer& a1, const Integer& a2,
                                  const Integer& a3) {
  if (n < 1 || !is_prime(p)) throw std::invalid_argument("characteristic must be prime and n >= 1");
  Integer pn;
  mpz_pow_ui(pn.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(n));
  if (pn != q) throw std::invalid_argument("q != p^n");
  return WeilCandidate{q, p, n, a1, a2, a3};
}

IntPolynomial WeilCandidate::polynomial() const {
  return IntPolynomial({q * q * q, q * q * a1, q * a2, a3, a2, a1, Integer(1)});
}

WeilCandidate WeilCandidate::mirror() const { return WeilCandidate{q, p, n, -a1, a2, -a3}; }

// ---------------------------------------------------------------------------

bool lemma_cubic_all_real_positive(const CubicCoefficients& c) {
  const SurdValue zero;
  if (!(c.r1 < zero)) return false;
  if (!(c.r2 > zero)) return false;
  const SurdValue r1sq = c.r1 * c.r1;
  if (SurdValue(3) * c.r2 > r1sq) return false;
  if (!(c.r3 < zero)) return false;
  // |r3 - A| <= (2/27) E^(3/2) with A = r1 r2 / 3 - 2 r1^3 / 27, E = r1^2 - 3 r2 >= 0.
  const SurdValue e = r1sq - SurdValue(3) * c.r2;
  const SurdValue a = SurdValue(Rational(1, 3)) * c.r1 * c.r2 - SurdValue(Rational(2, 27)) * r1sq * c.r1;
  const SurdValue dev = c.r3 - a;
  return dev * dev <= SurdValue(Rational(4, 729)) * e * e * e;
}

std::pair<CubicCoefficients, CubicCoefficients> associated_cubics(const WeilCandidate& w) {
  const SurdValue sq = SurdValue::sqrt(w.q);
  const SurdValue q(w.q);
  const SurdValue a1(w.a1);
  const SurdValue a2(w.a2);
  const SurdValue a3(w.a3);
  const SurdValue two(2);
  CubicCoefficients r{
      SurdValue(-6) * sq - a1,
      SurdValue(9) * q + SurdValue(4) * sq * a1 + a2,
      -two * q * sq - two * q * a1 - two * sq * a2 - a3,
  };
  CubicCoefficients rt{
      SurdValue(-6) * sq + a1,
      SurdValue(9) * q - SurdValue(4) * sq * a1 + a2,
      -two * q * sq + two * q * a1 - two * sq * a2 + a3,
  };
  return {r, rt};
}

std::optional<Integer> special_form_check(const WeilCandidate& w) {
  const Integer& beta = w.a1;
  if (w.a2 != -w.q) return std::nullopt;
  if (w.a3 != -2 * w.q * beta) return std::nullopt;
  if (beta * beta >= 4 * w.q) return std::nullopt;
  return beta;
}

int ConditionReport::first_failure() const {
  if (!cond1) return 1;
  if (!cond2) return 2;
  if (!cond3) return 3;
  if (!cond4) return 4;
  return 0;
}

ConditionReport evaluate_conditions(const WeilCandidate& w) {
  const Integer& q = w.q;
  const Integer& a1 = w.a1;
  const Integer& a2 = w.a2;
  const Integer& a3 = w.a3;
  ConditionReport r;
  const Integer a1sq = a1 * a1;
  r.cond1 = a1sq < 36 * q;

  const Integer lower = a2 + 9 * q;
  r.cond2 = lower > 0 && lower * lower > 16 * q * a1sq && 3 * a2 <= a1sq + 9 * q;

  const Integer d = a1sq - 3 * a2 + 9 * q;
  const Integer l = 27 * a3 + 2 * a1sq * a1 - 9 * a1 * a2 - 27 * q * a1;
  r.cond3 = d >= 0 && l * l <= 4 * d * d * d;

  const Integer shifted = a3 + 2 * q * a1;
  const Integer half_width = a2 + q;
  r.cond4 = half_width > 0 && shifted * shifted < 4 * q * half_width * half_width;
  return r;
}

std::optional<Integer> boundary_root_check(const WeilCandidate& w) {
  auto s = integer_kth_root(w.q, 2);
  if (!s) return std::nullopt;
  // Real cubic t^3 + c2 t^2 + c1 t + c0; its roots are -x_i.
  const Integer c2 = w.a1;
  const Integer c1 = w.a2 - 3 * w.q;
  const Integer c0 = w.a3 - 2 * w.q * w.a1;
  const Integer bound = 2 * *s;
  for (const Integer& root : {Integer(-bound), bound}) {
    if (((root + c2) * root + c1) * root + c0 != 0) continue;
    // Synthetic division: t^2 + b t + c.
    const Integer b = c2 + root;
    const Integer c = c1 + b * root;
    auto g = [&](const Integer& t) { return Integer((t + b) * t + c); };
    const bool real = b * b - 4 * c >= 0;
    const bool inside = abs(b) <= 2 * bound && g(bound) >= 0 && g(-bound) >= 0;
    if (real && inside) return Integer(-root);
  }
  return std::nullopt;
}

WeilDecision decide_weil(const WeilCandidate& w) {
  WeilDecision d;
  d.conditions = evaluate_conditions(w);
  if ((d.beta = special_form_check(w))) {
    d.branch = WeilBranch::SpecialForm;
  } else if (d.conditions.all()) {
    d.branch = WeilBranch::Conditions;
  } else if ((d.boundary_x = boundary_root_check(w))) {
    d.branch = WeilBranch::BoundaryRoot;
  }
  return d;
}

// ---------------------------------------------------------------------------
// Enumeration

CoefficientBox enumeration_box(const Integer& q, const Integer& p, int n, int widen) {
  if (widen < 0) throw std::invalid_argument("negative box padding");
  return CoefficientBox{q, p, n, widen};
}

Integer CoefficientBox::a1_max() const { return floor_sqrt(36 * q) + widen; }

Integer CoefficientBox::a1_min() const { return -a1_max(); }

std::pair<Integer, Integer> CoefficientBox::a2_range(const Integer& a1) const {
  const Integer target = 16 * q * a1 * a1;
  Integer root = floor_sqrt(target);
  if (root * root != target) root += 1;  // ceil(4 sqrt(q) |a1|)
  return {root - 9 * q - widen, floor_div(a1 * a1 + 9 * q, 3) + widen};
}

std::pair<Integer, Integer> CoefficientBox::a3_range(const Integer& a1, const Integer& a2) const {
  // Empty intervals are encoded around their centre so padding reopens them.
  const Integer centre4 = -2 * q * a1;
  Integer lo4 = centre4 + 1;
  Integer hi4 = centre4 - 1;
  if (a2 + q >= 0) {
    const Integer s4 = floor_sqrt(4 * q * (a2 + q) * (a2 + q));
    lo4 = centre4 - s4;
    hi4 = centre4 + s4;
  }
  const Integer d = a1 * a1 - 3 * a2 + 9 * q;
  const Integer c = 2 * a1 * a1 * a1 - 9 * a1 * a2 - 27 * q * a1;
  Integer lo3 = floor_div(-c, 27) + 1;
  Integer hi3 = floor_div(-c, 27);
  if (d >= 0) {
    const Integer s3 = floor_sqrt(4 * d * d * d);
    lo3 = ceil_div(-c - s3, 27);
    hi3 = floor_div(-c + s3, 27);
  }
  return {std::max(lo3, lo4) - widen, std::min(hi3, hi4) + widen};
}

void CoefficientBox::for_each_with_a1(
    const Integer& a1, const std::function<void(const Integer&, const Integer&, const Integer&)>& visit) const {
  const auto [lo2, hi2] = a2_range(a1);
  for (Integer a2 = lo2; a2 <= hi2; ++a2) {
    const auto [lo3, hi3] = a3_range(a1, a2);
    for (Integer a3 = lo3; a3 <= hi3; ++a3) visit(a1, a2, a3);
  }
}

std::vector<WeilCandidate> enumerate_box_slice(const Integer& q, const Integer& p, int n, const Integer& a1) {
  const CoefficientBox box = enumeration_box(q, p, n);
  std::vector<WeilCandidate> out;
  box.for_each_with_a1(a1, [&](const Integer& x1, const Integer& x2, const Integer& x3) {
    WeilCandidate w{q, p, n, x1, x2, x3};
    if (theorem1_check(w)) out.push_back(std::move(w));
  });
  return out;
}

std::vector<WeilCandidate> enumerate_box(const Integer& q, const Integer& p, int n) {
  const CoefficientBox box = enumeration_box(q, p, n);
  std::vector<WeilCandidate> out;
  for (Integer a1 = box.a1_min(); a1 <= box.a1_max(); ++a1) {
    auto slice = enumerate_box_slice(q, p, n, a1);
    out.insert(out.end(), std::make_move_iterator(slice.begin()), std::make_move_iterator(slice.end()));
  }
  return out;
}

}  // namespace weil3
