#ifndef WEIL3_TESTS_HELPERS_HPP
#define WEIL3_TESTS_HELPERS_HPP

#include <functional>
#include <initializer_list>
#include <vector>

#include "weil3/exactmath.hpp"
#include "weil3/weilcheck.hpp"

namespace testing {

using weil3::Integer;
using weil3::IntPolynomial;
using weil3::Rational;
using weil3::RationalPolynomial;
using weil3::WeilCandidate;

// Ascending coefficients.
inline IntPolynomial P(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPolynomial(std::move(v));
}

inline RationalPolynomial Q(std::initializer_list<long> c) { return weil3::to_rational(P(c)); }

inline WeilCandidate W(long q, long a1, long a2, long a3) { return WeilCandidate::make(q, a1, a2, a3); }

inline const std::vector<long>& oracle_qs() {
  static const std::vector<long> qs = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27};
  return qs;
}

// Visits the enumeration box of q widened by `widen`.
inline void for_each_in_box(long q, int widen, const std::function<void(const WeilCandidate&)>& visit) {
  const auto pp = *weil3::prime_power_decompose(q);
  const auto box = weil3::enumeration_box(q, pp.p, pp.n, widen);
  for (Integer a1 = box.a1_min(); a1 <= box.a1_max(); ++a1)
    box.for_each_with_a1(a1, [&](const Integer& x, const Integer& y, const Integer& z) {
      visit(WeilCandidate::make(q, pp.p, pp.n, x, y, z));
    });
}

}  // namespace testing

#endif
