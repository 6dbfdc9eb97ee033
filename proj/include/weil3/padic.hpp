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

#ifndef WEIL3_PADIC_HPP
#define WEIL3_PADIC_HPP

#include <string>
#include <vector>

#include "weil3/exactmath.hpp"

namespace weil3 {

/// p-adic valuation of an integer; infinite for zero.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(true, 0); }
  static Valuation finite(long v) { return Valuation(false, v); }

  bool is_infinite() const { return infinite_; }
  /// Throws std::logic_error when infinite.
  long value() const;

  /// v >= num/den, decided as den*v >= num; infinity satisfies every bound.
  bool at_least(long num, long den = 1) const { return infinite_ || den * value_ >= num; }
  bool equals(long k) const { return !infinite_ && value_ == k; }

  std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

 private:
  Valuation(bool inf, long v) : infinite_(inf), value_(v) {}
  bool infinite_;
  long value_;
};

Valuation valuation(const Integer& x, const Integer& p);

struct NewtonVertex {
  int i = 0;
  long v = 0;
  friend bool operator==(const NewtonVertex&, const NewtonVertex&) = default;
};

/// A hull edge, recorded by the common valuation of its roots.
struct NewtonSegment {
  Rational slope;
  int length = 0;
  friend bool operator==(const NewtonSegment& a, const NewtonSegment& b) {
    return a.slope == b.slope && a.length == b.length;
  }
};

/// Lower convex hull of {(i, v_p(c_i))}.
///
/// `vertices` run left to right. `segments` are listed by strictly
/// increasing root valuation (so right to left along the hull).
/// `zero_roots` counts vanishing low-order coefficients: roots equal to 0,
/// which are not represented by any segment.
struct NewtonPolygon {
  std::vector<NewtonVertex> vertices;
  std::vector<NewtonSegment> segments;
  int zero_roots = 0;

  int degree() const { return vertices.empty() ? 0 : vertices.back().i; }
  /// Each segment's valuation repeated `length` times, ascending.
  std::vector<Rational> root_valuations() const;
};

/// Throws std::invalid_argument for the zero polynomial.
NewtonPolygon newton_polygon(const IntPolynomial& f, const Integer& p);

enum class PolygonType { Ordinary, PRank2, PRank1, OneThird, Supersingular, Other };

const char* to_string(PolygonType t);

/// Matches the slope/n multiset of a sextic's polygon against the five
/// admissible shapes. Throws std::invalid_argument when the degree is not 6.
PolygonType polygon_type(const NewtonPolygon& g, int n);

/// Distinct roots of f modulo the prime p, ascending in [0, p).
/// Throws std::invalid_argument when f vanishes identically mod p.
std::vector<Integer> roots_mod_p(const IntPolynomial& f, const Integer& p);

/// Whether monic f has a root in Z_p of exactly the given valuation.
/// Non-integral valuations are impossible in Q_p and return false at once.
/// Throws std::invalid_argument for non-monic f or a negative valuation.
bool zp_root_exists(const IntPolynomial& f, const Integer& p, const Rational& target_valuation);

/// Whether monic f has a root in Q_p.
bool has_qp_root(const IntPolynomial& f, const Integer& p);

}  // namespace weil3

#endif  // WEIL3_PADIC_HPP
