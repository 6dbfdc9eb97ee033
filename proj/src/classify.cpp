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

#include "weil3/classify.hpp"

#include <stdexcept>

#include "weil3/irreducibility.hpp"

namespace weil3 {

std::optional<Integer> detect_cube_of_quadratic(const WeilCandidate& w) {
  if (!mpz_divisible_ui_p(w.a1.get_mpz_t(), 3)) return std::nullopt;
  const Integer beta = w.a1 / 3;
  const IntPolynomial h({w.q, beta, Integer(1)});
  if (h * h * h != w.polynomial()) return std::nullopt;
  return beta;
}

bool xing_e3_is_char(const Integer& q, const Integer& p, int n, const Integer& beta) {
  if (beta * beta >= 4 * q) return false;
  if (n % 3 != 0) return false;
  auto cube_root = integer_kth_root(q, 3);
  if (!cube_root) return false;
  if (!mpz_divisible_p(beta.get_mpz_t(), cube_root->get_mpz_t())) return false;
  const Integer a = beta / *cube_root;
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  return g == 1;
}

IntPolynomial build_cyclotomic(int m) {
  auto from = [](std::initializer_list<long> c) {
    std::vector<Integer> v;
    for (long x : c) v.emplace_back(x);
    return IntPolynomial(std::move(v));
  };
  switch (m) {
    case 7:
      return from({1, 1, 1, 1, 1, 1, 1});
    case 9:
      return from({1, 0, 0, 1, 0, 0, 1});
    case 28:
      return from({1, 0, -1, 0, 1, 0, -1, 0, 1, 0, -1, 0, 1});
    case 36:
      return from({1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1});
    default:
      throw std::invalid_argument("unsupported cyclotomic index " + std::to_string(m));
  }
}

const char* to_string(SupersingularFamily f) {
  switch (f) {
    case SupersingularFamily::Zeta7:
      return "Zeta7";
    case SupersingularFamily::Zeta9:
      return "Zeta9";
    case SupersingularFamily::Zeta28:
      return "Zeta28";
    case SupersingularFamily::Zeta36:
      return "Zeta36";
  }
  return "?";
}

std::optional<SupersingularForm> match_supersingular_form(const WeilCandidate& w) {
  const Integer& q = w.q;
  const Integer& p = w.p;
  if (auto s = integer_kth_root(q, 2)) {
    const Integer s3 = *s * q;
    for (int sign : {1, -1}) {
      if (w.a1 == sign * *s && w.a2 == q && w.a3 == sign * s3) {
        const Integer p3 = p * p * p - 1;
        if (mpz_divisible_ui_p(p3.get_mpz_t(), 7)) return std::nullopt;
        return SupersingularForm{SupersingularFamily::Zeta7, sign};
      }
      if (w.a1 == 0 && w.a2 == 0 && w.a3 == sign * s3) {
        const Integer pm1 = p - 1;
        if (mpz_divisible_ui_p(pm1.get_mpz_t(), 3)) return std::nullopt;
        return SupersingularForm{SupersingularFamily::Zeta9, sign};
      }
    }
    return std::nullopt;
  }
  auto r = integer_kth_root(p * q, 2);
  if (!r) return std::nullopt;
  for (int sign : {1, -1}) {
    if (p == 7 && w.a1 == sign * *r && w.a2 == 3 * q && w.a3 == sign * q * *r)
      return SupersingularForm{SupersingularFamily::Zeta28, sign};
    if (p == 3 && w.a1 == 0 && w.a2 == 0 && w.a3 == sign * q * *r)
      return SupersingularForm{SupersingularFamily::Zeta36, sign};
  }
  return std::nullopt;
}

namespace {

// Sum b_i c^(d-i) t^i: the polynomial whose roots are c times those of phi.
IntPolynomial scale_roots(const IntPolynomial& phi, const Integer& c) {
  std::vector<Integer> out(phi.coefficients().size());
  const int d = phi.degree();
  for (int i = 0; i <= d; ++i) {
    Integer ck;
    mpz_pow_ui(ck.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(d - i));
    out[static_cast<std::size_t>(i)] = phi[static_cast<std::size_t>(i)] * ck;
  }
  return IntPolynomial(std::move(out));
}

}  // namespace

bool cyclotomic_identity_holds(const WeilCandidate& w, SupersingularFamily family) {
  const IntPolynomial poly = w.polynomial();
  switch (family) {
    case SupersingularFamily::Zeta7:
    case SupersingularFamily::Zeta9: {
      auto s = integer_kth_root(w.q, 2);
      if (!s) return false;
      const int m = family == SupersingularFamily::Zeta7 ? 7 : 9;
      const Integer lead = w.a1 != 0 ? w.a1 : w.a3;
      const Integer c = lead < 0 ? Integer(-*s) : *s;
      return scale_roots(build_cyclotomic(m), c) == poly;
    }
    case SupersingularFamily::Zeta28:
    case SupersingularFamily::Zeta36: {
      const int m = family == SupersingularFamily::Zeta28 ? 28 : 36;
      // Only even powers occur, so q^((12-i)/2) scales the coefficient of t^i.
      const IntPolynomial phi = build_cyclotomic(m);
      std::vector<Integer> target(13);
      for (int i = 0; i <= 12; i += 2) {
        Integer qk;
        mpz_pow_ui(qk.get_mpz_t(), w.q.get_mpz_t(), static_cast<unsigned long>((12 - i) / 2));
        target[static_cast<std::size_t>(i)] = phi[static_cast<std::size_t>(i)] * qk;
      }
      return poly * w.mirror().polynomial() == IntPolynomial(std::move(target));
    }
  }
  return false;
}

bool supersingular_list_check(const WeilCandidate& w) {
  auto form = match_supersingular_form(w);
  if (!form) return false;
  if (!cyclotomic_identity_holds(w, form->family))
    throw std::logic_error(std::string("supersingular pattern ") + to_string(form->family) +
                           " does not satisfy its cyclotomic identity");
  return true;
}

const char* Classification::tag() const {
  struct Visitor {
    const char* operator()(const NotWeil&) const { return "NotWeil"; }
    const char* operator()(const ReducibleWeil&) const { return "ReducibleWeil"; }
    const char* operator()(const CubeOfQuadratic&) const { return "CubeOfQuadratic"; }
    const char* operator()(const IrreducibleChar&) const { return "IrreducibleChar"; }
    const char* operator()(const IrreducibleNotChar&) const { return "IrreducibleNotChar"; }
  };
  return std::visit(Visitor{}, verdict);
}

std::vector<int> valuation_patterns(const WeilCandidate& w) {
  const Valuation v1 = valuation(w.a1, w.p);
  const Valuation v2 = valuation(w.a2, w.p);
  const Valuation v3 = valuation(w.a3, w.p);
  const long n = w.n;
  std::vector<int> hits;
  if (v3.equals(0)) hits.push_back(1);
  if (v2.equals(0) && v3.at_least(n, 2)) hits.push_back(2);
  if (v1.equals(0) && v2.at_least(n, 2) && v3.at_least(n)) hits.push_back(3);
  if (v1.at_least(n, 3) && v2.at_least(2 * n, 3) && v3.equals(n)) hits.push_back(4);
  if (v1.at_least(n, 2) && v2.at_least(n) && v3.at_least(3 * n, 2)) hits.push_back(5);
  return hits;
}

namespace {

const char* kConditionText[] = {
    "",
    "condition 1 fails: |a1| >= 6 sqrt(q)",
    "condition 2 fails: a2 outside (4 sqrt(q)|a1| - 9q, a1^2/3 + 3q]",
    "condition 3 fails: a3 outside the discriminant interval",
    "condition 4 fails: |a3 + 2q a1| >= 2 sqrt(q)(a2 + q)",
};

}  // namespace

Classification classify(const WeilCandidate& w) {
  Classification c;
  const WeilDecision weil = decide_weil(w);
  if (!weil.is_weil()) {
    const int failed = weil.conditions.first_failure();
    c.verdict = NotWeil{failed};
    c.reasons.emplace_back(failed > 0 ? kConditionText[failed] : "not a Weil polynomial");
    return c;
  }
  switch (weil.branch) {
    case WeilBranch::SpecialForm:
      c.reasons.emplace_back("special form (t^2 - q)^2 (t^2 + beta t + q)");
      break;
    case WeilBranch::BoundaryRoot:
      c.reasons.emplace_back("Weil with a real root +-sqrt(q)");
      break;
    default:
      break;
  }

  if (auto beta = detect_cube_of_quadratic(w)) {
    const bool is_char = xing_e3_is_char(w.q, w.p, w.n, *beta);
    c.verdict = CubeOfQuadratic{*beta, is_char};
    c.reasons.emplace_back(is_char ? "cube of t^2 + beta t + q with 3 | n and beta = a q^(1/3), gcd(a, p) = 1"
                                   : "cube of t^2 + beta t + q failing the e = 3 conditions");
    return c;
  }

  if (weil.beta || !is_irreducible(w)) {
    auto factors = weil_factorization(w);
    if (!factors) throw std::logic_error("reducible Weil polynomial without an explicit factor");
    c.verdict = ReducibleWeil{{factors->first, factors->second}};
    c.reasons.emplace_back("reducible over Q");
    return c;
  }

  const IntPolynomial poly = w.polynomial();
  const std::vector<int> hits = valuation_patterns(w);
  if (hits.size() > 1) throw std::logic_error("valuation patterns are not mutually exclusive");
  if (hits.empty()) {
    c.verdict = IrreducibleNotChar{"Newton polygon has an edge of invalid length (e > 1)"};
    c.reasons.push_back(std::get<IrreducibleNotChar>(c.verdict).reason);
    return c;
  }

  const Rational half_n = Rational(w.n) / 2;
  auto not_char = [&](std::string why) {
    c.reasons.push_back(why);
    c.verdict = IrreducibleNotChar{std::move(why)};
    return c;
  };
  switch (hits.front()) {
    case 1:
      c.verdict = IrreducibleChar{3, PolygonType::Ordinary, false};
      c.reasons.emplace_back("v_p(a3) = 0");
      return c;
    case 2:
      if (zp_root_exists(poly, w.p, half_n)) return not_char("p-rank 2 polygon but a root of valuation n/2 in Q_p");
      c.verdict = IrreducibleChar{2, PolygonType::PRank2, false};
      c.reasons.emplace_back("p-rank 2 polygon, no root of valuation n/2 in Q_p");
      return c;
    case 3:
      if (zp_root_exists(poly, w.p, half_n)) return not_char("p-rank 1 polygon but a root of valuation n/2 in Q_p");
      c.verdict = IrreducibleChar{1, PolygonType::PRank1, false};
      c.reasons.emplace_back("p-rank 1 polygon, no root of valuation n/2 in Q_p");
      return c;
    case 4:
      if (has_qp_root(poly, w.p)) return not_char("type 1/3 polygon but a root in Q_p");
      c.verdict = IrreducibleChar{0, PolygonType::OneThird, false};
      c.reasons.emplace_back("type 1/3 polygon, no root in Q_p");
      return c;
    default:
      if (!supersingular_list_check(w)) return not_char("supersingular polygon outside the supersingular list");
      c.verdict = IrreducibleChar{0, PolygonType::Supersingular, true};
      c.reasons.emplace_back(std::string("supersingular, family ") + to_string(match_supersingular_form(w)->family));
      return c;
  }
}

std::optional<int> p_rank(const Classification& c) {
  if (c.is<IrreducibleChar>()) return c.as<IrreducibleChar>().p_rank;
  if (c.is<CubeOfQuadratic>() && c.as<CubeOfQuadratic>().is_char) return 0;
  return std::nullopt;
}

}  // namespace weil3
