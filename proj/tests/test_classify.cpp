#include <doctest.h>

#include "helpers.hpp"
#include "weil3/classify.hpp"
#include "weil3/irreducibility.hpp"

using namespace weil3;
using testing::P;
using testing::W;

TEST_CASE("cube of a quadratic") {
  const WeilCandidate w = W(8, 6, 36, 104);
  CHECK(w.polynomial() == P({8, 2, 1}) * P({8, 2, 1}) * P({8, 2, 1}));
  CHECK(detect_cube_of_quadratic(w) == Integer(2));
  CHECK(detect_cube_of_quadratic(w.mirror()) == Integer(-2));
  CHECK_FALSE(detect_cube_of_quadratic(W(8, 6, 36, 103)));
  CHECK_FALSE(detect_cube_of_quadratic(W(8, 5, 36, 104)));

  const Classification c = classify(w);
  REQUIRE(c.is<CubeOfQuadratic>());
  CHECK(c.as<CubeOfQuadratic>().beta == 2);
  CHECK(c.as<CubeOfQuadratic>().is_char);
  CHECK(p_rank(c) == 0);
  CHECK(classify(w.mirror()).as<CubeOfQuadratic>().is_char);
}

TEST_CASE("e = 3 cube criterion") {
  const Integer q8(8), p2(2);
  CHECK(xing_e3_is_char(q8, p2, 3, Integer(2)));
  CHECK(xing_e3_is_char(q8, p2, 3, Integer(-2)));
  CHECK_FALSE(xing_e3_is_char(q8, p2, 3, Integer(4)));
  CHECK_FALSE(xing_e3_is_char(q8, p2, 3, Integer(0)));
  CHECK_FALSE(xing_e3_is_char(q8, p2, 3, Integer(1)));
  // beta^2 >= 4q never qualifies.
  CHECK_FALSE(xing_e3_is_char(q8, p2, 3, Integer(6)));
  CHECK_FALSE(xing_e3_is_char(Integer(4), p2, 2, Integer(1)));
  CHECK(xing_e3_is_char(Integer(27), Integer(3), 3, Integer(-6)));
  CHECK(xing_e3_is_char(Integer(27), Integer(3), 3, Integer(3)));
  CHECK(xing_e3_is_char(Integer(64), p2, 6, Integer(4)));
  CHECK_FALSE(xing_e3_is_char(Integer(64), p2, 6, Integer(8)));
  CHECK(xing_e3_is_char(Integer(512), p2, 9, Integer(8)));
  CHECK_FALSE(xing_e3_is_char(Integer(512), p2, 9, Integer(16)));
}

TEST_CASE("cyclotomic table") {
  CHECK(build_cyclotomic(7) == P({1, 1, 1, 1, 1, 1, 1}));
  CHECK(build_cyclotomic(9) == P({1, 0, 0, 1, 0, 0, 1}));
  const IntPolynomial p28 = build_cyclotomic(28);
  const IntPolynomial p36 = build_cyclotomic(36);
  CHECK(p28.degree() == 12);
  CHECK(p36.degree() == 12);
  // t^28 - 1 is divisible by Phi_28, t^36 - 1 by Phi_36.
  CHECK(divide_exact(IntPolynomial::monomial(Integer(1), 28) - P({1}), p28));
  CHECK(divide_exact(IntPolynomial::monomial(Integer(1), 36) - P({1}), p36));
  CHECK_FALSE(divide_exact(IntPolynomial::monomial(Integer(1), 14) - P({1}), p28));
  CHECK_FALSE(divide_exact(IntPolynomial::monomial(Integer(1), 18) - P({1}), p36));
  CHECK_THROWS_AS(build_cyclotomic(5), std::invalid_argument);
}

TEST_CASE("supersingular forms") {
  auto family = [](const WeilCandidate& w) { return match_supersingular_form(w)->family; };
  CHECK(family(W(9, 3, 9, 27)) == SupersingularFamily::Zeta7);
  CHECK(match_supersingular_form(W(9, -3, 9, -27))->sign == -1);
  CHECK(family(W(4, 0, 0, 8)) == SupersingularFamily::Zeta9);
  CHECK(family(W(4, 0, 0, -8)) == SupersingularFamily::Zeta9);
  // p = 2: 7 | 2^3 - 1 excludes Zeta7.
  CHECK_FALSE(match_supersingular_form(W(4, 2, 4, 8)));
  // p = 7: 3 | 7 - 1 excludes Zeta9.
  CHECK_FALSE(match_supersingular_form(W(49, 0, 0, 343)));

  CHECK(family(W(3, 0, 0, 9)) == SupersingularFamily::Zeta36);
  CHECK(family(W(3, 0, 0, -9)) == SupersingularFamily::Zeta36);
  CHECK(family(W(27, 0, 0, 243)) == SupersingularFamily::Zeta36);
  CHECK(family(W(27, 0, 0, -243)) == SupersingularFamily::Zeta36);
  CHECK(family(W(7, 7, 21, 49)) == SupersingularFamily::Zeta28);
  CHECK(family(W(7, -7, 21, -49)) == SupersingularFamily::Zeta28);
  CHECK(family(W(343, 49, 1029, 16807)) == SupersingularFamily::Zeta28);
  CHECK(family(W(343, -49, 1029, -16807)) == SupersingularFamily::Zeta28);
  CHECK_FALSE(match_supersingular_form(W(5, 0, 0, 25)));
}

TEST_CASE("supersingular forms satisfy their cyclotomic identities") {
  const WeilCandidate cases[] = {W(9, 3, 9, 27),        W(9, -3, 9, -27),       W(4, 0, 0, 8),
                                 W(4, 0, 0, -8),        W(3, 0, 0, 9),          W(3, 0, 0, -9),
                                 W(27, 0, 0, 243),      W(27, 0, 0, -243),      W(7, 7, 21, 49),
                                 W(7, -7, 21, -49),     W(343, 49, 1029, 16807), W(343, -49, 1029, -16807),
                                 W(25, 5, 25, 125),     W(121, 0, 0, 1331)};
  for (const auto& w : cases) {
    const auto form = match_supersingular_form(w);
    REQUIRE(form);
    CHECK(cyclotomic_identity_holds(w, form->family));
    CHECK(supersingular_list_check(w));
    CHECK(theorem1_check(w));
    CHECK(is_irreducible(w));
    const Classification c = classify(w);
    REQUIRE(c.is<IrreducibleChar>());
    CHECK(c.as<IrreducibleChar>().supersingular);
    CHECK(c.as<IrreducibleChar>().p_rank == 0);
  }
  // The wrong family does not.
  CHECK_FALSE(cyclotomic_identity_holds(W(3, 0, 0, 9), SupersingularFamily::Zeta28));
}

TEST_CASE("classification examples") {
  CHECK(classify(W(2, 9, 0, 0)).as<NotWeil>().failed_condition == 1);
  CHECK(classify(W(2, 1, 3, 0)).is<NotWeil>());
  CHECK(classify(W(2, 0, 5, 0)).is<ReducibleWeil>());
  CHECK(classify(W(4, -4, 12, -32)).is<ReducibleWeil>());

  const Classification special = classify(W(5, 1, -5, -10));
  REQUIRE(special.is<ReducibleWeil>());
  const auto& f = special.as<ReducibleWeil>().factors;
  REQUIRE(f.size() == 2);
  CHECK(f[0] * f[1] == W(5, 1, -5, -10).polynomial());

  auto rank = [](long q, long a1, long a2, long a3) {
    const Classification c = classify(W(q, a1, a2, a3));
    REQUIRE(c.is<IrreducibleChar>());
    return std::pair{c.as<IrreducibleChar>().p_rank, c.as<IrreducibleChar>().ptype};
  };
  CHECK(rank(2, -4, 9, -15) == std::pair{3, PolygonType::Ordinary});
  CHECK(rank(2, -2, 1, 0) == std::pair{2, PolygonType::PRank2});
  CHECK(rank(2, -1, 0, 0) == std::pair{1, PolygonType::PRank1});
  CHECK(rank(2, -2, 2, -2) == std::pair{0, PolygonType::OneThird});
  CHECK(rank(9, -3, 9, -27) == std::pair{0, PolygonType::Supersingular});
  CHECK(rank(4, 0, 0, -8) == std::pair{0, PolygonType::Supersingular});

  // No admissible valuation pattern.
  CHECK(classify(W(4, -6, 20, -46)).is<IrreducibleNotChar>());
  // Supersingular polygon, but not on the list.
  const Classification off = classify(W(4, 2, 4, 8));
  REQUIRE(off.is<IrreducibleNotChar>());
  CHECK(off.as<IrreducibleNotChar>().reason == "supersingular polygon outside the supersingular list");
  // Type 1/3 polygon with a rational 2-adic root.
  const Classification rooted = classify(W(8, -4, 0, 24));
  REQUIRE(rooted.is<IrreducibleNotChar>());
  CHECK(rooted.as<IrreducibleNotChar>().reason == "type 1/3 polygon but a root in Q_p");
  CHECK_FALSE(p_rank(rooted));
  CHECK(classify(W(8, 6, 36, 104)).tag() == std::string("CubeOfQuadratic"));
  CHECK_FALSE(classify(W(8, 12, 72, 256)).as<CubeOfQuadratic>().is_char);
}

TEST_CASE("odd n never admits a root of valuation n/2") {
  for (const auto& w : {W(8, -9, 39, -120), W(8, -7, 32, -104), W(2, -2, 1, 0), W(27, 1, 3, 0)}) {
    CHECK_FALSE(zp_root_exists(w.polynomial(), w.p, Rational(w.n) / 2));
  }
}

TEST_CASE("classification invariants over the enumeration") {
  for (long q : {2, 3, 4, 5, 7, 8, 9, 16}) {
    const auto pp = *prime_power_decompose(Integer(q));
    for (const auto& w : enumerate_box(Integer(q), pp.p, pp.n)) {
      const Classification c = classify(w);
      const Classification m = classify(w.mirror());
      CHECK(c.tag() == std::string(m.tag()));
      CHECK(p_rank(c) == p_rank(m));
      CHECK_FALSE(c.reasons.empty());
      CHECK_FALSE(c.is<NotWeil>());

      if (c.is<ReducibleWeil>() || c.is<CubeOfQuadratic>()) CHECK_FALSE(is_irreducible(w));
      if (c.is<IrreducibleChar>() || c.is<IrreducibleNotChar>()) CHECK(is_irreducible(w));

      const auto patterns = valuation_patterns(w);
      CHECK(patterns.size() <= 1);
      if (c.is<IrreducibleChar>()) {
        const auto& v = c.as<IrreducibleChar>();
        const PolygonType t = polygon_type(newton_polygon(w.polynomial(), w.p), w.n);
        CHECK(v.ptype == t);
        CHECK(v.supersingular == (t == PolygonType::Supersingular));
        const auto vals = newton_polygon(w.polynomial(), w.p).root_valuations();
        CHECK(v.p_rank == std::count(vals.begin(), vals.end(), Rational(0)));
        REQUIRE(patterns.size() == 1);
      }
      if (c.is<IrreducibleNotChar>()) CHECK_FALSE(c.as<IrreducibleNotChar>().reason.empty());
    }
  }
}
