#include <catch2/catch_amalgamated.hpp>

#include "hodo/expr.hpp"
#include "hodo/planar.hpp"
#include "oracles.hpp"

using namespace hodo;

namespace {
const std::vector<std::string> VZ{"z"};
ComplexRatFunc C(const std::string& text) {
  return parse_expr<Gaussian>(text, VZ);
}
RatFunc<Rational> R(const std::string& text,
                    const std::vector<std::string>& vars) {
  return parse_expr<Rational>(text, vars);
}
}  // namespace

TEST_CASE("phi_from_psi examples") {
  CHECK(phi_from_psi(C("z")) == C("z^3/3"));
  CHECK(phi_from_psi(C("(z^2+1)/z")) == C("z^3/3 + 2*z - 1/z"));
  try {
    phi_from_psi(C("1 + 1/z"));
    FAIL("expected NonzeroResidue");
  } catch (const NonzeroResidue& e) {
    CHECK(e.remainder == C("2/z"));
  }
}

TEST_CASE("psi_sqrt_of_derivative examples") {
  auto psi = psi_sqrt_of_derivative(C("(z^2+1)^2/z^2"));
  REQUIRE(psi);
  CHECK(*psi == C("(z^2+1)/z"));
  CHECK(psi_sqrt_of_derivative(C("z^2")) == C("z"));
  CHECK(!psi_sqrt_of_derivative(C("z")));
}

TEST_CASE("complex_to_real_map examples") {
  auto phi = complex_to_real_map(C("z^2 + z"));
  CHECK(phi.components[0] == R("x^2 - y^2 + x", {"x", "y"}));
  CHECK(phi.components[1] == R("2*x*y + y", {"x", "y"}));

  auto id = complex_to_real_map(C("z"));
  CHECK(id.components[0] == R("x", {"x", "y"}));
  CHECK(id.components[1] == R("y", {"x", "y"}));

  auto cube = complex_to_real_map(C("z^3/3"));
  CHECK(cube.components[0] == R("(x^3 - 3*x*y^2)/3", {"x", "y"}));
  CHECK(cube.components[1] == R("(3*x^2*y - y^3)/3", {"x", "y"}));
  CHECK(is_ph_preserving(cube).has_value());

  // anti-holomorphic counterpart
  auto anti = complex_to_real_map(C("z^3/3 + 2*z - 1/z"), /*conjugate=*/true);
  CHECK(is_ph_preserving(anti).has_value());
}

TEST_CASE("residue_of_square_at_simple_pole") {
  std::vector<std::string> vz{"z"};
  Gaussian c1(Rational(2), Rational(3)), c2(Rational(1), Rational(1));
  LaurentSpec spec;
  spec.polynomial_part = ComplexRatFunc::constant(vz, Gaussian(1));
  spec.poles = {{c1, {Gaussian(Rational(1), Rational(2))}},
                {c2, {Gaussian(Rational(-1), Rational(-2))}}};
  CHECK(residue_of_square_at_simple_pole(spec, 0).is_zero());
  CHECK(residue_of_square_at_simple_pole(spec, 1).is_zero());

  LaurentSpec one_over_z;
  one_over_z.polynomial_part = ComplexRatFunc::constant(vz, Gaussian(1));
  one_over_z.poles = {{Gaussian(0), {Gaussian(1)}}};
  CHECK(residue_of_square_at_simple_pole(one_over_z, 0) == Gaussian(2));

  LaurentSpec bare;
  bare.polynomial_part = ComplexRatFunc::constant(vz, Gaussian(0));
  bare.poles = {{Gaussian(0), {Gaussian(1)}}};
  CHECK(residue_of_square_at_simple_pole(bare, 0).is_zero());

  LaurentSpec high;
  high.polynomial_part = ComplexRatFunc::constant(vz, Gaussian(1));
  high.poles = {{Gaussian(0), {Gaussian(1), Gaussian(1)}}};
  CHECK_THROWS_AS(residue_of_square_at_simple_pole(high, 0), HigherOrderPole);
}

TEST_CASE("residue agrees with the hermite remainder") {
  testing::Rng rng(501);
  std::vector<std::string> vz{"z"};
  for (int k = 0; k < 50; ++k) {
    LaurentSpec spec;
    spec.polynomial_part =
        ComplexRatFunc::constant(vz, rng.gaussian(3)) +
        ComplexRatFunc::variable(vz, "z") * rng.gaussian(3);
    Gaussian c1 = rng.gaussian(3);
    Gaussian c2 = c1;
    while (c2 == c1) c2 = rng.gaussian(3);
    spec.poles = {{c1, {rng.nonzero_gaussian(3)}},
                  {c2, {rng.nonzero_gaussian(3)}}};
    auto psi = spec.to_ratfunc();
    auto h = hermite_reduce(psi * psi, "z");
    // remainder = sum residue_k/(z - c_k): compare numerators after clearing
    auto z = ComplexRatFunc::variable(vz, "z");
    ComplexRatFunc expect = ComplexRatFunc::constant(vz, Gaussian(0));
    for (std::size_t j = 0; j < spec.poles.size(); ++j)
      expect += ComplexRatFunc::constant(
                    vz, residue_of_square_at_simple_pole(spec, j)) /
                (z - ComplexRatFunc::constant(vz, spec.poles[j].location));
    CHECK(h.remainder == expect);
  }
}

TEST_CASE("solve_simple_pole_coeffs examples") {
  std::vector<std::string> vz{"z"};
  auto one = ComplexRatFunc::constant(vz, Gaussian(1));
  Gaussian c1(Rational(2), Rational(3)), c2(Rational(1), Rational(1));
  auto sol = solve_simple_pole_coeffs(one, {c1, c2});
  REQUIRE(sol);
  CHECK((*sol)[0] == Gaussian(Rational(1), Rational(2)));
  CHECK((*sol)[1] == Gaussian(Rational(-1), Rational(-2)));

  CHECK(!solve_simple_pole_coeffs(one, {Gaussian(0)}));

  auto zero = ComplexRatFunc::constant(vz, Gaussian(0));
  CHECK(!solve_simple_pole_coeffs(zero, {Gaussian(0), Gaussian(1)}));

  // p vanishing at the single pole: any coefficient works
  auto z = ComplexRatFunc::variable(vz, "z");
  CHECK_THROWS_AS(solve_simple_pole_coeffs(z, {Gaussian(0)}), SingularSystem);
}

TEST_CASE("laurent_cubic_condition examples") {
  Gaussian c(Rational(1), Rational(2));
  CHECK(laurent_cubic_condition(Gaussian(0), Gaussian(0), Gaussian(3),
                                Gaussian(3), Gaussian(1), c));
  CHECK(!laurent_cubic_condition(Gaussian(0), Gaussian(1), Gaussian(0),
                                 Gaussian(1), Gaussian(1), c));
  CHECK(laurent_cubic_condition(Gaussian(0), Gaussian(0), Gaussian(0),
                                Gaussian(0), Gaussian(1), c));
}

TEST_CASE("laurent cubic condition matches the brute-force PH verdict") {
  testing::Rng rng(502);
  int agree = 0;
  for (int k = 0; k < 60; ++k) {
    Gaussian am1(0), a0 = rng.gaussian(2), a1(0), a2(0), a3(0);
    Gaussian c(rng.rational(2, 2), rng.nonzero_rational(2, 2));
    if (k % 2 == 0) {
      // constructed PH instances from the two clauses
      if (k % 4 == 0) {
        Gaussian b0 = rng.nonzero_gaussian(2), b1 = rng.nonzero_gaussian(2);
        a1 = b0 * b0;
        a2 = b0 * b1;
        a3 = b1 * b1 / Gaussian(3);
      } else {
        Gaussian bm1 = rng.nonzero_gaussian(2), b1 = rng.nonzero_gaussian(2);
        am1 = -(bm1 * bm1);
        a1 = Gaussian(2) * bm1 * b1;
        a3 = b1 * b1 / Gaussian(3);
      }
    } else {
      am1 = rng.gaussian(2);
      a1 = rng.gaussian(2);
      a2 = rng.gaussian(2);
      a3 = rng.nonzero_gaussian(2);
    }
    auto curve = complex_to_planar_curve(laurent_cubic(am1, a0, a1, a2, a3, c));
    bool ph = is_ph(curve).has_value();
    bool cond = laurent_cubic_condition(am1, a0, a1, a2, a3, c);
    CHECK(ph == cond);
    if (ph == cond) ++agree;
  }
  CHECK(agree == 60);
}

TEST_CASE("round trip psi -> phi -> psi") {
  testing::Rng rng(503);
  std::vector<std::string> vz{"z"};
  for (int k = 0; k < 60; ++k) {
    // polynomial psi: always residue-free
    MultiPoly<Gaussian> p = rng.nonzero_poly<Gaussian>(vz, 0, 3);
    ComplexRatFunc psi{p};
    auto phi = phi_from_psi(psi);
    auto back = psi_sqrt_of_derivative(phi.derivative("z"));
    REQUIRE(back);
    CHECK((*back == psi || *back == -psi));
  }
  // pole-bearing psi via the residue solver
  for (int k = 0; k < 25; ++k) {
    Gaussian c1 = rng.gaussian(3);
    Gaussian c2 = c1;
    while (c2 == c1) c2 = rng.gaussian(3);
    auto one = ComplexRatFunc::constant(vz, Gaussian(1));
    auto sol = solve_simple_pole_coeffs(one, {c1, c2});
    if (!sol) continue;
    LaurentSpec spec;
    spec.polynomial_part = one;
    spec.poles = {{c1, {(*sol)[0]}}, {c2, {(*sol)[1]}}};
    auto psi = spec.to_ratfunc();
    auto phi = phi_from_psi(psi);
    auto back = psi_sqrt_of_derivative(phi.derivative("z"));
    REQUIRE(back);
    CHECK((*back == psi || *back == -psi));
  }
}

TEST_CASE("real forms of psi constructions have lambda^2 = |psi|^4") {
  testing::Rng rng(504);
  std::vector<std::string> vz{"z"};
  for (int k = 0; k < 10; ++k) {
    MultiPoly<Gaussian> p = rng.nonzero_poly<Gaussian>(vz, 0, 2);
    ComplexRatFunc psi{p};
    if (psi.is_constant() && psi.num().constant_value().is_zero()) continue;
    auto phi = phi_from_psi(psi);
    auto real = complex_to_real_map(phi);
    std::optional<std::pair<Rational, RatFunc<Rational>>> verdict;
    try {
      verdict = is_ph_preserving(real);
    } catch (const RankDeficient&) {
      continue;  // psi may vanish identically in degenerate draws
    }
    REQUIRE(verdict);
    auto lambda2 = verdict->second * verdict->second * verdict->first;
    // |psi(x+iy)|^2 squared
    auto psi_real = complex_to_real_map(psi);
    auto abs2 = psi_real.components[0] * psi_real.components[0] +
                psi_real.components[1] * psi_real.components[1];
    CHECK(lambda2 == abs2 * abs2);
  }
}
