#include <catch2/catch_amalgamated.hpp>

#include "hodo/expr.hpp"
#include "hodo/polyalg.hpp"
#include "oracles.hpp"

using namespace hodo;

namespace {
const std::vector<std::string> VT{"t"};
const std::vector<std::string> VXY{"x", "y"};

MultiPoly<Rational> P(const std::string& text,
                      const std::vector<std::string>& vars = VT) {
  auto f = parse_expr<Rational>(text, vars);
  REQUIRE(f.is_polynomial());
  return f.num() * f.den().constant_value().inverse();
}
}  // namespace

TEST_CASE("poly_gcd examples") {
  CHECK(poly_gcd(P("t^2-1"), P("t^2-2*t+1")) == P("t-1"));
  CHECK(poly_gcd(P("x*y", VXY), P("x^2", VXY)) == P("x", VXY));
  auto f = P("9*t^4+6*t^2+1");  // (3t^2+1)^2
  CHECK(poly_gcd(f, f.derivative(0)) == P("t^2+1/3"));
  CHECK(poly_gcd(f, MultiPoly<Rational>(VT)) == monic(f));
}

TEST_CASE("gcd scaling property: gcd(fh, gh) = h * gcd(f, g)") {
  testing::Rng rng(201);
  for (int k = 0; k < 500; ++k) {
    auto f = rng.nonzero_poly<Rational>(VT, 0, 6);
    auto g = rng.nonzero_poly<Rational>(VT, 0, 6);
    auto h = rng.nonzero_poly<Rational>(VT, 0, 4);
    CHECK(poly_gcd(f * h, g * h) == monic(h * poly_gcd(f, g)));
  }
}

TEST_CASE("squarefree_decompose examples") {
  auto d1 = squarefree_decompose(P("9*t^4+6*t^2+1"));
  REQUIRE(d1.size() == 2);
  CHECK(d1[0].first == P("1"));
  CHECK(d1[0].second == 0);
  CHECK(d1[1].first == P("3*t^2+1"));
  CHECK(d1[1].second == 2);

  auto d2 = squarefree_decompose(P("625*t^4+150*t^3+25*t^2"));
  REQUIRE(d2.size() == 3);
  CHECK(d2[0].first == P("25"));
  CHECK(d2[1].first == P("t"));
  CHECK(d2[1].second == 2);
  CHECK(d2[2].first == P("25*t^2+6*t+1"));
  CHECK(d2[2].second == 1);

  auto d3 = squarefree_decompose(P("t"));
  REQUIRE(d3.size() == 2);
  CHECK(d3[1].first == P("t"));
  CHECK(d3[1].second == 1);

  CHECK_THROWS_AS(squarefree_decompose(MultiPoly<Rational>(VT)),
                  ZeroPolynomial);
}

TEST_CASE("squarefree re-expansion on random inputs") {
  testing::Rng rng(202);
  for (int k = 0; k < 1000; ++k) {
    // half plain randoms, half built with forced multiplicities
    MultiPoly<Rational> f(VT);
    if (k % 2 == 0) {
      f = rng.nonzero_poly<Rational>(VT, 0, 12);
    } else {
      f = rng.nonzero_poly<Rational>(VT, 0, 2);
      f = f * rng.nonzero_poly<Rational>(VT, 0, 2).pow(rng.uniform(1, 3));
      if (f.is_constant()) f = f * P("t+1");
    }
    auto dec = squarefree_decompose(f);
    MultiPoly<Rational> re = dec[0].first;
    for (std::size_t j = 1; j < dec.size(); ++j)
      re = re * dec[j].first.pow(dec[j].second);
    CHECK(re == f);
    // factors pairwise coprime and square-free
    for (std::size_t a = 1; a < dec.size(); ++a) {
      CHECK(poly_gcd(dec[a].first, dec[a].first.derivative(0)).is_constant());
      for (std::size_t b = a + 1; b < dec.size(); ++b)
        CHECK(poly_gcd(dec[a].first, dec[b].first).is_constant());
    }
  }
}

TEST_CASE("content_and_primitive examples") {
  auto f1 = P("y*x + y^2", VXY);
  auto [c1, p1] = content_and_primitive(f1, {"y"});
  CHECK(c1 == P("y", VXY));
  CHECK(p1 == P("x+y", VXY));

  auto f2 = P("x^2+1", VXY);
  auto [c2, p2] = content_and_primitive(f2, {"y"});
  CHECK(c2 == P("1", VXY));
  CHECK(p2 == f2);

  auto f3 = P("y^2*x^2 + 2*y^2*x + y^2", VXY);
  auto [c3, p3] = content_and_primitive(f3, {"y"});
  CHECK(c3 == P("y^2", VXY));
  CHECK(p3 == P("x^2+2*x+1", VXY));

  CHECK_THROWS_AS(content_and_primitive(MultiPoly<Rational>(VXY), {"y"}),
                  ZeroPolynomial);
}

TEST_CASE("content_and_primitive properties") {
  testing::Rng rng(203);
  for (int k = 0; k < 200; ++k) {
    auto f = rng.poly2<Rational>(VXY, 3, 3);
    if (f.is_zero()) continue;
    auto [c, p] = content_and_primitive(f, {"y"});
    CHECK(c * p == f);
    auto [c2, p2] = content_and_primitive(p, {"y"});
    CHECK(c2.is_constant());  // primitive part has content 1
  }
}

TEST_CASE("poly_sqrt examples") {
  CHECK(poly_sqrt(P("9*t^4+18*t^2+9")) == P("3*t^2+3"));
  CHECK(!poly_sqrt(P("4*t^2+1")));
  CHECK(poly_sqrt(MultiPoly<Rational>(VT)) == MultiPoly<Rational>(VT));
}

TEST_CASE("poly_sqrt round-trip against the coefficient-recursion oracle") {
  testing::Rng rng(204);
  for (int k = 0; k < 500; ++k) {
    auto h = rng.nonzero_poly<Rational>(VT, 0, 6);
    auto f = h * h;
    auto s = poly_sqrt(f);
    REQUIRE(s);
    CHECK((*s == h || *s == -h));
    CHECK(*s * *s == f);
    // independent oracle agrees
    auto oracle = testing::sqrt_by_coeffs(testing::dense_coeffs(f, 0));
    REQUIRE(oracle);
    // and absence is detected once an odd factor sneaks in
    auto p = rng.nonzero_poly<Rational>(VT, 0, 2);
    if (!p.is_constant() &&
        poly_gcd(p, p.derivative(0)).is_constant()) {
      auto g = f * p;
      CHECK(!poly_sqrt(g));
      CHECK(!testing::sqrt_by_coeffs(testing::dense_coeffs(g, 0)));
    }
  }
}

TEST_CASE("poly_sqrt over the gaussians") {
  std::vector<std::string> vz{"z"};
  auto z2 = parse_expr<Gaussian>("z^2", vz).num();
  CHECK(poly_sqrt(z2) == parse_expr<Gaussian>("z", vz).num());
  CHECK(!poly_sqrt(parse_expr<Gaussian>("z", vz).num()));
  // i*z^2 is not a square over Q(i) because i is not
  CHECK(!poly_sqrt(parse_expr<Gaussian>("i*z^2", vz).num()));
  // (1+2i)^2 z^2 is
  auto sq = parse_expr<Gaussian>("(1+2*i)^2*z^2", vz).num();
  auto root = poly_sqrt(sq);
  REQUIRE(root);
  CHECK(*root * *root == sq);
}

TEST_CASE("multivariate gcd") {
  auto a = P("(x+y)*(x-y)", VXY);
  auto b = P("(x+y)^2", VXY);
  CHECK(poly_gcd(a, b) == P("x+y", VXY));

  testing::Rng rng(205);
  for (int k = 0; k < 60; ++k) {
    auto f = rng.poly2<Rational>(VXY, 2, 2);
    auto g = rng.poly2<Rational>(VXY, 2, 2);
    auto h = rng.poly2<Rational>(VXY, 1, 1);
    if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
    auto lhs = poly_gcd(f * h, g * h);
    auto rhs = monic(h * poly_gcd(f, g));
    CHECK(lhs == rhs);
    CHECK(divide_exact(f * h, lhs).has_value());
    CHECK(divide_exact(g * h, lhs).has_value());
  }
}
