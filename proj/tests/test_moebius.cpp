#include <catch2/catch_amalgamated.hpp>

#include "hodo/expr.hpp"
#include "hodo/moebius.hpp"
#include "oracles.hpp"

using namespace hodo;

namespace {

MoebiusFactor random_factor(testing::Rng& rng, std::size_t n) {
  switch (rng.uniform(0, 3)) {
    case 0: {
      Translation tr;
      for (std::size_t k = 0; k < n; ++k) tr.offset.push_back(rng.rational(4, 3));
      return tr;
    }
    case 1: {
      // rational rotation in a coordinate plane from a Pythagorean triple,
      // optionally composed with an axis flip
      static const std::array<std::array<int, 3>, 3> triples{
          {{3, 4, 5}, {5, 12, 13}, {8, 15, 17}}};
      auto t = triples[rng.uniform(0, 2)];
      Rational c(t[0], t[2]), s(t[1], t[2]);
      Mat<Rational> q(n, std::vector<Rational>(n, Rational(0)));
      for (std::size_t k = 0; k < n; ++k) q[k][k] = Rational(1);
      std::size_t i = rng.uniform(0, int(n) - 1);
      std::size_t j = (i + 1) % n;
      q[i][i] = c;
      q[i][j] = -s;
      q[j][i] = s;
      q[j][j] = c;
      if (rng.uniform(0, 1)) {
        for (std::size_t k = 0; k < n; ++k) q[0][k] = -q[0][k];
      }
      return Orthogonal{q};
    }
    case 2:
      return Homothety{rng.nonzero_rational(4, 3)};
    default: {
      Inversion inv;
      for (std::size_t k = 0; k < n; ++k) inv.center.push_back(rng.rational(3, 2));
      Rational r = rng.nonzero_rational(3, 2);
      inv.rho2 = r * r + Rational(1, 3);
      return inv;
    }
  }
}

}  // namespace

TEST_CASE("factor_to_map examples") {
  auto inv = factor_to_map(
      Inversion{{Rational(0), Rational(0), Rational(0)}, Rational(1)}, 3);
  std::vector<std::string> v3{"x1", "x2", "x3"};
  CHECK(inv.components[0] ==
        parse_expr<Rational>("x1/(x1^2+x2^2+x3^2)", v3));
  auto verdict = is_ph_preserving(inv);
  REQUIRE(verdict);
  auto lambda2 = verdict->second * verdict->second * verdict->first;
  CHECK(lambda2 == parse_expr<Rational>("1/(x1^2+x2^2+x3^2)^2", v3));

  auto tr = factor_to_map(Translation{{Rational(1), Rational(-2)}}, 2);
  std::vector<std::string> v2{"x1", "x2"};
  CHECK(tr.components[0] == parse_expr<Rational>("x1 + 1", v2));
  auto trv = is_ph_preserving(tr);
  REQUIRE(trv);
  CHECK(trv->first == Rational(1));

  auto hom = factor_to_map(Homothety{Rational(3)}, 2);
  auto hv = is_ph_preserving(hom);
  REQUIRE(hv);
  CHECK(hv->first * hv->second.num().constant_value() *
            hv->second.num().constant_value() ==
        Rational(9));
}

TEST_CASE("factor validation") {
  Mat<Rational> skew{{Rational(1), Rational(1)}, {Rational(0), Rational(1)}};
  CHECK_THROWS_AS(factor_to_map(Orthogonal{skew}, 2), Error);
  CHECK_THROWS_AS(factor_to_map(Homothety{Rational(0)}, 2), Error);
  CHECK_THROWS_AS(
      factor_to_map(Inversion{{Rational(0), Rational(0)}, Rational(-1)}, 2),
      Error);
  CHECK_THROWS_AS(factor_to_map(Translation{{Rational(0)}}, 2), Error);
}

TEST_CASE("word_to_map examples") {
  Inversion unit{{Rational(0), Rational(0), Rational(0)}, Rational(1)};
  auto id = word_to_map(MoebiusWord{{unit, unit}, 3});
  CHECK(id.components == identity_map(id.vars).components);

  auto mixed = word_to_map(
      MoebiusWord{{Translation{{Rational(1), Rational(0), Rational(0)}}, unit}, 3});
  CHECK(is_ph_preserving(mixed).has_value());

  auto sim = word_to_map(MoebiusWord{
      {Homothety{Rational(2)},
       Orthogonal{{{Rational(3, 5), Rational(-4, 5)},
                   {Rational(4, 5), Rational(3, 5)}}}},
      2});
  auto lam = dilation_of(sim);
  CHECK(lam.first * lam.second.num().constant_value() *
            lam.second.num().constant_value() ==
        Rational(4));
}

TEST_CASE("dilation examples") {
  std::vector<std::string> v3{"x1", "x2", "x3"};
  auto inv4 = factor_to_map(
      Inversion{{Rational(1), Rational(0), Rational(-1)}, Rational(4)}, 3);
  auto lam = dilation_of(inv4);
  auto lambda2 = lam.second * lam.second * lam.first;
  CHECK(lambda2 ==
        parse_expr<Rational>("16/((x1-1)^2 + x2^2 + (x3+1)^2)^2", v3));

  auto idv = dilation_of(identity_map(v3));
  CHECK(idv.first == Rational(1));

  CHECK_THROWS_AS(dilation_of([] {
                    RationalMap m;
                    m.vars = {"x1", "x2"};
                    m.components = {
                        parse_expr<Rational>("x1^2", {"x1", "x2"}),
                        parse_expr<Rational>("x2", {"x1", "x2"})};
                    return m;
                  }()),
                  NotConformal);
}

TEST_CASE("inversion metric identity holds symbolically in n = 2, 3, 4") {
  testing::Rng rng(601);
  for (std::size_t n : {2u, 3u, 4u}) {
    std::vector<Rational> center;
    for (std::size_t k = 0; k < n; ++k) center.push_back(rng.rational(3, 2));
    Rational rho2 = rng.nonzero_rational(3, 2);
    rho2 = rho2 * rho2;
    auto inv = factor_to_map(Inversion{center, rho2}, n);
    auto j = jacobian(inv);
    auto vars = inv.vars;
    RatFunc<Rational> norm = RatFunc<Rational>::constant(vars, Rational(0));
    for (std::size_t k = 0; k < n; ++k) {
      auto diff = RatFunc<Rational>::variable(vars, vars[k]) -
                  RatFunc<Rational>::constant(vars, center[k]);
      norm += diff * diff;
    }
    auto target =
        RatFunc<Rational>::constant(vars, rho2 * rho2) / (norm * norm);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        RatFunc<Rational> dot = RatFunc<Rational>::constant(vars, Rational(0));
        for (std::size_t k = 0; k < n; ++k) dot += j[k][a] * j[k][b];
        if (a == b)
          CHECK(dot == target);
        else
          CHECK(dot.is_zero());
      }
  }
}

TEST_CASE("random words are PH preserving with multiplicative dilation") {
  testing::Rng rng(602);
  for (std::size_t n : {2u, 3u}) {
    for (int k = 0; k < 8; ++k) {
      MoebiusWord w;
      w.dimension = n;
      int len = rng.uniform(1, 3);
      for (int j = 0; j < len; ++j) w.factors.push_back(random_factor(rng, n));
      auto map = word_to_map(w);
      CHECK(is_ph_preserving(map).has_value());
    }
  }
  // dilation multiplicativity for factor pairs
  for (int k = 0; k < 6; ++k) {
    std::size_t n = 2 + (k % 2);
    auto f = random_factor(rng, n);
    auto g = random_factor(rng, n);
    auto fm = factor_to_map(f, n);
    auto gm = factor_to_map(g, n);
    auto composed = compose_maps(fm, gm);
    auto lam_f = dilation_of(fm);
    auto lam_g = dilation_of(gm);
    auto lam_fg = dilation_of(composed);
    auto lf = lam_f.second * lam_f.second * lam_f.first;
    auto lg = lam_g.second * lam_g.second * lam_g.first;
    auto lfg = lam_fg.second * lam_fg.second * lam_fg.first;
    auto lf_of_g = ratfunc_subst(lf, gm.components);
    REQUIRE(lf_of_g);
    CHECK(lfg == *lf_of_g * lg);
  }
}
