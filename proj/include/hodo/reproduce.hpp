#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hodo/gallery.hpp"
#include "hodo/io.hpp"
#include "hodo/moebius.hpp"
#include "hodo/planar.hpp"

namespace hodo {

struct ReproduceItem {
  std::string id;
  std::string description;
  // Appends detail lines; returns pass/fail.
  std::function<bool(Report&)> run;
};

namespace detail {

inline RatFunc<Rational> rq(const std::string& text,
                            const std::vector<std::string>& vars) {
  return parse_expr<Rational>(text, vars);
}
inline ComplexRatFunc cq(const std::string& text) {
  return parse_expr<Gaussian>(text, {"z"});
}

}  // namespace detail

inline std::vector<ReproduceItem> reproduce_items() {
  using detail::cq;
  using detail::rq;
  std::vector<ReproduceItem> items;

  items.push_back({"lines", "affine lines are PH with constant speed", [](Report& rep) {
    auto r = line_curve({Rational(1), Rational(2)}, {Rational(3), Rational(4)});
    auto verdict = is_ph(r);
    bool ok = verdict && verdict->first == Rational(25) &&
              verdict->second == RatFunc<Rational>::constant({"t"}, Rational(1));
    rep.add("line_34_sigma2", verdict ? verdict->first.to_string() : "absent");
    auto diag = is_ph(line_curve({Rational(0), Rational(0)}, {Rational(1), Rational(1)}));
    ok = ok && diag && diag->first == Rational(2);
    rep.add("line_11_sigma2", diag ? diag->first.to_string() : "absent");
    return ok;
  }});

  items.push_back({"tschirnhausen", "rational Tschirnhausen cubic is PH", [](Report& rep) {
    auto r = named_curve("tschirnhausen_rational");
    auto sp = speed_squared(r);
    bool ok = sp == RatFunc<Rational>(detail::rq("9*t^4 + 18*t^2 + 9", {"t"}));
    auto verdict = is_ph(r);
    ok = ok && verdict && verdict->first == Rational(9) &&
         verdict->second == detail::rq("t^2 + 1", {"t"});
    rep.add("speed2", sp.to_string());
    return ok;
  }});

  items.push_back({"space-quintic", "rational space quintic with sigma = (t^2+6)/(60(t^2+1))", [](Report& rep) {
    auto r = named_curve("kozak_quintic_space");
    auto sp = speed_squared(r);
    auto expected = detail::rq("((t^2+6)/(60*(t^2+1)))^2", {"t"});
    bool ok = sp == expected;
    auto verdict = is_ph(r);
    ok = ok && verdict && verdict->first == Rational(1, 3600) &&
         verdict->second == detail::rq("(t^2+6)/(t^2+1)", {"t"});
    rep.add("speed2", sp.to_string());
    rep.add("sigma2_scale", verdict ? verdict->first.to_string() : "absent");
    return ok;
  }});

  items.push_back({"psi-z", "Psi = z integrates to z^3/3 with dilation |z|^4", [](Report& rep) {
    auto phi = phi_from_psi(cq("z"));
    bool ok = phi == cq("z^3/3");
    auto real = complex_to_real_map(phi);
    auto verdict = is_ph_preserving(real);
    ok = ok && verdict;
    if (verdict) {
      auto lambda2 = verdict->second * verdict->second * verdict->first;
      ok = ok && lambda2 == rq("(x^2+y^2)^2", {"x", "y"});
      rep.add("lambda2", lambda2.to_string());
    }
    rep.add("phi", phi.to_string());
    return ok;
  }});

  items.push_back({"psi-pole", "Psi = (z^2+1)/z integrates to z^3/3 + 2z - 1/z", [](Report& rep) {
    auto psi = cq("(z^2+1)/z");
    auto phi = phi_from_psi(psi);
    bool ok = phi == cq("z^3/3 + 2*z - 1/z");
    rep.add("phi", phi.to_string());
    auto back = psi_sqrt_of_derivative(phi.derivative("z"));
    ok = ok && back && (*back == psi || *back == -psi);
    auto real = complex_to_real_map(phi);
    ok = ok && is_ph_preserving(real).has_value();
    auto anti = complex_to_real_map(phi, /*conjugate=*/true);
    ok = ok && is_ph_preserving(anti).has_value();
    rep.add("anti_holomorphic", "ph-preserving");
    return ok;
  }});

  items.push_back({"square-plus-z", "Phi = z^2 + z is not PH preserving", [](Report& rep) {
    auto real = complex_to_real_map(cq("z^2 + z"));
    bool ok = real.components[0] == rq("x^2 - y^2 + x", {"x", "y"}) &&
              real.components[1] == rq("2*x*y + y", {"x", "y"});
    auto g = first_fundamental_form(real);
    ok = ok && g.entries[0][0] == rq("(2*x+1)^2 + (2*y)^2", {"x", "y"});
    ok = ok && !is_ph_preserving(real).has_value();
    auto image = compose_map_curve(real, line_curve({Rational(0), Rational(0)},
                                                    {Rational(3), Rational(4)}));
    ok = ok && image.components[0] == rq("-7*t^2 + 3*t", {"t"}) &&
         image.components[1] == rq("24*t^2 + 4*t", {"t"});
    auto sp = speed_squared(image);
    ok = ok && sp == rq("2500*t^2 + 300*t + 25", {"t"}) && !is_ph(image);
    rep.add("image", image.components[0].to_string() + ", " +
                         image.components[1].to_string());
    rep.add("image_speed2", sp.to_string());
    // The displayed quartic 25t^2(25t^2+6t+1) is the squared norm of the
    // image point, itself also a non-square.
    RatFunc<Rational> pos = image.components[0] * image.components[0] +
                            image.components[1] * image.components[1];
    ok = ok && pos == rq("625*t^4 + 150*t^3 + 25*t^2", {"t"});
    ok = ok && !is_square_over_reals(pos).has_value();
    rep.add("image_norm2", pos.to_string());
    return ok;
  }});

  items.push_back({"non-conformal", "Phi = (u1^2, u2) fails the metric shape", [](Report& rep) {
    std::vector<std::string> uv{"u1", "u2"};
    RationalMap phi;
    phi.vars = uv;
    phi.components = {rq("u1^2", uv), rq("u2", uv)};
    auto g = first_fundamental_form(phi);
    bool ok = g.entries[0][0] == rq("4*u1^2", uv) &&
              g.entries[1][1] == rq("1", uv) && g.entries[0][1].is_zero();
    ok = ok && !is_ph_preserving(phi).has_value();
    auto image = compose_map_curve(phi, line_curve({Rational(0), Rational(0)},
                                                   {Rational(1), Rational(1)}));
    auto sp = speed_squared(image);
    ok = ok && sp == rq("4*t^2 + 1", {"t"}) && !is_ph(image);
    rep.add("image_speed2", sp.to_string());
    return ok;
  }});

  items.push_back({"laurent-cubic", "cut(3,1) conditions and the residue constant", [](Report& rep) {
    Gaussian c(Rational(1), Rational(1));
    bool ok = laurent_cubic_condition(Gaussian(0), Gaussian(0), Gaussian(3),
                                      Gaussian(3), Gaussian(1), c);
    ok = ok && !laurent_cubic_condition(Gaussian(0), Gaussian(1), Gaussian(0),
                                        Gaussian(1), Gaussian(1), c);
    ok = ok && laurent_cubic_condition(Gaussian(0), Gaussian(0), Gaussian(0),
                                       Gaussian(0), Gaussian(1), c);
    // Residue of (1 + 1/z)^2: the expanded value is 2*b_{-1}*b_0.
    auto square = cq("(1 + 1/z)^2");
    auto h = hermite_reduce(square, "z");
    ok = ok && h.remainder == cq("2/z");
    rep.add("residue_remainder", h.remainder.to_string());
    rep.add("residue_constant_note",
            "expanded residue is 2*b-1*b0; same zero set as the displayed b-1*b0");
    return ok;
  }});

  items.push_back({"residue-quintic", "two-pole residue solve and the printed quintic", [](Report& rep) {
    Gaussian c1(Rational(2), Rational(3)), c2(Rational(1), Rational(1));
    auto one = ComplexRatFunc::constant({"z"}, Gaussian(1));
    auto sol = solve_simple_pole_coeffs(one, {c1, c2});
    bool ok = sol && (*sol)[0] == Gaussian(Rational(1), Rational(2)) &&
              (*sol)[1] == Gaussian(Rational(-1), Rational(-2));
    rep.add("a1", sol ? (*sol)[0].to_string() : "absent");
    rep.add("a2", sol ? (*sol)[1].to_string() : "absent");
    if (!ok) return false;
    LaurentSpec spec;
    spec.polynomial_part = one;
    spec.poles = {{c1, {(*sol)[0]}}, {c2, {(*sol)[1]}}};
    ok = ok && residue_of_square_at_simple_pole(spec, 0).is_zero() &&
         residue_of_square_at_simple_pole(spec, 1).is_zero();
    auto phi = phi_from_psi(spec.to_ratfunc());
    auto expected =
        cq("z + (3-4*i)/(z-(2+3*i)) + (3-4*i)/(z-(1+i))");
    ok = ok && phi == expected;
    rep.add("phi", phi.to_string());
    auto curve = complex_to_planar_curve(phi);
    auto printed = named_curve("paper_quintic_planar");
    ok = ok && curve.components == printed.components;
    auto verdict = is_ph(curve);
    ok = ok && verdict.has_value();
    rep.add("quintic_ph", verdict ? "yes" : "no");
    return ok;
  }});

  items.push_back({"sphere", "spherical inversion image of the plane is PH preserving", [](Report& rep) {
    auto phi = sphere_parametrization();
    auto verdict = is_ph_preserving(phi);
    bool ok = verdict.has_value();
    if (verdict) {
      auto lambda2 = verdict->second * verdict->second * verdict->first;
      ok = ok && lambda2 == detail::rq("4/(1+u^2+v^2)^2", {"u", "v"});
      rep.add("lambda2", lambda2.to_string());
    }
    // The displayed parametrization repeats the first component; that literal
    // map is not conformal.
    std::vector<std::string> uv{"u", "v"};
    RationalMap literal;
    literal.vars = uv;
    literal.components = {rq("2*u/(1+u^2+v^2)", uv), rq("2*u/(1+u^2+v^2)", uv),
                          rq("(1-u^2-v^2)/(1+u^2+v^2)", uv)};
    bool literal_fails = false;
    try {
      literal_fails = !is_ph_preserving(literal).has_value();
    } catch (const RankDeficient&) {
      literal_fails = true;
    }
    ok = ok && literal_fails;
    rep.add("displayed_duplicate_component", "not conformal (corrected form used)");
    return ok;
  }});

  items.push_back({"family", "conformal family has G = lambda^2 I exactly", [](Report& rep) {
    auto comps = conformal_family_symbolic();
    std::vector<std::string> vars{"u", "v", "l1", "l2"};
    auto zero = RatFunc<Rational>::constant(vars, Rational(0));
    RatFunc<Rational> g00 = zero, g01 = zero, g11 = zero;
    for (const auto& comp : comps) {
      auto du = comp.derivative("u");
      auto dv = comp.derivative("v");
      g00 += du * du;
      g01 += du * dv;
      g11 += dv * dv;
    }
    bool ok = g01.is_zero() && g00 == g11;
    auto square = is_square_over_reals(g00);
    ok = ok && square.has_value();
    rep.add("structural", ok ? "G = lambda^2 I2 with rational lambda^2" : "failed");
    rep.add("computed_lambda2", g00.to_string());
    auto displayed = detail::rq(
        "2*(((u^2+v^2)*(u^2+v^2+4)*l1^2 + 2*(u^2-v^2)*l1*l2 + l2^2)"
        "/(u^2+v^2+1))^2",
        vars);
    rep.add("displayed_lambda2", displayed.to_string());
    bool agree = g00 == displayed;
    rep.add("constants_agree", agree ? "yes" : "no");
    if (!agree) {
      auto ratio = g00 / displayed;
      rep.add("computed_over_displayed",
              ratio.is_constant() ? ratio.to_string() : "nonconstant");
    }
    return ok;
  }});

  items.push_back({"moebius", "similarities and inversions are PH preserving", [](Report& rep) {
    bool ok = true;
    for (std::size_t n = 2; n <= 4; ++n) {
      std::vector<Rational> center;
      for (std::size_t k = 0; k < n; ++k) center.push_back(Rational(int(k) - 1, 2));
      Rational rho2(4);
      auto inv = factor_to_map(Inversion{center, rho2}, n);
      auto j = jacobian(inv);
      auto vars = inv.vars;
      RatFunc<Rational> norm = RatFunc<Rational>::constant(vars, Rational(0));
      for (std::size_t k = 0; k < n; ++k) {
        auto diff = RatFunc<Rational>::variable(vars, vars[k]) -
                    RatFunc<Rational>::constant(vars, center[k]);
        norm += diff * diff;
      }
      auto target = RatFunc<Rational>::constant(vars, rho2 * rho2) / (norm * norm);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          RatFunc<Rational> dot = RatFunc<Rational>::constant(vars, Rational(0));
          for (std::size_t k = 0; k < n; ++k) dot += j[k][a] * j[k][b];
          ok = ok && (a == b ? dot == target : dot.is_zero());
        }
      }
    }
    rep.add("inversion_metric_identity", ok ? "holds for n=2,3,4" : "failed");
    // Involution and two composite words.
    MoebiusWord twice{{Inversion{{Rational(0), Rational(0), Rational(0)}, Rational(1)},
                       Inversion{{Rational(0), Rational(0), Rational(0)}, Rational(1)}},
                      3};
    auto id = word_to_map(twice);
    ok = ok && id.components == identity_map(id.vars).components;
    MoebiusWord mixed{{Translation{{Rational(1), Rational(0), Rational(0)}},
                       Inversion{{Rational(0), Rational(0), Rational(0)}, Rational(1)}},
                      3};
    ok = ok && is_ph_preserving(word_to_map(mixed)).has_value();
    MoebiusWord sim{{Homothety{Rational(2)},
                     Orthogonal{{{Rational(3, 5), Rational(-4, 5)},
                                 {Rational(4, 5), Rational(3, 5)}}}},
                    2};
    auto lam = dilation_of(word_to_map(sim));
    ok = ok && lam.first * lam.second.num().constant_value() *
                   lam.second.num().constant_value() ==
                   Rational(4);
    rep.add("similarity_lambda2", "4");
    return ok;
  }});

  return items;
}

// Runs items (optionally one selected id), printing one PASS/FAIL line per
// item plus its detail lines. Deterministic: two runs produce identical text.
inline bool run_reproduce(const std::string& only, std::string& out) {
  bool all = true;
  bool matched = false;
  std::ostringstream os;
  for (const auto& item : reproduce_items()) {
    if (!only.empty() && item.id != only) continue;
    matched = true;
    Report rep;
    bool pass = false;
    try {
      pass = item.run(rep);
    } catch (const Error& e) {
      rep.add("error", e.code() + ": " + e.what());
    }
    os << (pass ? "PASS" : "FAIL") << " " << item.id << " (" << item.description
       << ")\n";
    for (const auto& [k, v] : rep.lines) os << "  " << k << ": " << v << "\n";
    all = all && pass;
  }
  if (!only.empty() && !matched) {
    os << "FAIL no item with id '" << only << "'\n";
    all = false;
  }
  out = os.str();
  return all;
}

}  // namespace hodo
