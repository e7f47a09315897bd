#pragma once

#include <string>
#include <vector>

#include "hodo/expr.hpp"
#include "hodo/map.hpp"

namespace hodo {

// Conformal parametrization of the unit sphere, the image of the plane under
// a spherical inversion: (2u, 2v, 1-u^2-v^2)/(1+u^2+v^2).
inline RationalMap sphere_parametrization() {
  std::vector<std::string> uv{"u", "v"};
  RationalMap phi;
  phi.vars = uv;
  phi.components = {
      parse_expr<Rational>("2*u/(1+u^2+v^2)", uv),
      parse_expr<Rational>("2*v/(1+u^2+v^2)", uv),
      parse_expr<Rational>("(1-u^2-v^2)/(1+u^2+v^2)", uv),
  };
  return phi;
}

namespace detail {

inline std::vector<std::string> family_component_text() {
  return {
      "2*(-6*(u^2-v^2)*l1*l2 + 3*(u^4+2*u^2*v^2+u^2+v^4+v^2+1)*l1^2 + 3*l2^2)"
      "/(3*(1+u^2+v^2))",
      "2*(v*(v^2-3*u^2)*(u^2+v^2+4)*l1^2 - 6*v*(u^2+v^2)*l1*l2 - 3*v*l2^2)"
      "/(3*(1+u^2+v^2))",
      "2*(-u*(u^2-3*v^2)*(u^2+v^2+4)*l1^2 - 6*u*(u^2+v^2)*l1*l2 + 3*u*l2^2)"
      "/(3*(1+u^2+v^2))",
  };
}

}  // namespace detail

// The one-parameter family of conformal rational maps R^2 -> R^3, with the
// homogeneous parameters l1, l2 kept symbolic: components over (u, v, l1, l2).
inline std::vector<RatFunc<Rational>> conformal_family_symbolic() {
  std::vector<std::string> vars{"u", "v", "l1", "l2"};
  std::vector<RatFunc<Rational>> comps;
  for (const auto& text : detail::family_component_text())
    comps.push_back(parse_expr<Rational>(text, vars));
  return comps;
}

// The family at fixed rational parameter values, as a genuine 2 -> 3 map.
inline RationalMap conformal_family(const Rational& l1, const Rational& l2) {
  std::vector<std::string> uv{"u", "v"};
  auto symbolic = conformal_family_symbolic();
  std::vector<RatFunc<Rational>> values{
      RatFunc<Rational>::variable(uv, "u"),
      RatFunc<Rational>::variable(uv, "v"),
      RatFunc<Rational>::constant(uv, l1),
      RatFunc<Rational>::constant(uv, l2),
  };
  RationalMap phi;
  phi.vars = uv;
  for (const auto& comp : symbolic) {
    auto sub = ratfunc_subst(comp, values);
    if (!sub) throw PoleCollapse("family parameters hit the pole locus");
    phi.components.push_back(std::move(*sub));
  }
  return phi;
}

}  // namespace hodo
