#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hodo/ratcalc.hpp"

namespace hodo {

// Rational parametric curve R -> R^n; all components share the parameter
// variable.
struct PHCurve {
  std::string param = "t";
  std::vector<RatFunc<Rational>> components;

  std::size_t dim() const { return components.size(); }
  std::vector<std::string> vars() const { return {param}; }
};

inline PHCurve make_curve(std::string param,
                          std::vector<RatFunc<Rational>> components) {
  return PHCurve{std::move(param), std::move(components)};
}

// The affine line a + t*d.
inline PHCurve line_curve(const std::vector<Rational>& a,
                          const std::vector<Rational>& d,
                          const std::string& param = "t") {
  PHCurve r;
  r.param = param;
  std::vector<std::string> vars{param};
  auto t = RatFunc<Rational>::variable(vars, param);
  for (std::size_t k = 0; k < a.size(); ++k)
    r.components.push_back(RatFunc<Rational>::constant(vars, a[k]) +
                           t * d[k]);
  return r;
}

// Sum of squared component derivatives, normalized.
inline RatFunc<Rational> speed_squared(const PHCurve& r) {
  std::vector<std::string> vars = r.vars();
  RatFunc<Rational> acc = RatFunc<Rational>::constant(vars, Rational(0));
  for (const auto& c : r.components) {
    RatFunc<Rational> d = c.derivative(r.param);
    acc += d * d;
  }
  return acc;
}

// PH verdict: speed^2 = c * q^2 with c > 0 rational, or absent.
inline std::optional<std::pair<Rational, RatFunc<Rational>>> is_ph(
    const PHCurve& r) {
  return is_square_over_reals(speed_squared(r));
}

// The paper's named example curves, in exact rational coefficients.
inline PHCurve named_curve(const std::string& name) {
  std::vector<std::string> vt{"t"};
  auto t = RatFunc<Rational>::variable(vt, "t");
  auto k = [&](int v) { return RatFunc<Rational>::constant(vt, Rational(v)); };
  if (name == "tschirnhausen_rational") {
    // Similarity-equivalent rational form of the Tschirnhausen cubic.
    return make_curve("t", {t * t * t - k(3) * t, k(3) * t * t});
  }
  if (name == "kozak_quintic_space") {
    auto den = k(60) * (t * t + k(1));
    return make_curve("t", {-(t * (t * t - k(4))) / den,
                            -(k(2) * t * (k(3) * t - k(1))) / den,
                            -(t * (k(3) * t + k(4))) / den});
  }
  if (name == "paper_quintic_planar") {
    auto den = (t * t - k(4) * t + k(13)) * (t * t - k(2) * t + k(2));
    auto num_x = t.pow(5) - k(6) * t.pow(4) + k(29) * t.pow(3) -
                 k(45) * t * t + k(55) * t + k(25);
    auto num_y = -k(8) * t.pow(3) + k(48) * t * t - k(122) * t + k(125);
    return make_curve("t", {num_x / den, num_y / den});
  }
  throw UnknownName(name);
}

}  // namespace hodo
