#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hodo/map.hpp"
#include "hodo/ratcalc.hpp"

namespace hodo {

// Univariate rational function over Q(i), the Psi / Phi' of the planar
// construction. The variable is z by convention.
using ComplexRatFunc = RatFunc<Gaussian>;

inline ComplexRatFunc complex_var(const std::string& name = "z") {
  return ComplexRatFunc::variable({name}, name);
}

// Raised when Psi^2 has a nonvanishing residue, carrying the Hermite
// remainder that witnesses the obstruction.
struct NonzeroResidue : Error {
  explicit NonzeroResidue(ComplexRatFunc rem)
      : Error("NonzeroResidue",
              "Psi^2 has nonvanishing residue; remainder " + rem.to_string()),
        remainder(std::move(rem)) {}
  ComplexRatFunc remainder;
};

// Phi with Phi' = Psi^2, integration constant zero. Throws NonzeroResidue
// when no rational primitive exists.
inline ComplexRatFunc phi_from_psi(const ComplexRatFunc& psi,
                                   const std::string& var = "z") {
  ComplexRatFunc square = psi * psi;
  HermiteResult<Gaussian> h = hermite_reduce(square, var);
  if (!h.remainder.is_zero()) throw NonzeroResidue(h.remainder);
  return h.rational_part;
}

// Psi with Psi^2 = dphi over Q(i), sign-normalized; absent when dphi is not
// a square.
inline std::optional<ComplexRatFunc> psi_sqrt_of_derivative(
    const ComplexRatFunc& dphi) {
  auto n = poly_sqrt(dphi.num());
  if (!n) return std::nullopt;
  auto d = poly_sqrt(dphi.den());
  if (!d) return std::nullopt;
  ComplexRatFunc psi(*n, *d);
  if (!FieldTraits<Gaussian>::normal_sign(psi.num().leading_coeff()))
    psi = -psi;
  return psi;
}

namespace detail {

// Splits a Gaussian-coefficient polynomial over real variables into real and
// imaginary parts.
inline std::pair<MultiPoly<Rational>, MultiPoly<Rational>> split_parts(
    const MultiPoly<Gaussian>& p) {
  MultiPoly<Rational> re(p.vars()), im(p.vars());
  for (const auto& [e, c] : p.terms()) {
    if (!c.re().is_zero()) re.add_term(e, c.re());
    if (!c.im().is_zero()) im.add_term(e, c.im());
  }
  return {re, im};
}

inline MultiPoly<Gaussian> conj_poly(const MultiPoly<Gaussian>& p) {
  return p.map_coeffs(&FieldTraits<Gaussian>::conj);
}

// Real/imaginary components of a Gaussian rational function of real
// variables, via conjugate-denominator rationalization.
inline std::pair<RatFunc<Rational>, RatFunc<Rational>> real_imag(
    const RatFunc<Gaussian>& f) {
  MultiPoly<Gaussian> num = f.num() * conj_poly(f.den());
  MultiPoly<Gaussian> den = f.den() * conj_poly(f.den());
  auto [den_re, den_im] = split_parts(den);
  if (!den_im.is_zero())
    throw Error("Internal", "rationalized denominator is not real");
  auto [num_re, num_im] = split_parts(num);
  return {RatFunc<Rational>(num_re, den_re), RatFunc<Rational>(num_im, den_re)};
}

}  // namespace detail

// The real form (x, y) -> (Re Phi, Im Phi) of a complex function, obtained by
// substituting z = x + i y. With conjugate set, returns the anti-holomorphic
// counterpart (x, y) -> (Re Phi(x - i y), -Im Phi(x - i y)).
inline RationalMap complex_to_real_map(const ComplexRatFunc& phi,
                                       bool conjugate = false) {
  std::vector<std::string> xy{"x", "y"};
  MultiPoly<Gaussian> zval =
      MultiPoly<Gaussian>::variable(xy, std::string("x")) +
      MultiPoly<Gaussian>::variable(xy, std::string("y")) *
          (conjugate ? -Gaussian::i() : Gaussian::i());
  std::vector<RatFunc<Gaussian>> values{RatFunc<Gaussian>(zval)};
  auto sub = ratfunc_subst(phi, values);
  if (!sub) throw PoleCollapse("complex function is a pole everywhere");
  auto [re, im] = detail::real_imag(*sub);
  RationalMap out;
  out.vars = xy;
  out.components = {re, conjugate ? -im : im};
  return out;
}

// Substitutes the real parameter t for z and splits parts: the planar curve
// traced by a complex function along the real axis.
inline PHCurve complex_to_planar_curve(const ComplexRatFunc& phi,
                                       const std::string& param = "t") {
  std::vector<std::string> vt{param};
  std::vector<RatFunc<Gaussian>> values{RatFunc<Gaussian>::variable(vt, param)};
  auto sub = ratfunc_subst(phi, values);
  if (!sub) throw PoleOnCurve("complex function has a pole along the real axis");
  auto [re, im] = detail::real_imag(*sub);
  PHCurve out;
  out.param = param;
  out.components = {re, im};
  return out;
}

// Psi given by a polynomial part plus prescribed-order poles at prescribed
// points, the Laurent data of the residue construction.
struct LaurentSpec {
  struct Pole {
    Gaussian location;
    std::vector<Gaussian> coefficients;  // a_{-1}, a_{-2}, ...
  };
  ComplexRatFunc polynomial_part;  // trivial denominator
  std::vector<Pole> poles;

  ComplexRatFunc to_ratfunc(const std::string& var = "z") const {
    ComplexRatFunc psi = polynomial_part;
    std::vector<std::string> vz = polynomial_part.vars();
    auto z = ComplexRatFunc::variable(vz, var);
    for (const auto& pole : poles) {
      ComplexRatFunc base = z - ComplexRatFunc::constant(vz, pole.location);
      for (std::size_t j = 0; j < pole.coefficients.size(); ++j)
        psi += ComplexRatFunc::constant(vz, pole.coefficients[j]) /
               base.pow(static_cast<int>(j) + 1);
    }
    return psi;
  }
};

// Residue of Psi^2 at a simple pole c_k with coefficient a_k: equals
// 2 a_k R(c_k) where R = Psi - a_k/(z - c_k).
inline Gaussian residue_of_square_at_simple_pole(const LaurentSpec& spec,
                                                 std::size_t k,
                                                 const std::string& var = "z") {
  if (k >= spec.poles.size())
    throw Error("BadIndex", "pole index out of range");
  const auto& pole = spec.poles[k];
  if (pole.coefficients.size() != 1)
    throw HigherOrderPole("pole order exceeds one; use hermite_reduce instead");
  std::vector<std::string> vz = spec.polynomial_part.vars();
  auto z = ComplexRatFunc::variable(vz, var);
  ComplexRatFunc rest =
      spec.to_ratfunc(var) -
      ComplexRatFunc::constant(vz, pole.coefficients[0]) /
          (z - ComplexRatFunc::constant(vz, pole.location));
  auto value = rest.eval({pole.location});
  if (!value)
    throw Error("Internal", "remaining part has a pole at the evaluation point");
  return Gaussian(2) * pole.coefficients[0] * *value;
}

// Solves the linear residue system for simple-pole coefficients of
// Psi = p + sum a_k/(z - c_k): p(c_k) + sum_{j != k} a_j/(c_k - c_j) = 0.
// Unique all-nonzero solution, or absent (no solution / a zero coefficient);
// throws SingularSystem when infinitely many solutions exist.
inline std::optional<std::vector<Gaussian>> solve_simple_pole_coeffs(
    const ComplexRatFunc& poly_part, const std::vector<Gaussian>& locations) {
  if (!poly_part.is_polynomial())
    throw Error("BadInput", "polynomial part must have trivial denominator");
  if (poly_part.vars().size() != 1)
    throw Error("BadInput", "polynomial part must be univariate");
  const std::size_t n = locations.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (locations[i] == locations[j])
        throw Error("BadInput", "pole locations must be pairwise distinct");
  Mat<Gaussian> m(n, std::vector<Gaussian>(n, Gaussian(0)));
  std::vector<Gaussian> rhs(n, Gaussian(0));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == k) continue;
      m[k][j] = (locations[k] - locations[j]).inverse();
    }
    auto val = poly_part.eval({locations[k]});
    rhs[k] = -*val;
  }
  auto solved = solve_linear(m, rhs);
  if (solved.status == SolveStatus::Inconsistent) return std::nullopt;
  if (solved.status == SolveStatus::Underdetermined)
    throw SingularSystem("residue system has infinitely many solutions");
  for (const auto& a : solved.solution)
    if (a.is_zero()) return std::nullopt;
  return solved.solution;
}

// The cut(3,1) condition: Sum a_i (t-c)^i, i = -1..3, represents a planar PH
// curve iff (a2^2 = 3 a1 a3 and a_{-1} = 0) or (a1^2 + 12 a3 a_{-1} = 0 and
// a2 = 0).
inline bool laurent_cubic_condition(const Gaussian& am1, const Gaussian& a0,
                                    const Gaussian& a1, const Gaussian& a2,
                                    const Gaussian& a3, const Gaussian& c) {
  (void)a0;
  (void)c;
  const bool clause1 = a2 * a2 == Gaussian(3) * a1 * a3 && am1.is_zero();
  const bool clause2 =
      (a1 * a1 + Gaussian(12) * a3 * am1).is_zero() && a2.is_zero();
  return clause1 || clause2;
}

// The Laurent-cubic curve itself, for cross-checking the condition against a
// brute-force PH verdict.
inline ComplexRatFunc laurent_cubic(const Gaussian& am1, const Gaussian& a0,
                                    const Gaussian& a1, const Gaussian& a2,
                                    const Gaussian& a3, const Gaussian& c,
                                    const std::string& var = "t") {
  std::vector<std::string> vt{var};
  auto t = ComplexRatFunc::variable(vt, var);
  auto base = t - ComplexRatFunc::constant(vt, c);
  return ComplexRatFunc::constant(vt, am1) / base +
         ComplexRatFunc::constant(vt, a0) +
         ComplexRatFunc::constant(vt, a1) * base +
         ComplexRatFunc::constant(vt, a2) * base.pow(2) +
         ComplexRatFunc::constant(vt, a3) * base.pow(3);
}

}  // namespace hodo
