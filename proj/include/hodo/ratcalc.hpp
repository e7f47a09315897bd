#pragma once

#include <cassert>
#include <optional>
#include <utility>
#include <vector>

#include "hodo/linalg.hpp"
#include "hodo/ratfunc.hpp"

namespace hodo {

// Decides whether f is a square in R(vars) and returns the decomposition
// f = c * q^2 with c > 0 rational and q normalized (unit leading denominator
// coefficient, positive leading numerator coefficient). A square-free part
// that is nonconstant rules the square out; a leftover negative constant does
// too. Zero counts as (1, 0).
inline std::optional<std::pair<Rational, RatFunc<Rational>>> is_square_over_reals(
    const RatFunc<Rational>& f) {
  if (f.is_zero())
    return std::make_pair(Rational(1),
                          RatFunc<Rational>::constant(f.vars(), Rational(0)));
  auto half = [](const MultiPoly<Rational>& p)
      -> std::optional<MultiPoly<Rational>> {
    auto dec = squarefree_decompose(p);
    MultiPoly<Rational> q =
        MultiPoly<Rational>::constant(p.vars(), Rational(1));
    for (std::size_t k = 1; k < dec.size(); ++k) {
      if (dec[k].second % 2 != 0) return std::nullopt;
      q = q * dec[k].first.pow(dec[k].second / 2);
    }
    return q;
  };
  auto qn = half(f.num());
  if (!qn) return std::nullopt;
  auto qd = half(f.den());
  if (!qd) return std::nullopt;
  RatFunc<Rational> q(*qn, *qd);
  if (q.num().leading_coeff().sign() < 0) q = -q;
  RatFunc<Rational> c = f / (q * q);
  assert(c.is_constant());
  Rational cv = c.constant_value();
  if (cv.sign() <= 0) return std::nullopt;
  return std::make_pair(cv, q);
}

// Factorization f = g(y) * h(x, y)^2 with g free of the x-variables, for
// rational functions that are generically squares in x. Throws
// NotGenericallySquare when an odd-multiplicity factor depends on x.
template <class F>
std::pair<RatFunc<F>, RatFunc<F>> square_extract(
    const RatFunc<F>& f, const std::vector<std::string>& x_vars) {
  const auto& vars = f.vars();
  std::vector<bool> is_x(vars.size(), false);
  for (const auto& name : x_vars) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw UndeclaredVariable(name);
    is_x[static_cast<std::size_t>(it - vars.begin())] = true;
  }
  if (f.is_zero())
    return {RatFunc<F>::constant(vars, FieldTraits<F>::zero()),
            RatFunc<F>::constant(vars, FieldTraits<F>::one())};
  auto split = [&](const MultiPoly<F>& p) {
    auto dec = squarefree_decompose(p);
    MultiPoly<F> g = dec[0].first;  // the constant
    MultiPoly<F> h = MultiPoly<F>::constant(vars, FieldTraits<F>::one());
    for (std::size_t k = 1; k < dec.size(); ++k) {
      bool on_x = false;
      for (std::size_t v = 0; v < vars.size(); ++v)
        if (is_x[v] && dec[k].first.depends_on(v)) on_x = true;
      if (on_x) {
        if (dec[k].second % 2 != 0)
          throw NotGenericallySquare(
              "square-free part depends on the x-variables: " +
              dec[k].first.to_string());
        h = h * dec[k].first.pow(dec[k].second / 2);
      } else {
        g = g * dec[k].first.pow(dec[k].second);
      }
    }
    return std::make_pair(g, h);
  };
  auto [gn, hn] = split(f.num());
  auto [gd, hd] = split(f.den());
  return {RatFunc<F>(gn, gd), RatFunc<F>(hn, hd)};
}

// Result of Hermite reduction: input = derivative(rational_part) + remainder
// with a square-free remainder denominator. The polynomial part's primitive
// is folded into rational_part, so a rational primitive exists iff the
// remainder vanishes.
template <class F>
struct HermiteResult {
  RatFunc<F> rational_part;
  RatFunc<F> remainder;
};

namespace detail {

// Dense univariate view of a rational function's polynomial; requires all
// other variables absent.
template <class F>
std::vector<F> uni_coeffs(const MultiPoly<F>& p, std::size_t var) {
  std::vector<F> out;
  for (const auto& c : p.coeffs_in(var)) {
    assert(c.is_constant());
    out.push_back(c.constant_value());
  }
  while (!out.empty() && FieldTraits<F>::is_zero(out.back())) out.pop_back();
  return out;
}

template <class F>
MultiPoly<F> from_uni(const std::vector<F>& coeffs, std::size_t var,
                      const std::vector<std::string>& vars) {
  MultiPoly<F> p(vars);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (FieldTraits<F>::is_zero(coeffs[k])) continue;
    typename MultiPoly<F>::Exp e(vars.size(), 0);
    e[var] = static_cast<int>(k);
    p.add_term(std::move(e), coeffs[k]);
  }
  return p;
}

// Quotient and remainder of univariate division.
template <class F>
std::pair<std::vector<F>, std::vector<F>> uni_divmod(std::vector<F> a,
                                                     const std::vector<F>& b) {
  assert(!b.empty());
  std::vector<F> q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, FieldTraits<F>::zero());
  while (a.size() >= b.size() && !a.empty()) {
    F coef = a.back() / b.back();
    std::size_t off = a.size() - b.size();
    q[off] = coef;
    for (std::size_t k = 0; k < b.size(); ++k) a[off + k] -= coef * b[k];
    while (!a.empty() && FieldTraits<F>::is_zero(a.back())) a.pop_back();
  }
  return {q, a};
}

template <class F>
std::vector<F> uni_mul(const std::vector<F>& a, const std::vector<F>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<F> r(a.size() + b.size() - 1, FieldTraits<F>::zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  while (!r.empty() && FieldTraits<F>::is_zero(r.back())) r.pop_back();
  return r;
}

template <class F>
std::vector<F> uni_deriv(const std::vector<F>& a) {
  std::vector<F> r;
  for (std::size_t k = 1; k < a.size(); ++k) r.push_back(a[k] * F(static_cast<int>(k)));
  while (!r.empty() && FieldTraits<F>::is_zero(r.back())) r.pop_back();
  return r;
}

}  // namespace detail

// Hermite reduction via Ostrogradsky's linear system: for proper R/D with
// D = D1*D2, D2 = gcd(D, D'), solve R = D1*B' - B*T + C*D2 where
// T = D1*D2'/D2, deg B < deg D2, deg C < deg D1. The remainder C/D1 has a
// square-free denominator and carries exactly the residue obstruction.
template <class F>
HermiteResult<F> hermite_reduce(const RatFunc<F>& f, const std::string& var) {
  const auto vars = f.vars();
  const std::size_t v = f.var_index(var);
  for (std::size_t k = 0; k < vars.size(); ++k)
    if (k != v && (f.num().depends_on(k) || f.den().depends_on(k)))
      throw Error("NotUnivariate", "hermite_reduce requires univariate input");

  using detail::from_uni;
  using detail::uni_coeffs;
  using detail::uni_deriv;
  using detail::uni_divmod;
  using detail::uni_mul;

  std::vector<F> a = uni_coeffs(f.num(), v);
  std::vector<F> d = uni_coeffs(f.den(), v);

  RatFunc<F> zero = RatFunc<F>::constant(vars, FieldTraits<F>::zero());
  if (a.empty()) return {zero, zero};

  auto [poly_part, rem] = uni_divmod(a, d);
  // Antiderivative of the polynomial part.
  std::vector<F> poly_prim(poly_part.size() + 1, FieldTraits<F>::zero());
  for (std::size_t k = 0; k < poly_part.size(); ++k)
    poly_prim[k + 1] = poly_part[k] / F(static_cast<int>(k + 1));
  RatFunc<F> rational_part(from_uni(poly_prim, v, vars));

  if (rem.empty()) return {rational_part, zero};
  if (d.size() == 1) return {rational_part, zero};  // cannot happen after divmod

  MultiPoly<F> dp = from_uni(d, v, vars);
  MultiPoly<F> d2p = poly_gcd(dp, dp.derivative(v));
  if (d2p.is_constant()) {
    // Denominator already square-free: everything is remainder.
    return {rational_part, RatFunc<F>(from_uni(rem, v, vars), dp)};
  }
  MultiPoly<F> d1p = *divide_exact(dp, d2p);
  std::vector<F> d1 = uni_coeffs(d1p, v);
  std::vector<F> d2 = uni_coeffs(d2p, v);
  // T = D1*D2'/D2, a polynomial in characteristic zero.
  auto [tq, tr] = uni_divmod(uni_mul(d1, uni_deriv(d2)), d2);
  if (!tr.empty()) throw Error("Internal", "hermite: D2 does not divide D1*D2'");

  const std::size_t nb = d2.size() - 1;  // deg B < deg D2
  const std::size_t nc = d1.size() - 1;  // deg C < deg D1
  const std::size_t ncols = nb + nc;
  const std::size_t nrows = d.size() - 1;
  Mat<F> m(nrows, std::vector<F>(ncols, FieldTraits<F>::zero()));
  auto add_poly_column = [&](const std::vector<F>& col, std::size_t j) {
    for (std::size_t k = 0; k < col.size() && k < nrows; ++k) m[k][j] += col[k];
  };
  for (std::size_t j = 0; j < nb; ++j) {
    // Contribution of B = x^j: D1*(x^j)' - x^j*T
    std::vector<F> bj(j + 1, FieldTraits<F>::zero());
    bj[j] = FieldTraits<F>::one();
    std::vector<F> col = uni_mul(d1, uni_deriv(bj));
    std::vector<F> neg = uni_mul(bj, tq);
    col.resize(std::max(col.size(), neg.size()), FieldTraits<F>::zero());
    for (std::size_t k = 0; k < neg.size(); ++k) col[k] -= neg[k];
    add_poly_column(col, j);
  }
  for (std::size_t j = 0; j < nc; ++j) {
    std::vector<F> cj(j + 1, FieldTraits<F>::zero());
    cj[j] = FieldTraits<F>::one();
    add_poly_column(uni_mul(cj, d2), nb + j);
  }
  std::vector<F> rhs(nrows, FieldTraits<F>::zero());
  for (std::size_t k = 0; k < rem.size(); ++k) rhs[k] = rem[k];
  auto solved = solve_linear(m, rhs);
  if (solved.status != SolveStatus::Unique)
    throw Error("Internal", "hermite: Ostrogradsky system not uniquely solvable");
  std::vector<F> b(solved.solution.begin(), solved.solution.begin() + nb);
  std::vector<F> c(solved.solution.begin() + nb, solved.solution.end());

  rational_part += RatFunc<F>(from_uni(b, v, vars), d2p);
  RatFunc<F> remainder = RatFunc<F>(from_uni(c, v, vars), d1p);
  return {rational_part, remainder};
}

// Antiderivative in the same field when all residues vanish; the integration
// constant is fixed to zero.
template <class F>
std::optional<RatFunc<F>> rational_primitive(const RatFunc<F>& f,
                                             const std::string& var) {
  HermiteResult<F> h = hermite_reduce(f, var);
  if (!h.remainder.is_zero()) return std::nullopt;
  return h.rational_part;
}

}  // namespace hodo
