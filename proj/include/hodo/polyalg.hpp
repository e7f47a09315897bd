#pragma once

#include <algorithm>
#include <cassert>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "hodo/multipoly.hpp"

namespace hodo {

// Scales to unit lexicographic leading coefficient.
template <class F>
MultiPoly<F> monic(const MultiPoly<F>& f) {
  if (f.is_zero()) return f;
  const F& lc = f.leading_coeff();
  if (lc == FieldTraits<F>::one()) return f;
  return f * lc.inverse();
}

namespace detail {

template <class F>
std::vector<std::size_t> active_vars(const MultiPoly<F>& f,
                                     const MultiPoly<F>& g) {
  std::vector<std::size_t> act;
  for (std::size_t v = 0; v < f.vars().size(); ++v)
    if (f.depends_on(v) || g.depends_on(v)) act.push_back(v);
  return act;
}

// Univariate monic Euclid on dense coefficient vectors.
template <class F>
std::vector<F> uni_gcd(std::vector<F> a, std::vector<F> b) {
  auto trim = [](std::vector<F>& v) {
    while (!v.empty() && FieldTraits<F>::is_zero(v.back())) v.pop_back();
  };
  auto make_monic = [](std::vector<F>& v) {
    if (v.empty()) return;
    F inv = v.back().inverse();
    for (auto& c : v) c *= inv;
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    make_monic(b);
    // a mod b
    while (a.size() >= b.size() && !a.empty()) {
      F q = a.back();
      std::size_t off = a.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k) a[off + k] -= q * b[k];
      trim(a);
    }
    std::swap(a, b);
  }
  make_monic(a);
  return a;
}

// Partial evaluation: substitutes field values for every variable except
// `keep`, producing dense univariate coefficients in `keep`.
template <class F>
std::vector<F> specialize_except(const MultiPoly<F>& p, std::size_t keep,
                                 const std::vector<F>& values) {
  std::vector<F> out(p.degree(keep) + 1, FieldTraits<F>::zero());
  for (const auto& [e, c] : p.terms()) {
    F t = c;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (v == keep || e[v] == 0) continue;
      F pw = values[v];
      for (int k = 1; k < e[v]; ++k) pw *= values[v];
      t *= pw;
    }
    out[e[keep]] += t;
  }
  while (!out.empty() && FieldTraits<F>::is_zero(out.back())) out.pop_back();
  return out;
}

// Sound one-sided coprimality certificate: specializing all variables but x
// maps any common divisor to a common divisor, so a degree-preserving
// specialization with trivial univariate gcd proves gcd(f, g) has no
// x-dependent part. Inconclusive (false) on failure.
template <class F>
bool coprime_in_main_var(const MultiPoly<F>& f, const MultiPoly<F>& g,
                         std::size_t x) {
  const std::size_t nvars = f.vars().size();
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<F> values(nvars, FieldTraits<F>::zero());
    for (std::size_t v = 0; v < nvars; ++v)
      values[v] = F(static_cast<int>((17 * (attempt + 1) + 5 * v) % 23) - 11);
    auto uf = specialize_except(f, x, values);
    auto ug = specialize_except(g, x, values);
    if (static_cast<int>(uf.size()) != f.degree(x) + 1) continue;
    if (static_cast<int>(ug.size()) != g.degree(x) + 1) continue;
    if (uni_gcd(uf, ug).size() == 1) return true;
  }
  return false;
}

// Pseudo-remainder of a by b in the main variable, on dense coefficient
// vectors whose entries are polynomials in the remaining variables.
template <class F>
std::vector<MultiPoly<F>> pseudo_rem(std::vector<MultiPoly<F>> r,
                                     const std::vector<MultiPoly<F>>& b) {
  auto trim = [](std::vector<MultiPoly<F>>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
  };
  const MultiPoly<F>& lb = b.back();
  trim(r);
  while (r.size() >= b.size() && !r.empty()) {
    MultiPoly<F> lr = r.back();
    std::size_t off = r.size() - b.size();
    for (auto& c : r) c = c * lb;
    for (std::size_t k = 0; k < b.size(); ++k) r[off + k] -= lr * b[k];
    trim(r);
  }
  return r;
}

}  // namespace detail

// Content of f with respect to the complement of `main_var`: the gcd of the
// coefficient polynomials of the powers of main_var.
template <class F>
MultiPoly<F> poly_gcd(const MultiPoly<F>& f, const MultiPoly<F>& g);

namespace detail {

template <class F>
MultiPoly<F> content_wrt(const MultiPoly<F>& f, std::size_t main_var) {
  MultiPoly<F> c(f.vars());
  for (const auto& coeff : f.coeffs_in(main_var)) {
    if (coeff.is_zero()) continue;
    c = c.is_zero() ? monic(coeff) : poly_gcd(c, coeff);
    if (c.is_constant()) break;
  }
  return c;
}

}  // namespace detail

// Gcd normalized to unit lexicographic leading coefficient; gcd(f, 0) is the
// normalized f. Multivariate inputs go through recursive content/primitive
// splitting with a primitive pseudo-remainder sequence in the main variable.
template <class F>
MultiPoly<F> poly_gcd(const MultiPoly<F>& f, const MultiPoly<F>& g) {
  assert(f.vars() == g.vars());
  if (f.is_zero()) return monic(g);
  if (g.is_zero()) return monic(f);
  if (f.is_constant() || g.is_constant())
    return MultiPoly<F>::constant(f.vars(), FieldTraits<F>::one());

  auto act = detail::active_vars(f, g);
  if (act.size() == 1) {
    std::size_t v = act[0];
    auto to_vec = [&](const MultiPoly<F>& p) {
      std::vector<F> out;
      for (const auto& c : p.coeffs_in(v)) out.push_back(c.constant_value());
      return out;
    };
    auto r = detail::uni_gcd(to_vec(f), to_vec(g));
    MultiPoly<F> out(f.vars());
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (FieldTraits<F>::is_zero(r[k])) continue;
      typename MultiPoly<F>::Exp e(f.vars().size(), 0);
      e[v] = static_cast<int>(k);
      out.add_term(std::move(e), r[k]);
    }
    return out;
  }

  // Exact-division fast paths: one argument dividing the other settles it.
  if (f.total_degree() >= g.total_degree() && divide_exact(f, g)) return monic(g);
  if (g.total_degree() >= f.total_degree() && divide_exact(g, f)) return monic(f);

  std::size_t x = act[0];
  MultiPoly<F> cf = detail::content_wrt(f, x);
  MultiPoly<F> cg = detail::content_wrt(g, x);
  MultiPoly<F> pf = *divide_exact(f, cf);
  MultiPoly<F> pg = *divide_exact(g, cg);
  MultiPoly<F> cc = poly_gcd(cf, cg);

  if (detail::coprime_in_main_var(pf, pg, x)) return monic(cc);

  auto a = pf.coeffs_in(x);
  auto b = pg.coeffs_in(x);
  if (a.size() < b.size()) std::swap(a, b);
  MultiPoly<F> pp_gcd(f.vars());
  while (true) {
    auto r = detail::pseudo_rem(a, b);
    if (r.empty()) {
      pp_gcd = MultiPoly<F>::from_coeffs_in(x, b, f.vars());
      break;
    }
    if (r.size() == 1) {
      // A nonzero remainder of main-variable degree 0 forces coprimality.
      pp_gcd = MultiPoly<F>::constant(f.vars(), FieldTraits<F>::one());
      break;
    }
    MultiPoly<F> rp = MultiPoly<F>::from_coeffs_in(x, r, f.vars());
    MultiPoly<F> rc = detail::content_wrt(rp, x);
    rp = *divide_exact(rp, rc);
    a = std::move(b);
    b = rp.coeffs_in(x);
  }
  if (!pp_gcd.is_constant()) {
    MultiPoly<F> pc = detail::content_wrt(pp_gcd, x);
    pp_gcd = *divide_exact(pp_gcd, pc);
  }
  return monic(cc * pp_gcd);
}

// f = c * p with c a polynomial in the y-variables only and p primitive with
// respect to them; c is normalized to unit leading coefficient.
template <class F>
std::pair<MultiPoly<F>, MultiPoly<F>> content_and_primitive(
    const MultiPoly<F>& f, const std::vector<std::string>& y_vars) {
  if (f.is_zero()) throw ZeroPolynomial("content of the zero polynomial");
  const auto& vars = f.vars();
  std::vector<bool> is_y(vars.size(), false);
  for (const auto& name : y_vars) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw UndeclaredVariable(name);
    is_y[static_cast<std::size_t>(it - vars.begin())] = true;
  }
  // Group terms by their x-monomial; each group is a polynomial in y.
  std::map<typename MultiPoly<F>::Exp, MultiPoly<F>,
           typename MultiPoly<F>::LexDesc>
      groups;
  for (const auto& [e, c] : f.terms()) {
    typename MultiPoly<F>::Exp xe = e, ye = e;
    for (std::size_t v = 0; v < vars.size(); ++v)
      (is_y[v] ? xe[v] : ye[v]) = 0;
    auto [it, inserted] = groups.emplace(std::move(xe), MultiPoly<F>(vars));
    it->second.add_term(std::move(ye), c);
  }
  MultiPoly<F> content(vars);
  for (const auto& [xe, ypoly] : groups)
    content = content.is_zero() ? monic(ypoly) : poly_gcd(content, ypoly);
  return {content, *divide_exact(f, content)};
}

namespace detail {

// Canonical factor normalization: over Q, scale to coprime integer
// coefficients with positive leading coefficient; over Q(i), scale monic.
inline MultiPoly<Rational> canonical_factor(const MultiPoly<Rational>& f) {
  if (f.is_zero()) return f;
  Int den_lcm = 1, num_gcd = 0;
  for (const auto& [e, c] : f.terms()) {
    den_lcm = boost::multiprecision::lcm(den_lcm, c.den());
    num_gcd = boost::multiprecision::gcd(num_gcd,
                                         c.num() < 0 ? Int(-c.num()) : c.num());
  }
  Rational scale(den_lcm, num_gcd);
  if (f.leading_coeff().sign() < 0) scale = -scale;
  return f * scale;
}
inline MultiPoly<Gaussian> canonical_factor(const MultiPoly<Gaussian>& f) {
  return monic(f);
}

}  // namespace detail

// Square-free decomposition f = c * prod f_i^{m_i} with pairwise coprime
// square-free factors. The constant c rides along as the multiplicity-0 entry
// at the front; factors follow in descending multiplicity. Multivariate input
// is handled by recursive content/primitive splitting with Yun's algorithm in
// the main variable.
template <class F>
std::vector<std::pair<MultiPoly<F>, int>> squarefree_decompose(
    const MultiPoly<F>& f) {
  if (f.is_zero()) throw ZeroPolynomial("square-free decomposition of zero");
  std::vector<std::pair<MultiPoly<F>, int>> factors;

  auto collect = [&](auto&& self, const MultiPoly<F>& p) -> void {
    if (p.is_constant()) return;
    std::size_t x = 0;
    while (!p.depends_on(x)) ++x;
    MultiPoly<F> cont = detail::content_wrt(p, x);
    MultiPoly<F> prim = *divide_exact(p, cont);
    if (!cont.is_constant()) self(self, cont);

    // Yun's algorithm on the primitive part, with respect to x.
    MultiPoly<F> d = prim.derivative(x);
    MultiPoly<F> g = poly_gcd(prim, d);
    if (g.is_constant()) {
      factors.emplace_back(detail::canonical_factor(prim), 1);
      return;
    }
    MultiPoly<F> w = *divide_exact(prim, g);
    MultiPoly<F> y = *divide_exact(d, g);
    MultiPoly<F> z = y - w.derivative(x);
    int mult = 1;
    while (!w.is_constant()) {
      MultiPoly<F> a = poly_gcd(w, z);
      if (!a.is_constant())
        factors.emplace_back(detail::canonical_factor(a), mult);
      w = *divide_exact(w, a);
      y = *divide_exact(z, a);
      z = y - w.derivative(x);
      ++mult;
    }
  };
  collect(collect, f);

  std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    typename MultiPoly<F>::LexDesc lt;
    return lt(a.first.leading_exp(), b.first.leading_exp());
  });

  // The constant follows from comparing leading coefficients.
  F lc_prod = FieldTraits<F>::one();
  for (const auto& [p, m] : factors)
    for (int k = 0; k < m; ++k) lc_prod *= p.leading_coeff();
  F c = f.leading_coeff() / lc_prod;
  std::vector<std::pair<MultiPoly<F>, int>> out;
  out.emplace_back(MultiPoly<F>::constant(f.vars(), c), 0);
  for (auto& fac : factors) out.push_back(std::move(fac));
  return out;
}

// Exact square root over the coefficient field: h with h^2 = f when one
// exists. The sign is fixed by FieldTraits<F>::normal_sign on the leading
// coefficient.
template <class F>
std::optional<MultiPoly<F>> poly_sqrt(const MultiPoly<F>& f) {
  if (f.is_zero()) return f;
  auto dec = squarefree_decompose(f);
  auto c_root = FieldTraits<F>::sqrt(dec[0].first.constant_value());
  if (!c_root) return std::nullopt;
  MultiPoly<F> h = MultiPoly<F>::constant(f.vars(), *c_root);
  for (std::size_t k = 1; k < dec.size(); ++k) {
    if (dec[k].second % 2 != 0) return std::nullopt;
    h = h * dec[k].first.pow(dec[k].second / 2);
  }
  if (!FieldTraits<F>::normal_sign(h.leading_coeff())) h = -h;
  return h;
}

}  // namespace hodo
