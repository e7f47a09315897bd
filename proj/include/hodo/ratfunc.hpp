#pragma once

#include <cassert>
#include <optional>
#include <string>
#include <vector>

#include "hodo/polyalg.hpp"

namespace hodo {

// Normalized quotient of multivariate polynomials: gcd(num, den) is constant
// and den has unit leading coefficient. Representation is canonical, so
// equality is term-map equality.
template <class F>
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(MultiPoly<F> num)
      : num_(std::move(num)),
        den_(MultiPoly<F>::constant(num_.vars(), FieldTraits<F>::one())) {}
  RatFunc(MultiPoly<F> num, MultiPoly<F> den)
      : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }
  static RatFunc constant(std::vector<std::string> vars, F value) {
    return RatFunc(MultiPoly<F>::constant(std::move(vars), std::move(value)));
  }
  static RatFunc variable(std::vector<std::string> vars, const std::string& name) {
    return RatFunc(MultiPoly<F>::variable(std::move(vars), name));
  }

  const MultiPoly<F>& num() const { return num_; }
  const MultiPoly<F>& den() const { return den_; }
  const std::vector<std::string>& vars() const { return num_.vars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  F constant_value() const {
    assert(is_constant());
    return num_.constant_value() / den_.constant_value();
  }
  bool is_polynomial() const { return den_.is_constant(); }

  RatFunc operator-() const { return RatFunc(unchecked{}, -num_, den_); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // Work over lcm(a.den, b.den) so the reduction gcd sees small inputs.
    MultiPoly<F> g = poly_gcd(a.den_, b.den_);
    if (g.is_constant())
      return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    MultiPoly<F> bq = *divide_exact(b.den_, g);
    MultiPoly<F> aq = *divide_exact(a.den_, g);
    return RatFunc(a.num_ * bq + b.num_ * aq, a.den_ * bq);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return a + (-b);
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    // Cross-cancellation leaves a result that is reduced by construction.
    MultiPoly<F> g1 = poly_gcd(a.num_, b.den_);
    MultiPoly<F> g2 = poly_gcd(b.num_, a.den_);
    MultiPoly<F> num = *divide_exact(a.num_, g1) * *divide_exact(b.num_, g2);
    MultiPoly<F> den = *divide_exact(a.den_, g2) * *divide_exact(b.den_, g1);
    RatFunc r(unchecked{}, std::move(num), std::move(den));
    r.scale_monic();
    return r;
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZero("rational function division by zero");
    return a * RatFunc(unchecked{}, b.den_, b.num_);
  }
  friend RatFunc operator*(const RatFunc& a, const F& s) {
    return RatFunc(a.num_ * s, a.den_);
  }
  friend RatFunc operator*(const F& s, const RatFunc& a) { return a * s; }

  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }

  RatFunc pow(int k) const {
    if (k < 0) return RatFunc(den_, num_).pow(-k);
    return RatFunc(num_.pow(k), den_.pow(k));
  }

  // Quotient-rule derivative, normalized.
  RatFunc derivative(std::size_t var) const {
    return RatFunc(num_.derivative(var) * den_ - num_ * den_.derivative(var),
                   den_ * den_);
  }
  RatFunc derivative(const std::string& var_name) const {
    return derivative(var_index(var_name));
  }

  std::size_t var_index(const std::string& name) const {
    const auto& vs = vars();
    auto it = std::find(vs.begin(), vs.end(), name);
    if (it == vs.end()) throw UndeclaredVariable(name);
    return static_cast<std::size_t>(it - vs.begin());
  }

  std::optional<F> eval(const std::vector<F>& values) const {
    F d = den_.eval(values);
    if (FieldTraits<F>::is_zero(d)) return std::nullopt;
    return num_.eval(values) / d;
  }

  RatFunc on_vars(const std::vector<std::string>& new_vars) const {
    return RatFunc(unchecked{}, num_.on_vars(new_vars), den_.on_vars(new_vars));
  }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const {
    if (den_.is_constant() && den_.constant_value() == FieldTraits<F>::one())
      return num_.to_string();
    auto wrap = [](const MultiPoly<F>& p) {
      std::string s = p.to_string();
      if (p.terms().size() > 1 || s.find('*') != std::string::npos ||
          s.find('/') != std::string::npos || s[0] == '-' ||
          s.find('+') != std::string::npos)
        return "(" + s + ")";
      return s;
    };
    return wrap(num_) + "/" + wrap(den_);
  }

 private:
  struct unchecked {};
  RatFunc(unchecked, MultiPoly<F> num, MultiPoly<F> den)
      : num_(std::move(num)), den_(std::move(den)) {}

  // For results already reduced by construction: restores den monicity and
  // the zero-numerator convention only.
  void scale_monic() {
    if (den_.is_zero())
      throw DivisionByZero("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = MultiPoly<F>::constant(num_.vars(), FieldTraits<F>::one());
      return;
    }
    const F lc = den_.leading_coeff();
    if (!(lc == FieldTraits<F>::one())) {
      F inv = lc.inverse();
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }

  void normalize() {
    if (den_.is_zero())
      throw DivisionByZero("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = MultiPoly<F>::constant(num_.vars(), FieldTraits<F>::one());
      return;
    }
    MultiPoly<F> g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *divide_exact(num_, g);
      den_ = *divide_exact(den_, g);
    }
    const F lc = den_.leading_coeff();
    if (!(lc == FieldTraits<F>::one())) {
      F inv = lc.inverse();
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }

  MultiPoly<F> num_;
  MultiPoly<F> den_;
};

// Substitutes rational functions for the variables of a polynomial. All
// values must share one target variable list. Works over a common denominator
// so only one final normalization happens.
template <class F>
RatFunc<F> poly_subst(const MultiPoly<F>& p, const std::vector<RatFunc<F>>& values) {
  assert(values.size() == p.vars().size());
  if (values.empty())
    return RatFunc<F>::constant({}, p.constant_value());
  const auto& tvars = values[0].vars();
  if (p.is_zero()) return RatFunc<F>::constant(tvars, FieldTraits<F>::zero());

  std::vector<int> maxdeg(values.size(), 0);
  for (std::size_t v = 0; v < values.size(); ++v) maxdeg[v] = p.degree(v);

  // Power tables for numerators and denominators.
  std::vector<std::vector<MultiPoly<F>>> npow(values.size()), dpow(values.size());
  for (std::size_t v = 0; v < values.size(); ++v) {
    npow[v].push_back(MultiPoly<F>::constant(tvars, FieldTraits<F>::one()));
    dpow[v].push_back(MultiPoly<F>::constant(tvars, FieldTraits<F>::one()));
    for (int k = 1; k <= maxdeg[v]; ++k) {
      npow[v].push_back(npow[v][k - 1] * values[v].num());
      dpow[v].push_back(dpow[v][k - 1] * values[v].den());
    }
  }
  MultiPoly<F> acc(tvars);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly<F> t = MultiPoly<F>::constant(tvars, c);
    for (std::size_t v = 0; v < e.size(); ++v) {
      t = t * npow[v][e[v]];
      if (maxdeg[v] - e[v] > 0) t = t * dpow[v][maxdeg[v] - e[v]];
    }
    acc += t;
  }
  MultiPoly<F> den = MultiPoly<F>::constant(tvars, FieldTraits<F>::one());
  for (std::size_t v = 0; v < values.size(); ++v)
    if (maxdeg[v] > 0) den = den * dpow[v][maxdeg[v]];
  return RatFunc<F>(std::move(acc), std::move(den));
}

// Substitutes rational functions for the variables of a rational function;
// nullopt when the denominator collapses to zero identically.
template <class F>
std::optional<RatFunc<F>> ratfunc_subst(const RatFunc<F>& f,
                                        const std::vector<RatFunc<F>>& values) {
  RatFunc<F> d = poly_subst(f.den(), values);
  if (d.is_zero()) return std::nullopt;
  RatFunc<F> n = poly_subst(f.num(), values);
  return n / d;
}

}  // namespace hodo
