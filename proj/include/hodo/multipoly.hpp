#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hodo/errors.hpp"
#include "hodo/field.hpp"

namespace hodo {

// Sparse multivariate polynomial over a coefficient field F with a fixed,
// ordered variable list. Terms are kept in descending lexicographic order of
// their exponent vectors, so begin() is the leading term. No stored term has
// a zero coefficient; the zero polynomial has an empty term map.
template <class F>
class MultiPoly {
 public:
  using Exp = std::vector<int>;
  struct LexDesc {
    bool operator()(const Exp& a, const Exp& b) const {
      return std::lexicographical_compare(b.begin(), b.end(), a.begin(),
                                          a.end());
    }
  };
  using TermMap = std::map<Exp, F, LexDesc>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(std::vector<std::string> vars, F value) {
    MultiPoly p(std::move(vars));
    if (!FieldTraits<F>::is_zero(value))
      p.terms_.emplace(Exp(p.vars_.size(), 0), std::move(value));
    return p;
  }
  static MultiPoly variable(std::vector<std::string> vars, std::size_t index) {
    assert(index < vars.size());
    MultiPoly p(std::move(vars));
    Exp e(p.vars_.size(), 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), FieldTraits<F>::one());
    return p;
  }
  static MultiPoly variable(const std::vector<std::string>& vars,
                            const std::string& name) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw UndeclaredVariable(name);
    return variable(vars, static_cast<std::size_t>(it - vars.begin()));
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exp& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
  }
  F constant_value() const {
    if (terms_.empty()) return FieldTraits<F>::zero();
    assert(is_constant());
    return terms_.begin()->second;
  }

  const F& leading_coeff() const {
    assert(!terms_.empty());
    return terms_.begin()->second;
  }
  const Exp& leading_exp() const {
    assert(!terms_.empty());
    return terms_.begin()->first;
  }

  int degree(std::size_t var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }
  int total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int k : e) s += k;
      d = std::max(d, s);
    }
    return d;
  }
  bool depends_on(std::size_t var) const {
    for (const auto& [e, c] : terms_)
      if (e[var] > 0) return true;
    return false;
  }

  void add_term(Exp e, const F& c) {
    assert(e.size() == vars_.size());
    auto [it, inserted] = terms_.emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (FieldTraits<F>::is_zero(it->second)) terms_.erase(it);
    } else if (FieldTraits<F>::is_zero(it->second)) {
      terms_.erase(it);
    }
  }

  MultiPoly operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    assert(a.vars_ == b.vars_);
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    assert(a.vars_ == b.vars_);
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    assert(a.vars_ == b.vars_);
    MultiPoly r(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exp e(ea.size());
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
        r.add_term(std::move(e), ca * cb);
      }
    }
    return r;
  }
  friend MultiPoly operator*(const MultiPoly& a, const F& s) {
    MultiPoly r(a.vars_);
    if (FieldTraits<F>::is_zero(s)) return r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, c * s);
    return r;
  }
  friend MultiPoly operator*(const F& s, const MultiPoly& a) { return a * s; }

  MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
  MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
  MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }

  MultiPoly pow(int k) const {
    assert(k >= 0);
    MultiPoly r = constant(vars_, FieldTraits<F>::one());
    MultiPoly base = *this;
    while (k > 0) {
      if (k & 1) r = r * base;
      k >>= 1;
      if (k > 0) base = base * base;
    }
    return r;
  }

  MultiPoly derivative(std::size_t var) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exp d = e;
      d[var] -= 1;
      r.add_term(std::move(d), c * F(e[var]));
    }
    return r;
  }

  F eval(const std::vector<F>& values) const {
    assert(values.size() == vars_.size());
    std::vector<std::vector<F>> powers(vars_.size());
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      int d = degree(v);
      powers[v].reserve(d + 1);
      powers[v].push_back(FieldTraits<F>::one());
      for (int k = 1; k <= d; ++k) powers[v].push_back(powers[v][k - 1] * values[v]);
    }
    F acc = FieldTraits<F>::zero();
    for (const auto& [e, c] : terms_) {
      F t = c;
      for (std::size_t v = 0; v < e.size(); ++v)
        if (e[v] > 0) t *= powers[v][e[v]];
      acc += t;
    }
    return acc;
  }

  // Dense coefficient list of this viewed as a polynomial in `var`; entry k is
  // the coefficient of var^k, a polynomial over the same variable list with
  // var-exponent zero.
  std::vector<MultiPoly> coeffs_in(std::size_t var) const {
    std::vector<MultiPoly> out(degree(var) + 1, MultiPoly(vars_));
    for (const auto& [e, c] : terms_) {
      Exp r = e;
      int k = r[var];
      r[var] = 0;
      out[k].add_term(std::move(r), c);
    }
    return out;
  }
  static MultiPoly from_coeffs_in(std::size_t var,
                                  const std::vector<MultiPoly>& coeffs,
                                  const std::vector<std::string>& vars) {
    MultiPoly r(vars);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      for (const auto& [e, c] : coeffs[k].terms_) {
        Exp g = e;
        g[var] += static_cast<int>(k);
        r.add_term(std::move(g), c);
      }
    }
    return r;
  }

  // Exact quotient when the division comes out even; nullopt otherwise.
  friend std::optional<MultiPoly> divide_exact(const MultiPoly& f,
                                               const MultiPoly& g) {
    assert(f.vars_ == g.vars_);
    if (g.is_zero()) return std::nullopt;
    MultiPoly q(f.vars_);
    MultiPoly r = f;
    const Exp& ge = g.leading_exp();
    const F& gc = g.leading_coeff();
    while (!r.is_zero()) {
      const Exp& re = r.leading_exp();
      Exp qe(re.size());
      for (std::size_t k = 0; k < re.size(); ++k) {
        qe[k] = re[k] - ge[k];
        if (qe[k] < 0) return std::nullopt;
      }
      F qc = r.leading_coeff() / gc;
      MultiPoly mono(f.vars_);
      mono.terms_.emplace(std::move(qe), qc);
      q += mono;
      r -= mono * g;
    }
    return q;
  }

  // Re-expresses this polynomial over a superset variable list (matched by
  // name). Every current variable must appear in `new_vars`.
  MultiPoly on_vars(const std::vector<std::string>& new_vars) const {
    std::vector<std::size_t> where(vars_.size());
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      auto it = std::find(new_vars.begin(), new_vars.end(), vars_[v]);
      if (it == new_vars.end()) throw UndeclaredVariable(vars_[v]);
      where[v] = static_cast<std::size_t>(it - new_vars.begin());
    }
    MultiPoly r(new_vars);
    for (const auto& [e, c] : terms_) {
      Exp g(new_vars.size(), 0);
      for (std::size_t v = 0; v < e.size(); ++v) g[where[v]] = e[v];
      r.add_term(std::move(g), c);
    }
    return r;
  }

  MultiPoly map_coeffs(F (*fn)(const F&)) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
      F m = fn(c);
      if (!FieldTraits<F>::is_zero(m)) r.terms_.emplace(e, std::move(m));
    }
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  // Canonical text form: terms in descending lexicographic order, explicit
  // `^` powers, e.g. "9*t^4 + 6*t^2 + 1".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      bool neg = false;
      std::string coeff = FieldTraits<F>::to_term_string(c, &neg);
      std::string mono;
      for (std::size_t v = 0; v < e.size(); ++v) {
        if (e[v] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_[v];
        if (e[v] > 1) mono += "^" + std::to_string(e[v]);
      }
      std::string body;
      if (mono.empty())
        body = coeff;
      else if (coeff == "1")
        body = mono;
      else
        body = coeff + "*" + mono;
      if (first) {
        out = (neg ? "-" : "") + body;
        first = false;
      } else {
        out += (neg ? " - " : " + ") + body;
      }
    }
    return out;
  }

 private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

}  // namespace hodo
