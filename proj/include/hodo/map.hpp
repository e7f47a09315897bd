#pragma once

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hodo/curve.hpp"
#include "hodo/linalg.hpp"
#include "hodo/ratcalc.hpp"

namespace hodo {

// Rational map R^m -> R^n with named source variables.
struct RationalMap {
  std::vector<std::string> vars;                // u1..um
  std::vector<RatFunc<Rational>> components;    // n entries over vars

  std::size_t source_dim() const { return vars.size(); }
  std::size_t target_dim() const { return components.size(); }
};

inline RationalMap identity_map(std::vector<std::string> vars) {
  RationalMap phi;
  phi.vars = vars;
  for (const auto& name : vars)
    phi.components.push_back(RatFunc<Rational>::variable(vars, name));
  return phi;
}

// Symmetric matrix of inner products of the map's partial derivatives.
struct MetricForm {
  Mat<RatFunc<Rational>> entries;  // m x m, symmetric
};

// Constant symmetric rational matrix, the S of the metric-rigidity step.
struct ConstantQuadraticForm {
  Mat<Rational> entries;

  explicit ConstantQuadraticForm(Mat<Rational> e) : entries(std::move(e)) {
    for (std::size_t i = 0; i < entries.size(); ++i)
      for (std::size_t j = i + 1; j < entries.size(); ++j)
        if (!(entries[i][j] == entries[j][i]))
          throw Error("NotSymmetric", "quadratic form must be symmetric");
  }
  std::size_t dim() const { return entries.size(); }
  bool positive_definite() const { return is_positive_definite(entries); }
};

inline Mat<RatFunc<Rational>> jacobian(const RationalMap& phi) {
  Mat<RatFunc<Rational>> j(phi.target_dim());
  for (std::size_t k = 0; k < phi.target_dim(); ++k)
    for (std::size_t v = 0; v < phi.source_dim(); ++v)
      j[k].push_back(phi.components[k].derivative(v));
  return j;
}

inline MetricForm first_fundamental_form(const RationalMap& phi) {
  auto j = jacobian(phi);
  const std::size_t m = phi.source_dim();
  MetricForm g;
  g.entries.assign(m, std::vector<RatFunc<Rational>>(
                          m, RatFunc<Rational>::constant(phi.vars, Rational(0))));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a; b < m; ++b) {
      RatFunc<Rational> acc = RatFunc<Rational>::constant(phi.vars, Rational(0));
      for (std::size_t k = 0; k < phi.target_dim(); ++k)
        acc += j[k][a] * j[k][b];
      g.entries[a][b] = acc;
      g.entries[b][a] = acc;
    }
  }
  return g;
}

namespace detail {

// Exact Jacobian rank probe at pseudo-random rational points. The seed is
// fixed so test runs are reproducible; a map whose Jacobian is rank-deficient
// at every probed point is treated as degenerate.
inline bool generically_full_rank(const RationalMap& phi) {
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
  std::uniform_int_distribution<int> num(-30, 30);
  std::uniform_int_distribution<int> den(1, 7);
  auto j = jacobian(phi);
  const std::size_t m = phi.source_dim();
  int evaluated = 0;
  for (int attempt = 0; attempt < 64 && evaluated < 8; ++attempt) {
    std::vector<Rational> point;
    for (std::size_t v = 0; v < m; ++v)
      point.push_back(Rational(num(rng), den(rng)));
    Mat<Rational> jv;
    bool ok = true;
    for (const auto& row : j) {
      std::vector<Rational> out;
      for (const auto& entry : row) {
        auto val = entry.eval(point);
        if (!val) {
          ok = false;
          break;
        }
        out.push_back(*val);
      }
      if (!ok) break;
      jv.push_back(std::move(out));
    }
    if (!ok) continue;
    ++evaluated;
    if (matrix_rank(jv) == m) return true;
  }
  return false;
}

}  // namespace detail

// Theorem test: present iff G = lambda^2 I_m with lambda^2 a square in
// R(u), returned as its (c, q) decomposition. Throws RankDeficient for maps
// that are degenerate in the sense of the definition's counterexamples.
inline std::optional<std::pair<Rational, RatFunc<Rational>>> is_ph_preserving(
    const RationalMap& phi) {
  if (phi.source_dim() > phi.target_dim())
    throw RankDeficient("source dimension exceeds target dimension");
  if (!detail::generically_full_rank(phi))
    throw RankDeficient("Jacobian rank below source dimension at all probe points");
  MetricForm g = first_fundamental_form(phi);
  const std::size_t m = phi.source_dim();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (!g.entries[a][b].is_zero()) return std::nullopt;
  for (std::size_t a = 1; a < m; ++a)
    if (!(g.entries[a][a] == g.entries[0][0])) return std::nullopt;
  return is_square_over_reals(g.entries[0][0]);
}

// Componentwise substitution of the curve into the map.
inline PHCurve compose_map_curve(const RationalMap& phi, const PHCurve& r) {
  if (r.dim() != phi.source_dim())
    throw Error("DimensionMismatch", "curve dimension must match map source");
  PHCurve out;
  out.param = r.param;
  for (const auto& comp : phi.components) {
    auto sub = ratfunc_subst(comp, r.components);
    if (!sub)
      throw PoleOnCurve("map denominator vanishes identically along the curve");
    out.components.push_back(std::move(*sub));
  }
  return out;
}

// Composition outer(inner(.)), normalized.
inline RationalMap compose_maps(const RationalMap& outer,
                                const RationalMap& inner) {
  if (outer.source_dim() != inner.target_dim())
    throw Error("DimensionMismatch", "map composition dimensions do not chain");
  RationalMap out;
  out.vars = inner.vars;
  for (const auto& comp : outer.components) {
    auto sub = ratfunc_subst(comp, inner.components);
    if (!sub)
      throw PoleCollapse("composition is undefined as a rational identity");
    out.components.push_back(std::move(*sub));
  }
  return out;
}

// The line-family speed form F_d(a, t) = d^T G(a + t d) d over the fresh
// variables a1..am, t.
inline RatFunc<Rational> line_speed_form(const RationalMap& phi,
                                         const std::vector<Rational>& d) {
  const std::size_t m = phi.source_dim();
  if (d.size() != m)
    throw Error("DimensionMismatch", "direction dimension must match map source");
  bool all_zero = true;
  for (const auto& c : d)
    if (!c.is_zero()) all_zero = false;
  if (all_zero) throw Error("ZeroDirection", "direction must be nonzero");

  std::vector<std::string> lvars;
  for (std::size_t k = 1; k <= m; ++k) lvars.push_back("a" + std::to_string(k));
  lvars.push_back("t");
  auto t = RatFunc<Rational>::variable(lvars, "t");
  std::vector<RatFunc<Rational>> line;
  for (std::size_t k = 0; k < m; ++k)
    line.push_back(RatFunc<Rational>::variable(lvars, lvars[k]) + t * d[k]);

  MetricForm g = first_fundamental_form(phi);
  RatFunc<Rational> acc = RatFunc<Rational>::constant(lvars, Rational(0));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (d[a].is_zero() || d[b].is_zero()) continue;
      auto sub = ratfunc_subst(g.entries[a][b], line);
      if (!sub) throw PoleCollapse("metric has a pole along every such line");
      acc += *sub * (d[a] * d[b]);
    }
  }
  return acc;
}

// Forms P(t) = r'(t)^T S r'(t) for the rational Tschirnhausen cubic and,
// when P is a square in R[t] (a positive constant times an exact polynomial
// square), returns the polynomial witness: sqrt(P) itself when the constant
// is a perfect rational square, otherwise the primitive square part. The
// necessity argument predicts: present iff S is a positive multiple of the
// identity.
inline std::optional<MultiPoly<Rational>> tschirnhausen_S_test(
    const ConstantQuadraticForm& s) {
  if (s.dim() != 2)
    throw Error("DimensionMismatch", "S must be 2x2");
  if (!s.positive_definite()) throw NotPositiveDefinite();
  PHCurve r = named_curve("tschirnhausen_rational");
  std::vector<RatFunc<Rational>> dr;
  for (const auto& c : r.components) dr.push_back(c.derivative("t"));
  RatFunc<Rational> p = RatFunc<Rational>::constant(r.vars(), Rational(0));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      p += dr[i] * dr[j] * s.entries[i][j];
  auto square = is_square_over_reals(p);
  if (!square) return std::nullopt;
  if (auto root = rat_is_square(square->first))
    return (square->second * *root).num();
  return detail::canonical_factor(square->second.num());
}

// phi restricted to the affine 2-plane base + s1*v1 + s2*v2.
inline RationalMap restrict_to_plane(const RationalMap& phi,
                                     const std::vector<Rational>& base,
                                     const std::vector<Rational>& v1,
                                     const std::vector<Rational>& v2) {
  const std::size_t m = phi.source_dim();
  if (base.size() != m || v1.size() != m || v2.size() != m)
    throw Error("DimensionMismatch", "plane data must match map source dimension");
  Mat<Rational> span{v1, v2};
  if (matrix_rank(span) < 2) throw DependentSpan();

  std::vector<std::string> svars{"s1", "s2"};
  auto s1 = RatFunc<Rational>::variable(svars, "s1");
  auto s2 = RatFunc<Rational>::variable(svars, "s2");
  std::vector<RatFunc<Rational>> inclusion;
  for (std::size_t k = 0; k < m; ++k)
    inclusion.push_back(RatFunc<Rational>::constant(svars, base[k]) +
                        s1 * v1[k] + s2 * v2[k]);
  RationalMap out;
  out.vars = svars;
  for (const auto& comp : phi.components) {
    auto sub = ratfunc_subst(comp, inclusion);
    if (!sub) throw PoleCollapse("map restricted to a plane inside its pole set");
    out.components.push_back(std::move(*sub));
  }
  return out;
}

// True iff every 2x2 coordinate restriction of S is a scalar multiple of the
// identity, which forces S itself to be scalar.
inline bool two_plane_scalar_check(const ConstantQuadraticForm& s) {
  if (!s.positive_definite()) throw NotPositiveDefinite();
  const std::size_t m = s.dim();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!s.entries[i][j].is_zero()) return false;
      if (!(s.entries[i][i] == s.entries[j][j])) return false;
    }
  }
  return true;
}

}  // namespace hodo
