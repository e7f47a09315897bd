#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hodo/map.hpp"

namespace hodo {

// Generators of the Moebius group: Euclidean similarities and sphere
// inversions, all with exact rational data.
struct Translation {
  std::vector<Rational> offset;
};
struct Orthogonal {
  Mat<Rational> matrix;  // Q with Q^T Q = I exactly
};
struct Homothety {
  Rational scale;  // nonzero
};
struct Inversion {
  std::vector<Rational> center;
  Rational rho2;  // squared radius, positive
};

using MoebiusFactor = std::variant<Translation, Orthogonal, Homothety, Inversion>;

struct MoebiusWord {
  std::vector<MoebiusFactor> factors;  // applied left to right
  std::size_t dimension = 0;
};

namespace detail {

inline std::vector<std::string> moebius_vars(std::size_t n) {
  std::vector<std::string> vars;
  for (std::size_t k = 1; k <= n; ++k) vars.push_back("x" + std::to_string(k));
  return vars;
}

inline void validate(const MoebiusFactor& f, std::size_t n) {
  if (const auto* tr = std::get_if<Translation>(&f)) {
    if (tr->offset.size() != n)
      throw Error("DimensionMismatch", "translation offset dimension");
  } else if (const auto* orth = std::get_if<Orthogonal>(&f)) {
    if (orth->matrix.size() != n)
      throw Error("DimensionMismatch", "orthogonal matrix dimension");
    for (std::size_t i = 0; i < n; ++i) {
      if (orth->matrix[i].size() != n)
        throw Error("DimensionMismatch", "orthogonal matrix dimension");
      for (std::size_t j = 0; j < n; ++j) {
        Rational dot(0);
        for (std::size_t k = 0; k < n; ++k)
          dot += orth->matrix[k][i] * orth->matrix[k][j];
        if (!(dot == Rational(i == j ? 1 : 0)))
          throw Error("NotOrthogonal", "Q^T Q differs from the identity");
      }
    }
  } else if (const auto* hom = std::get_if<Homothety>(&f)) {
    if (hom->scale.is_zero())
      throw Error("BadInput", "homothety scale must be nonzero");
  } else if (const auto* inv = std::get_if<Inversion>(&f)) {
    if (inv->center.size() != n)
      throw Error("DimensionMismatch", "inversion center dimension");
    if (inv->rho2.sign() <= 0)
      throw Error("BadInput", "inversion squared radius must be positive");
  }
}

}  // namespace detail

// The factor as an exact rational map R^n -> R^n. Inversion maps x to
// c + rho2 (x - c)/||x - c||^2.
inline RationalMap factor_to_map(const MoebiusFactor& f, std::size_t n) {
  detail::validate(f, n);
  auto vars = detail::moebius_vars(n);
  RationalMap out;
  out.vars = vars;
  auto var = [&](std::size_t k) {
    return RatFunc<Rational>::variable(vars, vars[k]);
  };
  if (const auto* tr = std::get_if<Translation>(&f)) {
    for (std::size_t k = 0; k < n; ++k)
      out.components.push_back(
          var(k) + RatFunc<Rational>::constant(vars, tr->offset[k]));
  } else if (const auto* orth = std::get_if<Orthogonal>(&f)) {
    for (std::size_t i = 0; i < n; ++i) {
      RatFunc<Rational> acc = RatFunc<Rational>::constant(vars, Rational(0));
      for (std::size_t j = 0; j < n; ++j) acc += var(j) * orth->matrix[i][j];
      out.components.push_back(acc);
    }
  } else if (const auto* hom = std::get_if<Homothety>(&f)) {
    for (std::size_t k = 0; k < n; ++k)
      out.components.push_back(var(k) * hom->scale);
  } else if (const auto* inv = std::get_if<Inversion>(&f)) {
    RatFunc<Rational> norm = RatFunc<Rational>::constant(vars, Rational(0));
    for (std::size_t k = 0; k < n; ++k) {
      auto diff = var(k) - RatFunc<Rational>::constant(vars, inv->center[k]);
      norm += diff * diff;
    }
    for (std::size_t k = 0; k < n; ++k) {
      auto diff = var(k) - RatFunc<Rational>::constant(vars, inv->center[k]);
      out.components.push_back(RatFunc<Rational>::constant(vars, inv->center[k]) +
                               diff * inv->rho2 / norm);
    }
  }
  return out;
}

// Left-to-right composition of the word's factor maps.
inline RationalMap word_to_map(const MoebiusWord& w) {
  RationalMap acc = identity_map(detail::moebius_vars(w.dimension));
  for (const auto& f : w.factors)
    acc = compose_maps(factor_to_map(f, w.dimension), acc);
  return acc;
}

// The (c, q) decomposition of lambda^2 for a map already known to pass
// is_ph_preserving.
inline std::pair<Rational, RatFunc<Rational>> dilation_of(
    const RationalMap& map) {
  auto verdict = is_ph_preserving(map);
  if (!verdict) throw NotConformal("map does not satisfy G = lambda^2 I");
  return *verdict;
}

}  // namespace hodo
