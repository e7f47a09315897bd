#pragma once

#include <optional>
#include <string>

#include "hodo/gaussian.hpp"
#include "hodo/rational.hpp"

namespace hodo {

// Static hooks the polynomial templates need from a coefficient field.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static constexpr bool is_real = true;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static Rational conj(const Rational& x) { return x; }
  static std::optional<Rational> sqrt(const Rational& x) {
    return rat_is_square(x);
  }
  // Sign convention used to pick +-h when normalizing square roots.
  static bool normal_sign(const Rational& x) { return x.sign() >= 0; }
  static std::string to_string(const Rational& x) { return x.to_string(); }
  // Coefficient as printed in front of a monomial ("3/2" in "3/2*t^2").
  static std::string to_term_string(const Rational& x, bool* negated) {
    *negated = x.sign() < 0;
    return x.abs().to_string();
  }
};

template <>
struct FieldTraits<Gaussian> {
  static constexpr bool is_real = false;
  static Gaussian zero() { return Gaussian(0); }
  static Gaussian one() { return Gaussian(1); }
  static bool is_zero(const Gaussian& x) { return x.is_zero(); }
  static Gaussian conj(const Gaussian& x) { return x.conj(); }
  static std::optional<Gaussian> sqrt(const Gaussian& x) {
    return gauss_is_square(x);
  }
  // Nonnegative real part; ties broken by nonnegative imaginary part.
  static bool normal_sign(const Gaussian& x) {
    if (!x.re().is_zero()) return x.re().sign() > 0;
    return x.im().sign() >= 0;
  }
  static std::string to_string(const Gaussian& x) { return x.to_string(); }
  static std::string to_term_string(const Gaussian& x, bool* negated) {
    *negated = false;
    if (x.is_real()) {
      *negated = x.re().sign() < 0;
      return x.re().abs().to_string();
    }
    if (x.re().is_zero()) {
      *negated = x.im().sign() < 0;
      Rational mag = x.im().abs();
      return mag.is_one() ? "i" : mag.to_string() + "*i";
    }
    return "(" + x.to_string() + ")";
  }
};

}  // namespace hodo
