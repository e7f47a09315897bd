#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "hodo/errors.hpp"

namespace hodo {

using Int = boost::multiprecision::cpp_int;

// Exact fraction of arbitrary-precision integers, always in canonical form:
// gcd(|num|, den) = 1, den > 0, zero is 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(int v) : num_(v), den_(1) {}          // NOLINT: implicit by design
  Rational(long long v) : num_(v), den_(1) {}    // NOLINT
  explicit Rational(Int v) : num_(std::move(v)), den_(1) {}
  Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

  Rational operator-() const { return Rational(unchecked{}, -num_, den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DivisionByZero();
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  Rational inverse() const {
    if (is_zero()) throw DivisionByZero();
    return num_ > 0 ? Rational(unchecked{}, den_, num_)
                    : Rational(unchecked{}, -den_, -num_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const Int lhs = a.num_ * b.den_;
    const Int rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  std::string to_string() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
  }

  // Parses the canonical form "p" or "p/q"; round-trips to_string exactly.
  static std::optional<Rational> parse(std::string_view text);

  double to_double() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
  }

 private:
  struct unchecked {};
  Rational(unchecked, Int num, Int den)
      : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (den_ == 0) throw DivisionByZero("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  Int num_;
  Int den_;
};

inline std::optional<Int> int_sqrt_exact(const Int& v) {
  if (v < 0) return std::nullopt;
  Int r = boost::multiprecision::sqrt(v);
  if (r * r != v) return std::nullopt;
  return r;
}

// Nonnegative square root in Q when one exists: r with r*r == x, r >= 0.
inline std::optional<Rational> rat_is_square(const Rational& x) {
  if (x.sign() < 0) return std::nullopt;
  auto rn = int_sqrt_exact(x.num());
  if (!rn) return std::nullopt;
  auto rd = int_sqrt_exact(x.den());
  if (!rd) return std::nullopt;
  return Rational(*rn, *rd);
}

inline std::optional<Rational> Rational::parse(std::string_view text) {
  auto parse_int = [](std::string_view s) -> std::optional<Int> {
    if (s.empty()) return std::nullopt;
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
      neg = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) return std::nullopt;
    Int v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return std::nullopt;
      v = v * 10 + (s[i] - '0');
    }
    return neg ? Int(-v) : v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto v = parse_int(text);
    if (!v) return std::nullopt;
    return Rational(std::move(*v));
  }
  auto n = parse_int(text.substr(0, slash));
  auto d = parse_int(text.substr(slash + 1));
  if (!n || !d || *d == 0) return std::nullopt;
  return Rational(std::move(*n), std::move(*d));
}

}  // namespace hodo
