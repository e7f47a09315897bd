#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "hodo/rational.hpp"

namespace hodo {

// Element of Q(i): re + im*i with exact rational parts.
class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(Rational re) : re_(std::move(re)) {}  // NOLINT: implicit by design
  Gaussian(int v) : re_(v) {}                    // NOLINT
  Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  Gaussian conj() const { return Gaussian(re_, -im_); }

  // |x|^2 = re^2 + im^2, an exact rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  Gaussian operator-() const { return Gaussian(-re_, -im_); }

  friend Gaussian operator+(const Gaussian& a, const Gaussian& b) {
    return Gaussian(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend Gaussian operator-(const Gaussian& a, const Gaussian& b) {
    return Gaussian(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return Gaussian(a.re_ * b.re_ - a.im_ * b.im_,
                    a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend Gaussian operator/(const Gaussian& a, const Gaussian& b) {
    return a * b.inverse();
  }

  Gaussian& operator+=(const Gaussian& b) { return *this = *this + b; }
  Gaussian& operator-=(const Gaussian& b) { return *this = *this - b; }
  Gaussian& operator*=(const Gaussian& b) { return *this = *this * b; }
  Gaussian& operator/=(const Gaussian& b) { return *this = *this / b; }

  Gaussian inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero Gaussian rational");
    Rational n = norm();
    return Gaussian(re_ / n, -im_ / n);
  }

  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  // Canonical "a+b*i" text, e.g. "1+2*i", "-1-2*i", "3", "i", "-1/2*i".
  std::string to_string() const;
  static std::optional<Gaussian> parse(std::string_view text);

 private:
  Rational re_;
  Rational im_;
};

// Exact square root in Q(i) when one exists, normalized so the real part is
// nonnegative (if zero, the imaginary part is nonnegative).
inline std::optional<Gaussian> gauss_is_square(const Gaussian& x) {
  auto normalize_sign = [](Gaussian w) {
    if (w.re().sign() < 0 || (w.re().is_zero() && w.im().sign() < 0)) return -w;
    return w;
  };
  if (x.is_zero()) return Gaussian(0);
  if (x.is_real()) {
    if (auto s = rat_is_square(x.re())) return Gaussian(*s);
    if (auto s = rat_is_square(-x.re()))
      return normalize_sign(Gaussian(Rational(0), *s));
    return std::nullopt;
  }
  // w = u + v*i with u^2 - v^2 = re, 2uv = im; |w|^2 = |x| must be rational.
  auto n = rat_is_square(x.norm());
  if (!n) return std::nullopt;
  auto u2 = (x.re() + *n) / Rational(2);
  auto u = rat_is_square(u2);
  if (!u || u->is_zero()) return std::nullopt;
  Rational v = x.im() / (Rational(2) * *u);
  Gaussian w(*u, v);
  if (!(w * w == x)) return std::nullopt;
  return normalize_sign(w);
}

inline std::string Gaussian::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string imag;
  Rational mag = im_.abs();
  if (mag.is_one())
    imag = "i";
  else
    imag = mag.to_string() + "*i";
  if (re_.is_zero()) return (im_.sign() < 0 ? "-" : "") + imag;
  return re_.to_string() + (im_.sign() < 0 ? "-" : "+") + imag;
}

inline std::optional<Gaussian> Gaussian::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  // Split at the last top-level '+' or '-' that is not the leading sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = text.size(); k-- > 1;) {
    if ((text[k] == '+' || text[k] == '-') && text[k - 1] != '/' &&
        text[k - 1] != '*') {
      split = k;
      break;
    }
  }
  auto parse_imag = [](std::string_view s) -> std::optional<Rational> {
    // forms: "i", "+i", "-i", "b*i", "-b*i"
    if (s == "i" || s == "+i") return Rational(1);
    if (s == "-i") return Rational(-1);
    if (s.size() < 2 || s.substr(s.size() - 2) != "*i") return std::nullopt;
    return Rational::parse(s.substr(0, s.size() - 2));
  };
  if (!text.empty() && text.back() == 'i') {
    if (split == std::string_view::npos) {
      auto im = parse_imag(text);
      if (!im) return std::nullopt;
      return Gaussian(Rational(0), *im);
    }
    auto re = Rational::parse(text.substr(0, split));
    std::string imag_part(text.substr(split));  // includes the sign
    auto im = parse_imag(imag_part);
    if (!re || !im) return std::nullopt;
    return Gaussian(*re, *im);
  }
  auto re = Rational::parse(text);
  if (!re) return std::nullopt;
  return Gaussian(*re);
}

}  // namespace hodo
