#pragma once

#include <gmpxx.h>

#include <string>

namespace liegc {

using Rational = mpq_class;

/// Element of the field Q(i): a + b*i with exact rational a, b.
class GaussRat {
 public:
  GaussRat() : re_(0), im_(0) {}
  GaussRat(long n) : re_(n), im_(0) {}  // NOLINT(google-explicit-constructor)
  GaussRat(int n) : re_(n), im_(0) {}   // NOLINT(google-explicit-constructor)
  GaussRat(Rational re) : re_(std::move(re)), im_(0) {}  // NOLINT(google-explicit-constructor)
  GaussRat(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRat i() { return GaussRat(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussRat conj() const { return GaussRat(re_, -im_); }

  /// Squared modulus a^2 + b^2 (a rational, not a GaussRat).
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussRat operator-() const { return GaussRat(-re_, -im_); }

  GaussRat& operator+=(const GaussRat& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o);

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  GaussRat inverse() const;

  /// Canonical text form: "3/4", "-2", "i", "1/2-3i", "2+i".
  std::string str() const;

 private:
  Rational re_, im_;
};

/// Canonical "p/q" style text for a rational ("p" when q == 1).
std::string rat_str(const Rational& r);

/// Parses rat_str output; throws std::invalid_argument on malformed input.
Rational rat_parse(const std::string& s);

}  // namespace liegc
