#include "liegc/scalar.hpp"

#include <stdexcept>

namespace liegc {

GaussRat& GaussRat::operator/=(const GaussRat& o) {
  if (o.is_zero()) throw std::domain_error("GaussRat: division by zero");
  Rational n = o.norm();
  Rational r = (re_ * o.re_ + im_ * o.im_) / n;
  Rational m = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(r);
  im_ = std::move(m);
  return *this;
}

GaussRat GaussRat::inverse() const {
  if (is_zero()) throw std::domain_error("GaussRat: inverse of zero");
  Rational n = norm();
  return GaussRat(re_ / n, -im_ / n);
}

std::string rat_str(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

Rational rat_parse(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

std::string GaussRat::str() const {
  if (im_ == 0) return rat_str(re_);
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = rat_str(im_) + "i";
  }
  if (re_ == 0) return imag;
  if (im_ > 0) return rat_str(re_) + "+" + imag;
  return rat_str(re_) + imag;
}

}  // namespace liegc
