#ifndef SPINOR_FORGE_GAUSSIAN_HPP
#define SPINOR_FORGE_GAUSSIAN_HPP

#include "spinor_forge/error.hpp"
#include "spinor_forge/rational.hpp"

#include <ostream>
#include <string>

namespace spinor_forge {

/// a + b*i over an exact real field. Canonical whenever the field is.
template <class Field>
class Gaussian {
public:
  using value_type = Field;

  Gaussian() : re_(0), im_(0) {}
  Gaussian(Field re) : re_(std::move(re)), im_(0) {}  // NOLINT(google-explicit-constructor)
  Gaussian(Field re, Field im) : re_(std::move(re)), im_(std::move(im)) {}
  Gaussian(long re) : re_(re), im_(0) {}  // NOLINT(google-explicit-constructor)

  static Gaussian i() { return Gaussian(Field(0), Field(1)); }

  const Field& re() const { return re_; }
  const Field& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  Gaussian conj() const { return Gaussian(re_, -im_); }
  /// |z|^2, always in the base field.
  Field norm2() const { return re_ * re_ + im_ * im_; }

  /// Multiplication by i^power without a full complex product.
  Gaussian times_i_power(int power) const {
    switch (((power % 4) + 4) % 4) {
      case 0: return *this;
      case 1: return Gaussian(-im_, re_);
      case 2: return Gaussian(-re_, -im_);
      default: return Gaussian(im_, -re_);
    }
  }

  Gaussian& operator+=(const Gaussian& o) { re_ += o.re_; im_ += o.im_; return *this; }
  Gaussian& operator-=(const Gaussian& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  Gaussian& operator*=(const Gaussian& o) {
    Field re = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    return *this;
  }
  Gaussian& operator/=(const Gaussian& o) {
    if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero Gaussian rational");
    const Field d = o.norm2();
    *this *= o.conj();
    re_ /= d;
    im_ /= d;
    return *this;
  }

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend Gaussian operator-(const Gaussian& a) { return Gaussian(-a.re_, -a.im_); }

  friend Gaussian operator*(const Field& s, Gaussian a) {
    a.re_ *= s;
    a.im_ *= s;
    return a;
  }

  friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  friend std::ostream& operator<<(std::ostream& os, const Gaussian& z) {
    return os << '(' << z.re_ << (z.im_.sign() < 0 ? " - " : " + ") << z.im_.abs() << "i)";
  }

private:
  Field re_;
  Field im_;
};

using GaussianRational = Gaussian<Rational>;

inline GaussianRational conj(const GaussianRational& z) { return z.conj(); }

}  // namespace spinor_forge

#endif  // SPINOR_FORGE_GAUSSIAN_HPP
