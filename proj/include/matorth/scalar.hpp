// Copyright (c) 2026 The matorth authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MATORTH_SCALAR_HPP
#define MATORTH_SCALAR_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace matorth {

/// Arbitrary-precision rational number. GMP keeps values canonical
/// (lowest terms, positive denominator) through arithmetic.
using Rational = mpq_class;

/// Parses "p/q" or "p" (q omitted when 1). Throws std::invalid_argument on
/// malformed input or zero denominator.
Rational rational_from_string(std::string_view text);

/// Formats as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

inline Rational field_inverse(const Rational& value) {
  if (value == 0) throw std::domain_error("division by zero rational");
  return 1 / value;
}

inline bool is_zero(const Rational& value) { return value == 0; }

/// Element of Q(i): a + b*i with exact rational components. Immutable value
/// semantics; every operation is a pure function.
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(int value) : re_(value), im_(0) {}             // NOLINT
  GaussianRational(long value) : re_(value), im_(0) {}            // NOLINT
  GaussianRational(Rational real) : re_(std::move(real)), im_(0) {}  // NOLINT
  GaussianRational(Rational real, Rational imag)
      : re_(std::move(real)), im_(std::move(imag)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational operator+(const GaussianRational& o) const {
    return {re_ + o.re_, im_ + o.im_};
  }
  GaussianRational operator-(const GaussianRational& o) const {
    return {re_ - o.re_, im_ - o.im_};
  }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
  }
  GaussianRational operator/(const GaussianRational& o) const;

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    *this = *this * o;
    return *this;
  }

  bool operator==(const GaussianRational& o) const {
    return re_ == o.re_ && im_ == o.im_;
  }
  bool operator!=(const GaussianRational& o) const { return !(*this == o); }

 private:
  Rational re_;
  Rational im_;
};

inline GaussianRational conj(const GaussianRational& z) {
  return {z.re(), -z.im()};
}

/// |z|^2 = z * conj(z), always a nonnegative rational.
inline Rational norm_sq(const GaussianRational& z) {
  return z.re() * z.re() + z.im() * z.im();
}

GaussianRational field_inverse(const GaussianRational& z);

inline GaussianRational GaussianRational::operator/(
    const GaussianRational& o) const {
  return *this * field_inverse(o);
}

inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }

/// Parses "p/q" or "p/q,r/s" (re,im components).
GaussianRational complex_from_string(std::string_view text);

/// Formats as "p/q" when real, "p/q,r/s" otherwise.
std::string to_string(const GaussianRational& z);

/// Human-readable form like "3/2", "i", "1-2i"; used by pretty printers.
std::string display_string(const GaussianRational& z);

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace matorth

#endif  // MATORTH_SCALAR_HPP
