// Copyright (c) 2026 The matorth authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MATORTH_RATFUN_HPP
#define MATORTH_RATFUN_HPP

#include <string>

#include "matorth/poly.hpp"

namespace matorth {

/// Rational function num/den over Q(i), kept canonical after every
/// operation: gcd(num, den) = 1 and den monic. Zero is 0/1.
class RatFun {
 public:
  RatFun() : num_(), den_(1) {}
  RatFun(int value) : num_(value), den_(1) {}               // NOLINT
  RatFun(long value) : num_(value), den_(1) {}              // NOLINT
  RatFun(GaussianRational value) : num_(std::move(value)), den_(1) {}  // NOLINT
  RatFun(Poly num) : num_(std::move(num)), den_(1) {}       // NOLINT
  RatFun(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == Poly(1); }

  /// Numerator as a polynomial; throws unless den = 1.
  const Poly& as_poly() const;

  RatFun operator-() const;
  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator*(const RatFun& o) const;
  RatFun operator/(const RatFun& o) const;
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }

  bool operator==(const RatFun& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatFun& o) const { return !(*this == o); }

 private:
  void canonicalize();

  Poly num_;
  Poly den_;
};

inline bool is_zero(const RatFun& r) { return r.is_zero(); }

RatFun field_inverse(const RatFun& r);

/// (num' den - num den') / den^2, re-canonicalized.
RatFun derivative(const RatFun& r);

RatFun conj_coeffs(const RatFun& r);

/// Vanishing order at a finite point: ord(num) - ord(den); poles give a
/// negative order. Throws on the zero function.
long order_at(const RatFun& r, const GaussianRational& point);

std::string to_string(const RatFun& r, const std::string& var = "x");

std::ostream& operator<<(std::ostream& os, const RatFun& r);

}  // namespace matorth

#endif  // MATORTH_RATFUN_HPP
