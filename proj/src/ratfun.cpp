// Copyright (c) 2026 The matorth authors
// SPDX-License-Identifier: Apache-2.0

#include "matorth/ratfun.hpp"

#include <ostream>

namespace matorth {

RatFun::RatFun(Poly num, Poly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  canonicalize();
}

void RatFun::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  const Poly g = gcd(num_, den_);
  if (g.size() > 1) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  const GaussianRational lead_inv = field_inverse(den_.leading());
  num_ = num_ * lead_inv;
  den_ = den_ * lead_inv;
}

const Poly& RatFun::as_poly() const {
  if (!is_polynomial()) {
    throw std::domain_error("rational function is not a polynomial: " +
                            to_string(*this));
  }
  return num_;
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
  return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator*(const RatFun& o) const {
  return RatFun(num_ * o.num_, den_ * o.den_);
}

RatFun RatFun::operator/(const RatFun& o) const {
  return *this * field_inverse(o);
}

RatFun field_inverse(const RatFun& r) {
  if (r.is_zero()) throw std::domain_error("division by zero rational function");
  return RatFun(r.den(), r.num());
}

RatFun derivative(const RatFun& r) {
  if (r.is_polynomial()) return RatFun(derivative(r.num()));
  return RatFun(derivative(r.num()) * r.den() - r.num() * derivative(r.den()),
                r.den() * r.den());
}

RatFun conj_coeffs(const RatFun& r) {
  return RatFun(conj_coeffs(r.num()), conj_coeffs(r.den()));
}

long order_at(const RatFun& r, const GaussianRational& point) {
  if (r.is_zero()) throw std::domain_error("order_at of zero function");
  return static_cast<long>(root_order(r.num(), point)) -
         static_cast<long>(root_order(r.den(), point));
}

std::string to_string(const RatFun& r, const std::string& var) {
  if (r.is_polynomial()) return to_string(r.num(), var);
  return "(" + to_string(r.num(), var) + ") / (" + to_string(r.den(), var) +
         ")";
}

std::ostream& operator<<(std::ostream& os, const RatFun& r) {
  return os << to_string(r);
}

}  // namespace matorth
