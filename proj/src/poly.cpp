// Copyright (c) 2026 The matorth authors
// SPDX-License-Identifier: Apache-2.0

#include "matorth/poly.hpp"

#include <ostream>
#include <sstream>

namespace matorth {

namespace {
const GaussianRational kZero{};
}  // namespace

Poly Poly::monomial(std::size_t degree, GaussianRational coeff) {
  if (coeff.is_zero()) return {};
  std::vector<GaussianRational> c(degree + 1);
  c[degree] = std::move(coeff);
  return Poly(std::move(c));
}

const GaussianRational& Poly::leading() const {
  if (is_zero()) throw std::domain_error("leading() of zero polynomial");
  return coeffs_.back();
}

const GaussianRational& Poly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : kZero;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<GaussianRational> c(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<GaussianRational> c(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return Poly(std::move(c));
}

GaussianRational Poly::evaluate(const GaussianRational& point) const {
  GaussianRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * point + *it;
  }
  return acc;
}

Poly derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  std::vector<GaussianRational> c(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) {
    c[k - 1] = p.coeff(k) * GaussianRational(static_cast<long>(k));
  }
  return Poly(std::move(c));
}

Poly derivative(const Poly& p, std::size_t times) {
  Poly r = p;
  for (std::size_t i = 0; i < times && !r.is_zero(); ++i) r = derivative(r);
  return r;
}

Poly conj_coeffs(const Poly& p) {
  std::vector<GaussianRational> c;
  c.reserve(p.size());
  for (const auto& a : p.coeffs()) c.push_back(conj(a));
  return Poly(std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& dividend, const Poly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  if (dividend.is_zero() || dividend.size() < divisor.size()) {
    return {Poly(), dividend};
  }
  const GaussianRational lead_inv = field_inverse(divisor.leading());
  std::vector<GaussianRational> rem(dividend.coeffs());
  std::vector<GaussianRational> quot(dividend.size() - divisor.size() + 1);
  for (std::size_t k = quot.size(); k-- > 0;) {
    GaussianRational q = rem[k + divisor.size() - 1] * lead_inv;
    if (q.is_zero()) continue;
    quot[k] = q;
    for (std::size_t j = 0; j < divisor.size(); ++j) {
      rem[k + j] -= q * divisor.coeff(j);
    }
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly r0 = a;
  Poly r1 = b;
  while (!r1.is_zero()) {
    Poly r2 = divmod(r0, r1).second;
    r0 = std::move(r1);
    r1 = make_monic(r2);  // keeps coefficient growth in check
  }
  return make_monic(r0);
}

Poly make_monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p * field_inverse(p.leading());
}

std::size_t root_order(const Poly& p, const GaussianRational& point) {
  if (p.is_zero()) throw std::domain_error("root_order of zero polynomial");
  std::size_t order = 0;
  Poly q = p;
  const Poly factor{-point, GaussianRational(1)};  // (x - point)
  while (q.evaluate(point).is_zero()) {
    q = divmod(q, factor).first;
    ++order;
  }
  return order;
}

namespace {

// Real or imaginary part as a rational-coefficient polynomial, re-wrapped.
Poly component(const Poly& p, bool imag) {
  std::vector<GaussianRational> c;
  c.reserve(p.size());
  for (const auto& a : p.coeffs()) {
    c.emplace_back(imag ? a.im() : a.re());
  }
  return Poly(std::move(c));
}

// Cauchy bound: every root z satisfies |z| < 1 + max_k |c_k / c_d|.
long integer_root_bound(const Poly& p) {
  Rational max(0);
  const Rational lead = norm_sq(p.leading());
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    Rational ratio = norm_sq(p.coeff(k)) / lead;
    if (ratio > max) max = ratio;
  }
  // max bounds |c_k/c_d|^2; a crude integer sqrt overestimate suffices.
  mpz_class num_sqrt = sqrt(max.get_num()) + 1;
  mpz_class den_sqrt = sqrt(max.get_den());
  if (den_sqrt == 0) den_sqrt = 1;
  mpz_class bound = num_sqrt / den_sqrt + 2;
  if (!bound.fits_slong_p()) {
    throw std::overflow_error("integer root bound too large to scan");
  }
  return static_cast<long>(bound.get_si());
}

}  // namespace

std::optional<long> smallest_nonneg_integer_root(const Poly& p) {
  if (p.is_zero()) return 0;
  if (p.evaluate(GaussianRational(0)).is_zero()) return 0;
  Poly comp = component(p, /*imag=*/false);
  if (comp.is_zero()) comp = component(p, /*imag=*/true);
  // Strip powers of x so the Cauchy bound sees a nonzero constant term.
  while (comp.coeff(0).is_zero()) {
    comp = divmod(comp, Poly::x()).first;
  }
  if (comp.is_constant()) return std::nullopt;
  const long bound = integer_root_bound(comp);
  for (long n = 1; n <= bound; ++n) {
    const GaussianRational point(static_cast<long>(n));
    if (comp.evaluate(point).is_zero() && p.evaluate(point).is_zero()) {
      return n;
    }
  }
  return std::nullopt;
}

std::string to_string(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = p.size(); k-- > 0;) {
    const GaussianRational& c = p.coeff(k);
    if (c.is_zero()) continue;
    std::string cs = display_string(c);
    if (!first) {
      if (!cs.empty() && cs[0] == '-') {
        os << " - ";
        cs = cs.substr(1);
      } else {
        os << " + ";
      }
    }
    first = false;
    const bool needs_parens = !c.is_real() && c.re() != 0 && k > 0;
    if (k == 0) {
      os << cs;
    } else {
      if (cs == "1") {
        // coefficient 1 is implicit
      } else if (cs == "-1") {
        os << "-";
      } else if (needs_parens) {
        os << "(" << cs << ")*";
      } else {
        os << cs << "*";
      }
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  return os << to_string(p);
}

}  // namespace matorth
