// Copyright (c) 2026 The matorth authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MATORTH_POLY_HPP
#define MATORTH_POLY_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "matorth/scalar.hpp"

namespace matorth {

/// Dense univariate polynomial over Q(i), coefficients stored lowest degree
/// first with trailing zeros trimmed. The zero polynomial has an empty
/// coefficient list and no degree.
class Poly {
 public:
  Poly() = default;
  Poly(int value) : Poly(GaussianRational(value)) {}       // NOLINT
  Poly(long value) : Poly(GaussianRational(value)) {}      // NOLINT
  Poly(Rational value) : Poly(GaussianRational(std::move(value))) {}  // NOLINT
  Poly(GaussianRational constant) {                        // NOLINT
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
  }
  Poly(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }
  Poly(std::initializer_list<GaussianRational> coeffs)
      : Poly(std::vector<GaussianRational>(coeffs)) {}

  /// The monomial x.
  static Poly x() { return monomial(1); }
  static Poly monomial(std::size_t degree,
                       GaussianRational coeff = GaussianRational(1));

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Degree, or nullopt for the zero polynomial (its degree is a sentinel,
  /// never used in arithmetic).
  std::optional<std::size_t> degree() const {
    if (is_zero()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  /// Number of stored coefficients (degree + 1, or 0 for the zero poly).
  std::size_t size() const { return coeffs_.size(); }

  const GaussianRational& leading() const;

  /// Coefficient of x^k; zero beyond the degree.
  const GaussianRational& coeff(std::size_t k) const;

  const std::vector<GaussianRational>& coeffs() const { return coeffs_; }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  GaussianRational evaluate(const GaussianRational& point) const;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<GaussianRational> coeffs_;
};

inline Poly operator*(const GaussianRational& scalar, const Poly& p) {
  return Poly(scalar) * p;
}
inline Poly operator*(const Poly& p, const GaussianRational& scalar) {
  return Poly(scalar) * p;
}

inline bool is_zero(const Poly& p) { return p.is_zero(); }

Poly derivative(const Poly& p);
Poly derivative(const Poly& p, std::size_t times);

/// Conjugates every coefficient (the indeterminate is treated as real).
Poly conj_coeffs(const Poly& p);

/// Euclidean division: returns {quotient, remainder} with
/// deg(remainder) < deg(divisor). Throws on zero divisor.
std::pair<Poly, Poly> divmod(const Poly& dividend, const Poly& divisor);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// p / leading(p); identity on the zero polynomial.
Poly make_monic(const Poly& p);

/// Multiplicity of the root `point`, 0 when p(point) != 0. Throws on the
/// zero polynomial.
std::size_t root_order(const Poly& p, const GaussianRational& point);

/// Smallest n >= 0 with p(n) = 0, if any. Exact: integer candidates are
/// enumerated up to the Cauchy root bound of a nonzero real component.
/// The zero polynomial vanishes everywhere, so it yields 0.
std::optional<long> smallest_nonneg_integer_root(const Poly& p);

std::string to_string(const Poly& p, const std::string& var = "x");

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace matorth

#endif  // MATORTH_POLY_HPP
