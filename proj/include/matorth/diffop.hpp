// Copyright (c) 2026 The matorth authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MATORTH_DIFFOP_HPP
#define MATORTH_DIFFOP_HPP

#include <string>
#include <vector>

#include "matorth/matrices.hpp"

namespace matorth {

/// Matrix differential operator D = sum_j d^j F_j(x) acting on the right:
///   (P * D)(x) = sum_j P^(j)(x) F_j(x).
/// Coefficients are rational-function matrices; the top coefficient is
/// nonzero (the zero operator stores no coefficients). Immutable value type.
class MatDiffOp {
 public:
  explicit MatDiffOp(Eigen::Index size) : size_(size) {}

  /// From coefficients F_0..F_s, lowest derivative order first.
  static MatDiffOp from_coeffs(std::vector<MatR> coeffs);
  static MatDiffOp from_poly_coeffs(const std::vector<MatP>& coeffs);

  /// Order-zero operator: right multiplication by a fixed matrix.
  static MatDiffOp multiplication(const MatP& m);
  static MatDiffOp multiplication(const MatS& m);
  static MatDiffOp identity(Eigen::Index size);
  /// d*I, the derivative itself.
  static MatDiffOp derivative_op(Eigen::Index size);

  Eigen::Index size() const { return size_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Order s (index of the highest nonzero coefficient); nullopt for the
  /// zero operator.
  std::optional<std::size_t> order() const {
    if (is_zero()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  /// Coefficient of d^j; a zero matrix beyond the order.
  MatR coeff(std::size_t j) const;
  const std::vector<MatR>& coeffs() const { return coeffs_; }
  const MatR& leading_coeff() const;

  bool is_polynomial() const;
  /// Coefficient of d^j as a polynomial matrix; throws if non-polynomial.
  MatP poly_coeff(std::size_t j) const;

  /// True when deg(F_j) <= j for all j, a necessary shape for membership in
  /// any weight's operator algebra (and for degree preservation).
  bool has_banded_degrees() const;

  MatDiffOp operator-() const;
  MatDiffOp operator+(const MatDiffOp& o) const;
  MatDiffOp operator-(const MatDiffOp& o) const;

  bool operator==(const MatDiffOp& o) const {
    return size_ == o.size_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const MatDiffOp& o) const { return !(*this == o); }

 private:
  void trim();

  Eigen::Index size_ = 0;
  std::vector<MatR> coeffs_;  // F_0 .. F_s
};

MatDiffOp scale(const MatDiffOp& d, const GaussianRational& c);
inline MatDiffOp operator*(const GaussianRational& c, const MatDiffOp& d) {
  return scale(d, c);
}

/// P * D = sum_j P^(j) F_j.
MatR apply(const MatP& p, const MatDiffOp& d);
/// Same, for polynomial operators (the result is then a matrix polynomial).
MatP apply_poly(const MatP& p, const MatDiffOp& d);

/// Operator product in application order: P * compose(A, B) = (P * A) * B.
/// Juxtapositions like V N in the right-action calculus mean exactly
/// compose(V, N).
MatDiffOp compose(const MatDiffOp& a, const MatDiffOp& b);
inline MatDiffOp operator*(const MatDiffOp& a, const MatDiffOp& b) {
  return compose(a, b);
}
MatDiffOp op_pow(const MatDiffOp& d, std::size_t k);

/// The unique involution extending conjugate transposition of matrix
/// coefficients and sending d*I to -d*I. Anti-homomorphism:
/// (compose(A,B))* = compose(B*, A*).
MatDiffOp formal_adjoint(const MatDiffOp& d);

/// The falling-factorial symbol L(nu) = sum_j [nu]_j F_j^j, where F_j^j is
/// the x^j coefficient of F_j. Entries are polynomials in the formal
/// variable nu. Requires a polynomial operator with deg(F_j) <= j.
MatP falling_factorial_symbol(const MatDiffOp& d);

/// [nu]_j = nu (nu-1) ... (nu-j+1) as a polynomial, [nu]_0 = 1.
Poly falling_factorial(std::size_t j);

struct DegreePreservingResult {
  bool preserving = false;
  // On failure: the smallest degree n whose leading coefficient map L(n) is
  // singular, or the offending coefficient index when deg(F_j) > j.
  std::optional<long> witness;
  std::string reason;
};

/// Decides whether deg(P * V) = deg(P) for every matrix polynomial P:
/// equivalent to det L(n) != 0 for all integers n >= 0.
DegreePreservingResult degree_preserving_test(const MatDiffOp& v);

std::string to_string(const MatDiffOp& d, const std::string& var = "x");

std::ostream& operator<<(std::ostream& os, const MatDiffOp& d);

}  // namespace matorth

#endif  // MATORTH_DIFFOP_HPP
