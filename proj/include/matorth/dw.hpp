// Copyright (c) 2026 The matorth authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MATORTH_DW_HPP
#define MATORTH_DW_HPP

#include <vector>

#include "matorth/mop.hpp"

namespace matorth {

/// Eigenvalue matrix Lambda(nu) = sum_i [nu]_i F_i^i of an operator whose
/// coefficients satisfy deg(F_i) <= i; entries are polynomials in the formal
/// variable nu. Evaluating at an integer n gives the matrix eigenvalue on
/// the degree-n monic orthogonal polynomial. Throws when deg(F_i) > i.
MatP eigenvalue_poly(const MatDiffOp& d);

/// Lambda(n) as a concrete matrix.
MatS eigenvalue_at(const MatP& eigen_poly, long n);

/// True iff P_n D = Lambda(n) P_n exactly for all n = 0..n_check. Operators
/// with deg(F_i) > i (or non-polynomial coefficients) are rejected
/// immediately.
bool membership_test(const MatDiffOp& d, const MopTable& table,
                     std::size_t n_check);
bool membership_test(const MatDiffOp& d, const MatrixWeight& w,
                     std::size_t n_check);

/// Decides equality of two members of the algebra by comparing their
/// eigenvalue matrices as nu-polynomials; the eigenvalue sequence separates
/// the algebra, so no coefficient comparison is needed. Throws if either
/// operator fails the membership precondition.
bool operator_equal_by_separation(const MatDiffOp& d1, const MatDiffOp& d2,
                                  const MopTable& table, std::size_t n_check);

/// Commutation decided at eigenvalue level:
/// Lambda(D1) Lambda(D2) = Lambda(D2) Lambda(D1) as nu-polynomials.
bool commutation_check(const MatDiffOp& d1, const MatDiffOp& d2,
                       const MopTable& table, std::size_t n_check);

/// An operator is central among the given generators iff it commutes with
/// each of them.
bool center_candidate_check(const MatDiffOp& z,
                            const std::vector<MatDiffOp>& generators,
                            const MopTable& table, std::size_t n_check);

struct SolveResult {
  std::size_t order_bound = 0;
  /// Basis of the space of operators of order <= m satisfying the
  /// eigenfunction equations for n = 0..K_final; RREF-normalized and
  /// membership-checked at n_check = K_final + 4.
  std::vector<MatDiffOp> basis;
  /// (K, dimension) pairs until the dimension stabilized twice.
  std::vector<std::pair<std::size_t, Eigen::Index>> stabilization;
  /// Real basis of the formally symmetric part of span(basis).
  std::vector<MatDiffOp> symmetric_basis;

  std::size_t final_equation_count() const {
    return stabilization.empty() ? 0 : stabilization.back().first;
  }
};

/// Computes an upper-bound space for the operators of order <= m in the
/// weight's algebra: unknowns are the coefficients of F_i (deg <= i), the
/// equations P_n D = Lambda(n) P_n for n = 0..K are linear in them, and K
/// grows by 2 until the solution dimension is stable twice in a row.
SolveResult solve_bounded_order(const MatrixWeight& w, std::size_t max_order,
                                std::size_t initial_equations = 0);

}  // namespace matorth

#endif  // MATORTH_DW_HPP
