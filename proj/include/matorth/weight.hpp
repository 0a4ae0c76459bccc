// Copyright (c) 2026 The matorth authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MATORTH_WEIGHT_HPP
#define MATORTH_WEIGHT_HPP

#include <optional>
#include <string>

#include "matorth/diffop.hpp"
#include "matorth/kernel.hpp"

namespace matorth {

/// Weight matrix W(x) = s(x) H(x): a single classical scalar kernel s times
/// a Hermitian polynomial matrix H with det H != 0. Construction validates
/// Hermitian coefficients, integrability at finite endpoints, positive
/// definiteness at interior sample points, and (when given) the factored
/// form H = T diag(h) T^*. Weights whose entries would need different
/// scalar kernels per entry are not representable here by design.
class MatrixWeight {
 public:
  MatrixWeight(Kernel kernel, MatP h, std::optional<MatP> t = std::nullopt);

  Eigen::Index size() const { return h_.rows(); }
  const Kernel& kernel() const { return kernel_; }
  const MatP& h() const { return h_; }
  const std::optional<MatP>& t_factor() const { return t_; }

  bool operator==(const MatrixWeight& o) const {
    return kernel_ == o.kernel_ && h_ == o.h_;
  }
  bool operator!=(const MatrixWeight& o) const { return !(*this == o); }

 private:
  Kernel kernel_;
  MatP h_;
  std::optional<MatP> t_;
};

/// S_m = integral(x^m H(x) s(x) dx) / unit, an exact matrix of Gaussian
/// rationals.
MatS matrix_moment(const MatrixWeight& w, std::size_t m);
std::vector<MatS> matrix_moments(const MatrixWeight& w, std::size_t max_index);

/// <P, Q>_W = integral(P W Q^*) / unit. Sesquilinear: linear in P,
/// conjugate-linear in Q.
MatS inner_product(const MatP& p, const MatP& q, const MatrixWeight& w);

/// Twisted derivative in the kernel frame: L(M) = (s M)'/s = logderiv M + M'.
MatR kernel_frame_derivative(const MatR& m, const Kernel& kernel);

/// The W-adjoint W D* W^{-1}, computed entirely in rational arithmetic by
/// working in the kernel frame. An involution; anti-homomorphism over
/// compose.
MatDiffOp w_adjoint(const MatDiffOp& d, const MatrixWeight& w);

/// True iff D equals its W-adjoint exactly. For order-2 operators the
/// classical three symmetry equations are evaluated as an independent
/// cross-check of the adjoint computation.
bool formal_symmetry_test(const MatDiffOp& d, const MatrixWeight& w);

/// Verifies that every boundary term arising in the integration by parts of
/// <P D, Q>_W vanishes at both endpoints of the support, by exact endpoint
/// order analysis (exponential decay wins at infinite endpoints; at finite
/// endpoints the kernel exponent plus the rational function's vanishing
/// order must be positive). Requires polynomial coefficients.
bool boundary_check(const MatDiffOp& d, const MatrixWeight& w);

}  // namespace matorth

#endif  // MATORTH_WEIGHT_HPP
