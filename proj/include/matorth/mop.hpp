// Copyright (c) 2026 The matorth authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MATORTH_MOP_HPP
#define MATORTH_MOP_HPP

#include <vector>

#include "matorth/weight.hpp"

namespace matorth {

/// The unique monic orthogonal polynomial sequence of a weight, together
/// with the squared-norm matrices <P_n, P_n>. Each P_n is obtained from the
/// block Hankel moment system (never from the three-term recursion, which
/// therefore stays available as an independent cross-check).
class MopTable {
 public:
  static MopTable build(const MatrixWeight& weight, std::size_t max_degree);

  const MatrixWeight& weight() const { return weight_; }
  std::size_t max_degree() const { return polys_.size() - 1; }
  const MatP& poly(std::size_t n) const { return polys_.at(n); }
  const MatS& norm(std::size_t n) const { return norms_.at(n); }

 private:
  MopTable(MatrixWeight weight, std::vector<MatP> polys, std::vector<MatS> norms)
      : weight_(std::move(weight)),
        polys_(std::move(polys)),
        norms_(std::move(norms)) {}

  MatrixWeight weight_;
  std::vector<MatP> polys_;
  std::vector<MatS> norms_;
};

struct RecurrenceCoeffs {
  MatS b;
  MatS c;
};

/// Coefficients of x P_n = P_{n+1} + B_n P_n + C_n P_{n-1}; the identity is
/// re-verified exactly before returning. Requires n + 1 <= max degree.
RecurrenceCoeffs recurrence_coeffs(const MopTable& table, std::size_t n);

struct GeneralRecurrence {
  MatS a;
  MatS b;
  MatS c;
};

/// Coefficients of x Q_n = A_n Q_{n+1} + B_n Q_n + C_n Q_{n-1} for any
/// orthogonal sequence with nonsingular leading coefficients. Orthogonality
/// of Q_0..Q_{n+1} is a precondition and is verified.
GeneralRecurrence general_recurrence(const std::vector<MatP>& q,
                                     const MatrixWeight& w, std::size_t n);

}  // namespace matorth

#endif  // MATORTH_MOP_HPP
