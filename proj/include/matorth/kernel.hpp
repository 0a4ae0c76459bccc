// Copyright (c) 2026 The matorth authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MATORTH_KERNEL_HPP
#define MATORTH_KERNEL_HPP

#include <string>
#include <vector>

#include "matorth/ratfun.hpp"

namespace matorth {

enum class KernelFamily { Hermite, Laguerre, Jacobi };

enum class Support { RealLine, PositiveHalfLine, UnitInterval };

/// One of the classical scalar densities:
///   Hermite   e^{-x^2}            on (-inf, inf)
///   Laguerre  x^alpha e^{-x}      on (0, inf),    alpha > -1
///   Jacobi    (1-x)^a (1+x)^b     on (-1, 1),     a, b > -1
/// Moments are exact rationals after dividing out a fixed transcendental
/// unit (sqrt(pi), Gamma(alpha+1), 2^{a+b+1} B(a+1, b+1) respectively); the
/// unit cancels in every orthogonality and adjointness computation.
class Kernel {
 public:
  static Kernel hermite();
  static Kernel laguerre(Rational alpha);
  static Kernel jacobi(Rational alpha, Rational beta);

  KernelFamily family() const { return family_; }
  Support support() const;
  const Rational& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }

  /// s'/s as an exact rational function.
  RatFun log_derivative() const;

  /// Symbolic name of the normalization unit.
  std::string unit_name() const;

  /// k-th normalized moment m_k with  integral(x^k s(x) dx) = m_k * unit.
  Rational moment(std::size_t k) const;

  /// m_0 .. m_K in one pass.
  std::vector<Rational> moments(std::size_t max_index) const;

  bool operator==(const Kernel& o) const {
    return family_ == o.family_ && alpha_ == o.alpha_ && beta_ == o.beta_;
  }
  bool operator!=(const Kernel& o) const { return !(*this == o); }

 private:
  Kernel(KernelFamily family, Rational alpha, Rational beta)
      : family_(family), alpha_(std::move(alpha)), beta_(std::move(beta)) {}

  KernelFamily family_;
  Rational alpha_;  // unused for Hermite
  Rational beta_;   // used by Jacobi only
};

std::string to_string(KernelFamily family);

}  // namespace matorth

#endif  // MATORTH_KERNEL_HPP
