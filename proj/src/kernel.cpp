// Copyright (c) 2026 The matorth authors
// SPDX-License-Identifier: Apache-2.0

#include "matorth/kernel.hpp"

namespace matorth {

Kernel Kernel::hermite() { return Kernel(KernelFamily::Hermite, 0, 0); }

Kernel Kernel::laguerre(Rational alpha) {
  if (alpha <= -1) {
    throw std::invalid_argument("Laguerre parameter must satisfy alpha > -1, got " +
                                to_string(alpha));
  }
  return Kernel(KernelFamily::Laguerre, std::move(alpha), 0);
}

Kernel Kernel::jacobi(Rational alpha, Rational beta) {
  if (alpha <= -1 || beta <= -1) {
    throw std::invalid_argument("Jacobi parameters must satisfy alpha, beta > -1");
  }
  return Kernel(KernelFamily::Jacobi, std::move(alpha), std::move(beta));
}

Support Kernel::support() const {
  switch (family_) {
    case KernelFamily::Hermite:
      return Support::RealLine;
    case KernelFamily::Laguerre:
      return Support::PositiveHalfLine;
    case KernelFamily::Jacobi:
      return Support::UnitInterval;
  }
  throw std::logic_error("unreachable");
}

RatFun Kernel::log_derivative() const {
  const Poly x = Poly::x();
  switch (family_) {
    case KernelFamily::Hermite:
      // d/dx log e^{-x^2} = -2x
      return RatFun(GaussianRational(-2) * x);
    case KernelFamily::Laguerre:
      // alpha/x - 1
      return RatFun(Poly(GaussianRational(alpha_)) - x, x);
    case KernelFamily::Jacobi: {
      // -a/(1-x) + b/(1+x)
      const Poly one_minus(Poly(1) - x);
      const Poly one_plus(Poly(1) + x);
      return RatFun(Poly(GaussianRational(-alpha_)), one_minus) +
             RatFun(Poly(GaussianRational(beta_)), one_plus);
    }
  }
  throw std::logic_error("unreachable");
}

std::string Kernel::unit_name() const {
  switch (family_) {
    case KernelFamily::Hermite:
      return "sqrt(pi)";
    case KernelFamily::Laguerre:
      return "Gamma(alpha+1)";
    case KernelFamily::Jacobi:
      return "2^(alpha+beta+1)*Beta(alpha+1,beta+1)";
  }
  throw std::logic_error("unreachable");
}

Rational Kernel::moment(std::size_t k) const { return moments(k).back(); }

std::vector<Rational> Kernel::moments(std::size_t max_index) const {
  std::vector<Rational> m(max_index + 1);
  switch (family_) {
    case KernelFamily::Hermite:
      // integration by parts: m_{2j} = (2j-1)/2 m_{2j-2}, odd moments vanish
      m[0] = 1;
      for (std::size_t k = 1; k <= max_index; ++k) {
        if (k % 2 == 1) {
          m[k] = 0;
        } else {
          m[k] = m[k - 2] * Rational(static_cast<long>(k) - 1) / 2;
        }
      }
      break;
    case KernelFamily::Laguerre:
      // rising factorial (alpha+1)(alpha+2)...(alpha+k)
      m[0] = 1;
      for (std::size_t k = 1; k <= max_index; ++k) {
        m[k] = m[k - 1] * (alpha_ + static_cast<long>(k));
      }
      break;
    case KernelFamily::Jacobi: {
      // binomial expansion of (2t-1)^k against Beta(beta+j+1, alpha+1);
      // ratio[j] = B(beta+j+1, alpha+1) / B(beta+1, alpha+1)
      std::vector<Rational> ratio(max_index + 1);
      ratio[0] = 1;
      for (std::size_t j = 1; j <= max_index; ++j) {
        ratio[j] = ratio[j - 1] * (beta_ + static_cast<long>(j)) /
                   (alpha_ + beta_ + 1 + static_cast<long>(j));
      }
      for (std::size_t k = 0; k <= max_index; ++k) {
        Rational sum(0);
        Rational binom(1);   // C(k, j)
        Rational pow2(1);    // 2^j
        for (std::size_t j = 0; j <= k; ++j) {
          if (j > 0) {
            binom = binom * Rational(static_cast<long>(k - j + 1)) /
                    Rational(static_cast<long>(j));
            pow2 *= 2;
          }
          Rational term = binom * pow2 * ratio[j];
          if ((k - j) % 2 == 1) term = -term;
          sum += term;
        }
        m[k] = sum;
      }
      break;
    }
  }
  return m;
}

std::string to_string(KernelFamily family) {
  switch (family) {
    case KernelFamily::Hermite:
      return "hermite";
    case KernelFamily::Laguerre:
      return "laguerre";
    case KernelFamily::Jacobi:
      return "jacobi";
  }
  throw std::logic_error("unreachable");
}

}  // namespace matorth
