#pragma once

// Falling/rising factorials, their λ-step generalizations, and symbolic binomials.

#include "dstir/lambda_poly.hpp"
#include "dstir/rational.hpp"

namespace dstir {

/// x(x − step)(x − 2·step)⋯(x − (n−1)·step) over any ring; 1 for n = 0.
template <class R>
R generalized_falling(const R& x, unsigned n, const R& step) {
  R acc = R(1);
  R factor = x;
  for (unsigned j = 0; j < n; ++j) {
    acc = acc * factor;
    factor = factor - step;
  }
  return acc;
}

/// x(x + step)⋯(x + (n−1)·step); 1 for n = 0.
template <class R>
R generalized_rising(const R& x, unsigned n, const R& step) {
  return generalized_falling(x, n, R(-step));
}

/// (x)_{n,λ} at a rational λ.
inline BigRational gff(const BigRational& x, unsigned n, const BigRational& lam) {
  return generalized_falling(x, n, lam);
}

/// ⟨x⟩_{n,λ} at a rational λ.
inline BigRational rff(const BigRational& x, unsigned n, const BigRational& lam) {
  return generalized_rising(x, n, lam);
}

/// (r)_{n,λ} as an element of ℚ[λ].
inline LambdaPoly gff_sym(const BigRational& r, unsigned n) {
  return generalized_falling(LambdaPoly(r), n, LambdaPoly::lambda());
}

/// ⟨r⟩_{n,λ} = r(r+λ)⋯(r+(n−1)λ) as an element of ℚ[λ].
inline LambdaPoly rff_sym(const BigRational& r, unsigned n) {
  return generalized_rising(LambdaPoly(r), n, LambdaPoly::lambda());
}

inline BigRational falling(const BigRational& x, unsigned n) { return generalized_falling(x, n, BigRational(1)); }
inline BigRational rising(const BigRational& x, unsigned n) { return generalized_rising(x, n, BigRational(1)); }

/// Generalized binomial α(α−1)⋯(α−m+1)/m! for α ∈ ℚ[λ].
inline LambdaPoly binom_sym(const LambdaPoly& alpha, unsigned m) {
  return generalized_falling(alpha, m, LambdaPoly(1)) / factorial(m);
}

/// Generalized binomial for a rational top argument.
inline BigRational binom_rational(const BigRational& alpha, unsigned m) {
  return falling(alpha, m) / factorial(m);
}

}  // namespace dstir
