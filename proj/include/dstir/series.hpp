#pragma once

// Truncated formal power series in t over ℚ or ℚ[λ].
//
// Coefficients are ordinary: coeff(n) = [t^n]. Every generating function in
// this library is exponentially normalized, so egf(n) = n!·[t^n] is the
// accessor the number families use.

#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dstir/factorials.hpp"
#include "dstir/lambda_poly.hpp"
#include "dstir/rational.hpp"

namespace dstir {

template <class R>
concept CoefficientRing = std::regular<R> && requires(const R& a, const R& b, const BigRational& q) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a * q } -> std::convertible_to<R>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { try_inverse(a) };
  R(q);
};

template <CoefficientRing R>
class TruncatedSeries {
 public:
  /// Zero series of the given order (order+1 coefficients).
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}
  TruncatedSeries(std::size_t order, std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
  }
  TruncatedSeries(std::size_t order, std::initializer_list<R> coeffs) : coeffs_(coeffs) { coeffs_.resize(order + 1); }

  static TruncatedSeries constant(std::size_t order, R c) {
    TruncatedSeries s(order);
    s.coeffs_[0] = std::move(c);
    return s;
  }
  static TruncatedSeries one(std::size_t order) { return constant(order, R(BigRational(1))); }
  /// The series t.
  static TruncatedSeries variable(std::size_t order) {
    TruncatedSeries s(order);
    if (order >= 1) s.coeffs_[1] = R(BigRational(1));
    return s;
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const std::vector<R>& coeffs() const noexcept { return coeffs_; }
  const R& operator[](std::size_t n) const { return coeffs_.at(n); }
  R& operator[](std::size_t n) { return coeffs_.at(n); }

  /// n!·[t^n]
  R egf(std::size_t n) const { return coeffs_.at(n) * factorial(static_cast<unsigned>(n)); }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    require_same_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    require_same_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator-(TruncatedSeries a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.require_same_order(b);
    const std::size_t n = a.coeffs_.size();
    TruncatedSeries out(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j < n; ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        out.coeffs_[i + j] = out.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return out;
  }

  /// Coefficient-wise scaling by a ring element.
  friend TruncatedSeries scale(TruncatedSeries a, const R& s) {
    for (auto& c : a.coeffs_) c = c * s;
    return a;
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  /// Apply f to every coefficient, e.g. evaluation at a λ value.
  template <class F>
  auto map(F&& f) const {
    using Out = std::decay_t<decltype(f(coeffs_[0]))>;
    std::vector<Out> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return TruncatedSeries<Out>(order(), std::move(out));
  }

  void require_same_order(const TruncatedSeries& o) const {
    if (o.coeffs_.size() != coeffs_.size()) throw std::invalid_argument("TruncatedSeries: order mismatch");
  }

 private:
  std::vector<R> coeffs_;
};

template <class R>
TruncatedSeries<R> pow(const TruncatedSeries<R>& f, unsigned e) {
  auto result = TruncatedSeries<R>::one(f.order());
  auto base = f;
  for (; e != 0; e >>= 1) {
    if (e & 1U) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

/// f∘g by Horner evaluation in g. Requires [t^0]g = 0.
template <class R>
TruncatedSeries<R> compose(const TruncatedSeries<R>& f, const TruncatedSeries<R>& g) {
  f.require_same_order(g);
  if (!g[0].is_zero()) throw std::invalid_argument("compose: inner series has a nonzero constant term");
  TruncatedSeries<R> acc(f.order());
  for (std::size_t i = f.order() + 1; i-- > 0;) {
    acc = acc * g;
    acc[0] = acc[0] + f[i];
  }
  return acc;
}

/// Multiplicative inverse; [t^0]f must be a unit of the ring.
template <class R>
TruncatedSeries<R> reciprocal(const TruncatedSeries<R>& f) {
  auto inv0 = try_inverse(f[0]);
  if (!inv0) throw std::invalid_argument("reciprocal: constant term is not invertible");
  TruncatedSeries<R> g(f.order());
  g[0] = *inv0;
  for (std::size_t n = 1; n <= f.order(); ++n) {
    R acc{};
    for (std::size_t i = 1; i <= n; ++i) acc = acc + f[i] * g[n - i];
    g[n] = -(acc * *inv0);
  }
  return g;
}

/// Compositional inverse by order-by-order back-substitution.
/// Requires [t^0]f = 0 and [t^1]f a unit.
template <class R>
TruncatedSeries<R> compositional_inverse(const TruncatedSeries<R>& f) {
  if (!f[0].is_zero()) throw std::invalid_argument("compositional_inverse: nonzero constant term");
  const std::size_t order = f.order();
  if (order == 0) return TruncatedSeries<R>(0);
  auto inv1 = try_inverse(f[1]);
  if (!inv1) throw std::invalid_argument("compositional_inverse: linear coefficient is not invertible");
  TruncatedSeries<R> g(order);
  g[1] = *inv1;
  // With g known through t^{n-1} and g_n = 0, [t^n] f∘g misses exactly f_1·g_n.
  for (std::size_t n = 2; n <= order; ++n) {
    auto partial = compose(f, g);
    g[n] = -(partial[n] * *inv1);
  }
  return g;
}

/// exp(g) = Σ g^k/k!, for [t^0]g = 0.
template <class R>
TruncatedSeries<R> exp_series(const TruncatedSeries<R>& g) {
  if (!g[0].is_zero()) throw std::invalid_argument("exp_series: nonzero constant term");
  std::vector<R> ecoeffs;
  for (std::size_t k = 0; k <= g.order(); ++k) ecoeffs.push_back(R(factorial(static_cast<unsigned>(k)).inverse()));
  return compose(TruncatedSeries<R>(g.order(), std::move(ecoeffs)), g);
}

/// Σ_{n≥0} t^n
template <class R>
TruncatedSeries<R> geometric(std::size_t order) {
  return TruncatedSeries<R>(order, std::vector<R>(order + 1, R(BigRational(1))));
}

/// e_λ^x(t) = Σ (x)_{n,λ} t^n/n! over ℚ[λ].
inline TruncatedSeries<LambdaPoly> deg_exp(const LambdaPoly& x, std::size_t order) {
  TruncatedSeries<LambdaPoly> s(order);
  LambdaPoly ff = 1;
  for (std::size_t n = 0; n <= order; ++n) {
    s[n] = ff / factorial(static_cast<unsigned>(n));
    ff = ff * (x - LambdaPoly::lambda() * BigRational(static_cast<long>(n)));
  }
  return s;
}

/// e_λ^x(t) at a fixed rational λ.
inline TruncatedSeries<BigRational> deg_exp(const BigRational& x, const BigRational& lam, std::size_t order) {
  TruncatedSeries<BigRational> s(order);
  for (std::size_t n = 0; n <= order; ++n)
    s[n] = gff(x, static_cast<unsigned>(n), lam) / factorial(static_cast<unsigned>(n));
  return s;
}

/// EGF coefficient n!·[t^n] of log_λ(1+t) as a polynomial: ∏_{j=1}^{n−1}(λ − j); zero for n = 0.
inline LambdaPoly deg_log_egf(std::size_t n) {
  if (n == 0) return {};
  LambdaPoly c = 1;
  for (std::size_t j = 1; j < n; ++j) c = c * (LambdaPoly::lambda() - LambdaPoly(static_cast<long>(j)));
  return c;
}

/// log_λ(1+t), the compositional inverse of e_λ(t) − 1.
inline TruncatedSeries<LambdaPoly> deg_log(std::size_t order) {
  TruncatedSeries<LambdaPoly> s(order);
  for (std::size_t n = 1; n <= order; ++n) s[n] = deg_log_egf(n) / factorial(static_cast<unsigned>(n));
  return s;
}

/// (1+t)^α over ℚ[λ]: [t^m] = binom(α, m).
inline TruncatedSeries<LambdaPoly> binom_series(const LambdaPoly& alpha, std::size_t order) {
  TruncatedSeries<LambdaPoly> s(order);
  for (std::size_t m = 0; m <= order; ++m) s[m] = binom_sym(alpha, static_cast<unsigned>(m));
  return s;
}

/// (1+t)^α for rational α.
inline TruncatedSeries<BigRational> binom_series(const BigRational& alpha, std::size_t order) {
  TruncatedSeries<BigRational> s(order);
  for (std::size_t m = 0; m <= order; ++m) s[m] = binom_rational(alpha, static_cast<unsigned>(m));
  return s;
}

/// Coefficient-wise evaluation of a ℚ[λ] series at λ = lam.
inline TruncatedSeries<BigRational> eval_series(const TruncatedSeries<LambdaPoly>& s, const BigRational& lam) {
  return s.map([&](const LambdaPoly& p) { return p.eval(lam); });
}

}  // namespace dstir
