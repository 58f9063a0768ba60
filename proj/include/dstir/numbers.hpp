#pragma once

// Number families: degenerate Stirling numbers of both kinds (signed and
// unsigned), Lah numbers, degenerate r-Stirling numbers, degenerate Bell
// polynomials and degenerate Laguerre polynomials.
//
// Each family has a primary route (recurrence or closed form) and at least one
// independent route (generating function or basis conversion) exposed here so
// that callers and tests can compare them.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "dstir/basis.hpp"
#include "dstir/factorials.hpp"
#include "dstir/lambda_poly.hpp"
#include "dstir/rational.hpp"
#include "dstir/series.hpp"

namespace dstir {

enum class StirlingKind {
  S1Lambda,          // S_{1,λ}(n,k)
  S2Lambda,          // S_{2,λ}(n,k)
  UnsignedS1Lambda,  // [n k]_λ = (−1)^{n−k} S_{1,λ}(n,k)
  Lah,               // L(n,k)
  S1Classical,       // S_1(n,k), signed
  S2Classical,       // S_2(n,k)
};

inline std::string_view to_string(StirlingKind k) {
  switch (k) {
    case StirlingKind::S1Lambda: return "s1";
    case StirlingKind::S2Lambda: return "s2";
    case StirlingKind::UnsignedS1Lambda: return "us1";
    case StirlingKind::Lah: return "lah";
    case StirlingKind::S1Classical: return "s1c";
    case StirlingKind::S2Classical: return "s2c";
  }
  return "?";
}

/// Lah number from the closed form n!/k!·binom(n−1, k−1); L(0,0) = 1.
inline BigRational lah(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n == 0) return 1;
  if (k == 0) return 0;
  return factorial(static_cast<unsigned>(n)) / factorial(static_cast<unsigned>(k)) * binomial(n - 1, k - 1);
}

/// Triangular table of one family, entries (n,k) for 0 <= k <= n <= n_max.
///
/// Rows are produced by each family's recurrence; growing keeps existing rows.
/// `lambda` is the value plugged in for the degeneracy parameter, normally
/// the symbol λ itself. Rebuilding with −λ gives the λ → −λ family directly.
///
/// Concurrent reads of a table are safe; growth must not race with reads.
class Triangle {
 public:
  Triangle(StirlingKind kind, std::size_t n_max, LambdaPoly lambda = LambdaPoly::lambda())
      : kind_(kind), lambda_(std::move(lambda)) {
    rows_.push_back({LambdaPoly(1)});
    grow_to(n_max);
  }

  StirlingKind kind() const noexcept { return kind_; }
  std::size_t n_max() const noexcept { return rows_.size() - 1; }

  /// Entry (n,k); zero outside the triangle. Reading beyond n_max throws.
  const LambdaPoly& at(long n, long k) const {
    static const LambdaPoly zero;
    if (n < 0 || k < 0 || k > n) return zero;
    if (static_cast<std::size_t>(n) > n_max()) throw std::out_of_range("Triangle: row beyond n_max");
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }
  const LambdaPoly& operator()(long n, long k) const { return at(n, k); }

  void grow_to(std::size_t n_max) {
    while (rows_.size() <= n_max) append_row();
  }

  /// Table with λ → −λ applied entrywise.
  Triangle flipped() const {
    Triangle t = *this;
    t.lambda_ = -lambda_;
    for (auto& row : t.rows_)
      for (auto& e : row) e = e.flip_lambda();
    return t;
  }

  /// Table with λ specialized to a rational value (entries become constants).
  Triangle specialized(const BigRational& lam) const {
    Triangle t = *this;
    t.lambda_ = LambdaPoly(lam);
    for (auto& row : t.rows_)
      for (auto& e : row) e = LambdaPoly(e.eval(lam));
    return t;
  }

 private:
  void append_row() {
    const auto& prev = rows_.back();
    const long n = static_cast<long>(rows_.size()) - 1;  // building row n+1
    std::vector<LambdaPoly> row(static_cast<std::size_t>(n) + 2);
    auto prev_at = [&](long k) -> LambdaPoly {
      return (k < 0 || k > n) ? LambdaPoly{} : prev[static_cast<std::size_t>(k)];
    };
    for (long k = 0; k <= n + 1; ++k) {
      LambdaPoly& e = row[static_cast<std::size_t>(k)];
      switch (kind_) {
        case StirlingKind::S2Lambda:
          e = prev_at(k - 1) + (LambdaPoly(k) - lambda_ * BigRational(n)) * prev_at(k);
          break;
        case StirlingKind::S1Lambda:
          e = prev_at(k - 1) + (lambda_ * BigRational(k) - LambdaPoly(n)) * prev_at(k);
          break;
        case StirlingKind::UnsignedS1Lambda:
          e = prev_at(k - 1) + (LambdaPoly(n) - lambda_ * BigRational(k)) * prev_at(k);
          break;
        case StirlingKind::Lah:
          e = LambdaPoly(lah(n + 1, k));
          break;
        case StirlingKind::S1Classical:
          e = prev_at(k - 1) - LambdaPoly(n) * prev_at(k);
          break;
        case StirlingKind::S2Classical:
          e = prev_at(k - 1) + LambdaPoly(k) * prev_at(k);
          break;
      }
    }
    rows_.push_back(std::move(row));
  }

  StirlingKind kind_;
  LambdaPoly lambda_;
  std::vector<std::vector<LambdaPoly>> rows_;
};

namespace detail {
inline bool in_triangle(long n, long k) { return n >= 0 && k >= 0 && k <= n; }
}  // namespace detail

inline LambdaPoly s2_lambda(long n, long k) {
  if (!detail::in_triangle(n, k)) return {};
  return Triangle(StirlingKind::S2Lambda, static_cast<std::size_t>(n)).at(n, k);
}

inline LambdaPoly s1_lambda(long n, long k) {
  if (!detail::in_triangle(n, k)) return {};
  return Triangle(StirlingKind::S1Lambda, static_cast<std::size_t>(n)).at(n, k);
}

/// (−1)^{n−k}·S_{1,λ}(n,k)
inline LambdaPoly unsigned_s1_lambda(long n, long k) {
  auto v = s1_lambda(n, k);
  return ((n - k) % 2 == 0) ? v : -v;
}

/// S^{(r)}_{2,λ}(n+r, k+r) = Σ_{l=k}^{n} binom(n,l) S_{2,λ}(l,k) (r)_{n−l,λ}.
/// `s2` must cover row n.
inline LambdaPoly r_stirling2(long n, long k, unsigned r, const Triangle& s2) {
  if (!detail::in_triangle(n, k)) return {};
  LambdaPoly acc;
  for (long l = k; l <= n; ++l)
    acc += s2.at(l, k) * gff_sym(BigRational(r), static_cast<unsigned>(n - l)) * binomial(n, l);
  return acc;
}

inline LambdaPoly r_stirling2(long n, long k, unsigned r) {
  if (!detail::in_triangle(n, k)) return {};
  return r_stirling2(n, k, r, Triangle(StirlingKind::S2Lambda, static_cast<std::size_t>(n)));
}

/// Second sum form: Σ_{l=k}^{n} binom(l,k) S_{2,λ}(n,l) (r)_{l−k} (classical falling factorial).
inline LambdaPoly r_stirling2_second_sum(long n, long k, unsigned r, const Triangle& s2) {
  if (!detail::in_triangle(n, k)) return {};
  LambdaPoly acc;
  for (long l = k; l <= n; ++l)
    acc += s2.at(n, l) * (binomial(l, k) * falling(BigRational(r), static_cast<unsigned>(l - k)));
  return acc;
}

/// Generating function e_λ^r(t)·(e_λ(t) − 1)^k / k! truncated at `order`.
inline TruncatedSeries<LambdaPoly> r_stirling2_series(long k, unsigned r, std::size_t order) {
  auto e1 = deg_exp(LambdaPoly(1), order) - TruncatedSeries<LambdaPoly>::one(order);
  auto s = deg_exp(LambdaPoly(static_cast<long>(r)), order) * pow(e1, static_cast<unsigned>(k));
  return scale(s, LambdaPoly(factorial(static_cast<unsigned>(k)).inverse()));
}

/// S^{(r)}_{2,λ}(n+r, k+r) via n!·[t^n] of its generating function.
inline LambdaPoly r_stirling2_gf(long n, long k, unsigned r) {
  if (!detail::in_triangle(n, k)) return {};
  return r_stirling2_series(k, r, static_cast<std::size_t>(n)).egf(static_cast<std::size_t>(n));
}

/// The k-th power generating function of `kind` divided by k!, truncated at `order`:
///   S2λ: (e_λ(t) − 1)^k/k!            S1λ: (log_λ(1+t))^k/k!
///   UnsignedS1λ: (−log_λ(1−t))^k/k!    Lah: (t/(1−t))^k/k!
///   classical kinds: the λ = 0 specializations (e^t − 1, log(1+t)).
inline TruncatedSeries<LambdaPoly> kind_series(StirlingKind kind, long k, std::size_t order) {
  using S = TruncatedSeries<LambdaPoly>;
  S base(order);
  switch (kind) {
    case StirlingKind::S2Lambda:
      base = deg_exp(LambdaPoly(1), order) - S::one(order);
      break;
    case StirlingKind::S1Lambda:
      base = deg_log(order);
      break;
    case StirlingKind::UnsignedS1Lambda:
      base = -compose(deg_log(order), -S::variable(order));
      break;
    case StirlingKind::Lah:
      base = S::variable(order) * geometric<LambdaPoly>(order);
      break;
    case StirlingKind::S2Classical:
      base = deg_exp(LambdaPoly(1), order) - S::one(order);
      base = base.map([](const LambdaPoly& p) { return LambdaPoly(p.eval(0)); });
      break;
    case StirlingKind::S1Classical:
      base = deg_log(order).map([](const LambdaPoly& p) { return LambdaPoly(p.eval(0)); });
      break;
  }
  return scale(pow(base, static_cast<unsigned>(k)), LambdaPoly(factorial(static_cast<unsigned>(k)).inverse()));
}

/// Generating-function route: n!·[t^n] of kind_series(kind, k).
inline LambdaPoly gf_coeff(StirlingKind kind, long n, long k) {
  if (!detail::in_triangle(n, k)) return {};
  return kind_series(kind, k, static_cast<std::size_t>(n)).egf(static_cast<std::size_t>(n));
}

/// Full triangle by the generating-function route (one power series per column).
inline std::vector<std::vector<LambdaPoly>> gf_triangle(StirlingKind kind, std::size_t n_max) {
  std::vector<std::vector<LambdaPoly>> rows(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) rows[n].resize(n + 1);
  for (std::size_t k = 0; k <= n_max; ++k) {
    auto s = kind_series(kind, static_cast<long>(k), n_max);
    for (std::size_t n = k; n <= n_max; ++n) rows[n][k] = s.egf(n);
  }
  return rows;
}

/// φ_{n,λ}(x) = Σ_k S_{2,λ}(n,k) x^k in the monomial basis.
inline BasisPoly bell_poly(long n) {
  if (n < 0) throw std::invalid_argument("bell_poly: negative degree");
  Triangle s2(StirlingKind::S2Lambda, static_cast<std::size_t>(n));
  std::vector<LambdaPoly> c(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = s2.at(n, k);
  return {Basis::Monomial, std::move(c)};
}

/// φ_{n,λ}(x) evaluated at a rational x, as an element of ℚ[λ].
inline LambdaPoly bell_poly_at(const BasisPoly& phi, const BigRational& x) {
  LambdaPoly acc;
  const auto& c = phi.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * LambdaPoly(x) + *it;
  return acc;
}

/// Degenerate Bell number φ_{n,λ}(1).
inline LambdaPoly bell_number(long n) { return bell_poly_at(bell_poly(n), 1); }

/// e^{x(e_λ(t) − 1)} truncated at `order`.
inline TruncatedSeries<LambdaPoly> bell_series(const BigRational& x, std::size_t order) {
  auto e1 = deg_exp(LambdaPoly(1), order) - TruncatedSeries<LambdaPoly>::one(order);
  return exp_series(scale(e1, LambdaPoly(x)));
}

/// Generating-function route for φ_{n,λ}(x).
inline LambdaPoly bell_gf_coeff(long n, const BigRational& x) {
  if (n < 0) throw std::invalid_argument("bell_gf_coeff: negative index");
  return bell_series(x, static_cast<std::size_t>(n)).egf(static_cast<std::size_t>(n));
}

namespace detail {
inline BigRational laguerre_argument(const BigRational& x, const BigRational& lam) {
  BigRational denom = BigRational(1) + lam * x;
  if (denom.is_zero()) throw std::domain_error("degenerate Laguerre: singular point 1 + λx = 0");
  return x / denom;
}
}  // namespace detail

/// Degenerate Laguerre polynomial by its closed form
///   Σ_{k=0}^{n} binom(n+α, n−k) (−1)^k ⟨1⟩_{k,λ} / k! · (x/(1+λx))^k.
inline BigRational laguerre_deg(long n, const BigRational& alpha, const BigRational& x, const BigRational& lam) {
  if (n < 0) throw std::invalid_argument("laguerre_deg: negative degree");
  const BigRational u = detail::laguerre_argument(x, lam);
  BigRational acc;
  for (long k = 0; k <= n; ++k) {
    BigRational term = binom_rational(BigRational(n) + alpha, static_cast<unsigned>(n - k)) *
                       rff(1, static_cast<unsigned>(k), lam) / factorial(static_cast<unsigned>(k)) *
                       pow(u, k);
    acc += (k % 2 == 0) ? term : -term;
  }
  return acc;
}

/// Generating function (1−t)^{−(α+1)} · e_λ^{−1}(t/(1−t) · x/(1+λx)) truncated at `order`.
inline TruncatedSeries<BigRational> laguerre_series(const BigRational& alpha, const BigRational& x,
                                                    const BigRational& lam, std::size_t order) {
  using S = TruncatedSeries<BigRational>;
  const BigRational u = detail::laguerre_argument(x, lam);
  auto minus_t = -S::variable(order);
  auto prefactor = compose(binom_series(-(alpha + 1), order), minus_t);
  auto inner = scale(S::variable(order) * geometric<BigRational>(order), u);
  return prefactor * compose(deg_exp(BigRational(-1), lam, order), inner);
}

inline BigRational laguerre_gf_coeff(long n, const BigRational& alpha, const BigRational& x,
                                     const BigRational& lam) {
  if (n < 0) throw std::invalid_argument("laguerre_gf_coeff: negative degree");
  return laguerre_series(alpha, x, lam, static_cast<std::size_t>(n))[static_cast<std::size_t>(n)];
}

}  // namespace dstir
