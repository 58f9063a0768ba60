#pragma once

// The five graded x-bases and exact conversion between them.
//
// Every basis element of index k is a monic polynomial of x-degree k with
// coefficients in ℚ[λ]. Conversions route through the monomial basis: expand
// into monomials, then peel off the target basis from the top degree down.
// Monicity means the peeling step never divides, so it stays inside ℚ[λ].

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dstir/lambda_poly.hpp"

namespace dstir {

enum class Basis {
  Monomial,       // x^k
  Falling,        // (x)_k
  Rising,         // ⟨x⟩_k
  FallingLambda,  // (x)_{k,λ}
  RisingLambda,   // ⟨x⟩_{k,λ}
};

inline constexpr std::array<Basis, 5> kAllBases = {Basis::Monomial, Basis::Falling, Basis::Rising,
                                                   Basis::FallingLambda, Basis::RisingLambda};

inline std::string_view to_string(Basis b) {
  switch (b) {
    case Basis::Monomial: return "monomial";
    case Basis::Falling: return "falling";
    case Basis::Rising: return "rising";
    case Basis::FallingLambda: return "falling_lambda";
    case Basis::RisingLambda: return "rising_lambda";
  }
  return "?";
}

/// Polynomial in x, monomial coefficients in ℚ[λ]; index k = coefficient of x^k.
using XPoly = std::vector<LambdaPoly>;

inline void trim(XPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

/// p·(x + shift)
inline XPoly times_linear(const XPoly& p, const LambdaPoly& shift) {
  XPoly out(p.size() + 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i + 1] += p[i];
    out[i] += p[i] * shift;
  }
  trim(out);
  return out;
}

/// Linear factor shift for element j → j+1 of a product basis: element_{k+1} = element_k · (x + shift(k)).
inline LambdaPoly basis_step_shift(Basis b, std::size_t k) {
  const auto kk = static_cast<long>(k);
  switch (b) {
    case Basis::Monomial: return {};
    case Basis::Falling: return LambdaPoly(-kk);
    case Basis::Rising: return LambdaPoly(kk);
    case Basis::FallingLambda: return LambdaPoly::lambda() * BigRational(-kk);
    case Basis::RisingLambda: return LambdaPoly::lambda() * BigRational(kk);
  }
  return {};
}

/// Monomial expansions of basis elements 0..n.
inline std::vector<XPoly> basis_elements(Basis b, std::size_t n) {
  std::vector<XPoly> elems;
  elems.reserve(n + 1);
  elems.push_back(XPoly{LambdaPoly(1)});
  for (std::size_t k = 0; k < n; ++k) elems.push_back(times_linear(elems.back(), basis_step_shift(b, k)));
  return elems;
}

/// A polynomial in x written over one of the five bases.
class BasisPoly {
 public:
  BasisPoly() = default;
  BasisPoly(Basis basis, std::vector<LambdaPoly> coeffs) : basis_(basis), coeffs_(std::move(coeffs)) { trim(coeffs_); }

  /// The k-th element of `basis` as a unit vector.
  static BasisPoly unit(Basis basis, std::size_t k) {
    std::vector<LambdaPoly> c(k + 1);
    c[k] = LambdaPoly(1);
    return {basis, std::move(c)};
  }

  Basis basis() const noexcept { return basis_; }
  const std::vector<LambdaPoly>& coeffs() const noexcept { return coeffs_; }
  LambdaPoly operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : LambdaPoly{}; }

  /// x-degree; -1 for zero.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  friend bool operator==(const BasisPoly&, const BasisPoly&) = default;

 private:
  Basis basis_ = Basis::Monomial;
  std::vector<LambdaPoly> coeffs_;
};

/// Monomial coefficients of p.
inline XPoly to_monomial(const BasisPoly& p) {
  if (p.basis() == Basis::Monomial) return p.coeffs();
  if (p.coeffs().empty()) return {};
  auto elems = basis_elements(p.basis(), p.coeffs().size() - 1);
  XPoly out(p.coeffs().size());
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (p.coeffs()[k].is_zero()) continue;
    for (std::size_t i = 0; i < elems[k].size(); ++i) out[i] += p.coeffs()[k] * elems[k][i];
  }
  trim(out);
  return out;
}

/// Express a monomial-coefficient polynomial over `target`.
inline BasisPoly from_monomial(XPoly mono, Basis target) {
  trim(mono);
  if (target == Basis::Monomial || mono.empty()) return {target, std::move(mono)};
  const std::size_t n = mono.size() - 1;
  auto elems = basis_elements(target, n);
  std::vector<LambdaPoly> out(n + 1);
  for (std::size_t k = n + 1; k-- > 0;) {
    out[k] = mono[k];
    if (out[k].is_zero()) continue;
    for (std::size_t i = 0; i <= k; ++i) mono[i] -= out[k] * elems[k][i];
  }
  return {target, std::move(out)};
}

/// The same abstract polynomial expressed over `target`.
inline BasisPoly convert(const BasisPoly& p, Basis target) {
  if (p.basis() == target) return p;
  return from_monomial(to_monomial(p), target);
}

/// Lower-triangular connection matrix: row n holds the `to`-coefficients of
/// the n-th `from` element, for n = 0..n_max.
inline std::vector<std::vector<LambdaPoly>> conversion_matrix(Basis from, Basis to, std::size_t n_max) {
  std::vector<std::vector<LambdaPoly>> rows;
  rows.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    auto converted = convert(BasisPoly::unit(from, n), to);
    std::vector<LambdaPoly> row(n + 1);
    for (std::size_t k = 0; k <= n; ++k) row[k] = converted[k];
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Evaluate an x-polynomial at x = at, λ = lam.
inline BigRational eval(const XPoly& p, const BigRational& at, const BigRational& lam) {
  BigRational acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * at + it->eval(lam);
  return acc;
}

}  // namespace dstir
