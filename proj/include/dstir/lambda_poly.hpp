#pragma once

// Univariate polynomials in the degeneracy parameter λ over ℚ.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "dstir/rational.hpp"

namespace dstir {

/// Element of ℚ[λ]. Dense coefficient list, index i = coefficient of λ^i.
/// Canonical form: no trailing zeros; the zero polynomial has no coefficients.
class LambdaPoly {
 public:
  LambdaPoly() = default;
  LambdaPoly(BigRational c) {  // NOLINT: constants embed implicitly
    if (!c.is_zero()) coeffs_.push_back(std::move(c));
  }
  template <std::integral I>
  LambdaPoly(I c) : LambdaPoly(BigRational(c)) {}  // NOLINT
  LambdaPoly(std::initializer_list<BigRational> cs) : coeffs_(cs) { trim(); }
  explicit LambdaPoly(std::vector<BigRational> cs) : coeffs_(std::move(cs)) { trim(); }

  /// The indeterminate λ itself.
  static LambdaPoly lambda() { return LambdaPoly{BigRational(0), BigRational(1)}; }

  /// c·λ^k
  static LambdaPoly monomial(BigRational c, std::size_t k) {
    std::vector<BigRational> cs(k + 1);
    cs[k] = std::move(c);
    return LambdaPoly(std::move(cs));
  }

  const std::vector<BigRational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  /// Degree in λ; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of λ^i (zero past the end).
  BigRational operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigRational(0); }

  BigRational constant_term() const { return (*this)[0]; }

  /// Horner evaluation at λ = at.
  BigRational eval(const BigRational& at) const {
    BigRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  /// Substitution λ → −λ: negates odd-index coefficients.
  LambdaPoly flip_lambda() const {
    LambdaPoly r = *this;
    for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
    return r;
  }

  /// Composition p(q(λ)).
  LambdaPoly compose(const LambdaPoly& q) const {
    LambdaPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + LambdaPoly(*it);
    return acc;
  }

  LambdaPoly& operator+=(const LambdaPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  LambdaPoly& operator-=(const LambdaPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  LambdaPoly& operator*=(const LambdaPoly& o) { return *this = *this * o; }
  LambdaPoly& operator*=(const BigRational& s) {
    if (s.is_zero()) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  LambdaPoly& operator/=(const BigRational& s) { return *this *= s.inverse(); }

  friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
  friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
  friend LambdaPoly operator-(const LambdaPoly& a) {
    LambdaPoly r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return LambdaPoly(std::move(out));
  }
  friend LambdaPoly operator*(LambdaPoly a, const BigRational& s) { return a *= s; }
  friend LambdaPoly operator*(const BigRational& s, LambdaPoly a) { return a *= s; }
  friend LambdaPoly operator/(LambdaPoly a, const BigRational& s) { return a /= s; }

  friend bool operator==(const LambdaPoly& a, const LambdaPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Canonical printer shared by every output path: ascending powers of λ,
  /// zero terms dropped, unit coefficients elided, rationals as "p/q".
  /// Examples: "0", "1 - λ", "-1/2 + 1/2*λ", "2*λ^3".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const auto& c = coeffs_[i];
      if (c.is_zero()) continue;
      BigRational mag = c.sign() < 0 ? -c : c;
      if (first) {
        if (c.sign() < 0) out += "-";
      } else {
        out += c.sign() < 0 ? " - " : " + ";
      }
      first = false;
      if (i == 0) {
        out += mag.to_string();
        continue;
      }
      if (mag != BigRational(1)) out += mag.to_string() + "*";
      out += "λ";
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const LambdaPoly& p) { return os << p.to_string(); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<BigRational> coeffs_;
};

/// Units of ℚ[λ] are exactly the nonzero constants.
inline std::optional<LambdaPoly> try_inverse(const LambdaPoly& p) {
  if (p.degree() != 0) return std::nullopt;
  return LambdaPoly(p[0].inverse());
}

}  // namespace dstir
