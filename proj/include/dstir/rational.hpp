#pragma once

// Arbitrary-precision rational scalar. Thin value wrapper over GMP's mpq_class;
// every operation leaves the value in lowest terms with a positive denominator.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace dstir {

class BigRational {
 public:
  BigRational() = default;
  template <std::integral I>
  BigRational(I v)  // NOLINT: implicit from integers
      : v_(std::is_signed_v<I> ? mpq_class(static_cast<long>(v)) : mpq_class(static_cast<unsigned long>(v))) {}
  BigRational(long num, long den) {
    if (den == 0) throw std::domain_error("BigRational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit BigRational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  explicit BigRational(const mpz_class& v) : v_(v) {}

  /// Parses "p/q" or an integer string (optional leading sign). Decimals are
  /// rejected so that nothing is ever silently inexact.
  static std::optional<BigRational> parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    auto slash = text.find('/');
    auto num_text = text.substr(0, slash);
    if (!is_integer_text(num_text)) return std::nullopt;
    mpz_class num(std::string(num_text[0] == '+' ? num_text.substr(1) : num_text), 10);
    mpz_class den = 1;
    if (slash != std::string_view::npos) {
      auto den_text = text.substr(slash + 1);
      if (!is_integer_text(den_text) || den_text[0] == '-' || den_text[0] == '+') return std::nullopt;
      den = mpz_class(std::string(den_text), 10);
      if (den == 0) return std::nullopt;
    }
    mpq_class q(num, den);
    return BigRational(std::move(q));
  }

  const mpq_class& raw() const noexcept { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const noexcept { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const noexcept { return sgn(v_); }

  BigRational inverse() const {
    if (is_zero()) throw std::domain_error("BigRational: inverse of zero");
    return BigRational(mpq_class(1) / v_);
  }

  std::string to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  /// Integer value if it fits in int64.
  std::optional<std::int64_t> to_int64() const {
    if (!is_integer() || !v_.get_num().fits_slong_p()) return std::nullopt;
    return v_.get_num().get_si();
  }

  BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
  BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
  BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
  BigRational& operator/=(const BigRational& o) {
    if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  friend BigRational operator-(const BigRational& a) { return BigRational(mpq_class(-a.v_)); }

  friend bool operator==(const BigRational& a, const BigRational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.to_string(); }

 private:
  static bool is_integer_text(std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  }

  mpq_class v_;
};

/// Integer power; negative exponents invert (zero base with negative exponent throws).
inline BigRational pow(const BigRational& base, long exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  BigRational result = 1, b = base;
  for (auto e = static_cast<unsigned long>(exponent); e != 0; e >>= 1) {
    if (e & 1UL) result *= b;
    if (e > 1) b *= b;
  }
  return result;
}

inline BigRational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return BigRational(f);
}

/// Integer binomial coefficient; zero outside 0 <= k <= n.
inline BigRational binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return BigRational(b);
}

inline std::optional<BigRational> try_inverse(const BigRational& r) {
  if (r.is_zero()) return std::nullopt;
  return r.inverse();
}

}  // namespace dstir
