#pragma once

// Bounded-range machine verification of the degenerate Stirling identities.
//
// Each identity is scanned over every admissible parameter tuple up to n_max
// in a fixed order (increasing n, then k or p, then r or other selectors, then
// sample points) and both sides are compared exactly: in ℚ[λ] for Symbolic
// mode, in ℚ at each grid point for Sampled mode. The first failing tuple is
// kept as the counterexample.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dstir/basis.hpp"
#include "dstir/factorials.hpp"
#include "dstir/lambda_poly.hpp"
#include "dstir/numbers.hpp"
#include "dstir/rational.hpp"
#include "dstir/series.hpp"

namespace dstir {

enum class IdentityId {
  T1, T2a, T2b, T3, T4, T5a, T5b, T6, T7, T8, T8limit, T9, T10, T10corollary, T12, L11, T13, T14, T15,
  E16, E19, E22, E23_1, E53, E57, RT_exp_log, RT_limits,
  // False variants, kept as expected failures.
  T13probe, E53probe,
};

enum class ModeKind { Symbolic, Sampled };

inline std::string_view to_string(ModeKind m) { return m == ModeKind::Symbolic ? "symbolic" : "sampled"; }

/// One row of the scan-range ledger.
struct IdentityInfo {
  IdentityId id;
  std::string_view tag;
  ModeKind default_mode;
  bool probe;  // expected to fail
  std::string_view statement;
  std::string_view range;
};

// clang-format off
inline constexpr std::array<IdentityInfo, 29> kIdentities = {{
  {IdentityId::T1, "T1", ModeKind::Symbolic, false,
   "sum_{j=k}^{n} C(n,j) S2(j,k) (1)_{n-j,l} = S2(n+1,k+1) + n l S2(n,k+1)", "0<=k<=n<=N"},
  {IdentityId::T2a, "T2a", ModeKind::Symbolic, false,
   "sum_l C(n,l) S2(l,k) (r)_{n-l,l} = sum_l C(l,k) S2(n,l) (r)_{l-k}", "0<=k<=n<=N, 0<=r<=4"},
  {IdentityId::T2b, "T2b", ModeKind::Symbolic, false,
   "(x+r)_{n,l} = sum_k S2^(r)(n+r,k+r) (x)_k, sum route vs basis conversion", "0<=k<=n<=N, 0<=r<=4"},
  {IdentityId::T3, "T3", ModeKind::Symbolic, false,
   "(1/n!) sum_l C(l,k) <1>_{l-k,l} [n l]_l = sum_l [l k]_l / l!", "0<=k<=n<=N"},
  {IdentityId::T4, "T4", ModeKind::Symbolic, false,
   "S1(n,k) + n S1(n-1,k) = sum_l C(l,k) S1(n,l) (1)_{l-k,l}", "0<=k<=n<=N"},
  {IdentityId::T5a, "T5a", ModeKind::Symbolic, false,
   "three sums agree, alpha rational", "0<=k<=n<=N, alpha in {2/3,-5/2,3}"},
  {IdentityId::T5b, "T5b", ModeKind::Symbolic, false,
   "three sums agree, alpha = l", "0<=k<=n<=N"},
  {IdentityId::T6, "T6", ModeKind::Symbolic, false,
   "[n+1 k]_{-l}/(n+1)! = sum_{l=k-1}^{n} C(n,l) S1(l+1,k)/(l+1)!", "1<=k<=n+1, n<=N"},
  {IdentityId::T7, "T7", ModeKind::Sampled, false,
   "S1(n+1,k+1) = l^{n-1}/(k+1) (n+1)! sum l^{-l}/(n-l)! (1)_{n-l,1/l} S1(l+1,k)/(l+1)!", "0<=k<=n<=N"},
  {IdentityId::T8, "T8", ModeKind::Symbolic, false,
   "S1(n+1,p+1) = sum_k sum_l (-1)^{k-l} C(k,l) C(n,k) (k-l)! S1(l,p) (l)_{n-k}", "0<=p<=n<=N"},
  {IdentityId::T8limit, "T8limit", ModeKind::Symbolic, false,
   "S1(n+1,p+1)|_{l=0} = sum_l (-1)^{n-l} C(n,l) (n-l)! S1_classical(l,p)", "0<=p<=n<=N"},
  {IdentityId::T9, "T9", ModeKind::Symbolic, false,
   "sum_k [k p]_{-l}/k! = sum_k C(n,k) S1(k,p)/k!", "0<=p<=n<=N"},
  {IdentityId::T10, "T10", ModeKind::Symbolic, false,
   "x^p sum_k C(n,k) S2(k,p) phi_{n-k}(x) = sum_k C(k,p) S2(n,k) x^k, per x-coefficient and at x=1", "0<=p<=n<=N"},
  {IdentityId::T10corollary, "T10corollary", ModeKind::Symbolic, false,
   "sum_k k S2(n,k) = sum_{k<n} C(n,k) phi_k (1)_{n-k,l}", "1<=n<=N"},
  {IdentityId::T12, "T12", ModeKind::Sampled, false,
   "L_{n-p,-l}^{(p-1)}(-x) = p!/n! sum_k C(k,p) (1)_{k-p,l} L(n,k) (x/(1+lx))^{k-p}", "0<=p<=n<=N on the (l,x) grid"},
  {IdentityId::L11, "L11", ModeKind::Symbolic, false,
   "[S1(n,k)] and [S2(n,k)] are mutually inverse", "0<=k<=n<=N, both products"},
  {IdentityId::T13, "T13", ModeKind::Symbolic, false,
   "(-1)^n S2_{-l}(n,p) = sum_k L(k,p) (-1)^k S2(n,k)", "0<=p<=n<=N"},
  {IdentityId::T14, "T14", ModeKind::Symbolic, false,
   "S2_{-l}(n,p) = (-1)^p sum_k S2(k,p) (-1)^k (p)_{n-k,-l} C(n,k)", "0<=p<=n<=N"},
  {IdentityId::T15, "T15", ModeKind::Symbolic, false,
   "[n p]_{-l} = sum_k S1(k,p) L(n,k)", "0<=p<=n<=N"},
  {IdentityId::E16, "E16", ModeKind::Symbolic, false,
   "sum_j C(n,j) S2(j,k) (1)_{n-j,l} = (k+1) S2(n,k+1) + S2(n,k)", "0<=k<=n<=N"},
  {IdentityId::E19, "E19", ModeKind::Symbolic, false,
   "S2(n+1,k+1) + n l S2(n,k+1) = S2(n,k) + (k+1) S2(n,k+1)", "0<=k<=n<=N"},
  {IdentityId::E22, "E22", ModeKind::Symbolic, false,
   "S2^(r)(n+r,k+r): generating function vs sum", "0<=k<=n<=N, 0<=r<=4"},
  {IdentityId::E23_1, "E23_1", ModeKind::Symbolic, false,
   "(x+r)_{n,l} = sum_k S2^(r)(n+r,k+r) (x)_k, generating function vs basis conversion", "0<=k<=n<=N, 0<=r<=4"},
  {IdentityId::E53, "E53", ModeKind::Symbolic, false,
   "L(n,m) = sum_k [n k]_l S2_{-l}(k,m), right side lambda-free", "0<=m<=n<=N"},
  {IdentityId::E57, "E57", ModeKind::Symbolic, false,
   "sum_k L(k,p) (-1)^k S2(n,k) = (-1)^p sum_k S2(k,p) (-1)^{n-k} (p)_{n-k,-l} C(n,k)", "0<=p<=n<=N"},
  {IdentityId::RT_exp_log, "RT_exp_log", ModeKind::Symbolic, false,
   "e_l(log_l(1+t)) = 1+t, log_l(e_l(t)) = t, inverse(e_l(t)-1) = log_l(1+t)", "order N+2"},
  {IdentityId::RT_limits, "RT_limits", ModeKind::Symbolic, false,
   "S1(n,k)|_{l=0} = S1_classical(n,k), S2(n,k)|_{l=0} = S2_classical(n,k)", "0<=k<=n<=N"},
  {IdentityId::T13probe, "T13probe", ModeKind::Symbolic, true,
   "variant (-1)^n S2_{-l}(n,p) = sum_k L(n,k) (-1)^k S2(n,k); expected to fail", "0<=p<=n<=N"},
  {IdentityId::E53probe, "E53probe", ModeKind::Symbolic, true,
   "variant L(n,m) = sum_k [n k]_l S2_l(k,m); expected to fail", "0<=m<=n<=N"},
}};
// clang-format on

inline const IdentityInfo& info(IdentityId id) {
  for (const auto& i : kIdentities)
    if (i.id == id) return i;
  throw std::invalid_argument("unknown identity id");
}

inline std::string_view to_string(IdentityId id) { return info(id).tag; }

inline std::optional<IdentityId> parse_identity(std::string_view tag) {
  for (const auto& i : kIdentities)
    if (i.tag == tag) return i.id;
  return std::nullopt;
}

/// Fixed sample grids for Sampled mode, optionally extended by seeded random
/// rationals. Identities filter the grid against their own singular loci.
struct CheckMode {
  ModeKind kind = ModeKind::Symbolic;
  std::uint64_t seed = 20240611;
  std::size_t sample_count = 2;  // random points appended to each grid
  std::vector<BigRational> lambda_grid = default_lambda_grid();
  std::vector<BigRational> x_grid = default_x_grid();

  static std::vector<BigRational> default_lambda_grid() {
    return {BigRational(1, 2), BigRational(-1, 2), BigRational(1, 3), BigRational(-1, 3), BigRational(2, 5),
            BigRational(-3, 7)};
  }
  static std::vector<BigRational> default_x_grid() {
    return {BigRational(1, 2), BigRational(-1, 3), BigRational(2), BigRational(5, 4)};
  }

  static CheckMode symbolic() { return {}; }
  static CheckMode sampled(std::uint64_t seed = 20240611, std::size_t count = 2) {
    CheckMode m;
    m.kind = ModeKind::Sampled;
    m.seed = seed;
    m.sample_count = count;
    return m;
  }

  /// Grid points plus seeded random nonzero rationals p/q, |p| <= 9, 1 <= q <= 9.
  std::vector<BigRational> lambda_samples() const { return extend(lambda_grid, seed); }
  std::vector<BigRational> x_samples() const { return extend(x_grid, seed ^ 0x9e3779b97f4a7c15ULL); }

 private:
  std::vector<BigRational> extend(std::vector<BigRational> grid, std::uint64_t s) const {
    std::mt19937_64 rng(s);
    for (std::size_t i = 0; i < sample_count; ++i) {
      long num = static_cast<long>(rng() % 18) - 9;
      if (num >= 0) ++num;  // skip zero
      long den = static_cast<long>(rng() % 9) + 1;
      BigRational v(num, den);
      if (std::find(grid.begin(), grid.end(), v) == grid.end()) grid.push_back(v);
    }
    return grid;
  }
};

struct Param {
  std::string name;
  BigRational value;
  friend bool operator==(const Param&, const Param&) = default;
};

struct Counterexample {
  std::vector<Param> params;
  std::string lhs;
  std::string rhs;
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

enum class Status { Pass, Fail };

struct IdentityReport {
  IdentityId id{};
  ModeKind mode = ModeKind::Symbolic;
  std::size_t n_max = 0;
  std::map<std::string, long> bounds;  // per-identity extra bounds (r_max, order, ...)
  Status status = Status::Pass;
  std::optional<Counterexample> counterexample;
  std::size_t cases = 0;  // comparisons performed
  bool probe = false;

  bool passed() const { return status == Status::Pass; }
  /// Probes are expected to fail; everything else must pass.
  bool as_expected() const { return probe ? !passed() : passed(); }
  friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

/// Tables shared by every check at a given n_max (two extra rows for n+1 indices).
struct Tables {
  explicit Tables(std::size_t n_max)
      : n_max(n_max),
        s1(StirlingKind::S1Lambda, n_max + 2),
        s2(StirlingKind::S2Lambda, n_max + 2),
        us1(StirlingKind::UnsignedS1Lambda, n_max + 2),
        s1c(StirlingKind::S1Classical, n_max + 2),
        s2c(StirlingKind::S2Classical, n_max + 2),
        s1_neg(s1.flipped()),
        s2_neg(s2.flipped()),
        us1_neg(us1.flipped()) {
    for (std::size_t n = 0; n <= n_max + 2; ++n) {
      std::vector<LambdaPoly> c(n + 1);
      for (std::size_t k = 0; k <= n; ++k) c[k] = s2.at(static_cast<long>(n), static_cast<long>(k));
      bell.emplace_back(Basis::Monomial, std::move(c));
    }
  }

  std::size_t n_max;
  Triangle s1, s2, us1, s1c, s2c;
  Triangle s1_neg, s2_neg, us1_neg;
  std::vector<BasisPoly> bell;  // φ_{n,λ}(x), monomial basis
};

namespace detail {

inline LambdaPoly lam() { return LambdaPoly::lambda(); }
inline BigRational C(long n, long k) { return binomial(n, k); }
inline BigRational fact(long n) { return factorial(static_cast<unsigned>(n)); }
inline BigRational sign(long e) { return (e % 2 == 0) ? BigRational(1) : BigRational(-1); }
inline unsigned u(long v) { return static_cast<unsigned>(v); }

/// Records comparisons and keeps the first failure.
class Comparator {
 public:
  Comparator(IdentityReport& report, std::vector<BigRational> lambda_samples)
      : report_(report), samples_(std::move(lambda_samples)) {}

  bool sampled() const { return report_.mode == ModeKind::Sampled; }
  const std::vector<BigRational>& lambda_samples() const { return samples_; }

  /// Compare two ℚ[λ] values; in Sampled mode at every λ sample.
  /// Returns false once a failure has been recorded.
  bool expect(std::vector<Param> params, const LambdaPoly& lhs, const LambdaPoly& rhs) {
    if (!sampled()) {
      ++report_.cases;
      if (lhs == rhs) return true;
      return fail(std::move(params), lhs.to_string(), rhs.to_string());
    }
    for (const auto& l : samples_) {
      auto p = params;
      p.push_back({"lambda", l});
      if (!expect_value(std::move(p), lhs.eval(l), rhs.eval(l))) return false;
    }
    return true;
  }

  bool expect_value(std::vector<Param> params, const BigRational& lhs, const BigRational& rhs) {
    ++report_.cases;
    if (lhs == rhs) return true;
    return fail(std::move(params), lhs.to_string(), rhs.to_string());
  }

  /// Record a failure that is not a plain two-sided comparison.
  bool fail(std::vector<Param> params, std::string lhs, std::string rhs) {
    report_.status = Status::Fail;
    report_.counterexample = Counterexample{std::move(params), std::move(lhs), std::move(rhs)};
    return false;
  }

 private:
  IdentityReport& report_;
  std::vector<BigRational> samples_;
};

using P = std::vector<Param>;

inline LambdaPoly t1_lhs(const Tables& t, long n, long k) {
  LambdaPoly acc;
  for (long j = k; j <= n; ++j) acc += t.s2(j, k) * gff_sym(1, u(n - j)) * C(n, j);
  return acc;
}

inline void check_t1(const Tables& t, long N, Comparator& c) {
  for (long n = 0; n <= N; ++n)
    for (long k = 0; k <= n; ++k) {
      auto rhs = t.s2(n + 1, k + 1) + lam() * BigRational(n) * t.s2(n, k + 1);
      if (!c.expect(P{{"n", n}, {"k", k}}, t1_lhs(t, n, k), rhs)) return;
    }
}

inline void check_e16(const Tables& t, long N, Comparator& c) {
  for (long n = 0; n <= N; ++n)
    for (long k = 0; k <= n; ++k) {
      auto rhs = t.s2(n, k + 1) * BigRational(k + 1) + t.s2(n, k);
      if (!c.expect(P{{"n", n}, {"k", k}}, t1_lhs(t, n, k), rhs)) return;
    }
}

inline void check_e19(const Tables& t, long N, Comparator& c) {
  for (long n = 0; n <= N; ++n)
    for (long k = 0; k <= n; ++k) {
      auto lhs = t.s2(n + 1, k + 1) + lam() * BigRational(n) * t.s2(n, k + 1);
      auto rhs = t.s2(n, k) + t.s2(n, k + 1) * BigRational(k + 1);
      if (!c.expect(P{{"n", n}, {"k", k}}, lhs, rhs)) return;
    }
}

constexpr long kRMax = 4;

inline void check_t2a(const Tables& t, long N, Comparator& c) {
  for (long n = 0; n <= N; ++n)
    for (long k = 0; k <= n; ++k)
      for (long r = 0; r <= kRMax; ++r)
        if (!c.expect(P{{"n", n}, {"k", k}, {"r", r}}, r_stirling2(n, k, u(r), t.s2),
                      r_stirling2_second_sum(n, k, u(r), t.s2)))
          return;
}

/// Falling-basis coefficients of (x + r)_{n,λ}, built from its defining product.
inline BasisPoly shifted_gff_in_falling(long n, long r) {
  XPoly p{LambdaPoly(1)};
  for (long j = 0; j < n; ++j) p = times_linear(p, LambdaPoly(r) - lam() * BigRational(j));
  return from_monomial(std::move(p), Basis::Falling);
}

inline void check_t2b(const Tables& t, long N, Comparator& c) {
  for (long n = 0; n <= N; ++n) {
    std::vector<BasisPoly> conv;
    for (long r = 0; r <= kRMax; ++r) conv.push_back(shifted_gff_in_falling(n, r));
    for (long k = 0; k <= n; ++k)
      for (long r = 0; r <= kRMax; ++r)
        if (!c.expect(P{{"n", n}, {"k", k}, {"r", r}}, conv[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)],
                      r_stirling2(n, k, u(r), t.s2)))
          return;
  }
}

/// Generating-function values S^{(r)}(n+r,k+r) for all k, r, n <= N: [r][k] -> series.
inline std::vector<std::vector<TruncatedSeries<LambdaPoly>>> r_stirling_series_table(long N) {
  std::vector<std::vector<TruncatedSeries<LambdaPoly>>> table;
  for (long r = 0; r <= kRMax; ++r) {
    std::vector<TruncatedSeries<LambdaPoly>> row;
    for (long k = 0; k <= N; ++k) row.push_back(r_stirling2_series(k, u(r), static_cast<std::size_t>(N)));
    table.push_back(std::move(row));
  }
  return table;
}

inline void check_e22(const Tables& t, long N, Comparator& c) {
  auto gf = r_stirling_series_table(N);
  for (long n = 0; n <= N; ++n)
    for (long k = 0; k <= n; ++k)
      for (long r = 0; r <= kRMax; ++r) {
        auto lhs = gf[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)].egf(static_cast<std::size_t>(n));
        if (!c.expect(P{{"n", n}, {"k", k}, {"r", r}}, lhs, r_stirling2(n, k, u(r), t.s2))) return;
      }
}

inline void check_e23_1(long N, Comparator& c) {
  auto gf = r_stirling_series_table(N);
  for (long n = 0; n <= N; ++n) {
    std::vector<BasisPoly> conv;
    for (long r = 0; r <= kRMax; ++r) conv.push_back(shifted_gff_in_falling(n, r));
    for (long k = 0; k <= n; ++k)
      for (long r = 0; r <= kRMax; ++r) {
        auto rhs = gf[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)].egf(static_cast<std::size_t>(n));
        if (!c.expect(P{{"n", n}, {"k", k}, {"r", r}}, conv[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)], rhs))
          return;
      }
  }
}

inline void check_t3(const Tables& t, long N, Comparator& c) {
  for (long n = 0; n <= N; ++n)
    for (long k = 0; k <= n; ++k) {
      LambdaPoly lhs, rhs;
      for (long l = k; l <= n; ++l) lhs += t.us1(n, l) * rff_sym(1, u(l - k)) * C(l, k);
      lhs /= fact(n);
      for (long l = k; l <= n; ++l) rhs += t.us1(l, k) / fact(l);
      if (!c.expect(P{{"n", n}, {"k", k}}, lhs, rhs)) return;
    }
}

inline void check_t4(const Tables& t, long N, Comparator& c) {
  for (long n = 0; n <= N; ++n)
    for (long k = 0; k <= n; ++k) {
      auto lhs = t.s1(n, k) + t.s1(n - 1, k) * BigRational(n);
      LambdaPoly rhs;
      for (long l = k; l <= n; ++l) rhs += t.s1(n, l) * gff_sym(1, u(l - k)) * C(l, k);
      if (!c.expect(P{{"n", n}, {"k", k}}, lhs, rhs)) return;
    }
}

struct AlphaSample {
  LambdaPoly value;
  std::vector<Param> params;
};

/// The three sums of the α-binomial identity; α may be a constant or involve λ.
inline void check_t5(const Tables& t, long N, const std::vector<AlphaSample>& alphas, Comparator& c) {
  for (long n = 0; n <= N; ++n)
    for (long k = 0; k <= n; ++k)
      for (const auto& [alpha, alpha_params] : alphas) {
        LambdaPoly a, b, d;
        for (long l = k; l <= n; ++l)
          a += t.s1(n, l) * generalized_falling(alpha, u(l - k), lam()) * C(l, k);
        for (long l = k; l <= n; ++l)
          b += t.s1(l, k) * binom_sym(alpha, u(n - l)) * (C(n, l) * fact(n - l));
        for (long l = 0; l <= n - k; ++l)
          d += t.s1(n - l, k) * binom_sym(alpha, u(l)) * (C(n, l) * fact(l));
        auto params = P{{"n", n}, {"k", k}};
        params.insert(params.end(), alpha_params.begin(), alpha_params.end());
        auto first = params, second = params;
        first.push_back({"form", 1});
        second.push_back({"form", 2});
        if (!c.expect(first, a, b)) return;
        if (!c.expect(second, b, d)) return;
      }
}

inline std::vector<BigRational> t5_alpha_samples() { return {BigRational(2, 3), BigRational(-5, 2), BigRational(3)}; }

inline void check_t5a(const Tables& t, long N, Comparator& c) {
  std::vector<AlphaSample> alphas;
  for (const auto& a : t5_alpha_samples()) alphas.push_back({LambdaPoly(a), {{"alpha", a}}});
  check_t5(t, N, alphas, c);
}

inline void check_t5b(const Tables& t, long N, Comparator& c) { check_t5(t, N, {{lam(), {}}}, c); }

inline void check_t6(const Tables& t, long N, Comparator& c) {
  for (long n = 0; n <= N; ++n)
    for (long k = 1; k <= n + 1; ++k) {
      auto lhs = t.us1_neg(n + 1, k) / fact(n + 1);
      LambdaPoly rhs;
      for (long l = k - 1; l <= n; ++l) rhs += t.s1(l + 1, k) * (C(n, l) / fact(l + 1));
      if (!c.expect(P{{"n", n}, {"k", k}}, lhs, rhs)) return;
    }
}

/// λ^{m−1}(1)_{m,1/λ} rewritten as the polynomial ∏_{j=1}^{m−1}(λ − j), m >= 1.
inline LambdaPoly scaled_unit_gff_inverse_step(long m) { return deg_log_egf(static_cast<std::size_t>(m)); }

inline void check_t7(const Tables& t, long N, Comparator& c) {
  if (!c.sampled()) {
    for (long n = 0; n <= N; ++n)
      for (long k = 0; k <= n; ++k) {
        // λ^{n−1}·λ^{−l}·(1)_{n−l,1/λ} = λ^{(n−l)−1}(1)_{n−l,1/λ}
        LambdaPoly sum;
        for (long l = k - 1; l <= n - 1; ++l)
          sum += scaled_unit_gff_inverse_step(n - l) * t.s1(l + 1, k) / (fact(n - l) * fact(l + 1));
        auto rhs = sum * (fact(n + 1) / BigRational(k + 1));
        if (!c.expect(P{{"n", n}, {"k", k}}, t.s1(n + 1, k + 1), rhs)) return;
      }
    return;
  }
  for (long n = 0; n <= N; ++n)
    for (long k = 0; k <= n; ++k)
      for (const auto& l : c.lambda_samples()) {
        if (l.is_zero()) continue;  // 1/λ appears
        BigRational sum;
        for (long j = k - 1; j <= n - 1; ++j)
          sum += pow(l, -j) / fact(n - j) * gff(1, u(n - j), l.inverse()) * t.s1(j + 1, k).eval(l) / fact(j + 1);
        auto rhs = pow(l, n - 1) / BigRational(k + 1) * fact(n + 1) * sum;
        if (!c.expect_value(P{{"n", n}, {"k", k}, {"lambda", l}}, t.s1(n + 1, k + 1).eval(l), rhs)) return;
      }
}

inline void check_t8(const Tables& t, long N, Comparator& c) {
  for (long n = 0; n <= N; ++n)
    for (long p = 0; p <= n; ++p) {
      LambdaPoly rhs;
      for (long k = p; k <= n; ++k) {
        auto lam_falling = generalized_falling(lam(), u(n - k), LambdaPoly(1));  // (λ)_{n−k}
        for (long l = p; l <= k; ++l)
          rhs += t.s1(l, p) * lam_falling * (sign(k - l) * C(k, l) * C(n, k) * fact(k - l));
      }
      if (!c.expect(P{{"n", n}, {"p", p}}, t.s1(n + 1, p + 1), rhs)) return;
    }
}

inline void check_t8limit(const Tables& t, long N, Comparator& c) {
  for (long n = 0; n <= N; ++n)
    for (long p = 0; p <= n; ++p) {
      BigRational rhs;
      for (long l = p; l <= n; ++l) rhs += sign(n - l) * C(n, l) * fact(n - l) * t.s1c(l, p).constant_term();
      if (!c.expect_value(P{{"n", n}, {"p", p}}, t.s1(n + 1, p + 1).eval(0), rhs)) return;
    }
}

inline void check_t9(const Tables& t, long N, Comparator& c) {
  for (long n = 0; n <= N; ++n)
    for (long p = 0; p <= n; ++p) {
      LambdaPoly lhs, rhs;
      for (long k = p; k <= n; ++k) lhs += t.us1_neg(k, p) / fact(k);
      for (long k = p; k <= n; ++k) rhs += t.s1(k, p) * (C(n, k) / fact(k));
      if (!c.expect(P{{"n", n}, {"p", p}}, lhs, rhs)) return;
    }
}

inline void check_t10(const Tables& t, long N, Comparator& c) {
  for (long n = 0; n <= N; ++n)
    for (long p = 0; p <= n; ++p) {
      // Left side: x^p Σ_k C(n,k) S2(k,p) φ_{n−k}(x); right side: Σ_k C(k,p) S2(n,k) x^k.
      XPoly lhs(static_cast<std::size_t>(n + p + 1));
      for (long k = p; k <= n; ++k) {
        auto w = t.s2(k, p) * C(n, k);
        const auto& phi = t.bell[static_cast<std::size_t>(n - k)].coeffs();
        for (std::size_t j = 0; j < phi.size(); ++j) lhs[j + static_cast<std::size_t>(p)] += w * phi[j];
      }
      XPoly rhs(lhs.size());
      for (long k = p; k <= n; ++k) rhs[static_cast<std::size_t>(k)] += t.s2(n, k) * C(k, p);
      for (std::size_t j = 0; j < lhs.size(); ++j)
        if (!c.expect(P{{"n", n}, {"p", p}, {"xdeg", static_cast<long>(j)}}, lhs[j], rhs[j])) return;
      // x = 1 (degenerate Bell numbers)
      LambdaPoly lhs1, rhs1;
      for (const auto& e : lhs) lhs1 += e;
      for (const auto& e : rhs) rhs1 += e;
      if (!c.expect(P{{"n", n}, {"p", p}, {"x", 1}}, lhs1, rhs1)) return;
    }
}

inline void check_t10corollary(const Tables& t, long N, Comparator& c) {
  for (long n = 1; n <= N; ++n) {
    LambdaPoly lhs, rhs;
    for (long k = 1; k <= n; ++k) lhs += t.s2(n, k) * BigRational(k);
    for (long k = 0; k < n; ++k)
      rhs += bell_poly_at(t.bell[static_cast<std::size_t>(k)], 1) * gff_sym(1, u(n - k)) * C(n, k);
    if (!c.expect(P{{"n", n}}, lhs, rhs)) return;
  }
}

inline void check_t12(long N, const std::vector<BigRational>& lambdas, const std::vector<BigRational>& xs,
                      Comparator& c) {
  for (long n = 0; n <= N; ++n)
    for (long p = 0; p <= n; ++p)
      for (const auto& l : lambdas)
        for (const auto& x : xs) {
          if ((BigRational(1) + l * x).is_zero() || (BigRational(1) - l * x).is_zero()) continue;
          const BigRational w = x / (BigRational(1) + l * x);
          auto lhs = laguerre_deg(n - p, BigRational(p - 1), -x, -l);
          BigRational sum;
          for (long k = p; k <= n; ++k) sum += C(k, p) * gff(1, u(k - p), l) * lah(n, k) * pow(w, k - p);
          auto rhs = fact(p) / fact(n) * sum;
          if (!c.expect_value(P{{"n", n}, {"p", p}, {"lambda", l}, {"x", x}}, lhs, rhs)) return;
        }
}

inline void check_l11(const Tables& t, long N, Comparator& c) {
  for (long n = 0; n <= N; ++n)
    for (long k = 0; k <= n; ++k) {
      LambdaPoly a, b;
      for (long j = k; j <= n; ++j) a += t.s1(n, j) * t.s2(j, k);
      for (long j = k; j <= n; ++j) b += t.s2(n, j) * t.s1(j, k);
      const LambdaPoly delta = (n == k) ? LambdaPoly(1) : LambdaPoly();
      if (!c.expect(P{{"n", n}, {"k", k}, {"product", 1}}, a, delta)) return;
      if (!c.expect(P{{"n", n}, {"k", k}, {"product", 2}}, b, delta)) return;
    }
}

inline void check_t13(const Tables& t, long N, bool variant, Comparator& c) {
  for (long n = 0; n <= N; ++n)
    for (long p = 0; p <= n; ++p) {
      auto lhs = t.s2_neg(n, p) * sign(n);
      LambdaPoly rhs;
      for (long k = p; k <= n; ++k) rhs += t.s2(n, k) * (sign(k) * (variant ? lah(n, k) : lah(k, p)));
      if (!c.expect(P{{"n", n}, {"p", p}}, lhs, rhs)) return;
    }
}

/// (−1)^p Σ_k S2(k,p)(−1)^{k} (p)_{n−k,−λ} C(n,k), the common core of T14 and E57.
inline LambdaPoly t14_sum(const Tables& t, long n, long p) {
  LambdaPoly acc;
  for (long k = p; k <= n; ++k) acc += t.s2(k, p) * rff_sym(BigRational(p), u(n - k)) * (sign(k) * C(n, k));
  return acc * sign(p);
}

inline void check_t14(const Tables& t, long N, Comparator& c) {
  for (long n = 0; n <= N; ++n)
    for (long p = 0; p <= n; ++p)
      if (!c.expect(P{{"n", n}, {"p", p}}, t.s2_neg(n, p), t14_sum(t, n, p))) return;
}

inline void check_e57(const Tables& t, long N, Comparator& c) {
  for (long n = 0; n <= N; ++n)
    for (long p = 0; p <= n; ++p) {
      LambdaPoly lhs;
      for (long k = p; k <= n; ++k) lhs += t.s2(n, k) * (lah(k, p) * sign(k));
      // (−1)^{n−k} = (−1)^n (−1)^k
      if (!c.expect(P{{"n", n}, {"p", p}}, lhs, t14_sum(t, n, p) * sign(n))) return;
    }
}

inline void check_t15(const Tables& t, long N, Comparator& c) {
  for (long n = 0; n <= N; ++n)
    for (long p = 0; p <= n; ++p) {
      LambdaPoly rhs;
      for (long k = p; k <= n; ++k) rhs += t.s1(k, p) * lah(n, k);
      if (!c.expect(P{{"n", n}, {"p", p}}, t.us1_neg(n, p), rhs)) return;
    }
}

inline void check_e53(const Tables& t, long N, bool variant, Comparator& c) {
  for (long n = 0; n <= N; ++n)
    for (long m = 0; m <= n; ++m) {
      LambdaPoly rhs;
      for (long k = m; k <= n; ++k) rhs += t.us1(n, k) * (variant ? t.s2(k, m) : t.s2_neg(k, m));
      // Equality with the λ-free Lah number already forces deg_λ(rhs) <= 0.
      if (!c.expect(P{{"n", n}, {"l", m}}, LambdaPoly(lah(n, m)), rhs)) return;
    }
}

inline void check_rt_exp_log(long N, Comparator& c) {
  using S = TruncatedSeries<LambdaPoly>;
  const auto order = static_cast<std::size_t>(N + 2);
  auto e = deg_exp(LambdaPoly(1), order);
  auto e_minus_1 = e - S::one(order);
  auto log1p = deg_log(order);
  auto one_plus_t = S::one(order) + S::variable(order);
  const std::array<std::pair<S, S>, 3> pairs = {{
      {compose(e, log1p), one_plus_t},
      {compose(log1p, e_minus_1), S::variable(order)},
      {compositional_inverse(e_minus_1), log1p},
  }};
  for (std::size_t i = 0; i <= order; ++i)
    for (std::size_t w = 0; w < pairs.size(); ++w)
      if (!c.expect(P{{"coeff", static_cast<long>(i)}, {"which", static_cast<long>(w + 1)}}, pairs[w].first[i],
                    pairs[w].second[i]))
        return;
}

inline void check_rt_limits(const Tables& t, long N, Comparator& c) {
  for (long n = 0; n <= N; ++n)
    for (long k = 0; k <= n; ++k) {
      if (!c.expect_value(P{{"n", n}, {"k", k}, {"kind", 1}}, t.s1(n, k).eval(0), t.s1c(n, k).constant_term()))
        return;
      if (!c.expect_value(P{{"n", n}, {"k", k}, {"kind", 2}}, t.s2(n, k).eval(0), t.s2c(n, k).constant_term()))
        return;
    }
}

}  // namespace detail

/// Check one identity against prebuilt tables (tables.n_max must be >= n_max).
///
/// T12 has no symbolic route (both sides are rational functions of x), so it
/// always runs Sampled; the report's mode records what actually ran.
inline IdentityReport check(IdentityId id, const Tables& tables, std::size_t n_max, const CheckMode& mode) {
  if (tables.n_max < n_max) throw std::invalid_argument("check: tables are smaller than n_max");
  IdentityReport rep;
  rep.id = id;
  rep.n_max = n_max;
  rep.probe = info(id).probe;
  rep.mode = (id == IdentityId::T12) ? ModeKind::Sampled : mode.kind;
  detail::Comparator c(rep, mode.lambda_samples());
  const auto& t = tables;
  const long N = static_cast<long>(n_max);
  using I = IdentityId;
  switch (id) {
    case I::T1: detail::check_t1(t, N, c); break;
    case I::T2a: rep.bounds["r_max"] = detail::kRMax; detail::check_t2a(t, N, c); break;
    case I::T2b: rep.bounds["r_max"] = detail::kRMax; detail::check_t2b(t, N, c); break;
    case I::T3: detail::check_t3(t, N, c); break;
    case I::T4: detail::check_t4(t, N, c); break;
    case I::T5a: detail::check_t5a(t, N, c); break;
    case I::T5b: detail::check_t5b(t, N, c); break;
    case I::T6: detail::check_t6(t, N, c); break;
    case I::T7: detail::check_t7(t, N, c); break;
    case I::T8: detail::check_t8(t, N, c); break;
    case I::T8limit: detail::check_t8limit(t, N, c); break;
    case I::T9: detail::check_t9(t, N, c); break;
    case I::T10: detail::check_t10(t, N, c); break;
    case I::T10corollary: detail::check_t10corollary(t, N, c); break;
    case I::T12: detail::check_t12(N, mode.lambda_samples(), mode.x_samples(), c); break;
    case I::L11: detail::check_l11(t, N, c); break;
    case I::T13: detail::check_t13(t, N, false, c); break;
    case I::T13probe: detail::check_t13(t, N, true, c); break;
    case I::T14: detail::check_t14(t, N, c); break;
    case I::T15: detail::check_t15(t, N, c); break;
    case I::E16: detail::check_e16(t, N, c); break;
    case I::E19: detail::check_e19(t, N, c); break;
    case I::E22: rep.bounds["r_max"] = detail::kRMax; detail::check_e22(t, N, c); break;
    case I::E23_1: rep.bounds["r_max"] = detail::kRMax; detail::check_e23_1(N, c); break;
    case I::E53: detail::check_e53(t, N, false, c); break;
    case I::E53probe: detail::check_e53(t, N, true, c); break;
    case I::E57: detail::check_e57(t, N, c); break;
    case I::RT_exp_log: rep.bounds["order"] = N + 2; detail::check_rt_exp_log(N, c); break;
    case I::RT_limits: detail::check_rt_limits(t, N, c); break;
  }
  return rep;
}

inline IdentityReport check(IdentityId id, std::size_t n_max, const CheckMode& mode) {
  return check(id, Tables(n_max), n_max, mode);
}

/// How check_all picks each identity's mode.
enum class ModeRequest { Defaults, Symbolic, Sampled };

inline CheckMode mode_for(IdentityId id, ModeRequest req, std::uint64_t seed) {
  ModeKind kind = req == ModeRequest::Defaults   ? info(id).default_mode
                  : req == ModeRequest::Symbolic ? ModeKind::Symbolic
                                                 : ModeKind::Sampled;
  auto m = CheckMode::sampled(seed);
  m.kind = kind;
  return m;
}

/// Run the given identities (all when empty). Checks run concurrently over
/// shared read-only tables; reports come back in the order requested.
inline std::vector<IdentityReport> check_many(std::vector<IdentityId> ids, std::size_t n_max, ModeRequest req,
                                              std::uint64_t seed) {
  if (ids.empty())
    for (const auto& i : kIdentities) ids.push_back(i.id);
  const Tables tables(n_max);
  std::vector<std::future<IdentityReport>> pending;
  pending.reserve(ids.size());
  for (auto id : ids)
    pending.push_back(std::async(std::launch::async, [&tables, id, n_max, req, seed] {
      return check(id, tables, n_max, mode_for(id, req, seed));
    }));
  std::vector<IdentityReport> out;
  out.reserve(ids.size());
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

inline std::vector<IdentityReport> check_all(std::size_t n_max, ModeRequest req = ModeRequest::Defaults,
                                             std::uint64_t seed = CheckMode{}.seed) {
  return check_many({}, n_max, req, seed);
}

}  // namespace dstir
