#pragma once

// Test-only brute-force oracles. None of these reuse the library's recurrences,
// series engine or basis machinery.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "dstir/lambda_poly.hpp"
#include "dstir/rational.hpp"

namespace dstir::oracle {

/// Number of set partitions of {1..n} into exactly k blocks, by enumerating
/// restricted growth strings.
inline long count_set_partitions(int n, int k) {
  if (n == 0) return k == 0 ? 1 : 0;
  long count = 0;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int max_block) {
    if (i == n) {
      if (max_block + 1 == k) ++count;
      return;
    }
    for (int b = 0; b <= max_block + 1; ++b) {
      a[static_cast<std::size_t>(i)] = b;
      rec(i + 1, std::max(max_block, b));
    }
  };
  a[0] = 0;
  rec(1, 0);
  return count;
}

inline int cycle_count(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = true;
  }
  return cycles;
}

/// Signed Stirling number of the first kind: (−1)^{n−k}·#{permutations of n with k cycles}.
inline long signed_cycle_count(int n, int k) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  long count = 0;
  do {
    if (cycle_count(perm) == k) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (n == 0) count = (k == 0) ? 1 : 0;
  return ((n - k) % 2 == 0) ? count : -count;
}

/// Lagrange interpolation through (xs[i], ys[i]); returns coefficients in ascending powers.
inline LambdaPoly interpolate(const std::vector<BigRational>& xs, const std::vector<BigRational>& ys) {
  std::vector<BigRational> result(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<BigRational> basis{BigRational(1)};
    BigRational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      std::vector<BigRational> next(basis.size() + 1);
      for (std::size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] += basis[d];
        next[d] -= basis[d] * xs[j];
      }
      basis = std::move(next);
      denom *= xs[i] - xs[j];
    }
    for (std::size_t d = 0; d < basis.size(); ++d) result[d] += basis[d] * ys[i] / denom;
  }
  return LambdaPoly(std::move(result));
}

/// Seeded random rational p/q with |p| <= num_bound, 1 <= q <= den_bound.
inline BigRational random_rational(std::mt19937_64& rng, long num_bound = 20, long den_bound = 12) {
  const long num = static_cast<long>(rng() % static_cast<unsigned long>(2 * num_bound + 1)) - num_bound;
  const long den = static_cast<long>(rng() % static_cast<unsigned long>(den_bound)) + 1;
  return BigRational(num, den);
}

inline LambdaPoly random_lambda_poly(std::mt19937_64& rng, int max_degree = 5) {
  const int deg = static_cast<int>(rng() % static_cast<unsigned long>(max_degree + 1));
  std::vector<BigRational> c;
  for (int i = 0; i <= deg; ++i) c.push_back(random_rational(rng));
  return LambdaPoly(std::move(c));
}

}  // namespace dstir::oracle
