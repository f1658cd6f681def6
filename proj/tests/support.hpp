#pragma once

// Independent reference computations used as test oracles. None of them call
// into the library code they are compared against.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace testsupport {

// Pascal recurrence extended to every integer top entry:
// C(m, k) = C(m-1, k-1) + C(m-1, k) run upward from m = 0, and
// C(m, k) = C(m+1, k) - C(m, k-1) run downward.
inline mpq_class pascal(long m, long k) {
  if (k < 0) return 0;
  if (k == 0) return 1;
  static std::map<std::pair<long, long>, mpq_class> memo;
  auto key = std::make_pair(m, k);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  mpq_class v;
  if (m == 0) v = 0;
  else if (m > 0) v = pascal(m - 1, k - 1) + pascal(m - 1, k);
  else v = pascal(m + 1, k) - pascal(m, k - 1);
  memo.emplace(key, v);
  return v;
}

using Scalar = mpq_class;
using ScalarMatrix = std::vector<std::vector<Scalar>>;

// Leibniz sum over all permutations with the sign from an inversion count.
inline Scalar leibniz_det(const ScalarMatrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Scalar term = inversions % 2 ? -1 : 1;
    for (int i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Pfaffian as a sum over all permutations, Pf = 1/(2^n n!) sum sgn(s) prod a_{s(2i-1) s(2i)}.
inline Scalar permutation_pf(const ScalarMatrix& a) {
  const int n2 = static_cast<int>(a.size());
  std::vector<int> perm(n2);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n2; ++i)
      for (int j = i + 1; j < n2; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Scalar term = inversions % 2 ? -1 : 1;
    for (int i = 0; i < n2; i += 2) term *= a[perm[i]][perm[i + 1]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  mpz_class norm = 1;
  for (int i = 1; i <= n2 / 2; ++i) norm *= 2 * i;
  return total / norm;
}

inline ScalarMatrix random_skew(int n, std::mt19937_64& rng, int bound = 9) {
  std::uniform_int_distribution<int> d(-bound, bound);
  ScalarMatrix a(n, std::vector<Scalar>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      a[i][j] = Scalar(d(rng), 1 + (d(rng) + bound) % 3);
      a[i][j].canonicalize();
      a[j][i] = -a[i][j];
    }
  return a;
}

// Conjugate of a counting sequence, straight from the definition.
inline std::vector<int> conjugate_by_count(const std::vector<int>& rho) {
  std::vector<int> out;
  for (int i = 1;; ++i) {
    int c = static_cast<int>(std::count_if(rho.begin(), rho.end(), [i](int r) { return r >= i; }));
    if (c == 0) break;
    out.push_back(c);
  }
  return out;
}

}  // namespace testsupport
