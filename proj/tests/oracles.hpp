// Independent brute-force oracles used by the unit and acceptance suites.
// Deliberately naive; none of these share code with the library paths they
// cross-check.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "zetamat/matrix.hpp"

namespace oracles {

/// Determinant as the full signed sum over permutations; usable up to n ~ 8.
inline mpz_class leibniz_det(const zetamat::IntMatrix& a) {
  const int n = a.rows();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  mpz_class det = 0;
  do {
    // Sign by counting inversions.
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    mpz_class term = inversions % 2 == 0 ? 1 : -1;
    for (int i = 0; i < n; ++i) term *= a(i, perm[static_cast<std::size_t>(i)]);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

inline zetamat::IntMatrix random_matrix(int n, std::mt19937_64& rng, int lo = -9, int hi = 9) {
  zetamat::IntMatrix m(n, n);
  std::uniform_int_distribution<int> d(lo, hi);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

inline zetamat::IntMatrix random_unipotent_upper(int n, std::mt19937_64& rng, int lo = -9,
                                                 int hi = 9) {
  zetamat::IntMatrix m(n, n);
  std::uniform_int_distribution<int> d(lo, hi);
  for (int i = 0; i < n; ++i) {
    m(i, i) = 1;
    for (int j = i + 1; j < n; ++j) m(i, j) = d(rng);
  }
  return m;
}

}  // namespace oracles
