#pragma once

#include <utility>
#include <vector>

#include "zetamat/errors.hpp"

namespace zetamat {

/// Ring hooks required by the fraction-free elimination below.  Specialized
/// for mpz_class, the univariate polynomial ring, and BiPoly.
template <class T>
struct RingOps;

/// Fraction-free (Bareiss) determinant over an integral domain.  Pivots on
/// the first nonzero entry in each column, tracking the sign of row swaps;
/// every division is exact by the Bareiss identity, and RingOps::exact_div
/// is expected to throw if it is not (which would indicate a bug).
template <class T>
T bareiss_det(std::vector<T> m, int n) {
  using Ops = RingOps<T>;
  T prev = Ops::one();
  int sign = 1;
  auto at = [&](int i, int j) -> T& { return m[static_cast<std::size_t>(i) * n + j]; };
  for (int k = 0; k < n - 1; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i) {
      if (!Ops::is_zero(at(i, k))) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return Ops::zero();  // zero column
    if (pivot != k) {
      for (int j = k; j < n; ++j) std::swap(at(k, j), at(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        T num = Ops::sub(Ops::mul(at(i, j), at(k, k)), Ops::mul(at(i, k), at(k, j)));
        at(i, j) = Ops::exact_div(num, prev);
      }
      at(i, k) = Ops::zero();
    }
    prev = at(k, k);
  }
  T d = at(n - 1, n - 1);
  return sign < 0 ? Ops::neg(d) : d;
}

}  // namespace zetamat
