#include "zetamat/families.hpp"

#include <functional>
#include <string>

#include "zetamat/errors.hpp"
#include "zetamat/incidence.hpp"
#include "zetamat/poset.hpp"

namespace zetamat {

mpz_class chain_det_closed_form(int n) {
  if (n < 1) throw IndexOutOfRange("n must be positive");
  return n + 1;
}

mpz_class gamma_count(int n, const CycleType& t) {
  if (n < 1) throw IndexOutOfRange("n must be positive");
  long long weighted = 0;
  for (std::size_t i = 0; i < t.gamma.size(); ++i) {
    if (t.gamma[i] < 0) throw InvalidCycleType("negative multiplicity");
    weighted += static_cast<long long>(i + 1) * t.gamma[i];
  }
  if (weighted != n) throw InvalidCycleType("cycle lengths do not sum to n");
  mpz_class num;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(n));
  mpz_class den = 1;
  for (std::size_t i = 0; i < t.gamma.size(); ++i) {
    const int g = t.gamma[i];
    if (g == 0) continue;
    mpz_class ipow, gfac;
    mpz_ui_pow_ui(ipow.get_mpz_t(), static_cast<unsigned long>(i + 1), static_cast<unsigned long>(g));
    mpz_fac_ui(gfac.get_mpz_t(), static_cast<unsigned long>(g));
    den *= ipow * gfac;
  }
  return num / den;
}

namespace {

// Visits every cycle type of S_n (gamma_1..gamma_n with sum i*gamma_i = n).
void for_each_cycle_type(int n, const std::function<void(const CycleType&)>& f) {
  CycleType t;
  t.gamma.assign(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int len, int left) -> void {
    if (left == 0) {
      f(t);
      return;
    }
    if (len > left) return;
    for (int count = 0; count * len <= left; ++count) {
      t.gamma[static_cast<std::size_t>(len - 1)] = count;
      self(self, len + 1, left - count * len);
      t.gamma[static_cast<std::size_t>(len - 1)] = 0;
    }
  };
  rec(rec, 1, n);
}

}  // namespace

mpz_class stirling_cycle_number(int n, int m) {
  if (m < 1 || m > n) throw IndexOutOfRange("need 1 <= m <= n");
  mpz_class sum = 0;
  for_each_cycle_type(n, [&](const CycleType& t) {
    int cycles = 0;
    for (int g : t.gamma) cycles += g;
    if (cycles == m) sum += gamma_count(n, t);
  });
  return sum;
}

mpz_class modified_stirling_sum(int n) {
  if (n < 1) throw IndexOutOfRange("n must be positive");
  mpz_class sum = 0;
  for_each_cycle_type(n, [&](const CycleType& t) {
    int cycles = 0;
    for (int g : t.gamma) cycles += g;
    mpz_class w;
    mpz_ui_pow_ui(w.get_mpz_t(), 2, static_cast<unsigned long>(t.gamma[0]));
    if ((n - cycles) % 2 == 0)
      sum += gamma_count(n, t) * w;
    else
      sum -= gamma_count(n, t) * w;
  });
  return sum;
}

bool pascal_mod2_check(int rank) {
  if (rank < 1) throw IndexOutOfRange("rank must be positive");
  const int n = 1 << rank;
  IntMatrix z = zeta_matrix(boolean_algebra(rank));
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(j - 1),
                   static_cast<unsigned long>(i - 1));
      if (z(i - 1, j - 1) != binom % 2) return false;
    }
  return true;
}

bool block_decomposition_check(int rank) {
  if (rank < 1) throw IndexOutOfRange("rank must be positive");
  const int half = 1 << (rank - 1);
  IntMatrix z = zeta_matrix(boolean_algebra(rank));
  IntMatrix fz = symmetrized(z);
  // Rank 0 blocks: Z_0 = (1), frakZ_0 = (2).
  IntMatrix zprev = rank == 1 ? identity(1) : zeta_matrix(boolean_algebra(rank - 1));
  IntMatrix fzprev = symmetrized(zprev);
  IntMatrix zprev_t = transpose(zprev);
  for (int i = 0; i < half; ++i)
    for (int j = 0; j < half; ++j) {
      if (z(i, j) != zprev(i, j)) return false;
      if (z(i, j + half) != zprev(i, j)) return false;
      if (sgn(z(i + half, j)) != 0) return false;
      if (z(i + half, j + half) != zprev(i, j)) return false;
      if (fz(i, j) != fzprev(i, j)) return false;
      if (fz(i, j + half) != zprev(i, j)) return false;
      if (fz(i + half, j) != zprev_t(i, j)) return false;
      if (fz(i + half, j + half) != fzprev(i, j)) return false;
    }
  return true;
}

IntMatrix inflate_2x2(const IntMatrix& z) {
  IntMatrix out(2 * z.rows(), 2 * z.cols());
  for (int i = 0; i < z.rows(); ++i)
    for (int j = 0; j < z.cols(); ++j) {
      const mpz_class& v = z(i, j);
      if (v != 0 && v != 1) throw ShapeMismatch("inflate_2x2 expects a 0/1 matrix");
      if (v == 1) {
        out(2 * i, 2 * j) = 1;
        out(2 * i, 2 * j + 1) = 1;
        out(2 * i + 1, 2 * j + 1) = 1;
      }
    }
  return out;
}

AlphaBeta alpha_beta(int n) {
  if (n < 1) throw IndexOutOfRange("n must be positive");
  long long a_prev = 0, b_prev = 1;  // n = 1
  long long a_cur = 2, b_cur = 1;    // n = 2
  if (n == 1) {
    a_cur = a_prev;
    b_cur = b_prev;
  }
  for (int k = 3; k <= n; ++k) {
    long long a_next = 2 * a_prev + a_cur;
    long long b_next = 2 * b_prev + b_cur;
    a_prev = a_cur;
    b_prev = b_cur;
    a_cur = a_next;
    b_cur = b_next;
  }
  // Closed form alpha_n = (1/3) 2^n + (2/3) (-1)^n, checked exactly.
  mpz_class closed;
  mpz_ui_pow_ui(closed.get_mpz_t(), 2, static_cast<unsigned long>(n));
  closed += (n % 2 == 0) ? 2 : -2;
  closed /= 3;
  if (closed != static_cast<long>(a_cur))
    throw InternalMismatch("alpha recurrence disagrees with closed form");
  return AlphaBeta{n, a_cur, b_cur};
}

mpz_class boolean_det_closed_form(int n) {
  if (n < 0) throw IndexOutOfRange("n must be nonnegative");
  if (n == 0) return 2;  // frakZ_0 = (2); below the recurrence's range
  if (n % 2 == 1) {
    // Odd rank: the (x - y) factor vanishes at x = y = 1 whenever alpha > 0;
    // at rank 1 the factor is absent and the quadratic gives 3.
    return n == 1 ? 3 : 0;
  }
  AlphaBeta ab = alpha_beta(n);
  mpz_class three_alpha = mpz_class(static_cast<long>(ab.alpha)) * 3;
  mpz_class expect;
  mpz_ui_pow_ui(expect.get_mpz_t(), 2, static_cast<unsigned long>(n));
  if (three_alpha != expect + 2) throw InternalMismatch("alpha_n != (2^n + 2) / 3 at even n");
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(ab.alpha));
  return r;
}

}  // namespace zetamat
