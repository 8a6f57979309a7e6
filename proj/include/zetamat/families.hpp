#pragma once

#include <gmpxx.h>

#include <vector>

#include "zetamat/matrix.hpp"

namespace zetamat {

/// Cycle type of a permutation: gamma[i-1] = number of cycles of length i.
struct CycleType {
  std::vector<int> gamma;
};

/// Exponents of the two irreducible factors in the parameterized boolean
/// determinant; alpha and beta satisfy the coupled recurrence
/// v_{n+2} = 2 v_n + v_{n+1}.
struct AlphaBeta {
  int n = 0;
  long long alpha = 0;
  long long beta = 0;
};

/// det of the symmetrized chain zeta matrix: n + 1.
mpz_class chain_det_closed_form(int n);

/// Number of permutations of n elements with the given cycle type:
/// n! / (1^g1 g1! 2^g2 g2! ... n^gn gn!).  Throws InvalidCycleType unless
/// sum i * gamma_i = n.
mpz_class gamma_count(int n, const CycleType& t);

/// Number of permutations of n elements with exactly m disjoint cycles
/// (cycles of length 1 included).
mpz_class stirling_cycle_number(int n, int m);

/// Literal evaluation of the alternating double sum
/// sum_i (-1)^(n-i) sum_{types with i cycles} Gamma(n; gamma) 2^(gamma_1);
/// equals n + 1.
mpz_class modified_stirling_sum(int n);

/// True iff the boolean-algebra zeta matrix above the diagonal reproduces
/// the first 2^rank rows of the Pascal triangle modulo 2.
bool pascal_mod2_check(int rank);

/// True iff Z_rank and its symmetrization satisfy the block decompositions
/// Z_r = (Z_{r-1} Z_{r-1}; 0 Z_{r-1}) and frakZ_r = (frakZ_{r-1} Z_{r-1};
/// Z_{r-1}^t frakZ_{r-1}).
bool block_decomposition_check(int rank);

/// Substitutes (1 1; 0 1) for each entry 1 and the 2x2 zero block for each
/// entry 0; maps the rank-r zeta matrix to the rank-(r+1) one.
IntMatrix inflate_2x2(const IntMatrix& z);

/// alpha/beta by the recurrence from the base values alpha_1 = 0, beta_1 = 1,
/// alpha_2 = 2, beta_2 = 1; asserts the closed form
/// alpha_n = (2^n + 2 (-1)^n) / 3 along the way.
AlphaBeta alpha_beta(int n);

/// det of the symmetrized boolean-algebra zeta matrix: 0 for odd n >= 3,
/// 2^alpha_n for even n >= 2, with the small cases det = 2 (n = 0) and
/// det = 3 (n = 1).
mpz_class boolean_det_closed_form(int n);

}  // namespace zetamat
