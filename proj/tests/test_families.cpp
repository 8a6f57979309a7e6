#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "zetamat/errors.hpp"
#include "zetamat/families.hpp"
#include "zetamat/incidence.hpp"
#include "zetamat/poset.hpp"

using namespace zetamat;

TEST_CASE("chain determinant closed form") {
  CHECK(chain_det_closed_form(1) == 2);
  CHECK(chain_det_closed_form(2) == 3);
  CHECK(chain_det_closed_form(7) == 8);
  CHECK(det(symmetrized(zeta_matrix(chain(7)))) == 8);
  for (int n = 1; n <= 12; ++n)
    CHECK(det(symmetrized(zeta_matrix(chain(n)))) == chain_det_closed_form(n));
}

namespace {

// Brute-force count of permutations of n with a prescribed cycle type.
int enumerate_by_type(int n, const std::vector<int>& gamma) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  int count = 0;
  do {
    std::vector<int> type(static_cast<std::size_t>(n), 0);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int s = 0; s < n; ++s) {
      if (seen[static_cast<std::size_t>(s)]) continue;
      int len = 0;
      for (int v = s; !seen[static_cast<std::size_t>(v)]; v = perm[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        ++len;
      }
      ++type[static_cast<std::size_t>(len - 1)];
    }
    if (type == gamma) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace

TEST_CASE("gamma counts") {
  CHECK(gamma_count(4, CycleType{{2, 1, 0, 0}}) == 6);
  CHECK(gamma_count(4, CycleType{{2, 1, 0, 0}}) == enumerate_by_type(4, {2, 1, 0, 0}));
  CHECK(gamma_count(3, CycleType{{3, 0, 0}}) == 1);
  CHECK(gamma_count(5, CycleType{{0, 1, 1, 0, 0}}) == enumerate_by_type(5, {0, 1, 1, 0, 0}));
  CHECK_THROWS_AS(gamma_count(4, CycleType{{1, 1, 0, 0}}), InvalidCycleType);
}

TEST_CASE("gamma counts sum to n! over all cycle types") {
  for (int n = 1; n <= 8; ++n) {
    mpz_class total = 0;
    for (int m = 1; m <= n; ++m) total += stirling_cycle_number(n, m);
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
    CHECK(total == fact);
  }
}

TEST_CASE("permutations by cycle count") {
  CHECK(stirling_cycle_number(4, 2) == 11);
  CHECK(stirling_cycle_number(6, 6) == 1);
  CHECK(stirling_cycle_number(5, 1) == 24);
}

TEST_CASE("alternating modified sums") {
  CHECK(modified_stirling_sum(1) == 2);
  CHECK(modified_stirling_sum(3) == 4);
  CHECK(modified_stirling_sum(10) == 11);
  for (int n = 1; n <= 10; ++n) CHECK(modified_stirling_sum(n) == n + 1);
}

TEST_CASE("Pascal triangle mod 2 structure") {
  CHECK(pascal_mod2_check(1));
  CHECK(pascal_mod2_check(2));
  CHECK(pascal_mod2_check(5));
}

TEST_CASE("block decomposition and inflation") {
  for (int rank = 1; rank <= 8; ++rank) CHECK(block_decomposition_check(rank));

  IntMatrix z0 = identity(1);
  IntMatrix z1 = inflate_2x2(z0);
  CHECK(z1 == zeta_matrix(boolean_algebra(1)));
  CHECK(inflate_2x2(z1) == zeta_matrix(boolean_algebra(2)));
  for (int rank = 2; rank <= 8; ++rank)
    CHECK(inflate_2x2(zeta_matrix(boolean_algebra(rank - 1))) ==
          zeta_matrix(boolean_algebra(rank)));

  CHECK_THROWS_AS(inflate_2x2(scale(identity(2), 3)), ShapeMismatch);
}

TEST_CASE("alpha and beta exponents") {
  CHECK(alpha_beta(1).alpha == 0);
  CHECK(alpha_beta(1).beta == 1);
  CHECK(alpha_beta(2).alpha == 2);
  CHECK(alpha_beta(2).beta == 1);
  CHECK(alpha_beta(3).alpha == 2);
  CHECK(alpha_beta(3).beta == 3);
  CHECK(alpha_beta(4).alpha == 6);
  CHECK(alpha_beta(4).beta == 5);
  CHECK(alpha_beta(5).alpha == 10);
  CHECK(alpha_beta(5).beta == 11);

  for (int n = 1; n <= 20; ++n) {
    AlphaBeta ab = alpha_beta(n);
    // alpha and beta differ by one, alternating side each rank.
    CHECK(ab.alpha - ab.beta == (n % 2 == 0 ? 1 : -1));
  }
  // Even-rank recursion alpha_n = 4 alpha_{n-2} - 2.
  for (int n = 4; n <= 20; n += 2)
    CHECK(alpha_beta(n).alpha == 4 * alpha_beta(n - 2).alpha - 2);
}

TEST_CASE("boolean determinant closed form") {
  CHECK(boolean_det_closed_form(0) == 2);
  CHECK(boolean_det_closed_form(1) == 3);
  CHECK(boolean_det_closed_form(2) == 4);
  CHECK(boolean_det_closed_form(3) == 0);
  CHECK(boolean_det_closed_form(4) == 64);
  CHECK(boolean_det_closed_form(5) == 0);
  mpz_class e22;
  mpz_ui_pow_ui(e22.get_mpz_t(), 2, 22);
  CHECK(boolean_det_closed_form(6) == e22);
  for (int n = 0; n <= 5; ++n)
    CHECK(boolean_det_closed_form(n) == det(symmetrized(zeta_matrix(boolean_algebra(n)))));
}
