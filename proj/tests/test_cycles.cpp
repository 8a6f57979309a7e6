#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "zetamat/cycles.hpp"
#include "zetamat/errors.hpp"
#include "zetamat/incidence.hpp"
#include "zetamat/io.hpp"
#include "zetamat/poset.hpp"

using namespace zetamat;

namespace {

Poset antichain(int n) {
  return from_cover_relations(n, {});
}

mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

}  // namespace

TEST_CASE("digraph modes and adjacency matrices") {
  Poset c2 = chain(2);
  ComparabilityDigraph sym = build_digraph(c2, DigraphMode::symmetric);
  CHECK(sym.arc(0, 1));
  CHECK(sym.arc(1, 0));
  CHECK(sym.loops_per_vertex() == 0);

  Poset b2 = boolean_algebra(2);
  ComparabilityDigraph d = build_digraph(b2, DigraphMode::symmetric);
  int arcs = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j && d.arc(i, j)) ++arcs;
  CHECK(arcs == 10);

  // strict adjacency = Z - I; symmetric = (Z - I) + (Z - I)^t; looped adds 2I.
  IntMatrix y = adjacency(build_digraph(b2, DigraphMode::strict));
  CHECK(y == sub(zeta_matrix(b2), identity(4)));
  IntMatrix fy = adjacency(d);
  CHECK(fy == symmetrized(y));
  IntMatrix looped = adjacency(build_digraph(b2, DigraphMode::looped));
  CHECK(looped == add(fy, scale(identity(4), 2)));
  CHECK(looped == symmetrized(zeta_matrix(b2)));
}

TEST_CASE("constrained permutation enumeration") {
  int count = 0;
  enumerate_snp(chain(5), [&](const ConstrainedPermutation&) { ++count; });
  CHECK(count == factorial(5));

  int with_two_fixed = 0;
  enumerate_snp(boolean_algebra(2), [&](const ConstrainedPermutation& s) {
    if (s.fixed_points == 2) ++with_two_fixed;
  });
  CHECK(with_two_fixed == 5);

  count = 0;
  enumerate_snp(antichain(4), [&](const ConstrainedPermutation& s) {
    ++count;
    CHECK(s.fixed_points == 4);
    CHECK(s.sign == 1);
  });
  CHECK(count == 1);

  CHECK_THROWS_AS(enumerate_snp(chain(13), [](const ConstrainedPermutation&) {}), SizeCapExceeded);
}

TEST_CASE("cycle-cover counts on the rank-2 boolean algebra") {
  ComparabilityDigraph d = build_digraph(boolean_algebra(2), DigraphMode::symmetric);
  CHECK(count_cycle_covers(d, {2}) == 5);
  CHECK(count_cycle_covers(d, {3}) == 4);
  CHECK(count_cycle_covers(d, {4}) == 2);
  CHECK(count_cycle_covers(d, {2, 2}) == 2);
  CHECK(count_cycle_covers(d, {}) == 1);
}

TEST_CASE("cycle-cover length validation") {
  ComparabilityDigraph d = build_digraph(chain(3), DigraphMode::symmetric);
  CHECK_THROWS_AS(count_cycle_covers(d, {1}), InvalidLengths);
  CHECK_THROWS_AS(count_cycle_covers(d, {2, 2}), InvalidLengths);
  CHECK_THROWS_AS(count_cycle_covers(d, {0}), InvalidLengths);

  ComparabilityDigraph looped = build_digraph(chain(3), DigraphMode::looped);
  CHECK(count_cycle_covers(looped, {1}) == 6);        // 3 vertices, 2 loops each
  CHECK(count_cycle_covers(looped, {1, 1, 1}) == 8);  // 2^3
}

TEST_CASE("chi routes agree with each other and the matrix route") {
  Poset b2 = boolean_algebra(2);
  std::vector<mpz_class> expect{1, 0, -5, 4, 0};
  CHECK(chi_via_permutations(b2).a == expect);
  CHECK(chi_via_cycle_counts(b2).a == expect);

  CHECK(chi_via_permutations(antichain(3)).a == std::vector<mpz_class>{1, 0, 0, 0});

  std::mt19937_64 rng(47);
  for (int t = 0; t < 50; ++t) {
    Poset p = random_poset(1 + static_cast<int>(rng() % 7), rng);
    CharPoly by_matrix = charpoly(symmetrized(adjacency(build_digraph(p, DigraphMode::strict))));
    CHECK(chi_via_permutations(p) == by_matrix);
    CHECK(chi_via_cycle_counts(p) == by_matrix);
  }
}

TEST_CASE("component-count coefficients") {
  std::vector<mpz_class> c = c_coefficients(boolean_algebra(2));
  CHECK(c == std::vector<mpz_class>{2, 10, 20, 16});

  std::vector<mpz_class> ca = c_coefficients(antichain(3));
  CHECK(ca == std::vector<mpz_class>{0, 0, 8});

  std::mt19937_64 rng(53);
  for (int t = 0; t < 20; ++t) {
    Poset p = random_poset(1 + static_cast<int>(rng() % 7), rng);
    std::vector<mpz_class> cs = c_coefficients(p);
    mpz_class top;
    mpz_ui_pow_ui(top.get_mpz_t(), 2, static_cast<unsigned long>(p.size()));
    CHECK(cs.back() == top);
  }
}

TEST_CASE("alternating component sum equals the determinant") {
  CHECK(theorem2_det(boolean_algebra(2)) == 4);
  CHECK(theorem2_det(chain(3)) == 4);
  CHECK(theorem2_det(antichain(3)) == 8);

  std::mt19937_64 rng(59);
  for (int t = 0; t < 30; ++t) {
    Poset p = random_poset(1 + static_cast<int>(rng() % 7), rng);
    CHECK(theorem2_det(p) == det(symmetrized(zeta_matrix(p))));
  }
}
