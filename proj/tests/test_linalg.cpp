#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zetamat/errors.hpp"
#include "zetamat/incidence.hpp"
#include "zetamat/io.hpp"
#include "zetamat/matrix.hpp"
#include "zetamat/poset.hpp"

using namespace zetamat;

TEST_CASE("elementwise operations") {
  CHECK(add(identity(2), identity(2)) == scale(identity(2), 2));
  CHECK_THROWS_AS(add(identity(2), identity(3)), ShapeMismatch);

  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    IntMatrix a = oracles::random_matrix(5, rng);
    CHECK(transpose(transpose(a)) == a);
  }
}

TEST_CASE("symmetrized zeta matrix of the rank-2 boolean algebra") {
  IntMatrix fz = symmetrized(zeta_matrix(boolean_algebra(2)));
  const int expect[4][4] = {{2, 1, 1, 1}, {1, 2, 0, 1}, {1, 0, 2, 1}, {1, 1, 1, 2}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(fz(i, j) == expect[i][j]);
}

TEST_CASE("determinant basics") {
  CHECK(det(identity(5)) == 1);
  CHECK(det(symmetrized(zeta_matrix(chain(4)))) == 5);
  CHECK(det(symmetrized(zeta_matrix(boolean_algebra(3)))) == 0);
  CHECK_THROWS_AS(det(IntMatrix(2, 3)), NotSquare);
}

TEST_CASE("Bareiss equals the Leibniz expansion on random matrices") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    int n = 1 + static_cast<int>(rng() % 7);
    IntMatrix a = oracles::random_matrix(n, rng);
    CHECK(det(a) == oracles::leibniz_det(a));
  }
}

TEST_CASE("unipotent upper-triangular inverse") {
  CHECK(inverse_unipotent_upper(identity(4)) == identity(4));

  // All-ones upper triangle inverts to the bidiagonal 1 / -1 matrix.
  IntMatrix z = zeta_matrix(chain(5));
  IntMatrix m = inverse_unipotent_upper(z);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      mpz_class expect = 0;
      if (i == j) expect = 1;
      if (j == i + 1) expect = -1;
      CHECK(m(i, j) == expect);
    }

  // First row of the rank-2 boolean Moebius matrix: mu(empty, -).
  IntMatrix mb = inverse_unipotent_upper(zeta_matrix(boolean_algebra(2)));
  CHECK(mb(0, 0) == 1);
  CHECK(mb(0, 1) == -1);
  CHECK(mb(0, 2) == -1);
  CHECK(mb(0, 3) == 1);

  CHECK_THROWS_AS(inverse_unipotent_upper(scale(identity(3), 2)), NotUnipotentUpperTriangular);

  std::mt19937_64 rng(23);
  for (int t = 0; t < 20; ++t) {
    int n = 1 + static_cast<int>(rng() % 8);
    IntMatrix u = oracles::random_unipotent_upper(n, rng);
    CHECK(mul(u, inverse_unipotent_upper(u)) == identity(n));
  }
}

TEST_CASE("unimodular symmetrization identity on random unipotent matrices") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 100; ++t) {
    int n = 1 + static_cast<int>(rng() % 8);
    IntMatrix u = oracles::random_unipotent_upper(n, rng);
    IntMatrix v = inverse_unipotent_upper(u);
    CHECK(det(symmetrized(u)) == det(symmetrized(v)));
  }
}

TEST_CASE("det of symmetrized zeta equals det of symmetrized Moebius") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 40; ++t) {
    Poset p = random_poset(1 + static_cast<int>(rng() % 64), rng);
    CHECK(det(symmetrized(zeta_matrix(p))) == det(symmetrized(mobius_matrix(p))));
  }
}

namespace {
IntMatrix loopfree_symmetrized_zeta(const Poset& p) {
  return sub(symmetrized(zeta_matrix(p)), scale(identity(p.size()), 2));
}
}  // namespace

TEST_CASE("characteristic polynomial examples") {
  CharPoly c = charpoly(loopfree_symmetrized_zeta(boolean_algebra(2)));
  std::vector<mpz_class> expect{1, 0, -5, 4, 0};
  CHECK(c.a == expect);

  CharPoly z3 = charpoly(IntMatrix(3, 3));
  CHECK(z3.a == std::vector<mpz_class>{1, 0, 0, 0});

  CHECK_THROWS_AS(charpoly(IntMatrix(2, 3)), NotSquare);
}

TEST_CASE("charpoly structure: leading 1, zero trace coefficient") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 20; ++t) {
    Poset p = random_poset(1 + static_cast<int>(rng() % 7), rng);
    CharPoly c = charpoly(loopfree_symmetrized_zeta(p));
    CHECK(c.a[0] == 1);
    CHECK(c.a[1] == 0);
  }
}

TEST_CASE("charpoly at -2 recovers the determinant") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 20; ++t) {
    Poset p = random_poset(1 + static_cast<int>(rng() % 7), rng);
    CharPoly c = charpoly(loopfree_symmetrized_zeta(p));
    CHECK(eval_charpoly(c, -2) == det(symmetrized(zeta_matrix(p))));
  }
}

TEST_CASE("eval_charpoly") {
  CharPoly c;
  c.a = {mpz_class(1), mpz_class(0), mpz_class(-5), mpz_class(4), mpz_class(0)};
  CHECK(eval_charpoly(c, -2) == 4);
  CHECK(eval_charpoly(c, 0) == c.a.back());
  CHECK(eval_charpoly(charpoly(loopfree_symmetrized_zeta(chain(3))), -2) == 4);
}

TEST_CASE("ascending power conversion") {
  // chi(t) for the rank-2 boolean algebra: t^4 - 5 t^2 - 4 t.
  CharPoly c = charpoly(loopfree_symmetrized_zeta(boolean_algebra(2)));
  CHECK(c.ascending_t() == std::vector<mpz_class>{0, -4, -5, 0, 1});
}
