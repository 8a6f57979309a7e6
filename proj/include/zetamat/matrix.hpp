#pragma once

#include <gmpxx.h>

#include <vector>

#include "zetamat/bareiss.hpp"
#include "zetamat/errors.hpp"

namespace zetamat {

template <>
struct RingOps<mpz_class> {
  static mpz_class zero() { return 0; }
  static mpz_class one() { return 1; }
  static bool is_zero(const mpz_class& a) { return sgn(a) == 0; }
  static mpz_class neg(const mpz_class& a) { return -a; }
  static mpz_class mul(const mpz_class& a, const mpz_class& b) { return a * b; }
  static mpz_class sub(const mpz_class& a, const mpz_class& b) { return a - b; }
  static mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (sgn(r) != 0) throw InexactDivision("integer division left a remainder");
    return q;
  }
};

/// Dense matrix of unbounded signed integers; all arithmetic exact.
class IntMatrix {
 public:
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpz_class& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const mpz_class& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const std::vector<mpz_class>& entries() const { return e_; }

  bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

 private:
  int rows_, cols_;
  std::vector<mpz_class> e_;
};

IntMatrix identity(int n);
IntMatrix add(const IntMatrix& a, const IntMatrix& b);
IntMatrix sub(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& a);
IntMatrix scale(const IntMatrix& a, const mpz_class& k);
IntMatrix mul(const IntMatrix& a, const IntMatrix& b);

/// A + A^t.
IntMatrix symmetrized(const IntMatrix& a);

/// Exact determinant by Bareiss fraction-free elimination.
mpz_class det(const IntMatrix& a);

/// Exact integer inverse of a unipotent upper-triangular matrix by
/// back-substitution.
IntMatrix inverse_unipotent_upper(const IntMatrix& a);

/// chi(t) = det(A - tI) stored in the convention chi(t) = sum a_i (-t)^(n-i),
/// so a[0] is the coefficient of (-t)^n and a[n] the constant term.
struct CharPoly {
  std::vector<mpz_class> a;  // a_0 .. a_n

  int degree() const { return static_cast<int>(a.size()) - 1; }
  bool operator==(const CharPoly& o) const { return a == o.a; }

  /// Coefficients of chi(t) in ascending powers of t (display form).
  std::vector<mpz_class> ascending_t() const;
};

/// Computed two independent ways (fraction-free elimination over the
/// polynomial ring, and evaluation/interpolation); throws InternalMismatch
/// if they disagree.
CharPoly charpoly(const IntMatrix& a);

mpz_class eval_charpoly(const CharPoly& c, const mpz_class& t);

}  // namespace zetamat
