#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "zetamat/bareiss.hpp"
#include "zetamat/errors.hpp"
#include "zetamat/families.hpp"

namespace zetamat {

/// Graded lexicographic order with x > y: compare total degree, then degree
/// in x.
struct GradedLex {
  bool operator()(const std::pair<int, int>& a, const std::pair<int, int>& b) const {
    const int da = a.first + a.second;
    const int db = b.first + b.second;
    if (da != db) return da < db;
    return a.first < b.first;
  }
};

/// Sparse bivariate polynomial over unbounded integers, canonical form (zero
/// coefficients never stored).
class BiPoly {
 public:
  using TermMap = std::map<std::pair<int, int>, mpz_class, GradedLex>;

  BiPoly() = default;

  static BiPoly constant(mpz_class c) { return monomial(0, 0, std::move(c)); }
  static BiPoly monomial(int dx, int dy, mpz_class c);
  static BiPoly var_x() { return monomial(1, 0, 1); }
  static BiPoly var_y() { return monomial(0, 1, 1); }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator-() const;
  BiPoly operator*(const BiPoly& o) const;
  bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }

  BiPoly pow(long long k) const;

  /// y -> -y.
  BiPoly negate_y() const;

  mpz_class eval(const mpz_class& x0, const mpz_class& y0) const;

  /// Terms as (dx, dy, coefficient-string) triples in descending graded-lex
  /// order, the wire form used by the CLI.
  std::vector<std::tuple<int, int, std::string>> triples() const;

  std::string str() const;

 private:
  TermMap terms_;

  void add_term(int dx, int dy, const mpz_class& c);
  friend BiPoly exact_div(const BiPoly& a, const BiPoly& b);
};

/// Exact quotient in Z[x,y]; throws InexactDivision unless b divides a.
BiPoly exact_div(const BiPoly& a, const BiPoly& b);

template <>
struct RingOps<BiPoly> {
  static BiPoly zero() { return {}; }
  static BiPoly one() { return BiPoly::constant(1); }
  static bool is_zero(const BiPoly& a) { return a.is_zero(); }
  static BiPoly neg(const BiPoly& a) { return -a; }
  static BiPoly mul(const BiPoly& a, const BiPoly& b) { return a * b; }
  static BiPoly sub(const BiPoly& a, const BiPoly& b) { return a - b; }
  static BiPoly exact_div(const BiPoly& a, const BiPoly& b) { return zetamat::exact_div(a, b); }
};

struct BiPolyMatrix {
  int rows, cols;
  std::vector<BiPoly> e;

  BiPolyMatrix(int r, int c) : rows(r), cols(c), e(static_cast<std::size_t>(r) * c) {}
  BiPoly& operator()(int i, int j) { return e[static_cast<std::size_t>(i) * cols + j]; }
  const BiPoly& operator()(int i, int j) const { return e[static_cast<std::size_t>(i) * cols + j]; }
};

inline constexpr int kDefaultRankCap = 5;

/// x Z + y Z^t for the boolean algebra of the given rank.
BiPolyMatrix param_zeta_matrix(int rank);

/// det(x Z + y Z^t) by fraction-free elimination over the bivariate ring.
BiPoly param_zeta_det(int rank, int cap = kDefaultRankCap);

struct FactoredForm {
  AlphaBeta exponents;
  BiPoly linear;     // x + (-1)^n y
  BiPoly quadratic;  // x^2 - (-1)^n x y + y^2
  BiPoly expanded;   // linear^alpha * quadratic^beta
};

/// The factored determinant; throws FactorizationMismatch if the expanded
/// product differs from the elimination result.
FactoredForm factored_form(int rank, int cap = kDefaultRankCap);

/// Checks det_{r+2}(x,y) = det_r(x,y)^2 * det_{r+1}(x,-y) as an exact
/// polynomial identity.
bool lemma4_check(int rank, int cap = kDefaultRankCap);

}  // namespace zetamat
