#include "zetamat/matrix.hpp"

#include <algorithm>

namespace zetamat {

IntMatrix identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix add(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("add");
  IntMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

IntMatrix sub(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("sub");
  IntMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

IntMatrix transpose(const IntMatrix& a) {
  IntMatrix r(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

IntMatrix scale(const IntMatrix& a, const mpz_class& k) {
  IntMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) * k;
  return r;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeMismatch("mul");
  IntMatrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

IntMatrix symmetrized(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw NotSquare("symmetrized");
  return add(a, transpose(a));
}

mpz_class det(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw NotSquare("det");
  const int n = a.rows();
  if (n == 0) return 1;
  return bareiss_det<mpz_class>(a.entries(), n);
}

IntMatrix inverse_unipotent_upper(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw NotSquare("inverse_unipotent_upper");
  const int n = a.rows();
  for (int i = 0; i < n; ++i) {
    if (a(i, i) != 1) throw NotUnipotentUpperTriangular("diagonal entry is not 1");
    for (int j = 0; j < i; ++j)
      if (sgn(a(i, j)) != 0) throw NotUnipotentUpperTriangular("nonzero below diagonal");
  }
  IntMatrix inv(n, n);
  for (int j = n - 1; j >= 0; --j) {
    inv(j, j) = 1;
    for (int i = j - 1; i >= 0; --i) {
      mpz_class s = 0;
      for (int k = i + 1; k <= j; ++k) s += a(i, k) * inv(k, j);
      inv(i, j) = -s;
    }
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Characteristic polynomial.
// ---------------------------------------------------------------------------

namespace {

// Dense univariate polynomial over the integers, ascending powers.
using Poly = std::vector<mpz_class>;

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r = a;
  if (b.size() > r.size()) r.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

// Exact quotient a / b in Z[t]; throws InexactDivision otherwise.
Poly poly_exact_div(Poly a, const Poly& b) {
  trim(a);
  if (b.empty()) throw InexactDivision("polynomial division by zero");
  if (a.empty()) return {};
  if (a.size() < b.size()) throw InexactDivision("degree too small");
  Poly q(a.size() - b.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    if (a.size() < b.size() + k) continue;
    const mpz_class& lead = a[b.size() - 1 + k];
    if (sgn(lead) == 0) continue;
    q[k] = RingOps<mpz_class>::exact_div(lead, b.back());
    for (std::size_t i = 0; i < b.size(); ++i) a[i + k] -= q[k] * b[i];
  }
  trim(a);
  if (!a.empty()) throw InexactDivision("polynomial division left a remainder");
  return q;
}

}  // namespace

template <>
struct RingOps<std::vector<mpz_class>> {
  static Poly zero() { return {}; }
  static Poly one() { return {mpz_class(1)}; }
  static bool is_zero(const Poly& a) { return a.empty(); }
  static Poly neg(const Poly& a) {
    Poly r = a;
    for (auto& c : r) c = -c;
    return r;
  }
  static Poly mul(const Poly& a, const Poly& b) { return poly_mul(a, b); }
  static Poly sub(const Poly& a, const Poly& b) { return poly_sub(a, b); }
  static Poly exact_div(const Poly& a, const Poly& b) { return poly_exact_div(a, b); }
};

namespace {

// Route 1: Bareiss over Z[t] applied to A - tI.
Poly charpoly_symbolic(const IntMatrix& a) {
  const int n = a.rows();
  std::vector<Poly> m(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Poly e;
      if (sgn(a(i, j)) != 0) e.push_back(a(i, j));
      if (i == j) {
        e.resize(2);
        e[1] = -1;
      }
      trim(e);
      m[static_cast<std::size_t>(i) * n + j] = std::move(e);
    }
  Poly chi = bareiss_det<Poly>(std::move(m), n);
  chi.resize(static_cast<std::size_t>(n) + 1);
  return chi;
}

// Route 2: evaluate det(A - tI) at t = 0..n and interpolate exactly.
Poly charpoly_interpolated(const IntMatrix& a) {
  const int n = a.rows();
  std::vector<mpz_class> vals(static_cast<std::size_t>(n) + 1);
  for (int t = 0; t <= n; ++t) {
    IntMatrix shifted = a;
    for (int i = 0; i < n; ++i) shifted(i, i) -= t;
    vals[static_cast<std::size_t>(t)] = det(shifted);
  }
  // Newton divided differences at nodes 0..n; integer nodes, rational steps.
  std::vector<mpq_class> dd(vals.begin(), vals.end());
  for (int level = 1; level <= n; ++level)
    for (int i = n; i >= level; --i)
      dd[static_cast<std::size_t>(i)] =
          (dd[static_cast<std::size_t>(i)] - dd[static_cast<std::size_t>(i - 1)]) / level;
  // Expand sum dd[k] * t(t-1)...(t-k+1).
  std::vector<mpq_class> coeff(static_cast<std::size_t>(n) + 1);
  std::vector<mpq_class> basis{1};  // falling factorial, ascending powers
  for (int k = 0; k <= n; ++k) {
    for (std::size_t i = 0; i < basis.size(); ++i) coeff[i] += dd[static_cast<std::size_t>(k)] * basis[i];
    if (k < n) {
      // multiply basis by (t - k)
      basis.push_back(0);
      for (std::size_t i = basis.size() - 1; i > 0; --i)
        basis[i] = basis[i - 1] - k * basis[i];
      basis[0] *= -k;
    }
  }
  Poly out(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    mpq_class c = coeff[static_cast<std::size_t>(i)];
    c.canonicalize();
    if (c.get_den() != 1) throw InternalMismatch("interpolated coefficient not an integer");
    out[static_cast<std::size_t>(i)] = c.get_num();
  }
  return out;
}

}  // namespace

std::vector<mpz_class> CharPoly::ascending_t() const {
  const int n = degree();
  std::vector<mpz_class> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    // a_i (-t)^(n-i) contributes a_i (-1)^(n-i) to the t^(n-i) coefficient.
    c[static_cast<std::size_t>(n - i)] = ((n - i) % 2 == 0) ? a[static_cast<std::size_t>(i)]
                                                            : -a[static_cast<std::size_t>(i)];
  }
  return c;
}

CharPoly charpoly(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw NotSquare("charpoly");
  const int n = a.rows();
  Poly c1 = charpoly_symbolic(a);
  Poly c2 = charpoly_interpolated(a);
  if (c1 != c2) throw InternalMismatch("characteristic polynomial routes disagree");
  CharPoly cp;
  cp.a.resize(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const mpz_class& ct = c1[static_cast<std::size_t>(n - i)];  // coeff of t^(n-i)
    cp.a[static_cast<std::size_t>(i)] = ((n - i) % 2 == 0) ? ct : -ct;
  }
  return cp;
}

mpz_class eval_charpoly(const CharPoly& c, const mpz_class& t) {
  // Horner in the variable (-t).
  mpz_class x = -t;
  mpz_class r = 0;
  for (const auto& ai : c.a) r = r * x + ai;
  return r;
}

}  // namespace zetamat
