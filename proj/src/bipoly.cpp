#include "zetamat/bipoly.hpp"

#include <sstream>

#include "zetamat/incidence.hpp"
#include "zetamat/poset.hpp"

namespace zetamat {

BiPoly BiPoly::monomial(int dx, int dy, mpz_class c) {
  BiPoly p;
  if (sgn(c) != 0) p.terms_[{dx, dy}] = std::move(c);
  return p;
}

void BiPoly::add_term(int dx, int dy, const mpz_class& c) {
  auto it = terms_.find({dx, dy});
  if (it == terms_.end()) {
    if (sgn(c) != 0) terms_.emplace(std::make_pair(dx, dy), c);
    return;
  }
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  BiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m.first, m.second, c);
  return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
  BiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m.first, m.second, -c);
  return r;
}

BiPoly BiPoly::operator-() const {
  BiPoly r;
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  BiPoly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_)
      r.add_term(ma.first + mb.first, ma.second + mb.second, ca * cb);
  return r;
}

BiPoly BiPoly::pow(long long k) const {
  BiPoly r = constant(1);
  BiPoly base = *this;
  for (; k > 0; k >>= 1) {
    if (k & 1) r = r * base;
    base = base * base;
  }
  return r;
}

BiPoly BiPoly::negate_y() const {
  BiPoly r;
  for (const auto& [m, c] : terms_) r.terms_[m] = (m.second % 2 == 0) ? c : -c;
  return r;
}

mpz_class BiPoly::eval(const mpz_class& x0, const mpz_class& y0) const {
  mpz_class acc = 0;
  for (const auto& [m, c] : terms_) {
    mpz_class xp, yp;
    mpz_pow_ui(xp.get_mpz_t(), x0.get_mpz_t(), static_cast<unsigned long>(m.first));
    mpz_pow_ui(yp.get_mpz_t(), y0.get_mpz_t(), static_cast<unsigned long>(m.second));
    acc += c * xp * yp;
  }
  return acc;
}

std::vector<std::tuple<int, int, std::string>> BiPoly::triples() const {
  std::vector<std::tuple<int, int, std::string>> out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    out.emplace_back(it->first.first, it->first.second, it->second.get_str());
  return out;
}

std::string BiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    mpz_class abs_c = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    const bool has_vars = m.first > 0 || m.second > 0;
    if (abs_c != 1 || !has_vars) os << abs_c.get_str();
    if (m.first > 0) {
      os << "x";
      if (m.first > 1) os << "^" << m.first;
    }
    if (m.second > 0) {
      os << "y";
      if (m.second > 1) os << "^" << m.second;
    }
  }
  return os.str();
}

BiPoly exact_div(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw InexactDivision("division by the zero polynomial");
  BiPoly rem = a;
  BiPoly q;
  const auto& bl = *b.terms_.rbegin();  // leading term, graded-lex
  while (!rem.is_zero()) {
    const auto& rl = *rem.terms_.rbegin();
    const int dx = rl.first.first - bl.first.first;
    const int dy = rl.first.second - bl.first.second;
    if (dx < 0 || dy < 0) throw InexactDivision("leading monomial not divisible");
    mpz_class qc, r;
    mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), rl.second.get_mpz_t(), bl.second.get_mpz_t());
    if (sgn(r) != 0) throw InexactDivision("leading coefficient not divisible");
    BiPoly t = BiPoly::monomial(dx, dy, qc);
    q = q + t;
    rem = rem - t * b;
  }
  return q;
}

BiPolyMatrix param_zeta_matrix(int rank) {
  IntMatrix z = zeta_matrix(boolean_algebra(rank));
  const int n = z.rows();
  BiPolyMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = BiPoly::monomial(1, 0, z(i, j)) + BiPoly::monomial(0, 1, z(j, i));
  return m;
}

BiPoly param_zeta_det(int rank, int cap) {
  if (rank < 1) throw IndexOutOfRange("rank must be positive");
  if (rank > cap) throw RankTooLarge("rank " + std::to_string(rank) + " exceeds the elimination cap");
  BiPolyMatrix m = param_zeta_matrix(rank);
  return bareiss_det<BiPoly>(std::move(m.e), m.rows);
}

FactoredForm factored_form(int rank, int cap) {
  AlphaBeta ab = alpha_beta(rank);
  const int s = rank % 2 == 0 ? 1 : -1;
  FactoredForm f;
  f.exponents = ab;
  f.linear = BiPoly::var_x() + BiPoly::monomial(0, 1, s);
  f.quadratic = BiPoly::monomial(2, 0, 1) + BiPoly::monomial(1, 1, -s) + BiPoly::monomial(0, 2, 1);
  f.expanded = f.linear.pow(ab.alpha) * f.quadratic.pow(ab.beta);
  if (f.expanded != param_zeta_det(rank, cap))
    throw FactorizationMismatch("factored form differs from the elimination determinant at rank " +
                                std::to_string(rank));
  return f;
}

bool lemma4_check(int rank, int cap) {
  if (rank < 1) throw IndexOutOfRange("rank must be positive");
  if (rank + 2 > cap) throw RankTooLarge("rank + 2 exceeds the elimination cap");
  BiPoly lhs = param_zeta_det(rank + 2, cap);
  BiPoly d_r = param_zeta_det(rank, cap);
  BiPoly d_r1 = param_zeta_det(rank + 1, cap);
  return lhs == d_r * d_r * d_r1.negate_y();
}

}  // namespace zetamat
