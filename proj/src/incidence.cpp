#include "zetamat/incidence.hpp"

#include <string>

#include "zetamat/errors.hpp"

namespace zetamat {

namespace {
[[noreturn]] void throw_incomparable(int i, int j) {
  throw NotComparable("pair (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                      ") is not an interval");
}
}  // namespace

const mpq_class& IncidenceFunction::at(int i, int j) const {
  if (!p_->leq(i, j)) throw_incomparable(i, j);
  auto it = values_.find({i, j});
  static const mpq_class kZero = 0;
  return it == values_.end() ? kZero : it->second;
}

void IncidenceFunction::set(int i, int j, mpq_class v) {
  if (!p_->leq(i, j)) throw_incomparable(i, j);
  values_[{i, j}] = std::move(v);
}

IncidenceFunction delta(const Poset& p) {
  IncidenceFunction f(p);
  for (int i = 0; i < p.size(); ++i) f.set(i, i, 1);
  return f;
}

IncidenceFunction zeta(const Poset& p) {
  IncidenceFunction f(p);
  for (int i = 0; i < p.size(); ++i)
    for (int j = i; j < p.size(); ++j)
      if (p.leq(i, j)) f.set(i, j, 1);
  return f;
}

IncidenceFunction mobius(const Poset& p) {
  IncidenceFunction mu(p);
  const int n = p.size();
  for (int x = 0; x < n; ++x) {
    mu.set(x, x, 1);
    // Admissible labelling: every z in [x, y) has index < y.
    for (int y = x + 1; y < n; ++y) {
      if (!p.leq(x, y)) continue;
      mpq_class s = 0;
      for (int z = x; z < y; ++z)
        if (p.leq(x, z) && p.leq(z, y)) s += mu.at(x, z);
      mu.set(x, y, -s);
    }
  }
  return mu;
}

IncidenceFunction convolve(const IncidenceFunction& f, const IncidenceFunction& g) {
  const Poset& p = f.poset();
  if (&p != &g.poset()) throw PosetMismatch("convolve operands live on different posets");
  IncidenceFunction h(p);
  for (int i = 0; i < p.size(); ++i)
    for (int j = i; j < p.size(); ++j) {
      if (!p.leq(i, j)) continue;
      mpq_class s = 0;
      for (int z = i; z <= j; ++z)
        if (p.leq(i, z) && p.leq(z, j)) s += f.at(i, z) * g.at(z, j);
      h.set(i, j, std::move(s));
    }
  return h;
}

IntMatrix matrix_of(const IncidenceFunction& f) {
  const Poset& p = f.poset();
  const int n = p.size();
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      if (!p.leq(i, j)) continue;
      const mpq_class& v = f.at(i, j);
      if (v.get_den() != 1) throw NonIntegerValues("entry (" + std::to_string(i + 1) + ", " +
                                                   std::to_string(j + 1) + ")");
      m(i, j) = v.get_num();
    }
  return m;
}

IntMatrix zeta_matrix(const Poset& p) { return matrix_of(zeta(p)); }

IntMatrix mobius_matrix(const Poset& p) { return matrix_of(mobius(p)); }

PointFunction downward_sum(const PointFunction& f) {
  const Poset& p = *f.poset;
  PointFunction g{f.poset, std::vector<mpq_class>(static_cast<std::size_t>(p.size()))};
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y <= x; ++y)
      if (p.leq(y, x)) g.values[static_cast<std::size_t>(x)] += f.values[static_cast<std::size_t>(y)];
  return g;
}

PointFunction mobius_invert(const PointFunction& g) {
  const Poset& p = *g.poset;
  IncidenceFunction mu = mobius(p);
  PointFunction f{g.poset, std::vector<mpq_class>(static_cast<std::size_t>(p.size()))};
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y <= x; ++y)
      if (p.leq(y, x)) f.values[static_cast<std::size_t>(x)] += g.values[static_cast<std::size_t>(y)] * mu.at(y, x);
  return f;
}

}  // namespace zetamat
