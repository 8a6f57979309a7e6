#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

#include "zetamat/matrix.hpp"
#include "zetamat/poset.hpp"

namespace zetamat {

/// Element of the incidence algebra I(P): an exact-rational value on every
/// comparable ordered pair of p.  Querying an incomparable pair throws
/// NotComparable rather than returning zero.
class IncidenceFunction {
 public:
  explicit IncidenceFunction(const Poset& p) : p_(&p) {}

  const Poset& poset() const { return *p_; }
  const mpq_class& at(int i, int j) const;
  void set(int i, int j, mpq_class v);

 private:
  const Poset* p_;
  std::map<std::pair<int, int>, mpq_class> values_;
};

/// Function on the elements of a poset (the f and g of the inversion formula).
struct PointFunction {
  const Poset* poset;
  std::vector<mpq_class> values;
};

/// Convolution identity: 1 on (i,i), 0 on i < j.
IncidenceFunction delta(const Poset& p);

/// 1 on every comparable pair.
IncidenceFunction zeta(const Poset& p);

/// Convolution inverse of zeta, computed by the inductive definition
/// mu(x,y) = -sum_{x <= z < y} mu(x,z) (deliberately not by matrix
/// inversion, so the two routes cross-validate).
IncidenceFunction mobius(const Poset& p);

/// (fg)(x,y) = sum_{x <= z <= y} f(x,z) g(z,y).  Throws PosetMismatch.
IncidenceFunction convolve(const IncidenceFunction& f, const IncidenceFunction& g);

/// Zero-filled n x n matrix of an integer-valued incidence function; upper
/// triangular under the admissible labelling.  Throws NonIntegerValues.
IntMatrix matrix_of(const IncidenceFunction& f);

IntMatrix zeta_matrix(const Poset& p);    // Z_P
IntMatrix mobius_matrix(const Poset& p);  // M_P, from the mu recursion

/// g(x) = sum_{y <= x} f(y).
PointFunction downward_sum(const PointFunction& f);

/// f(x) = sum_{y <= x} g(y) mu(y,x); inverse of downward_sum.
PointFunction mobius_invert(const PointFunction& g);

}  // namespace zetamat
