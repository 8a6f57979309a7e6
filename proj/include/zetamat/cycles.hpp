#pragma once

#include <gmpxx.h>

#include <functional>
#include <vector>

#include "zetamat/matrix.hpp"
#include "zetamat/poset.hpp"

namespace zetamat {

/// strict: arc i -> j iff x_i < x_j (acyclic, adjacency Z_P - I).
/// symmetric: arcs both ways between distinct comparable pairs.
/// looped: symmetric plus two loops at each vertex.
enum class DigraphMode { strict, symmetric, looped };

class ComparabilityDigraph {
 public:
  ComparabilityDigraph(int n, DigraphMode mode, std::vector<std::uint8_t> arcs, int loops_per_vertex);

  int size() const { return n_; }
  DigraphMode mode() const { return mode_; }
  int loops_per_vertex() const { return loops_; }
  bool arc(int i, int j) const { return arcs_[static_cast<std::size_t>(i) * n_ + j] != 0; }

 private:
  int n_;
  DigraphMode mode_;
  std::vector<std::uint8_t> arcs_;  // off-diagonal arcs
  int loops_;
};

ComparabilityDigraph build_digraph(const Poset& p, DigraphMode mode);

/// Adjacency matrix with loop multiplicity on the diagonal: Y_P for strict
/// mode, frak-Y_P for symmetric, frak-Y_P + 2I for looped.
IntMatrix adjacency(const ComparabilityDigraph& d);

struct ConstrainedPermutation {
  std::vector<int> mapping;  // 0-based sigma
  int sign = 1;
  int fixed_points = 0;
  std::vector<int> cycle_type;  // lengths of all cycles, descending
};

inline constexpr int kDefaultEnumerationCap = 12;

/// Visits every sigma with x_j comparable to x_sigma(j) for all j, once.
/// Throws SizeCapExceeded when p has more than cap elements.
void enumerate_snp(const Poset& p, const std::function<void(const ConstrainedPermutation&)>& visit,
                   int cap = kDefaultEnumerationCap);

/// chi(t) accumulated as sign(sigma) * (-t)^(fixed points) over the
/// constrained permutations.
CharPoly chi_via_permutations(const Poset& p, int cap = kDefaultEnumerationCap);

/// Number of collections of pairwise vertex-disjoint directed cycles with
/// the given multiset of lengths.  Length-1 cycles are only valid in looped
/// mode and count with the loop multiplicity (2 per vertex).
mpz_class count_cycle_covers(const ComparabilityDigraph& d, std::vector<int> lengths);

/// chi(t) from disjoint-cycle counts: a_i sums (-1)^(i+r) f(i_1..i_r) over
/// partitions of i into parts >= 2.
CharPoly chi_via_cycle_counts(const Poset& p, int cap = kDefaultEnumerationCap);

/// c_s = number of all-vertex disjoint-cycle collections of the looped
/// digraph with exactly s components, loops weighted 2 per vertex.  Computed
/// both from constrained-permutation statistics and by direct cycle-cover
/// enumeration; throws InternalMismatch if the routes disagree.  Returned
/// vector is c_1..c_n.
std::vector<mpz_class> c_coefficients(const Poset& p, int cap = kDefaultEnumerationCap);

/// det(Z_P + Z_P^t) as the alternating sum of the c_s.
mpz_class theorem2_det(const Poset& p, int cap = kDefaultEnumerationCap);

}  // namespace zetamat
