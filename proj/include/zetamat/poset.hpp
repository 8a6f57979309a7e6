#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace zetamat {

/// Finite poset on elements 0..n-1 with an admissible labelling:
/// i strictly below j implies i < j as indices.  Immutable after
/// construction; the full order relation is stored as a dense table.
class Poset {
 public:
  Poset(int n, std::vector<std::uint8_t> leq_table,
        std::vector<std::string> labels = {});

  int size() const { return n_; }
  bool leq(int i, int j) const { return leq_[static_cast<std::size_t>(i) * n_ + j] != 0; }
  bool less(int i, int j) const { return i != j && leq(i, j); }
  bool comparable(int i, int j) const { return leq(i, j) || leq(j, i); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }

  /// Covering pairs (i, j): i < j with nothing strictly between.
  std::vector<std::pair<int, int>> cover_relations() const;

 private:
  int n_;
  std::vector<std::uint8_t> leq_;
  std::vector<std::string> labels_;
};

struct Interval {
  int bottom = 0;
  int top = 0;
  std::vector<int> members;  // sorted element indices z with bottom <= z <= top
};

/// Builds the poset generated by the given strict relations (1-based index
/// pairs).  Takes the reflexive-transitive closure and relabels elements by
/// the lexicographically smallest topological order so the admissible
/// labelling invariant holds; original 1-based indices become the labels.
/// Throws CycleDetected / IndexOutOfRange.
Poset from_cover_relations(int n, const std::vector<std::pair<int, int>>& covers);

/// Total order on n elements.
Poset chain(int n);

/// Subsets of {1..rank} ordered by inclusion, element m encoding the subset
/// with binary expansion m, labelled by the bitstring.  Throws RankTooLarge
/// beyond the size cap.
Poset boolean_algebra(int rank, int rank_cap = 20);

/// Divisors of n under divisibility, in increasing numeric order.
Poset divisor_poset(long long n);

/// Closed interval [i, j].  Throws NotComparable unless i <= j in p.
Interval interval(const Poset& p, int i, int j);

}  // namespace zetamat
