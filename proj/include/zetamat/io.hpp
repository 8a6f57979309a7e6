#pragma once

#include <iosfwd>
#include <random>

#include "zetamat/matrix.hpp"
#include "zetamat/poset.hpp"

namespace zetamat {

/// Poset text format: line 1 is n; each later non-comment line is `i j`
/// asserting x_i < x_j (1-based, closure taken); `#` starts a comment.
Poset read_poset(std::istream& in);
void write_poset(std::ostream& out, const Poset& p);

/// Matrix text format: `rows cols`, then row-major decimal integers.
IntMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const IntMatrix& m);

/// Random poset: each pair (i, j) with i < j becomes a relation with
/// probability 3/10, then the transitive closure is taken.  Deterministic
/// for a given generator state.
Poset random_poset(int n, std::mt19937_64& rng);

}  // namespace zetamat
