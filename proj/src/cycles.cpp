#include "zetamat/cycles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "zetamat/errors.hpp"

namespace zetamat {

ComparabilityDigraph::ComparabilityDigraph(int n, DigraphMode mode, std::vector<std::uint8_t> arcs,
                                           int loops_per_vertex)
    : n_(n), mode_(mode), arcs_(std::move(arcs)), loops_(loops_per_vertex) {
  if (arcs_.size() != static_cast<std::size_t>(n_) * n_) throw ShapeMismatch("arc table size");
}

ComparabilityDigraph build_digraph(const Poset& p, DigraphMode mode) {
  const int n = p.size();
  std::vector<std::uint8_t> arcs(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      bool a = mode == DigraphMode::strict ? p.less(i, j) : p.comparable(i, j);
      arcs[static_cast<std::size_t>(i) * n + j] = a ? 1 : 0;
    }
  return ComparabilityDigraph(n, mode, std::move(arcs), mode == DigraphMode::looped ? 2 : 0);
}

IntMatrix adjacency(const ComparabilityDigraph& d) {
  const int n = d.size();
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (i != j && d.arc(i, j)) m(i, j) = 1;
    m(i, i) = d.loops_per_vertex();
  }
  return m;
}

namespace {

void check_cap(const Poset& p, int cap) {
  if (p.size() > cap)
    throw SizeCapExceeded("poset has " + std::to_string(p.size()) + " elements, cap is " +
                          std::to_string(cap));
}

ConstrainedPermutation analyze(const std::vector<int>& sigma) {
  const int n = static_cast<int>(sigma.size());
  ConstrainedPermutation cp;
  cp.mapping = sigma;
  std::vector<char> seen(n, 0);
  int transposition_count = 0;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (int v = start; !seen[v]; v = sigma[static_cast<std::size_t>(v)]) {
      seen[v] = 1;
      ++len;
    }
    cp.cycle_type.push_back(len);
    if (len == 1) ++cp.fixed_points;
    transposition_count += len - 1;
  }
  std::sort(cp.cycle_type.rbegin(), cp.cycle_type.rend());
  cp.sign = transposition_count % 2 == 0 ? 1 : -1;
  return cp;
}

}  // namespace

void enumerate_snp(const Poset& p, const std::function<void(const ConstrainedPermutation&)>& visit,
                   int cap) {
  check_cap(p, cap);
  const int n = p.size();
  std::vector<std::vector<int>> candidates(n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      if (p.comparable(j, k)) candidates[static_cast<std::size_t>(j)].push_back(k);

  std::vector<int> sigma(n, -1);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, int j) -> void {
    if (j == n) {
      visit(analyze(sigma));
      return;
    }
    for (int k : candidates[static_cast<std::size_t>(j)]) {
      if (used[k]) continue;
      used[k] = 1;
      sigma[static_cast<std::size_t>(j)] = k;
      self(self, j + 1);
      used[k] = 0;
    }
    sigma[static_cast<std::size_t>(j)] = -1;
  };
  rec(rec, 0);
}

CharPoly chi_via_permutations(const Poset& p, int cap) {
  const int n = p.size();
  CharPoly cp;
  cp.a.assign(static_cast<std::size_t>(n) + 1, 0);
  enumerate_snp(
      p,
      [&](const ConstrainedPermutation& s) {
        cp.a[static_cast<std::size_t>(n - s.fixed_points)] += s.sign;
      },
      cap);
  return cp;
}

namespace {

// Enumerates directed cycles of length len whose minimal vertex is start,
// walking arcs of d through unused vertices > start, and calls next() with
// the cycle vertices marked used.
void for_each_cycle_at(const ComparabilityDigraph& d, std::vector<char>& used, int start, int len,
                       const std::function<void()>& next) {
  const int n = d.size();
  std::vector<int> path{start};
  auto rec = [&](auto&& self, int v) -> void {
    if (static_cast<int>(path.size()) == len) {
      if (d.arc(v, start)) next();
      return;
    }
    for (int w = start + 1; w < n; ++w) {
      if (used[w] || !d.arc(v, w)) continue;
      used[w] = 1;
      path.push_back(w);
      self(self, w);
      path.pop_back();
      used[w] = 0;
    }
  };
  rec(rec, start);
}

}  // namespace

mpz_class count_cycle_covers(const ComparabilityDigraph& d, std::vector<int> lengths) {
  const int n = d.size();
  int total = 0;
  for (int len : lengths) {
    if (len < 1) throw InvalidLengths("cycle length must be positive");
    if (len == 1 && d.loops_per_vertex() == 0)
      throw InvalidLengths("length-1 cycles need loops in the digraph");
    total += len;
  }
  if (total > n) throw InvalidLengths("lengths sum past the vertex count");

  std::map<int, int> remaining;  // length -> multiplicity
  for (int len : lengths) ++remaining[len];

  const mpz_class loop_weight = d.loops_per_vertex();
  std::vector<char> used(n, 0);
  mpz_class count = 0;

  // Cycles of a collection are anchored at their minimal vertices, visited
  // in increasing order; each collection is reached exactly once.
  auto rec = [&](auto&& self, int min_start, const mpz_class& weight) -> void {
    if (remaining.empty()) {
      count += weight;
      return;
    }
    for (int v = min_start; v < n; ++v) {
      if (used[v]) continue;
      for (auto it = remaining.begin(); it != remaining.end();) {
        const int len = it->first;
        if (--it->second == 0)
          it = remaining.erase(it);
        else
          ++it;
        used[v] = 1;
        if (len == 1) {
          self(self, v + 1, weight * loop_weight);
        } else {
          for_each_cycle_at(d, used, v, len, [&] { self(self, v + 1, weight); });
        }
        used[v] = 0;
        auto [pos, inserted] = remaining.try_emplace(len, 0);
        ++pos->second;
        it = std::next(pos);
      }
    }
  };
  rec(rec, 0, 1);
  return count;
}

namespace {

// Partitions of i into parts >= 2, decreasing order.
void for_each_partition_min2(int i, std::vector<int>& parts,
                             const std::function<void(const std::vector<int>&)>& f) {
  if (i == 0) {
    f(parts);
    return;
  }
  int maxpart = parts.empty() ? i : std::min(i, parts.back());
  for (int part = maxpart; part >= 2; --part) {
    if (i - part == 1) continue;  // a lone 1 can never be completed
    parts.push_back(part);
    for_each_partition_min2(i - part, parts, f);
    parts.pop_back();
  }
}

}  // namespace

CharPoly chi_via_cycle_counts(const Poset& p, int cap) {
  check_cap(p, cap);
  const int n = p.size();
  ComparabilityDigraph d = build_digraph(p, DigraphMode::symmetric);
  CharPoly cp;
  cp.a.assign(static_cast<std::size_t>(n) + 1, 0);
  cp.a[0] = 1;
  for (int i = 2; i <= n; ++i) {
    std::vector<int> parts;
    for_each_partition_min2(i, parts, [&](const std::vector<int>& lengths) {
      const int r = static_cast<int>(lengths.size());
      mpz_class f = count_cycle_covers(d, lengths);
      if ((i + r) % 2 == 0)
        cp.a[static_cast<std::size_t>(i)] += f;
      else
        cp.a[static_cast<std::size_t>(i)] -= f;
    });
  }
  return cp;
}

std::vector<mpz_class> c_coefficients(const Poset& p, int cap) {
  check_cap(p, cap);
  const int n = p.size();

  // Route (a): constrained-permutation statistics.  A sigma with l fixed
  // points and r cycles of length > 1 yields a collection with s = r + l
  // components once each fixed point picks one of its two loops.
  std::vector<mpz_class> by_perm(static_cast<std::size_t>(n) + 1, 0);
  enumerate_snp(
      p,
      [&](const ConstrainedPermutation& s) {
        const int r = static_cast<int>(s.cycle_type.size()) - s.fixed_points;
        mpz_class w;
        mpz_ui_pow_ui(w.get_mpz_t(), 2, static_cast<unsigned long>(s.fixed_points));
        by_perm[static_cast<std::size_t>(r + s.fixed_points)] += w;
      },
      cap);

  // Route (b): direct enumeration of disjoint-cycle collections of the
  // loop-free digraph; uncovered vertices become loops with weight 2.
  ComparabilityDigraph d = build_digraph(p, DigraphMode::symmetric);
  std::vector<mpz_class> by_cover(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> used(n, 0);
  int covered = 0;
  int cycles = 0;
  auto record = [&] {
    const int s = cycles + (n - covered);
    mpz_class w;
    mpz_ui_pow_ui(w.get_mpz_t(), 2, static_cast<unsigned long>(n - covered));
    by_cover[static_cast<std::size_t>(s)] += w;
  };
  auto rec = [&](auto&& self, int min_start) -> void {
    record();
    for (int v = min_start; v < n; ++v) {
      if (used[v]) continue;
      for (int len = 2; len <= n - covered; ++len) {
        used[v] = 1;
        covered += len;
        ++cycles;
        for_each_cycle_at(d, used, v, len, [&] { self(self, v + 1); });
        --cycles;
        covered -= len;
        used[v] = 0;
      }
    }
  };
  rec(rec, 0);

  if (by_perm != by_cover)
    throw InternalMismatch("component-count coefficients disagree between routes");
  return {by_perm.begin() + 1, by_perm.end()};
}

mpz_class theorem2_det(const Poset& p, int cap) {
  const int n = p.size();
  std::vector<mpz_class> c = c_coefficients(p, cap);
  mpz_class acc = 0;
  for (int s = 1; s <= n; ++s) {
    if ((n - s) % 2 == 0)
      acc += c[static_cast<std::size_t>(s - 1)];
    else
      acc -= c[static_cast<std::size_t>(s - 1)];
  }
  return acc;
}

}  // namespace zetamat
