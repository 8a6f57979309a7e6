#include "zetamat/poset.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "zetamat/errors.hpp"

namespace zetamat {

namespace {

// Bitset rows for the closure / validation steps.
struct BitRows {
  int n;
  int words;
  std::vector<std::uint64_t> bits;

  explicit BitRows(int n_) : n(n_), words((n_ + 63) / 64), bits(static_cast<std::size_t>(n_) * words) {}

  void set(int i, int j) { bits[static_cast<std::size_t>(i) * words + j / 64] |= 1ull << (j % 64); }
  bool get(int i, int j) const {
    return (bits[static_cast<std::size_t>(i) * words + j / 64] >> (j % 64)) & 1u;
  }
  void or_row(int dst, int src) {
    auto* d = &bits[static_cast<std::size_t>(dst) * words];
    const auto* s = &bits[static_cast<std::size_t>(src) * words];
    for (int w = 0; w < words; ++w) d[w] |= s[w];
  }
};

void validate(const Poset& p) {
  const int n = p.size();
  for (int i = 0; i < n; ++i) {
    if (!p.leq(i, i)) throw Error("relation is not reflexive");
    for (int j = 0; j < n; ++j) {
      if (i != j && p.leq(i, j) && p.leq(j, i)) throw Error("relation is not antisymmetric");
      if (p.leq(i, j) && i != j && i > j) throw Error("labelling is not admissible");
    }
  }
  // Transitivity: the row of j must be contained in the row of i when i <= j.
  BitRows rows(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.leq(i, j)) rows.set(i, j);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!p.leq(i, j)) continue;
      for (int w = 0; w < rows.words; ++w) {
        auto ri = rows.bits[static_cast<std::size_t>(i) * rows.words + w];
        auto rj = rows.bits[static_cast<std::size_t>(j) * rows.words + w];
        if ((rj & ~ri) != 0) throw Error("relation is not transitive");
      }
    }
  }
}

}  // namespace

Poset::Poset(int n, std::vector<std::uint8_t> leq_table, std::vector<std::string> labels)
    : n_(n), leq_(std::move(leq_table)), labels_(std::move(labels)) {
  if (n_ <= 0) throw Error("poset must be nonempty");
  if (leq_.size() != static_cast<std::size_t>(n_) * n_) throw ShapeMismatch("leq table size");
  if (labels_.empty()) {
    labels_.reserve(n_);
    for (int i = 0; i < n_; ++i) labels_.push_back(std::to_string(i + 1));
  }
  if (labels_.size() != static_cast<std::size_t>(n_)) throw ShapeMismatch("label count");
  validate(*this);
}

std::vector<std::pair<int, int>> Poset::cover_relations() const {
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (!leq(i, j)) continue;
      bool is_cover = true;
      for (int z = i + 1; z < j && is_cover; ++z)
        if (leq(i, z) && leq(z, j)) is_cover = false;
      if (is_cover) covers.emplace_back(i, j);
    }
  }
  return covers;
}

Poset from_cover_relations(int n, const std::vector<std::pair<int, int>>& covers) {
  if (n <= 0) throw IndexOutOfRange("n must be positive");
  std::vector<std::vector<int>> out(n);
  std::vector<int> indeg(n, 0);
  for (auto [a, b] : covers) {
    if (a < 1 || a > n || b < 1 || b > n)
      throw IndexOutOfRange("cover pair out of 1.." + std::to_string(n));
    if (a == b) throw CycleDetected("self-relation " + std::to_string(a));
    out[a - 1].push_back(b - 1);
    ++indeg[b - 1];
  }

  // Lexicographically smallest topological order of the original indices.
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push(v);
  std::vector<int> order;                // order[new] = old
  std::vector<int> new_index(n, -1);     // old -> new
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    new_index[v] = static_cast<int>(order.size());
    order.push_back(v);
    for (int w : out[v])
      if (--indeg[w] == 0) ready.push(w);
  }
  if (static_cast<int>(order.size()) != n) throw CycleDetected("relations contain a directed cycle");

  // Reflexive-transitive closure in the new labelling (reverse topological order).
  BitRows rows(n);
  for (int i = 0; i < n; ++i) rows.set(i, i);
  for (int i = n - 1; i >= 0; --i)
    for (int w : out[order[i]]) rows.or_row(i, new_index[w]);

  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rows.get(i, j)) leq[static_cast<std::size_t>(i) * n + j] = 1;

  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = std::to_string(order[i] + 1);
  return Poset(n, std::move(leq), std::move(labels));
}

Poset chain(int n) {
  if (n <= 0) throw IndexOutOfRange("chain size must be positive");
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) leq[static_cast<std::size_t>(i) * n + j] = 1;
  return Poset(n, std::move(leq));
}

Poset boolean_algebra(int rank, int rank_cap) {
  if (rank < 0) throw IndexOutOfRange("rank must be nonnegative");
  if (rank > rank_cap) throw RankTooLarge("rank " + std::to_string(rank) + " exceeds cap");
  const int n = 1 << rank;
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((i & j) == i) leq[static_cast<std::size_t>(i) * n + j] = 1;
  std::vector<std::string> labels(n);
  for (int m = 0; m < n; ++m) {
    std::string s(static_cast<std::size_t>(rank), '0');
    for (int b = 0; b < rank; ++b)
      if (m & (1 << (rank - 1 - b))) s[static_cast<std::size_t>(b)] = '1';
    labels[m] = s;
  }
  return Poset(n, std::move(leq), std::move(labels));
}

Poset divisor_poset(long long n) {
  if (n <= 0) throw IndexOutOfRange("n must be positive");
  std::vector<long long> divs;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      divs.push_back(d);
      if (d != n / d) divs.push_back(n / d);
    }
  }
  std::sort(divs.begin(), divs.end());
  const int m = static_cast<int>(divs.size());
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (divs[j] % divs[i] == 0) leq[static_cast<std::size_t>(i) * m + j] = 1;
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) labels[i] = std::to_string(divs[i]);
  return Poset(m, std::move(leq), std::move(labels));
}

Interval interval(const Poset& p, int i, int j) {
  if (i < 0 || j < 0 || i >= p.size() || j >= p.size()) throw IndexOutOfRange("interval endpoints");
  if (!p.leq(i, j))
    throw NotComparable("elements " + std::to_string(i + 1) + " and " + std::to_string(j + 1));
  Interval iv;
  iv.bottom = i;
  iv.top = j;
  for (int z = i; z <= j; ++z)
    if (p.leq(i, z) && p.leq(z, j)) iv.members.push_back(z);
  return iv;
}

}  // namespace zetamat
