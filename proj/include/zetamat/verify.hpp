#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zetamat/cycles.hpp"

namespace zetamat {

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
  double seconds = 0.0;
};

/// Machine-readable verification record; the CLI serializes it as JSON with
/// big integers rendered as decimal strings.
struct Report {
  std::string command;
  std::string poset;  // descriptor of the instance family, when applicable
  std::uint64_t seed = 0;
  bool seeded = false;
  std::vector<Check> checks;

  bool all_pass() const;
  void add(std::string name, std::string expected, std::string actual, double seconds = 0.0);
  std::string to_json() const;
};

// Verification suites behind the CLI `verify` subcommand.  Each runs the
// corresponding identity over a family of instances and records one check
// per instance.
Report verify_chain(int max_n);
Report verify_theorem1(int count, int max_n, std::uint64_t seed);
Report verify_theorem2(int count, int max_n, std::uint64_t seed, int cap = kDefaultEnumerationCap);
Report verify_corollary1(int max_n);
Report verify_boolean(int max_rank);
Report verify_lemma3(int max_rank);
Report verify_lemma4(int max_rank, int rank_cap = 5);
Report verify_eq6(int max_rank, int rank_cap = 5);

}  // namespace zetamat
