#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ffdio::cli {

enum ExitCode : int { kOk = 0, kNotCertified = 1, kContradiction = 2, kUsage = 3 };

struct RunConfig {
  std::string subcommand;
  std::string field = "GF(5)";
  std::string backend = "rational";
  std::string a;  // elliptic coefficients when backend == "elliptic"
  std::string f;
  std::string theorem = "torsion";  // torsion | tower | polynomial-ring
  std::string ring = "rational";    // search: rational | elliptic | multivar
  std::uint64_t p = 2;
  std::uint64_t q = 3;
  std::uint64_t n = 0;
  std::uint64_t m = 2, d = 3, r = 1, l = 5;
  unsigned s = 1;  // progression field degree
  unsigned levels = 3;
  unsigned bound = 2;
  std::vector<unsigned> bounds;
  unsigned vars = 1;
  std::optional<unsigned> confront;
  bool base_change = false;
  bool no_prune = false;
  std::string mutation = "none";
  std::string json_path;
  std::uint64_t seed = 0x5eedf00dULL;
  std::uint64_t cap = 10'000'000;
  std::uint64_t cycle_cap = 1'000'000;
  unsigned modulus_bits = 64;
  unsigned workers = 1;
};

/// Runs one subcommand; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ffdio::cli
