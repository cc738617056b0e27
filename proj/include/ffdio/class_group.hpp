#pragma once

#include <cstdint>
#include <vector>

namespace ffdio {

/// Degree-zero divisor class group as Z/n1 x Z/n2 (n1 | n2) for genus 1, or
/// the trivial group (no factors) for genus 0.
struct ClassGroupInfo {
  std::uint64_t h = 1;
  std::vector<std::uint64_t> invariant_factors;

  static ClassGroupInfo trivial() { return {}; }
};

/// Cardinality of the N-torsion: prod gcd(N, n_i).
std::uint64_t torsion_card(const ClassGroupInfo& info, std::uint64_t n);

/// Least k >= 1 with torsion_card(q^k) == torsion_card(q^(k-1)).
unsigned least_stable_k(const ClassGroupInfo& info, std::uint64_t q);

}  // namespace ffdio
