#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ffdio/field.hpp"
#include "ffdio/json_io.hpp"

namespace ffdio {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::uint64_t checks = 0;
  std::string witness;  // first failure
};

struct SelftestReport {
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;

  bool passed() const;
};

enum class Mutation { None, Dominance };

/// Factor random monic polynomials (a share of them of the form h(X^l)) and
/// check product, monicity, irreducibility and distinctness of the factors.
struct RoundTripStats {
  std::uint64_t checked = 0;
  std::uint64_t inseparable = 0;
  std::uint64_t failures = 0;
  std::string witness;
};
RoundTripStats factor_round_trip(const Field& field, std::uint64_t count, unsigned max_degree, std::uint64_t seed);

/// Valuation laws, factorization round trips, point counts and certificate
/// confrontations at fixed sizes. Mutation::Dominance swaps the degree on
/// GF(3)[T] for the T-adic order.
SelftestReport run_selftest(std::uint64_t seed, Mutation mutation = Mutation::None);

Json to_json(const SelftestReport& r);

}  // namespace ffdio
