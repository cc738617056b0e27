#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ffdio/bigint.hpp"

namespace ffdio {

/// Frobenius trace a1 of a genus-1 curve over a field of size Q.
struct FrobeniusData {
  std::int64_t trace = 0;
  std::uint64_t field_size = 0;

  /// Throws InvalidArgument when the Hasse bound fails.
  static FrobeniusData create(std::int64_t trace, std::uint64_t field_size);
  static FrobeniusData from_point_count(std::uint64_t field_size, std::uint64_t count);

  /// a_n from a_0 = 2, a_n = a1 a_{n-1} - Q a_{n-2}.
  BigInt trace_at(std::uint64_t n) const;
};

/// Q^n + 1 - a_n; n = 0 gives the base class number.
BigInt constant_ext_class_number(const FrobeniusData& frob, std::uint64_t n);

/// det(I - M^n) with M the companion matrix of x^2 - a1 x + Q, exact.
BigInt class_number_by_matrix(const FrobeniusData& frob, std::uint64_t n);

struct TowerOptions {
  std::uint64_t cycle_cap = 1'000'000;
  /// Largest q^K used by the modular computations, in bits.
  unsigned max_modulus_bits = 64;
  /// Exact class numbers are reported for levels with p^n at most this.
  std::uint64_t exact_limit = 4096;
};

struct TowerReport {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  unsigned levels = 0;
  std::vector<unsigned> vq_sequence;              // n = 0..levels
  std::vector<std::optional<BigInt>> class_numbers;  // exact where small enough
  std::optional<unsigned> rigorous_bound;         // p != q only
  unsigned modulus_exponent = 0;                  // K with q^K the bound modulus
  BigInt matrix_order = 0;                        // order of M mod q^K
  std::uint64_t cycle_length = 0;                 // distinct p^n mod order

  unsigned observed_max() const;
};

/// q-adic valuations of the level class numbers of the constant Z_p-tower.
TowerReport tower_qpart(const FrobeniusData& frob, std::uint64_t p, std::uint64_t q, unsigned levels,
                        const TowerOptions& options = {});

/// Genus 0: every level has class number 1.
TowerReport trivial_tower(std::uint64_t p, std::uint64_t q, unsigned levels);

}  // namespace ffdio
