#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace ffdio {

bool is_prime(std::uint64_t n);

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// base^exp, or nullopt on overflow of 64 bits.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp);

}  // namespace ffdio
