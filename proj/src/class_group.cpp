#include "ffdio/class_group.hpp"

#include <numeric>

#include "ffdio/error.hpp"

namespace ffdio {

std::uint64_t torsion_card(const ClassGroupInfo& info, std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "torsion index must be positive");
  std::uint64_t card = 1;
  for (std::uint64_t f : info.invariant_factors) card *= std::gcd(n, f);
  return card;
}

unsigned least_stable_k(const ClassGroupInfo& info, std::uint64_t q) {
  if (q < 2) throw Error(ErrorKind::InvalidArgument, "q must be prime");
  std::uint64_t prev_power = 1;
  std::uint64_t prev = torsion_card(info, 1);
  for (unsigned k = 1;; ++k) {
    // Once q^k exceeds the group order the torsion has stabilised.
    if (prev_power > info.h) return k;
    const std::uint64_t power = prev_power * q;
    const std::uint64_t card = torsion_card(info, power);
    if (card == prev) return k;
    prev = card;
    prev_power = power;
  }
}

}  // namespace ffdio
