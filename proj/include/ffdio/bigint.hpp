#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ffdio {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Exponent of the prime q in v; v must be nonzero.
inline unsigned valuation(BigInt v, std::uint64_t q) {
  unsigned e = 0;
  if (v < 0) v = -v;
  while (v != 0 && v % q == 0) {
    v /= q;
    ++e;
  }
  return e;
}

}  // namespace ffdio
