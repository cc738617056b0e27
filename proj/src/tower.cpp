#include "ffdio/tower.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "ffdio/arith.hpp"
#include "ffdio/error.hpp"

namespace ffdio {

namespace {

using Mat = std::array<BigInt, 4>;  // row-major 2x2

BigInt reduce(BigInt v, const BigInt& mod) {
  if (mod == 0) return v;
  v %= mod;
  if (v < 0) v += mod;
  return v;
}

Mat mat_mul(const Mat& a, const Mat& b, const BigInt& mod) {
  return {reduce(a[0] * b[0] + a[1] * b[2], mod), reduce(a[0] * b[1] + a[1] * b[3], mod),
          reduce(a[2] * b[0] + a[3] * b[2], mod), reduce(a[2] * b[1] + a[3] * b[3], mod)};
}

Mat identity() { return {1, 0, 0, 1}; }

Mat mat_pow(Mat base, BigInt e, const BigInt& mod) {
  Mat r = identity();
  if (mod != 0) {
    for (auto& v : base) v = reduce(v, mod);
    for (auto& v : r) v = reduce(v, mod);
  }
  while (e > 0) {
    if ((e & 1) != 0) r = mat_mul(r, base, mod);
    e >>= 1;
    if (e > 0) base = mat_mul(base, base, mod);
  }
  return r;
}

Mat companion(const FrobeniusData& frob) {
  return {0, -BigInt(frob.field_size), 1, BigInt(frob.trace)};
}

/// det(I - A) = 1 - tr A + det A.
BigInt det_one_minus(const Mat& a, const BigInt& mod) {
  return reduce(1 - (a[0] + a[3]) + (a[0] * a[3] - a[1] * a[2]), mod);
}

BigInt big_pow(std::uint64_t base, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

unsigned bits(const BigInt& v) { return v == 0 ? 0 : static_cast<unsigned>(msb(v)) + 1; }

/// Multiplicative order of m (invertible mod q^k) in GL2(Z/q^k).
BigInt matrix_order(const Mat& m, std::uint64_t q, unsigned k, const BigInt& mod) {
  // |GL2(Z/q^k)| = q^(4(k-1)) * q (q-1)^2 (q+1)
  std::vector<std::pair<std::uint64_t, unsigned>> factors;
  auto add_factor = [&](std::uint64_t r, unsigned e) {
    for (auto& f : factors) {
      if (f.first == r) {
        f.second += e;
        return;
      }
    }
    factors.emplace_back(r, e);
  };
  add_factor(q, 4 * (k - 1) + 1);
  for (std::uint64_t n : {q - 1, q - 1, q + 1}) {
    for (std::uint64_t r : prime_divisors(n)) {
      unsigned e = 0;
      for (std::uint64_t t = n; t % r == 0; t /= r) ++e;
      add_factor(r, e);
    }
  }
  BigInt order = 1;
  for (const auto& [r, e] : factors) order *= big_pow(r, e);
  const Mat id = mat_pow(identity(), 0, mod);
  for (const auto& [r, e] : factors) {
    for (unsigned i = 0; i < e && order % r == 0; ++i) {
      if (mat_pow(m, order / r, mod) != id) break;
      order /= r;
    }
  }
  return order;
}

/// p^n as a matrix power: n successive p-th powers.
Mat level_power(const Mat& m, std::uint64_t p, unsigned n, const BigInt& mod) {
  Mat r = m;
  for (unsigned i = 0; i < n; ++i) r = mat_pow(r, p, mod);
  return r;
}

unsigned level_valuation(const FrobeniusData& frob, std::uint64_t p, std::uint64_t q, unsigned n,
                         const TowerOptions& options) {
  const Mat m = companion(frob);
  for (unsigned k = 8;; k *= 2) {
    const BigInt mod = big_pow(q, k);
    if (bits(mod) > std::max(options.max_modulus_bits, 8u) * 4) break;
    const BigInt d = det_one_minus(level_power(m, p, n, mod), mod);
    if (d != 0) return valuation(d, q);
  }
  throw Error(ErrorKind::CycleCapExceeded,
              "class number at level " + std::to_string(n) + " vanishes modulo the largest power of " +
                  std::to_string(q) + " allowed");
}

}  // namespace

FrobeniusData FrobeniusData::create(std::int64_t trace, std::uint64_t field_size) {
  const BigInt t = trace;
  if (field_size < 2 || t * t > 4 * BigInt(field_size)) {
    throw Error(ErrorKind::InvalidArgument, "trace " + std::to_string(trace) +
                                                " violates the Hasse bound for Q = " +
                                                std::to_string(field_size));
  }
  return {trace, field_size};
}

FrobeniusData FrobeniusData::from_point_count(std::uint64_t field_size, std::uint64_t count) {
  return create(static_cast<std::int64_t>(field_size + 1) - static_cast<std::int64_t>(count), field_size);
}

BigInt FrobeniusData::trace_at(std::uint64_t n) const {
  BigInt prev = 2, cur = trace;
  if (n == 0) return prev;
  for (std::uint64_t i = 1; i < n; ++i) {
    BigInt next = BigInt(trace) * cur - BigInt(field_size) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt constant_ext_class_number(const FrobeniusData& frob, std::uint64_t n) {
  if (n == 0) n = 1;
  BigInt qn = 1;
  for (std::uint64_t i = 0; i < n; ++i) qn *= frob.field_size;
  return qn + 1 - frob.trace_at(n);
}

BigInt class_number_by_matrix(const FrobeniusData& frob, std::uint64_t n) {
  if (n == 0) n = 1;
  return det_one_minus(mat_pow(companion(frob), n, 0), 0);
}

unsigned TowerReport::observed_max() const {
  unsigned m = 0;
  for (unsigned v : vq_sequence) m = std::max(m, v);
  return m;
}

TowerReport tower_qpart(const FrobeniusData& frob, std::uint64_t p, std::uint64_t q, unsigned levels,
                        const TowerOptions& options) {
  if (!is_prime(p) || !is_prime(q)) throw Error(ErrorKind::NotPrime, "tower primes must be prime");
  if (frob.field_size % q == 0) {
    throw Error(ErrorKind::CharacteristicClash, "q must differ from the characteristic");
  }
  TowerReport report;
  report.p = p;
  report.q = q;
  report.levels = levels;
  std::uint64_t m = 1;
  bool exact = true;
  for (unsigned n = 0; n <= levels; ++n) {
    if (exact) {
      const BigInt h = constant_ext_class_number(frob, m);
      report.class_numbers.push_back(h);
      report.vq_sequence.push_back(valuation(h, q));
    } else {
      report.class_numbers.push_back(std::nullopt);
      report.vq_sequence.push_back(level_valuation(frob, p, q, n, options));
    }
    if (exact && (m > options.exact_limit / p)) exact = false;
    if (exact) m *= p;
  }
  if (p == q) return report;

  const Mat mat = companion(frob);
  for (unsigned k = 1;; ++k) {
    const BigInt mod = big_pow(q, k);
    if (bits(mod) > options.max_modulus_bits) {
      throw Error(ErrorKind::CycleCapExceeded,
                  "cycle bound needs a modulus beyond 2^" + std::to_string(options.max_modulus_bits));
    }
    const BigInt order = matrix_order(mat, q, k, mod);
    std::set<BigInt> residues;
    BigInt r = reduce(1, order);
    while (residues.insert(r).second) {
      if (residues.size() > options.cycle_cap) {
        throw Error(ErrorKind::CycleCapExceeded,
                    "p^n modulo the matrix order has more than " + std::to_string(options.cycle_cap) +
                        " values");
      }
      r = reduce(r * p, order);
    }
    unsigned bound = 0;
    bool all_nonzero = true;
    for (const BigInt& e : residues) {
      const BigInt d = det_one_minus(mat_pow(mat, e == 0 ? order : e, mod), mod);
      if (d == 0) {
        all_nonzero = false;
        break;
      }
      bound = std::max(bound, valuation(d, q));
    }
    if (!all_nonzero) continue;
    report.rigorous_bound = bound;
    report.modulus_exponent = k;
    report.matrix_order = order;
    report.cycle_length = residues.size();
    break;
  }
  if (report.observed_max() > *report.rigorous_bound) {
    throw Error(ErrorKind::InternalContradiction, "observed valuation exceeds the cycle bound");
  }
  return report;
}

TowerReport trivial_tower(std::uint64_t p, std::uint64_t q, unsigned levels) {
  TowerReport report;
  report.p = p;
  report.q = q;
  report.levels = levels;
  report.vq_sequence.assign(levels + 1, 0);
  report.class_numbers.assign(levels + 1, BigInt(1));
  if (p != q) {
    report.rigorous_bound = 0;
    report.modulus_exponent = 1;
    report.matrix_order = 1;
    report.cycle_length = 1;
  }
  return report;
}

}  // namespace ffdio
