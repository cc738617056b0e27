#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ffdio/arith.hpp"
#include "ffdio/elliptic.hpp"
#include "ffdio/error.hpp"
#include "ffdio/mpoly.hpp"
#include "ffdio/poly.hpp"

namespace ffdio {

enum class RingKind { RationalPoly, EllipticIntegers, MultivarPoly };

std::string to_string(RingKind kind);

/// Degree on kappa[T].
class DegreeValuation {
 public:
  using Element = Poly;
  static constexpr bool kZeroOnlyOnConstants = true;

  explicit DegreeValuation(Field field, unsigned max_random_degree = 6)
      : field_(std::move(field)), max_degree_(max_random_degree) {}

  std::string name() const { return "degree on " + field_.to_string() + "[T]"; }
  RingKind kind() const { return RingKind::RationalPoly; }
  std::uint64_t characteristic() const { return field_.characteristic(); }
  long value(const Poly& f) const;

  Poly one() const { return Poly::constant(field_, 1); }
  bool is_zero(const Poly& f) const { return f.is_zero(); }
  bool is_constant(const Poly& f) const { return f.degree() <= 0; }
  Poly add(const Poly& a, const Poly& b) const { return a + b; }
  Poly sub(const Poly& a, const Poly& b) const { return a - b; }
  Poly mul(const Poly& a, const Poly& b) const { return a * b; }
  Poly pow(const Poly& a, std::uint64_t n) const { return a.pow(n); }
  Poly random_nonzero(std::mt19937_64& rng) const;
  std::string format(const Poly& f) const { return f.to_string("T"); }

 protected:
  Field field_;
  unsigned max_degree_;
};

/// Order of vanishing at T = 0. Satisfies the min-form sum rule, so it is
/// not a valuation in the pole-order sense; used as a negative control.
class TAdicOrderValuation : public DegreeValuation {
 public:
  using DegreeValuation::DegreeValuation;

  std::string name() const { return "T-adic order on " + field_.to_string() + "[T]"; }
  long value(const Poly& f) const;
};

/// Pole order at infinity on the elliptic ring of integers.
class PoleOrderValuation {
 public:
  using Element = EllipticElement;
  static constexpr bool kZeroOnlyOnConstants = true;

  explicit PoleOrderValuation(EllipticRing ring, unsigned max_random_pole = 8)
      : ring_(std::move(ring)), max_pole_(max_random_pole) {}

  std::string name() const { return "pole order at infinity on " + ring_.model().to_string(); }
  RingKind kind() const { return RingKind::EllipticIntegers; }
  std::uint64_t characteristic() const { return ring_.field().characteristic(); }
  long value(const EllipticElement& u) const { return elliptic_pole_order(u); }
  const EllipticRing& ring() const { return ring_; }

  EllipticElement one() const { return ring_.one(); }
  bool is_zero(const EllipticElement& u) const { return u.is_zero(); }
  bool is_constant(const EllipticElement& u) const { return u.is_constant(); }
  EllipticElement add(const EllipticElement& a, const EllipticElement& b) const { return ring_.add(a, b); }
  EllipticElement sub(const EllipticElement& a, const EllipticElement& b) const { return ring_.sub(a, b); }
  EllipticElement mul(const EllipticElement& a, const EllipticElement& b) const { return ring_.mul(a, b); }
  EllipticElement pow(const EllipticElement& a, std::uint64_t n) const { return ring_.pow(a, n); }
  EllipticElement random_nonzero(std::mt19937_64& rng) const;
  std::string format(const EllipticElement& u) const { return ring_.to_string(u); }

 private:
  EllipticRing ring_;
  unsigned max_pole_;
};

/// Degree in one variable on K[T1..Tr].
class VariableDegreeValuation {
 public:
  using Element = MPoly;
  static constexpr bool kZeroOnlyOnConstants = false;  // d_i(T_j) = 0 for j != i

  VariableDegreeValuation(Field field, unsigned num_vars, unsigned index, unsigned max_random_degree = 2);

  std::string name() const;
  RingKind kind() const { return RingKind::MultivarPoly; }
  std::uint64_t characteristic() const { return field_.characteristic(); }
  long value(const MPoly& g) const { return per_var_degree(g, index_); }

  MPoly one() const { return MPoly::constant(field_, num_vars_, 1); }
  bool is_zero(const MPoly& g) const { return g.is_zero(); }
  bool is_constant(const MPoly& g) const { return g.is_constant(); }
  MPoly add(const MPoly& a, const MPoly& b) const { return a + b; }
  MPoly sub(const MPoly& a, const MPoly& b) const { return a - b; }
  MPoly mul(const MPoly& a, const MPoly& b) const { return a * b; }
  MPoly pow(const MPoly& a, std::uint64_t n) const { return a.pow(n); }
  MPoly random_nonzero(std::mt19937_64& rng) const;
  std::string format(const MPoly& g) const { return g.to_string(); }

 private:
  Field field_;
  unsigned num_vars_;
  unsigned index_;
  unsigned max_degree_;
};

struct AxiomOutcome {
  std::string axiom;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::string witness;  // first failure
};

struct AxiomReport {
  std::string instance;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<AxiomOutcome> axioms;

  bool passed() const {
    for (const auto& a : axioms) {
      if (a.failures) return false;
    }
    return true;
  }
};

struct PowerDifferenceReport {
  std::string f;
  std::string g;
  std::string c;
  std::uint64_t q = 0;
  long d_f = 0;
  long d_g = 0;
  long d_c = 0;
  bool holds = false;
};

struct LawSuiteReport {
  std::string instance;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t failures = 0;
  std::optional<PowerDifferenceReport> witness;

  bool passed() const { return failures == 0; }
};

struct DominanceReport {
  long d_f = 0;
  long d_g = 0;
  long d_sum = 0;
  bool applicable = false;  // d(f) != d(g)
  bool holds = true;
};

namespace detail {

inline std::string valuation_witness(const std::string& a, const std::string& b, long da, long db,
                                     const std::string& extra) {
  return "a=" + a + ", b=" + b + ", d(a)=" + std::to_string(da) + ", d(b)=" + std::to_string(db) +
         (extra.empty() ? "" : ", " + extra);
}

inline void record(AxiomOutcome& o, bool ok, const std::string& witness) {
  ++o.checked;
  if (!ok && o.failures++ == 0) o.witness = witness;
}

}  // namespace detail

/// Randomized check of d(1) = 0, non-negativity, multiplicativity, the
/// ultrametric bound, max-dominance and, where it applies, "d = 0 only on
/// constants".
template <class V>
AxiomReport axioms_check(const V& v, std::uint64_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  AxiomReport report{v.name(), samples, seed, {}};
  AxiomOutcome unit{"unit", 0, 0, {}}, nonneg{"non_negative", 0, 0, {}}, mult{"multiplicative", 0, 0, {}},
      ultra{"ultrametric", 0, 0, {}}, dom{"dominance", 0, 0, {}}, consts{"zero_only_on_constants", 0, 0, {}};
  const long d_one = v.value(v.one());
  detail::record(unit, d_one == 0, "d(1)=" + std::to_string(d_one));
  for (std::uint64_t i = 0; i < samples; ++i) {
    const auto a = v.random_nonzero(rng);
    const auto b = v.random_nonzero(rng);
    const long da = v.value(a), db = v.value(b);
    const std::string sa = v.format(a), sb = v.format(b);
    detail::record(nonneg, da >= 0 && db >= 0, detail::valuation_witness(sa, sb, da, db, ""));
    const long dab = v.value(v.mul(a, b));
    detail::record(mult, dab == da + db,
                   detail::valuation_witness(sa, sb, da, db, "d(ab)=" + std::to_string(dab)));
    if constexpr (V::kZeroOnlyOnConstants) {
      detail::record(consts, (da == 0) == v.is_constant(a), detail::valuation_witness(sa, sb, da, db, ""));
    }
    const auto s = v.add(a, b);
    if (v.is_zero(s)) continue;
    const long ds = v.value(s);
    const std::string ws = detail::valuation_witness(sa, sb, da, db, "d(a+b)=" + std::to_string(ds));
    detail::record(ultra, ds <= std::max(da, db), ws);
    if (da != db) detail::record(dom, ds == std::max(da, db), ws);
  }
  report.axioms = {unit, nonneg, mult, ultra, dom};
  if constexpr (V::kZeroOnlyOnConstants) report.axioms.push_back(consts);
  return report;
}

/// With c = f^q - g^q, reports whether d(f) <= d(c) and d(g) <= d(c).
/// Throws CharacteristicClash when q is the characteristic, EqualInputs when
/// f^q == g^q (f == g, or f/g a q-th root of unity in the constants).
template <class V>
PowerDifferenceReport check_power_difference_bound(const V& v, const typename V::Element& f,
                                                   const typename V::Element& g, std::uint64_t q) {
  if (!is_prime(q)) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not prime");
  if (q == v.characteristic()) {
    throw Error(ErrorKind::CharacteristicClash, "q equals the characteristic " + std::to_string(q));
  }
  if (f == g) throw Error(ErrorKind::EqualInputs, "f and g coincide");
  if (v.is_zero(f) || v.is_zero(g)) throw Error(ErrorKind::ZeroElement, "f and g must be nonzero");
  const auto c = v.sub(v.pow(f, q), v.pow(g, q));
  if (v.is_zero(c)) throw Error(ErrorKind::EqualInputs, "f^q and g^q coincide");
  PowerDifferenceReport r;
  r.f = v.format(f);
  r.g = v.format(g);
  r.c = v.format(c);
  r.q = q;
  r.d_f = v.value(f);
  r.d_g = v.value(g);
  r.d_c = v.value(c);
  r.holds = r.d_f <= r.d_c && r.d_g <= r.d_c;
  return r;
}

/// Random (f, g, q) triples with q drawn from `primes` minus the characteristic.
template <class V>
LawSuiteReport power_difference_suite(const V& v, std::uint64_t samples, std::uint64_t seed,
                                      const std::vector<std::uint64_t>& primes = {2, 3, 5}) {
  std::vector<std::uint64_t> qs;
  for (std::uint64_t q : primes) {
    if (q != v.characteristic()) qs.push_back(q);
  }
  if (qs.empty()) throw Error(ErrorKind::InvalidArgument, "no admissible q");
  std::mt19937_64 rng(seed);
  LawSuiteReport report{v.name(), samples, seed, 0, std::nullopt};
  for (std::uint64_t i = 0; i < samples; ++i) {
    const std::uint64_t q = qs[rng() % qs.size()];
    const auto f = v.random_nonzero(rng);
    auto g = v.random_nonzero(rng);
    while (v.is_zero(v.sub(v.pow(f, q), v.pow(g, q)))) g = v.random_nonzero(rng);
    auto r = check_power_difference_bound(v, f, g, q);
    if (!r.holds && report.failures++ == 0) report.witness = std::move(r);
  }
  return report;
}

/// When d(f) != d(g), checks d(f+g) = max(d(f), d(g)).
template <class V>
DominanceReport dominance_check(const V& v, const typename V::Element& f, const typename V::Element& g) {
  const auto s = v.add(f, g);
  if (v.is_zero(f) || v.is_zero(g) || v.is_zero(s)) {
    throw Error(ErrorKind::ZeroElement, "f, g and f+g must be nonzero");
  }
  DominanceReport r;
  r.d_f = v.value(f);
  r.d_g = v.value(g);
  r.d_sum = v.value(s);
  r.applicable = r.d_f != r.d_g;
  r.holds = !r.applicable || r.d_sum == std::max(r.d_f, r.d_g);
  return r;
}

}  // namespace ffdio
