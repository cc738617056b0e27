#include "doctest.h"
#include "ffdio/elliptic.hpp"
#include "ffdio/error.hpp"
#include "ffdio/parse.hpp"
#include "ffdio/valuations.hpp"

using namespace ffdio;

namespace {

Field gf(std::uint64_t l, unsigned s = 1) { return Field::create(l, s); }

Poly P(const Field& k, const std::string& text) { return parse_poly(k, text, "T"); }

EllipticRing curve_ring() { return EllipticRing(EllipticModel::create(gf(5), {0, 0, 0, 1, 1})); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InternalContradiction;
}

template <class V>
void check_instance(const V& v) {
  CAPTURE(v.name());
  CHECK(v.value(v.one()) == 0);
  const AxiomReport r = axioms_check(v, 500, 42);
  CHECK(r.samples == 500);
  for (const auto& a : r.axioms) {
    CAPTURE(a.axiom);
    CAPTURE(a.witness);
    CHECK(a.failures == 0);
    CHECK(a.checked > 0);
  }
  CHECK(r.passed());
  const LawSuiteReport law = power_difference_suite(v, 1000, 43);
  CHECK(law.failures == 0);
}

}  // namespace

TEST_CASE("axioms hold for every instance") {
  for (std::uint64_t l : {2, 3, 5, 7}) check_instance(DegreeValuation(gf(l)));
  check_instance(DegreeValuation(gf(3, 2)));
  check_instance(PoleOrderValuation(curve_ring()));
  check_instance(PoleOrderValuation(EllipticRing(EllipticModel::create(gf(3), {0, 0, 0, 2, 0}))));
  check_instance(PoleOrderValuation(EllipticRing(EllipticModel::create(gf(2), {1, 0, 0, 0, 1}))));
  for (unsigned i = 0; i < 2; ++i) check_instance(VariableDegreeValuation(gf(5), 2, i));
  check_instance(VariableDegreeValuation(gf(3), 3, 2));
}

TEST_CASE("axiom report lists the expected axioms") {
  const auto names = [](const AxiomReport& r) {
    std::vector<std::string> out;
    for (const auto& a : r.axioms) out.push_back(a.axiom);
    return out;
  };
  const auto deg = names(axioms_check(DegreeValuation(gf(5)), 10, 1));
  CHECK(std::find(deg.begin(), deg.end(), "zero_only_on_constants") != deg.end());
  for (const char* a : {"unit", "non_negative", "multiplicative", "ultrametric", "dominance"}) {
    CHECK(std::find(deg.begin(), deg.end(), a) != deg.end());
  }
  const auto var = names(axioms_check(VariableDegreeValuation(gf(5), 2, 0), 10, 1));
  CHECK(std::find(var.begin(), var.end(), "zero_only_on_constants") == var.end());
}

TEST_CASE("degree valuation examples") {
  const DegreeValuation v(gf(5));
  CHECK(v.value(P(gf(5), "T*(T+1)")) == 2);
  CHECK(v.value(P(gf(5), "T")) + v.value(P(gf(5), "T+1")) == 2);
  CHECK(v.value(P(gf(5), "3")) == 0);
}

TEST_CASE("power difference bound examples") {
  const Field k = gf(5);
  const DegreeValuation v(k);
  auto r = check_power_difference_bound(v, P(k, "T+1"), P(k, "T"), 2);
  CHECK(r.c == "2*T+1");
  CHECK(r.d_f == 1);
  CHECK(r.d_g == 1);
  CHECK(r.d_c == 1);
  CHECK(r.holds);

  r = check_power_difference_bound(v, P(k, "T^2"), P(k, "T^2+T"), 3);
  CHECK(r.d_c == 5);
  CHECK(r.d_f == 2);
  CHECK(r.holds);
  CHECK(P(k, r.c) == P(k, "T^6") - P(k, "(T^2+T)^3"));

  r = check_power_difference_bound(v, P(k, "2"), P(k, "1"), 3);
  CHECK(r.d_f == 0);
  CHECK(r.d_c == 0);
  CHECK(r.holds);

  CHECK(kind_of([&] { check_power_difference_bound(v, P(k, "T"), P(k, "1"), 5); }) ==
        ErrorKind::CharacteristicClash);
  CHECK(kind_of([&] { check_power_difference_bound(v, P(k, "T"), P(k, "T"), 2); }) == ErrorKind::EqualInputs);
  // 4^2 = 1^2 in GF(5): f != g but c = 0.
  CHECK(kind_of([&] { check_power_difference_bound(v, P(k, "4*T"), P(k, "T"), 2); }) ==
        ErrorKind::EqualInputs);
  CHECK(kind_of([&] { check_power_difference_bound(v, P(k, "T"), P(k, "1"), 4); }) == ErrorKind::NotPrime);
}

TEST_CASE("exhaustive power difference bound on small polynomials") {
  // Every pair of nonzero polynomials of degree <= 2 over GF(3), q = 2 and 5.
  const Field k = gf(3);
  const DegreeValuation v(k);
  std::vector<Poly> polys;
  for (Elt i = 1; i < 27; ++i) polys.emplace_back(k, std::vector<Elt>{i % 3, i / 3 % 3, i / 9});
  std::uint64_t checked = 0;
  for (std::uint64_t q : {2, 5}) {
    for (const auto& f : polys) {
      for (const auto& g : polys) {
        const Poly c = f.pow(q) - g.pow(q);
        if (c.is_zero()) continue;
        const auto r = check_power_difference_bound(v, f, g, q);
        REQUIRE(r.holds);
        CHECK(r.d_c >= std::max(f.degree(), g.degree()));
        ++checked;
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("pole order examples") {
  const EllipticRing ring = curve_ring();
  const PoleOrderValuation v(ring);
  CHECK(v.value(ring.x()) == 2);
  CHECK(v.value(ring.y()) == 3);
  CHECK(v.value(ring.monomial(2, 1)) == 7);
  CHECK(v.value(ring.mul(ring.mul(ring.x(), ring.x()), ring.y())) == 7);
  CHECK(v.value(ring.one()) == 0);
  CHECK(v.value(ring.mul(ring.y(), ring.y())) == 6);
  CHECK(kind_of([&] { elliptic_pole_order(ring.zero()); }) == ErrorKind::ZeroElement);
  // Pole order 0 only on constants.
  for (const auto& u : ring_of_integers_enumerate(ring, 4)) {
    if (u.is_zero()) continue;
    CHECK((v.value(u) == 0) == u.is_constant());
  }
}

TEST_CASE("dominance examples") {
  const Field k = gf(5);
  const DegreeValuation v(k);
  auto r = dominance_check(v, P(k, "T^2"), P(k, "T"));
  CHECK(r.applicable);
  CHECK(r.d_sum == 2);
  CHECK(r.holds);
  r = dominance_check(v, P(k, "T"), P(k, "3*T"));
  CHECK(!r.applicable);
  CHECK(r.holds);
  CHECK(kind_of([&] { dominance_check(v, P(k, "T"), P(k, "4*T")); }) == ErrorKind::ZeroElement);

  const EllipticRing ring = curve_ring();
  const PoleOrderValuation pv(ring);
  const auto e = dominance_check(pv, ring.mul(ring.x(), ring.x()), ring.y());
  CHECK(e.d_sum == 4);
  CHECK(e.holds);
}

TEST_CASE("the T-adic order is rejected") {
  const TAdicOrderValuation bad(gf(3));
  CHECK(bad.value(P(gf(3), "T^2+T")) == 1);
  const AxiomReport r = axioms_check(bad, 200, 42);
  CHECK(!r.passed());
  bool dominance_failed = false;
  for (const auto& a : r.axioms) {
    if (a.axiom == "dominance" && a.failures > 0) dominance_failed = true;
  }
  CHECK(dominance_failed);
  const auto d = dominance_check(bad, P(gf(3), "T"), P(gf(3), "1"));
  CHECK(d.applicable);
  CHECK(!d.holds);
  CHECK(!power_difference_suite(bad, 200, 42).passed());
}

TEST_CASE("ring kind names") {
  CHECK(to_string(RingKind::RationalPoly) == "rational_poly");
  CHECK(to_string(RingKind::EllipticIntegers) == "elliptic_integers");
  CHECK(to_string(RingKind::MultivarPoly) == "multivar_poly");
}
