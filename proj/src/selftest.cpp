#include "ffdio/selftest.hpp"

#include <random>
#include <set>

#include "ffdio/backend.hpp"
#include "ffdio/catalog.hpp"
#include "ffdio/certify.hpp"
#include "ffdio/factor.hpp"
#include "ffdio/parse.hpp"
#include "ffdio/search.hpp"
#include "ffdio/tower.hpp"
#include "ffdio/valuations.hpp"

namespace ffdio {

namespace {

Poly random_monic(const Field& f, unsigned degree, std::mt19937_64& rng) {
  std::vector<Elt> c(degree + 1);
  for (auto& v : c) v = rng() % f.order();
  c[degree] = 1;
  return Poly(f, std::move(c));
}

template <class V>
SuiteResult axiom_suite(const V& v, std::uint64_t samples, std::uint64_t seed) {
  const AxiomReport r = axioms_check(v, samples, seed);
  SuiteResult s{"axioms: " + v.name(), r.passed(), 0, {}};
  for (const auto& a : r.axioms) {
    s.checks += a.checked;
    if (a.failures && s.witness.empty()) s.witness = a.axiom + ": " + a.witness;
  }
  return s;
}

template <class V>
SuiteResult law_suite(const V& v, std::uint64_t samples, std::uint64_t seed) {
  const LawSuiteReport r = power_difference_suite(v, samples, seed);
  SuiteResult s{"power difference bound: " + v.name(), r.passed(), r.samples, {}};
  if (r.witness) {
    const auto& w = *r.witness;
    s.witness = "f=" + w.f + ", g=" + w.g + ", q=" + std::to_string(w.q) + ", c=" + w.c +
                ", d(f)=" + std::to_string(w.d_f) + ", d(g)=" + std::to_string(w.d_g) +
                ", d(c)=" + std::to_string(w.d_c);
  }
  return s;
}

SuiteResult point_count_suite() {
  SuiteResult s{"point counts vs trace recurrence", true, 0, {}};
  struct Curve {
    std::uint64_t l;
    unsigned deg;
    std::array<Elt, 5> a;
  };
  const std::vector<Curve> curves = {{5, 1, {0, 0, 0, 1, 1}}, {3, 1, {0, 0, 0, 2, 0}}, {7, 1, {0, 0, 0, 3, 2}},
                                     {2, 1, {1, 0, 0, 0, 1}}, {2, 2, {1, 0, 0, 0, 1}}, {3, 2, {0, 0, 0, 2, 1}}};
  for (const auto& c : curves) {
    const Field k = Field::create(c.l, c.deg, std::nullopt);
    const EllipticModel e = EllipticModel::create(k, c.a);
    const Backend b = Backend::elliptic(e);
    const FrobeniusData& fr = *b.frobenius();
    ++s.checks;
    if (constant_ext_class_number(fr, 1) != b.class_group().h) {
      s.passed = false;
      s.witness = e.to_string() + ": recurrence disagrees with enumeration";
    }
    // Degree-2 extension: enumeration against the recurrence.
    const Field k2 = Field::create(c.l, 2 * c.deg, std::nullopt);
    const EllipticModel e2 = e.base_change(k2, find_embedding(k, k2));
    ++s.checks;
    if (constant_ext_class_number(fr, 2) != count_points(e2).count) {
      s.passed = false;
      s.witness = e.to_string() + ": level-2 count disagrees";
    }
    for (std::uint64_t n = 1; n <= 6; ++n) {
      ++s.checks;
      if (class_number_by_matrix(fr, n) != constant_ext_class_number(fr, n)) {
        s.passed = false;
        s.witness = e.to_string() + ": matrix and recurrence disagree at n=" + std::to_string(n);
      }
    }
  }
  return s;
}

SuiteResult confrontation_suite(std::uint64_t seed) {
  SuiteResult s{"certificates vs exhaustive search", true, 0, {}};
  CertifyOptions opts;
  opts.seed = seed;
  auto entries = certified_catalog();
  const auto neg = negative_controls();
  entries.insert(entries.end(), neg.begin(), neg.end());
  for (const auto& e : entries) {
    const Field k = parse_field(e.field);
    const Poly f = parse_poly(k, e.f);
    const Certificate c = certify_torsion(Backend::rational(k), f, e.q, opts);
    SearchOptions so;
    const auto search = search_rational(k, f, e.q, 3, so);
    const Confrontation con = confront(c, search.report);
    ++s.checks;
    if (!con.agree || c.certified() != e.certified ||
        (!e.certified && search.report.nonconstant_count() == 0)) {
      s.passed = false;
      if (s.witness.empty()) s.witness = e.field + " " + e.f + " q=" + std::to_string(e.q) + ": " + con.detail;
    }
  }
  return s;
}

}  // namespace

bool SelftestReport::passed() const {
  for (const auto& s : suites) {
    if (!s.passed) return false;
  }
  return !suites.empty();
}

RoundTripStats factor_round_trip(const Field& field, std::uint64_t count, unsigned max_degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RoundTripStats st;
  const std::uint64_t ell = field.characteristic();
  for (std::uint64_t i = 0; i < count; ++i) {
    Poly f;
    if (i % 5 == 0 && max_degree >= ell) {
      // h(X^l)
      const unsigned hd = 1 + rng() % (max_degree / ell);
      f = random_monic(field, hd, rng).compose(Poly::monomial(field, 1, ell));
      ++st.inseparable;
    } else {
      f = random_monic(field, rng() % (max_degree + 1), rng);
    }
    ++st.checked;
    std::string problem;
    const Factorization fa = factor(f, seed + i);
    if (!(fa.expand() == f)) problem = "product differs";
    std::set<Elt> seen_roots;
    for (const auto& lf : fa.linear) {
      if (!seen_roots.insert(lf.root.value()).second || lf.multiplicity == 0) problem = "repeated root";
    }
    std::set<Poly> seen;
    for (const auto& nf : fa.nonlinear) {
      if (nf.factor.lc() != 1 || !is_irreducible(nf.factor) || nf.multiplicity == 0) problem = "bad factor";
      if (!seen.insert(nf.factor).second) problem = "repeated factor";
    }
    if (!problem.empty() && st.failures++ == 0) {
      st.witness = field.to_string() + " f=" + f.to_string() + ": " + problem;
    }
  }
  return st;
}

SelftestReport run_selftest(std::uint64_t seed, Mutation mutation) {
  SelftestReport r;
  r.seed = seed;
  const std::uint64_t samples = 200;
  const Field gf3 = Field::create(3, 1, std::nullopt);
  const Field gf5 = Field::create(5, 1, std::nullopt);
  const PoleOrderValuation pole(EllipticRing(EllipticModel::create(gf5, {0, 0, 0, 1, 1})));
  const VariableDegreeValuation d1(gf3, 2, 0), d2(gf3, 2, 1);

  for (std::uint64_t l : {2, 3, 5, 7}) {
    const Field k = Field::create(l, 1, std::nullopt);
    if (mutation == Mutation::Dominance && l == 3) {
      r.suites.push_back(axiom_suite(TAdicOrderValuation(k), samples, seed));
      r.suites.push_back(law_suite(TAdicOrderValuation(k), samples, seed));
    } else {
      r.suites.push_back(axiom_suite(DegreeValuation(k), samples, seed));
      r.suites.push_back(law_suite(DegreeValuation(k), samples, seed));
    }
  }
  r.suites.push_back(axiom_suite(pole, samples, seed));
  r.suites.push_back(law_suite(pole, samples, seed));
  r.suites.push_back(axiom_suite(d1, samples, seed));
  r.suites.push_back(axiom_suite(d2, samples, seed));
  r.suites.push_back(law_suite(d1, samples, seed));

  for (const char* spec : {"GF(2)", "GF(3)", "GF(5)", "GF(5^2)", "GF(7^2)"}) {
    const RoundTripStats st = factor_round_trip(parse_field(spec), 100, 12, seed);
    r.suites.push_back({std::string("factorization round trip: ") + spec, st.failures == 0, st.checked, st.witness});
  }
  r.suites.push_back(point_count_suite());
  r.suites.push_back(confrontation_suite(seed));
  return r;
}

Json to_json(const SelftestReport& r) {
  Json suites = Json::array();
  for (const auto& s : r.suites) {
    suites.push_back({{"name", s.name},
                      {"passed", s.passed},
                      {"checks", s.checks},
                      {"witness", s.witness.empty() ? Json(nullptr) : Json(s.witness)}});
  }
  return {{"seed", r.seed}, {"passed", r.passed()}, {"suites", suites}};
}

}  // namespace ffdio
