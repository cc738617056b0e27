#include <set>

#include "doctest.h"
#include "ffdio/backend.hpp"
#include "ffdio/catalog.hpp"
#include "ffdio/certify.hpp"
#include "ffdio/error.hpp"
#include "ffdio/json_io.hpp"
#include "ffdio/parse.hpp"
#include "ffdio/search.hpp"

using namespace ffdio;

namespace {

Field gf(std::uint64_t l, unsigned s = 1) { return Field::create(l, s); }

Poly P(const Field& k, const std::string& text) { return parse_poly(k, text); }

EllipticModel main_curve() { return EllipticModel::create(gf(5), {0, 0, 0, 1, 1}); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InternalContradiction;
}

using Pair = std::pair<std::string, std::string>;

std::set<Pair> pairs_of(const SearchReport& r, bool constant_only = false) {
  std::set<Pair> out;
  for (const auto& s : r.solutions) {
    if (!constant_only || s.constant) out.insert({s.x, s.y});
  }
  return out;
}

// Constant solutions straight from the field: every (a, b) with b^n = f(a).
std::set<Pair> constant_oracle(const Poly& f, std::uint64_t n) {
  const Field& k = f.field();
  std::set<Pair> out;
  for (Elt a = 0; a < k.order(); ++a) {
    const Elt fa = f.eval(a);
    for (Elt b = 0; b < k.order(); ++b) {
      if (k.pow(b, n) == fa) {
        out.insert({Poly::constant(k, a).to_string("T"), Poly::constant(k, b).to_string("T")});
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("rational search examples") {
  const Field k = gf(5);
  const Poly f = P(k, "3*(X-2)*(X-4)");
  auto r = search_rational(k, f, 3, 3).report;
  CHECK(r.exhaustive);
  CHECK(r.tested_count == 625);
  CHECK(r.solutions.size() == 5);
  CHECK(r.nonconstant_count() == 0);
  CHECK(r.ring == "rational(GF(5))");
  CHECK(r.f == "[4,2,3]");
  CHECK(r.bounds.kind == "degree");

  r = search_rational(k, P(k, "X^3"), 3, 2).report;
  CHECK(r.nonconstant_count() > 0);
  CHECK(pairs_of(r).count({"T", "T"}) == 1);

  r = search_rational(k, f, 2, 2).report;
  CHECK(r.nonconstant_count() == 0);
  CHECK(pairs_of(r) == constant_oracle(f, 2));
  std::set<std::string> xs;
  for (const auto& s : r.solutions) xs.insert(s.x);
  CHECK(xs == std::set<std::string>{"0", "1", "2", "4"});

  CHECK(kind_of([&] { search_rational(k, f, 3, 9, {.cap = 1000}); }) == ErrorKind::CapExceeded);
}

TEST_CASE("constant solutions match the field oracle") {
  for (std::uint64_t l : {3, 5, 7}) {
    const Field k = gf(l);
    for (const char* text : {"X^2-1", "X*(X-1)*(X-2)", "X^3+2", "2*X^4+X+1"}) {
      const Poly f = P(k, text);
      for (std::uint64_t n : {2, 3, 4, 5}) {
        const auto r = search_rational(k, f, n, 1).report;
        CHECK(pairs_of(r, true) == constant_oracle(f, n));
        for (const auto& s : r.solutions) {
          const Poly x = parse_poly(k, s.x, "T"), y = parse_poly(k, s.y, "T");
          CHECK(y.pow(n) == f.compose(x));
        }
      }
    }
  }
}

TEST_CASE("monotone in the bound and independent of workers") {
  const Field k = gf(3);
  for (const char* text : {"X^2*(X-1)^2", "X^3", "X*(X-1)", "X^4*(X+1)^2"}) {
    const Poly f = P(k, text);
    std::set<Pair> prev;
    for (unsigned d = 0; d <= 4; ++d) {
      const auto r = search_rational(k, f, 2, d).report;
      const auto cur = pairs_of(r);
      for (const auto& p : prev) CHECK(cur.count(p) == 1);
      prev = cur;
      SearchOptions many;
      many.workers = 4;
      CHECK(search_rational(k, f, 2, d, many).report.solutions == r.solutions);
    }
  }
}

TEST_CASE("elliptic search") {
  const EllipticModel e = main_curve();
  const Field k = e.field();
  const Poly f = P(k, "3*(X-2)*(X-4)");
  auto r = search_elliptic(e, f, 3, 1);
  CHECK(r.bounds.kind == "pole_order");
  CHECK(r.tested_count == 5);
  CHECK(r.nonconstant_count() == 0);

  r = search_elliptic(e, f, 3, 4);
  CHECK(r.exhaustive);
  CHECK(r.tested_count == 625);
  CHECK(r.nonconstant_count() == 0);
  CHECK(r.solutions.size() == 5);

  r = search_elliptic(e, P(k, "X^3"), 3, 2);
  CHECK(pairs_of(r).count({"x", "x"}) == 1);

  for (const char* text : {"X^3", "X^2", "X*(X-1)", "X^2*(X-1)^2", "3*(X-2)*(X-4)"}) {
    for (std::uint64_t n : {2, 3}) {
      for (unsigned b : {1u, 2u, 3u}) {
        SearchOptions full;
        full.prune = false;
        const auto pruned = search_elliptic(e, P(k, text), n, b);
        const auto plain = search_elliptic(e, P(k, text), n, b, full);
        CAPTURE(text);
        CAPTURE(n);
        CAPTURE(b);
        CHECK(pruned.solutions == plain.solutions);
        SearchOptions many;
        many.workers = 3;
        CHECK(search_elliptic(e, P(k, text), n, b, many).solutions == pruned.solutions);
      }
    }
  }
  CHECK(kind_of([&] { search_elliptic(e, f, 3, 9, {.cap = 1000}); }) == ErrorKind::CapExceeded);
}

TEST_CASE("multivariate search") {
  const Field k = gf(3);
  auto r = search_multivar(k, P(k, "X*(X-1)"), 2, {1, 1});
  CHECK(r.exhaustive);
  CHECK(r.tested_count == 81);
  CHECK(r.nonconstant_count() == 0);
  CHECK(r.bounds.kind == "per_variable");
  CHECK(r.bounds.values == std::vector<unsigned>{1, 1});

  r = search_multivar(k, P(k, "X^2*(X-1)^2"), 2, {1, 1});
  CHECK(r.nonconstant_count() > 0);
  const auto all = pairs_of(r);
  CHECK((all.count({"T1", "T1^2+2*T1"}) + all.count({"T1", "2*T1^2+T1"})) >= 1);
  for (const auto& s : r.solutions) {
    const MPoly x = parse_mpoly(k, 2, s.x), y = parse_mpoly(k, 2, s.y);
    CHECK(y.pow(2) == compose(P(k, "X^2*(X-1)^2"), x));
  }
  SearchOptions many;
  many.workers = 4;
  CHECK(search_multivar(k, P(k, "X^2*(X-1)^2"), 2, {1, 1}, many).solutions == r.solutions);
  try {
    search_multivar(gf(5), P(gf(5), "X"), 2, {3, 3}, {.cap = 1'000'000});
    FAIL("expected CapExceeded");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::CapExceeded);
    CHECK(std::string(err.what()).find("152587890625") != std::string::npos);
  }
}

TEST_CASE("confrontation") {
  const Field k = gf(5);
  const Poly f = P(k, "[4,2,3]");
  const Certificate good = certify_torsion(Backend::rational(k), f, 3);
  auto rep = search_rational(k, f, 3, 3).report;
  auto c = confront(good, rep);
  CHECK(c.agree);
  CHECK(c.detail.find("625 candidates") != std::string::npos);

  const Certificate bad_shape = certify_torsion(Backend::rational(k), P(k, "X^3"), 3);
  const auto witness = search_rational(k, P(k, "X^3"), 3, 2).report;
  c = confront(bad_shape, witness);
  CHECK(c.agree);
  CHECK(c.detail.find("nonconstant solution") != std::string::npos);

  // A certificate contradicted by the oracle.
  Certificate forged = bad_shape;
  forged.conclusion = Conclusion::OnlyConstantSolutions;
  c = confront(forged, witness);
  CHECK(!c.agree);

  CHECK(kind_of([&] { confront(good, search_rational(k, f, 2, 1).report); }) == ErrorKind::InvalidArgument);

  for (const auto& e : certified_catalog()) {
    const Field kk = parse_field(e.field);
    const Poly ff = parse_poly(kk, e.f);
    const Certificate cert = certify_torsion(Backend::rational(kk), ff, e.q);
    CHECK(confront(cert, search_rational(kk, ff, e.q, 2).report).agree);
  }
}

TEST_CASE("search report JSON round trip") {
  const Field k = gf(3);
  const std::vector<SearchReport> reps = {
      search_rational(k, P(k, "X^2*(X-1)^2"), 2, 2).report,
      search_elliptic(main_curve(), P(gf(5), "X^3"), 3, 2),
      search_multivar(k, P(k, "X^2*(X-1)^2"), 2, {1, 1}),
  };
  for (const auto& r : reps) {
    const std::string text = to_json(r).dump(2);
    const SearchReport back = search_report_from_json(Json::parse(text));
    CHECK(to_json(back).dump(2) == text);
    const Json j = Json::parse(text);
    for (const char* key : {"ring", "f", "n", "bounds", "exhaustive", "solutions", "tested_count", "elapsed_ms"}) {
      CHECK(j.contains(key));
    }
    REQUIRE(!j["solutions"].empty());
    CHECK(j["solutions"][0].contains("X"));
    CHECK(j["solutions"][0].contains("Y"));
    CHECK(j["solutions"][0].contains("constant"));
  }
}
