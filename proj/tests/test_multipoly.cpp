#include <random>
#include <set>

#include "doctest.h"
#include "ffdio/error.hpp"
#include "ffdio/json_io.hpp"
#include "ffdio/mpoly.hpp"
#include "ffdio/parse.hpp"

using namespace ffdio;

namespace {

Field gf(std::uint64_t l, unsigned s = 1) { return Field::create(l, s); }

MPoly M(const Field& k, unsigned r, const std::string& text) { return parse_mpoly(k, r, text); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InternalContradiction;
}

MPoly random_mpoly(const Field& k, unsigned r, unsigned max_exp, std::mt19937_64& rng) {
  MPoly g(k, r);
  const int terms = 1 + static_cast<int>(rng() % 4);
  for (int i = 0; i < terms; ++i) {
    Exponents e(r);
    for (auto& x : e) x = static_cast<std::uint32_t>(rng() % (max_exp + 1));
    g.set(e, 1 + rng() % (k.order() - 1));
  }
  return g;
}

}  // namespace

TEST_CASE("multivariate arithmetic examples") {
  const Field f5 = gf(5), f2 = gf(2);
  CHECK(M(f5, 2, "(T1+T2)*(T1-T2)") == M(f5, 2, "T1^2-T2^2"));
  const MPoly a = M(f5, 2, "T1^2*T2+3*T2^3");
  CHECK((a + (-a)).is_zero());
  CHECK((a - a).terms().empty());
  CHECK(M(f2, 2, "(T1+T2)^2") == M(f2, 2, "T1^2+T2^2"));
  CHECK(a.to_string() == "T1^2*T2+3*T2^3");
  CHECK(M(f5, 1, "T^2+1").to_string() == "T^2+1");
  CHECK(kind_of([&] { M(f5, 2, "T1") + M(f5, 3, "T1"); }) == ErrorKind::SpecMismatch);
}

TEST_CASE("per-variable degree") {
  const Field f5 = gf(5);
  const MPoly g = M(f5, 2, "T1^2*T2+T2^3");
  CHECK(per_var_degree(g, 0) == 2);
  CHECK(per_var_degree(g, 1) == 3);
  CHECK(per_var_degree(MPoly::constant(f5, 2, 4), 0) == 0);
  CHECK(per_var_degree(MPoly::constant(f5, 2, 4), 1) == 0);
  CHECK(kind_of([&] { per_var_degree(MPoly(f5, 2), 0); }) == ErrorKind::ZeroPolynomial);

  std::mt19937_64 rng(17);
  for (int i = 0; i < 500; ++i) {
    const MPoly x = random_mpoly(f5, 3, 4, rng), y = random_mpoly(f5, 3, 4, rng);
    for (unsigned v = 0; v < 3; ++v) {
      CHECK(per_var_degree(x * y, v) == per_var_degree(x, v) + per_var_degree(y, v));
      const MPoly s = x + y;
      if (per_var_degree(x, v) != per_var_degree(y, v)) {
        CHECK(per_var_degree(s, v) == std::max(per_var_degree(x, v), per_var_degree(y, v)));
      } else if (!s.is_zero()) {
        CHECK(per_var_degree(s, v) <= per_var_degree(x, v));
      }
    }
  }
}

TEST_CASE("multivariate roots") {
  const Field f5 = gf(5);
  CHECK(mp_nth_root(M(f5, 2, "(T1+T2)^3"), 3) == M(f5, 2, "T1+T2"));
  CHECK(!mp_nth_root(M(f5, 2, "T1*T2"), 2).has_value());
  CHECK(mp_nth_root(M(f5, 2, "T1^2*T2^2"), 2) == M(f5, 2, "T1*T2"));
  std::mt19937_64 rng(23);
  for (std::uint64_t l : {2, 3, 5, 7}) {
    const Field k = gf(l);
    for (std::uint64_t n : {2, 3, 5}) {
      for (int i = 0; i < 30; ++i) {
        const MPoly g = random_mpoly(k, 2, 3, rng);
        const MPoly gn = g.pow(n);
        const auto y = mp_nth_root(gn, n);
        if (n == l) {
          // In characteristic n the n-th power is additive; a root still exists.
          REQUIRE(y.has_value());
        }
        REQUIRE(y.has_value());
        CHECK(y->pow(n) == gn);
      }
    }
  }
}

TEST_CASE("bounded enumeration") {
  const auto two = enumerate_bounded(gf(2), 1, {1});
  REQUIRE(two.size() == 4);
  std::set<MPoly> expect = {MPoly(gf(2), 1), M(gf(2), 1, "1"), M(gf(2), 1, "T"), M(gf(2), 1, "T+1")};
  CHECK(std::set<MPoly>(two.begin(), two.end()) == expect);

  const auto nine = enumerate_bounded(gf(3), 2, {1, 1});
  CHECK(nine.size() == 81);
  CHECK(std::set<MPoly>(nine.begin(), nine.end()).size() == 81);
  for (const auto& g : nine) {
    if (g.is_zero()) continue;
    CHECK(per_var_degree(g, 0) <= 1);
    CHECK(per_var_degree(g, 1) <= 1);
  }
  CHECK(kind_of([] { enumerate_bounded(gf(5), 2, {3, 3}, 1'000'000); }) == ErrorKind::CapExceeded);

  BoundedPolySpace space(gf(3), {2, 1});
  CHECK(space.count() == 729);
  CHECK(space.at(0).is_zero());
  std::set<MPoly> all;
  for (std::uint64_t i = 0; i < space.count(); ++i) all.insert(space.at(i));
  CHECK(all.size() == 729);
}

TEST_CASE("composition with univariate") {
  const Field f5 = gf(5);
  const Poly f = parse_poly(f5, "X^2+2*X+3");
  const MPoly x = M(f5, 2, "T1+T2^2");
  CHECK(compose(f, x) == x * x + x.scale(2) + MPoly::constant(f5, 2, 3));
  CHECK(to_mpoly(f, 2, 1) == M(f5, 2, "T2^2+2*T2+3"));
}

TEST_CASE("term-list serialization") {
  const Field k = gf(5);
  const MPoly g = M(k, 2, "T1^2*T2+3*T2^3+4");
  const Json j = to_json(g);
  CHECK(j.dump() == "[[[0,0],4],[[0,3],3],[[2,1],1]]");
  CHECK(mpoly_from_json(k, 2, j) == g);
  CHECK(to_json(MPoly(k, 2)).dump() == "[]");
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const MPoly h = random_mpoly(k, 3, 4, rng);
    CHECK(mpoly_from_json(k, 3, Json::parse(to_json(h).dump())) == h);
  }
  CHECK(kind_of([&] { mpoly_from_json(k, 3, j); }) == ErrorKind::ParseError);
  CHECK(kind_of([&] { mpoly_from_json(k, 2, Json::parse("[[[1,0],7]]")); }) == ErrorKind::ParseError);
  CHECK(kind_of([&] { mpoly_from_json(k, 2, Json::parse("{}")); }) == ErrorKind::ParseError);
}
