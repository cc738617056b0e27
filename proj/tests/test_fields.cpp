#include <random>
#include <set>

#include "doctest.h"
#include "ffdio/error.hpp"
#include "ffdio/field.hpp"
#include "ffdio/parse.hpp"
#include "oracles.hpp"

using namespace ffdio;

namespace {

Field gf(std::uint64_t l, unsigned s = 1) { return Field::create(l, s); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InternalContradiction;
}

const std::vector<std::pair<std::uint64_t, unsigned>> kFields = {
    {2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {2, 3}, {3, 2}, {5, 2}, {7, 2}, {2, 4}, {3, 3}};

}  // namespace

TEST_CASE("field construction") {
  CHECK(gf(5).order() == 5);
  CHECK(gf(5).to_string() == "GF(5)");
  CHECK(gf(2, 2).modulus() == std::vector<std::uint64_t>{1, 1, 1});
  CHECK(gf(2, 3).modulus() == std::vector<std::uint64_t>{1, 1, 0, 1});
  CHECK(gf(3, 2).modulus() == std::vector<std::uint64_t>{1, 0, 1});
  CHECK(gf(5, 2).modulus() == std::vector<std::uint64_t>{2, 0, 1});
  const Field f9 = Field::create(3, 2, std::vector<std::uint64_t>{1, 0, 1});
  CHECK(f9.order() == 9);
  CHECK(f9.has_default_modulus());

  CHECK(kind_of([] { gf(4); }) == ErrorKind::NotPrime);
  CHECK(kind_of([] { gf(1); }) == ErrorKind::NotPrime);
  CHECK(kind_of([] { Field::create(3, 2, std::vector<std::uint64_t>{2, 0, 1}); }) ==
        ErrorKind::ReducibleModulus);
  CHECK(kind_of([] { Field::create(3, 2, std::vector<std::uint64_t>{1, 1, 0, 1}); }) ==
        ErrorKind::DegreeMismatch);
}

TEST_CASE("default modulus is the smallest irreducible") {
  for (auto [l, s] : kFields) {
    if (s == 1) continue;
    const Field k = gf(l, s);
    // Brute force: a monic degree-s polynomial over GF(l) with s <= 3 is
    // irreducible iff it has no root; s = 4 needs the quadratic check too.
    auto irreducible = [&](std::uint64_t packed) {
      std::vector<std::uint64_t> c(s + 1);
      std::uint64_t v = packed;
      for (unsigned i = 0; i < s; ++i) {
        c[i] = v % l;
        v /= l;
      }
      c[s] = 1;
      const Field p = gf(l);
      Poly f(p, c);
      for (std::uint64_t a = 0; a < l; ++a) {
        if (f.eval(a) == 0) return false;
      }
      if (s == 4) {
        for (std::uint64_t b = 0; b < l * l; ++b) {
          Poly g(p, {b % l, b / l, 1});
          if ((f % g).is_zero()) return false;
        }
      }
      return true;
    };
    std::uint64_t expect = 0;
    while (!irreducible(expect)) ++expect;
    std::vector<std::uint64_t> m = k.modulus();
    std::uint64_t packed = 0;
    for (unsigned i = s; i-- > 0;) packed = packed * l + m[i];
    CHECK_MESSAGE(packed == expect, k.to_string());
  }
}

TEST_CASE("element arithmetic examples") {
  const Field f5 = gf(5);
  CHECK(f5.mul(3, 4) == 2);
  CHECK(f5.div(2, 3) == 4);
  const Field f4 = gf(2, 2);
  const Elt g = f4.generator();
  CHECK(f4.mul(g, g) == f4.add(g, 1));
  CHECK(f4.frobenius(g) == f4.add(g, 1));
  CHECK(f5.frobenius(3) == 3);
  const Field f9 = gf(3, 2);
  for (Elt a = 0; a < 9; ++a) CHECK(f9.frobenius(a, 2) == a);
  CHECK(kind_of([&] { f5.div(1, 0); }) == ErrorKind::DivisionByZero);
  CHECK(kind_of([&] { f5.element(1) + f9.element(1); }) == ErrorKind::SpecMismatch);
}

TEST_CASE("multiplication agrees with schoolbook reduction") {
  for (auto [l, s] : kFields) {
    const Field k = gf(l, s);
    for (Elt a = 0; a < k.order(); ++a) {
      for (Elt b = 0; b < k.order(); ++b) {
        const auto expect = oracle::slow_mul(k.coeffs(a), k.coeffs(b), k.modulus(), l);
        REQUIRE(k.coeffs(k.mul(a, b)) == expect);
      }
    }
  }
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(7);
  for (auto [l, s] : kFields) {
    const Field k = gf(l, s);
    std::uniform_int_distribution<Elt> pick(0, k.order() - 1);
    for (int i = 0; i < 300; ++i) {
      const Elt a = pick(rng), b = pick(rng), c = pick(rng);
      CHECK(k.add(k.add(a, b), c) == k.add(a, k.add(b, c)));
      CHECK(k.mul(k.mul(a, b), c) == k.mul(a, k.mul(b, c)));
      CHECK(k.add(a, b) == k.add(b, a));
      CHECK(k.mul(a, b) == k.mul(b, a));
      CHECK(k.mul(a, k.add(b, c)) == k.add(k.mul(a, b), k.mul(a, c)));
      CHECK(k.add(a, k.neg(a)) == 0);
      CHECK(k.sub(a, b) == k.add(a, k.neg(b)));
      if (a != 0) {
        CHECK(k.mul(a, k.inv(a)) == 1);
        CHECK(k.mul(k.div(b, a), a) == b);
      }
      CHECK(k.frobenius(k.add(a, b)) == k.add(k.frobenius(a), k.frobenius(b)));
      CHECK(k.frobenius(k.mul(a, b)) == k.mul(k.frobenius(a), k.frobenius(b)));
      CHECK(k.frobenius(a) == k.pow(a, l));
      CHECK(k.frobenius(a, s) == a);
    }
  }
}

TEST_CASE("nth roots") {
  const Field f5 = gf(5);
  CHECK(nth_root(f5, 4, 2) == Elt{2});
  CHECK(nth_root(f5, 2, 3) == Elt{3});
  CHECK(!nth_root(f5, 2, 2).has_value());
  CHECK(nth_root_in_field(f5.element(4), 2)->value() == 2);

  for (auto [l, s] : kFields) {
    const Field k = gf(l, s);
    for (std::uint64_t n : {2, 3, 4, 5, 6, 7}) {
      for (Elt a = 0; a < k.order(); ++a) {
        std::optional<Elt> smallest;
        for (Elt b = 0; b < k.order(); ++b) {
          if (k.pow(b, n) == a) {
            smallest = b;
            break;
          }
        }
        REQUIRE(nth_root(k, a, n) == smallest);
        if (a != 0 && std::gcd(n, k.order() - 1) == 1) CHECK(smallest.has_value());
      }
      std::vector<Elt> units;
      for (Elt b = 1; b < k.order(); ++b) {
        if (k.pow(b, n) == 1) units.push_back(b);
      }
      CHECK(roots_of_unity(k, n) == units);
    }
  }
}

TEST_CASE("enumeration") {
  const auto two = enumerate_elements(gf(2));
  REQUIRE(two.size() == 2);
  CHECK(two[0].value() == 0);
  CHECK(two[1].value() == 1);
  CHECK(enumerate_elements(gf(2, 2)).size() == 4);
  const auto nine = enumerate_elements(gf(3, 2));
  for (std::size_t i = 1; i < nine.size(); ++i) CHECK(nine[i - 1] < nine[i]);
  CHECK(kind_of([] { enumerate_elements(gf(5, 3), 100); }) == ErrorKind::CapExceeded);
}

TEST_CASE("embeddings") {
  const Field f3 = gf(3), f9 = gf(3, 2), f4 = gf(2, 2), f16 = gf(2, 4);
  const Elt image = find_embedding(f3, f9);
  for (Elt a = 0; a < 3; ++a) CHECK(embed(f3, f9, image, a) == a);
  const Elt g4 = find_embedding(f4, f16);
  std::set<Elt> seen;
  for (Elt a = 0; a < 4; ++a) {
    for (Elt b = 0; b < 4; ++b) {
      const Elt ea = embed(f4, f16, g4, a), eb = embed(f4, f16, g4, b);
      CHECK(embed(f4, f16, g4, f4.mul(a, b)) == f16.mul(ea, eb));
      CHECK(embed(f4, f16, g4, f4.add(a, b)) == f16.add(ea, eb));
    }
    seen.insert(embed(f4, f16, g4, a));
  }
  CHECK(seen.size() == 4);
  CHECK(kind_of([&] { find_embedding(f4, gf(2, 3)); }) == ErrorKind::NoEmbedding);
}

TEST_CASE("field and element text round trip") {
  for (const char* text : {"GF(5)", "GF(2^2)", "GF(3^2;mod=2,1,1)", "GF(7^2)"}) {
    const Field k = parse_field(text);
    CHECK(k.to_string() == text);
    CHECK(parse_field(k.to_string()) == k);
    for (Elt a = 0; a < k.order(); ++a) CHECK(parse_element(k, k.format(a)) == a);
  }
  CHECK(parse_field("GF(3^2;mod=1,0,1)").to_string() == "GF(3^2)");
  CHECK(kind_of([] { parse_field("GF(6)"); }) == ErrorKind::NotPrime);
  CHECK(kind_of([] { parse_field("GF 5"); }) == ErrorKind::ParseError);
}
