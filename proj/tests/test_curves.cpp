#include <map>
#include <set>

#include "doctest.h"
#include "ffdio/arith.hpp"
#include "ffdio/backend.hpp"
#include "ffdio/class_group.hpp"
#include "ffdio/elliptic.hpp"
#include "ffdio/error.hpp"
#include "ffdio/parse.hpp"
#include "ffdio/tower.hpp"
#include "ffdio/valuations.hpp"

using namespace ffdio;

namespace {

Field gf(std::uint64_t l, unsigned s = 1) { return Field::create(l, s); }

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

// Affine solutions of the Weierstrass equation by evaluating both sides.
std::uint64_t brute_count(const EllipticModel& e) {
  const Field& k = e.field();
  std::uint64_t n = 1;
  for (Elt x = 0; x < k.order(); ++x) {
    const Elt rhs = k.add(k.add(k.mul(k.mul(x, x), x), k.mul(e.a2(), k.mul(x, x))),
                          k.add(k.mul(e.a4(), x), e.a6()));
    for (Elt y = 0; y < k.order(); ++y) {
      const Elt lhs = k.add(k.mul(y, y), k.add(k.mul(e.a1(), k.mul(x, y)), k.mul(e.a3(), y)));
      if (lhs == rhs) ++n;
    }
  }
  return n;
}

// Every nonsingular model over a small field, by brute force on a-coefficients.
std::vector<EllipticModel> small_curves(const Field& k, std::size_t limit) {
  std::vector<EllipticModel> out;
  const Elt n = k.order();
  for (Elt i = 0; i < n * n * n * n * n && out.size() < limit; ++i) {
    std::array<Elt, 5> a{i % n, i / n % n, i / (n * n) % n, i / (n * n * n) % n, i / (n * n * n * n)};
    try {
      out.push_back(EllipticModel::create(k, a));
    } catch (const Error& err) {
      CHECK(err.kind() == ErrorKind::SingularModel);
    }
  }
  return out;
}

// Group structure by brute force: the number of points killed by N.
std::uint64_t brute_torsion(const EllipticModel& e, const PointCount& pc, std::uint64_t n) {
  std::uint64_t c = 0;
  for (const auto& p : pc.points) {
    if (multiply(e, n, p).infinity) ++c;
  }
  return c;
}

}  // namespace

TEST_CASE("model validation") {
  CHECK(kind_of([] { EllipticModel::create(gf(5), {0, 0, 0, 0, 0}); }) == ErrorKind::SingularModel);
  CHECK(kind_of([] { EllipticModel::create(gf(3), {0, 0, 0, 0, 1}); }) == ErrorKind::SingularModel);
  const EllipticModel e = main_curve();
  CHECK(e.discriminant() != 0);
  CHECK(e.to_string() == "elliptic(GF(5); a=[0,0,0,1,1])");
  CHECK(parse_backend("elliptic(GF(5); a=[0,0,0,1,1])").elliptic_model()->a() == e.a());
  // -16(4 a^3 + 27 b^2) for short models.
  const Field k = gf(7);
  for (Elt a = 0; a < 7; ++a) {
    for (Elt b = 0; b < 7; ++b) {
      const Elt expect = k.mul(k.from_int(-16), k.add(k.mul(4, k.pow(a, 3)), k.mul(k.from_int(27), k.mul(b, b))));
      if (expect == 0) {
        CHECK(kind_of([&] { EllipticModel::create(k, {0, 0, 0, a, b}); }) == ErrorKind::SingularModel);
      } else {
        CHECK(EllipticModel::create(k, {0, 0, 0, a, b}).discriminant() == expect);
      }
    }
  }
}

TEST_CASE("point counts") {
  const auto pc = count_points(main_curve());
  CHECK(pc.count == 9);
  CHECK(pc.points.size() == 9);
  CHECK(pc.points.front().infinity);
  CHECK(count_points(EllipticModel::create(gf(3), {0, 0, 0, 2, 0})).count == 4);
  CHECK(kind_of([] { count_points(main_curve(), 10); }) == ErrorKind::CapExceeded);
  const Backend r = Backend::rational(gf(5));
  CHECK(r.class_group().h == 1);
  CHECK(r.genus() == 0);
  CHECK(torsion_card(r.class_group(), 7) == 1);

  for (const Field& k : {gf(2), gf(3), gf(5), gf(2, 2), gf(7)}) {
    for (const auto& e : small_curves(k, 40)) {
      const auto c = count_points(e);
      REQUIRE(c.count == brute_count(e));
      for (const auto& p : c.points) CHECK(on_curve(e, p));
      // Hasse bound and agreement of the two class number computations.
      const auto frob = FrobeniusData::from_point_count(k.order(), c.count);
      CHECK(frob.trace * frob.trace <= 4 * static_cast<std::int64_t>(k.order()));
      CHECK(constant_ext_class_number(frob, 1) == c.count);
    }
  }
}

TEST_CASE("group law") {
  for (const Field& k : {gf(3), gf(5), gf(2, 2), gf(7)}) {
    for (const auto& e : small_curves(k, 15)) {
      const auto pc = count_points(e);
      for (const auto& p : pc.points) {
        CHECK(add(e, p, negate(e, p)).infinity);
        CHECK(add(e, p, CurvePoint::at_infinity()) == p);
        CHECK(multiply(e, pc.count, p).infinity);
        for (const auto& q : pc.points) {
          const CurvePoint s = add(e, p, q);
          CHECK(on_curve(e, s));
          CHECK(s == add(e, q, p));
        }
      }
      // Associativity on a few triples.
      for (std::size_t i = 0; i < std::min<std::size_t>(pc.points.size(), 5); ++i) {
        const auto& a = pc.points[i];
        const auto& b = pc.points[pc.points.size() - 1 - i];
        const auto& c = pc.points[pc.points.size() / 2];
        CHECK(add(e, add(e, a, b), c) == add(e, a, add(e, b, c)));
      }
    }
  }
}

TEST_CASE("class group structure and torsion") {
  const ClassGroupInfo info = class_group_structure(main_curve());
  CHECK(info.h == 9);
  CHECK(info.invariant_factors == std::vector<std::uint64_t>{1, 9});
  CHECK(torsion_card(info, 1) == 1);
  CHECK(torsion_card(info, 3) == 3);
  CHECK(torsion_card(info, 9) == 9);
  CHECK(torsion_card(info, 27) == 9);
  CHECK(least_stable_k(info, 3) == 3);
  CHECK(least_stable_k(info, 2) == 1);

  const ClassGroupInfo split{9, {3, 3}};
  CHECK(torsion_card(split, 3) == 9);
  CHECK(least_stable_k(split, 3) == 2);
  CHECK(torsion_card(ClassGroupInfo::trivial(), 5) == 1);
  CHECK(least_stable_k(ClassGroupInfo::trivial(), 3) == 1);

  for (const Field& k : {gf(2), gf(3), gf(5), gf(2, 2), gf(7), gf(3, 2)}) {
    for (const auto& e : small_curves(k, 30)) {
      const auto pc = count_points(e);
      const auto g = class_group_structure(e, pc);
      REQUIRE(g.invariant_factors.size() == 2);
      CHECK(g.invariant_factors[0] * g.invariant_factors[1] == pc.count);
      CHECK(g.invariant_factors[1] % g.invariant_factors[0] == 0);
      for (std::uint64_t n = 1; n <= 12; ++n) CHECK(torsion_card(g, n) == brute_torsion(e, pc, n));
      for (std::uint64_t q : {2, 3, 5, 7}) {
        const unsigned k_star = least_stable_k(g, q);
        if (pc.count % q != 0) CHECK(k_star == 1);
        std::uint64_t prev = 1;
        for (unsigned j = 1; j < k_star; ++j) {
          const std::uint64_t cur = torsion_card(g, *checked_pow(q, j));
          CHECK(cur != prev);
          prev = cur;
        }
        CHECK(torsion_card(g, *checked_pow(q, k_star)) == torsion_card(g, *checked_pow(q, k_star - 1)));
      }
    }
  }
  CHECK(kind_of([&] { torsion_card(info, 0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("constant extension class numbers") {
  const auto frob = FrobeniusData::from_point_count(5, 9);
  CHECK(frob.trace == -3);
  CHECK(frob.trace_at(2) == -1);
  CHECK(constant_ext_class_number(frob, 2) == 27);
  CHECK(constant_ext_class_number(frob, 1) == 9);
  CHECK(constant_ext_class_number(frob, 0) == 9);
  CHECK(kind_of([] { FrobeniusData::create(5, 5); }) == ErrorKind::InvalidArgument);

  // Level-2 count by enumeration over GF(25).
  const Field f25 = gf(5, 2);
  const auto up = main_curve().base_change(f25, find_embedding(gf(5), f25));
  CHECK(count_points(up).count == 27);

  for (const Field& k : {gf(2), gf(3), gf(5)}) {
    for (const auto& e : small_curves(k, 10)) {
      const auto frob_e = FrobeniusData::from_point_count(k.order(), count_points(e).count);
      for (std::uint64_t n = 1; n <= 6; ++n) {
        CHECK(class_number_by_matrix(frob_e, n) == constant_ext_class_number(frob_e, n));
      }
      for (unsigned s : {2u, 3u}) {
        const Field big = gf(k.characteristic(), s);
        const auto lifted = e.base_change(big, find_embedding(k, big));
        CHECK(count_points(lifted).count == constant_ext_class_number(frob_e, s));
      }
    }
  }
}

TEST_CASE("tower q-parts") {
  const auto frob = FrobeniusData::from_point_count(5, 9);
  const TowerReport r = tower_qpart(frob, 2, 3, 3);
  CHECK(r.vq_sequence == std::vector<unsigned>{2, 3, 3, 3});
  REQUIRE(r.class_numbers.size() == 4);
  CHECK(*r.class_numbers[0] == 9);
  CHECK(*r.class_numbers[1] == 27);
  CHECK(*r.class_numbers[2] == 675);
  CHECK(*r.class_numbers[3] == 389475);
  REQUIRE(r.rigorous_bound.has_value());
  CHECK(*r.rigorous_bound == 3);
  CHECK(r.observed_max() == 3);

  const TowerReport r8 = tower_qpart(frob, 2, 3, 8);
  for (unsigned v : r8.vq_sequence) CHECK(v <= *r8.rigorous_bound);
  // Independent check of the first levels: exact 3-adic valuations.
  for (unsigned n = 0; n <= 8; ++n) {
    const BigInt h = constant_ext_class_number(frob, std::uint64_t{1} << n);
    CHECK(valuation(h, 3) == r8.vq_sequence[n]);
  }

  const TowerReport same = tower_qpart(frob, 2, 2, 12);
  for (unsigned v : same.vq_sequence) CHECK(v == 0);
  CHECK(!same.rigorous_bound.has_value());

  const TowerReport grows = tower_qpart(frob, 3, 3, 4);
  CHECK(grows.vq_sequence == std::vector<unsigned>{2, 3, 4, 5, 6});

  const TowerReport flat = trivial_tower(2, 3, 5);
  for (unsigned v : flat.vq_sequence) CHECK(v == 0);
  CHECK(Backend::rational(gf(5)).tower(2, 3, 5).vq_sequence == flat.vq_sequence);

  CHECK(kind_of([&] { tower_qpart(frob, 4, 3, 2); }) == ErrorKind::NotPrime);
  CHECK(kind_of([&] { tower_qpart(frob, 2, 5, 2); }) == ErrorKind::CharacteristicClash);
  TowerOptions tight;
  tight.cycle_cap = 2;
  CHECK(kind_of([&] { tower_qpart(frob, 2, 3, 2, tight); }) == ErrorKind::CycleCapExceeded);
}

TEST_CASE("tower bound dominates computed levels on many curves") {
  for (const Field& k : {gf(2), gf(3), gf(5), gf(7)}) {
    for (const auto& e : small_curves(k, 12)) {
      const auto frob = FrobeniusData::from_point_count(k.order(), count_points(e).count);
      for (std::uint64_t p : {2, 3, 5}) {
        for (std::uint64_t q : {2, 3, 5, 7}) {
          if (q == k.characteristic()) continue;
          const TowerReport r = tower_qpart(frob, p, q, 6);
          if (p == q) {
            if (count_points(e).count % p != 0) {
              for (unsigned v : r.vq_sequence) CHECK(v == 0);
            }
            continue;
          }
          REQUIRE(r.rigorous_bound.has_value());
          CHECK(r.observed_max() <= *r.rigorous_bound);
        }
      }
    }
  }
}

TEST_CASE("ring of integers arithmetic") {
  const EllipticModel e = main_curve();
  const EllipticRing ring(e);
  const Field& k = e.field();
  const auto pts = count_points(e).points;
  auto eval = [&](const EllipticElement& u, const CurvePoint& p) {
    return k.add(u.a.is_zero() ? 0 : u.a.eval(p.x), k.mul(u.b.is_zero() ? 0 : u.b.eval(p.x), p.y));
  };
  const auto elems = ring_of_integers_enumerate(ring, 4);
  CHECK(elems.size() == 625);
  std::size_t step = 0;
  for (const auto& u : elems) {
    if (++step % 7) continue;
    for (std::size_t j = 0; j < elems.size(); j += 31) {
      const auto& v = elems[j];
      const auto prod = ring.mul(u, v);
      for (const auto& p : pts) {
        if (p.infinity) continue;
        REQUIRE(eval(prod, p) == k.mul(eval(u, p), eval(v, p)));
        REQUIRE(eval(ring.add(u, v), p) == k.add(eval(u, p), eval(v, p)));
      }
      if (!u.is_zero() && !v.is_zero()) {
        CHECK(elliptic_pole_order(prod) == elliptic_pole_order(u) + elliptic_pole_order(v));
      }
    }
  }
  // y^2 reduces through the curve equation.
  const auto y2 = ring.mul(ring.y(), ring.y());
  CHECK(y2.b.is_zero());
  CHECK(y2.a == parse_poly(k, "X^3+X+1"));
  CHECK(ring.to_string(ring.monomial(2, 1, 3)) == "3*x^2*y");
}

TEST_CASE("ring basis and enumeration") {
  CHECK(ring_basis(1) == std::vector<std::pair<unsigned, unsigned>>{{0, 0}});
  CHECK(ring_basis(3) == std::vector<std::pair<unsigned, unsigned>>{{0, 0}, {1, 0}, {0, 1}});
  CHECK(ring_basis(7) ==
        std::vector<std::pair<unsigned, unsigned>>{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {3, 0}, {2, 1}});
  const EllipticRing ring(main_curve());
  const auto one = ring_of_integers_enumerate(ring, 1);
  CHECK(one.size() == 5);
  for (const auto& u : one) CHECK(u.is_constant());
  const auto three = ring_of_integers_enumerate(ring, 3);
  CHECK(three.size() == 125);
  CHECK(std::set<EllipticElement>(three.begin(), three.end()).size() == 125);
  std::set<unsigned> orders;
  for (const auto& u : ring_of_integers_enumerate(ring, 7)) {
    if (!u.is_zero()) orders.insert(elliptic_pole_order(u));
  }
  CHECK(orders == std::set<unsigned>{0, 2, 3, 4, 5, 6, 7});
  CHECK(kind_of([&] { ring_of_integers_enumerate(ring, 7, 1000); }) == ErrorKind::CapExceeded);
}
