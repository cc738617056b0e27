#include "ffdio/elliptic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ffdio/arith.hpp"
#include "ffdio/bigint.hpp"
#include "ffdio/error.hpp"

namespace ffdio {

namespace {

Elt weierstrass_discriminant(const Field& f, const std::array<Elt, 5>& a) {
  auto c = [&](std::int64_t v) { return f.from_int(v); };
  const Elt a1 = a[0], a2 = a[1], a3 = a[2], a4 = a[3], a6 = a[4];
  const Elt b2 = f.add(f.mul(a1, a1), f.mul(c(4), a2));
  const Elt b4 = f.add(f.mul(c(2), a4), f.mul(a1, a3));
  const Elt b6 = f.add(f.mul(a3, a3), f.mul(c(4), a6));
  Elt b8 = f.mul(f.mul(a1, a1), a6);
  b8 = f.add(b8, f.mul(c(4), f.mul(a2, a6)));
  b8 = f.sub(b8, f.mul(a1, f.mul(a3, a4)));
  b8 = f.add(b8, f.mul(a2, f.mul(a3, a3)));
  b8 = f.sub(b8, f.mul(a4, a4));
  Elt d = f.neg(f.mul(f.mul(b2, b2), b8));
  d = f.sub(d, f.mul(c(8), f.mul(b4, f.mul(b4, b4))));
  d = f.sub(d, f.mul(c(27), f.mul(b6, b6)));
  d = f.add(d, f.mul(c(9), f.mul(b2, f.mul(b4, b6))));
  return d;
}

}  // namespace

EllipticModel EllipticModel::create(const Field& field, const std::array<Elt, 5>& a) {
  for (Elt v : a) {
    if (!field.is_valid(v)) throw Error(ErrorKind::InvalidArgument, "coefficient outside field");
  }
  const Elt disc = weierstrass_discriminant(field, a);
  if (disc == 0) throw Error(ErrorKind::SingularModel, "Weierstrass model has zero discriminant");
  return EllipticModel(field, a, disc);
}

std::string EllipticModel::to_string() const {
  std::ostringstream os;
  os << "elliptic(" << field_.to_string() << "; a=[";
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (i) os << ',';
    os << field_.format(a_[i]);
  }
  os << "])";
  return os.str();
}

EllipticModel EllipticModel::base_change(const Field& target, Elt image) const {
  std::array<Elt, 5> b{};
  for (std::size_t i = 0; i < 5; ++i) b[i] = embed(field_, target, image, a_[i]);
  return create(target, b);
}

bool on_curve(const EllipticModel& e, const CurvePoint& p) {
  if (p.infinity) return true;
  const Field& f = e.field();
  Elt lhs = f.add(f.mul(p.y, p.y), f.mul(p.y, f.add(f.mul(e.a1(), p.x), e.a3())));
  Elt x2 = f.mul(p.x, p.x);
  Elt rhs = f.add(f.add(f.mul(x2, p.x), f.mul(e.a2(), x2)), f.add(f.mul(e.a4(), p.x), e.a6()));
  return lhs == rhs;
}

CurvePoint negate(const EllipticModel& e, const CurvePoint& p) {
  if (p.infinity) return p;
  const Field& f = e.field();
  return {false, p.x, f.sub(f.neg(p.y), f.add(f.mul(e.a1(), p.x), e.a3()))};
}

CurvePoint add(const EllipticModel& e, const CurvePoint& p, const CurvePoint& q) {
  if (p.infinity) return q;
  if (q.infinity) return p;
  const Field& f = e.field();
  Elt lambda, nu;
  if (p.x == q.x) {
    // Vertical line: q = -p (including 2-torsion doubling).
    Elt s = f.add(f.add(p.y, q.y), f.add(f.mul(e.a1(), q.x), e.a3()));
    if (s == 0) return CurvePoint::at_infinity();
    Elt num = f.add(f.mul(f.from_int(3), f.mul(p.x, p.x)), f.mul(f.from_int(2), f.mul(e.a2(), p.x)));
    num = f.sub(f.add(num, e.a4()), f.mul(e.a1(), p.y));
    Elt den = f.add(f.add(f.mul(f.from_int(2), p.y), f.mul(e.a1(), p.x)), e.a3());
    lambda = f.div(num, den);
  } else {
    lambda = f.div(f.sub(q.y, p.y), f.sub(q.x, p.x));
  }
  nu = f.sub(p.y, f.mul(lambda, p.x));
  Elt x3 = f.sub(f.sub(f.sub(f.add(f.mul(lambda, lambda), f.mul(e.a1(), lambda)), e.a2()), p.x), q.x);
  Elt y3 = f.sub(f.sub(f.neg(f.mul(f.add(lambda, e.a1()), x3)), nu), e.a3());
  return {false, x3, y3};
}

CurvePoint multiply(const EllipticModel& e, std::uint64_t k, const CurvePoint& p) {
  CurvePoint result = CurvePoint::at_infinity();
  CurvePoint base = p;
  while (k > 0) {
    if (k & 1) result = add(e, result, base);
    k >>= 1;
    if (k) base = add(e, base, base);
  }
  return result;
}

PointCount count_points(const EllipticModel& e, std::uint64_t cap) {
  const Field& f = e.field();
  const std::uint64_t q = f.order();
  if (q > cap / q) {
    throw Error(ErrorKind::CapExceeded,
                "point enumeration over " + f.to_string() + " exceeds cap " + std::to_string(cap));
  }
  PointCount out;
  out.points.push_back(CurvePoint::at_infinity());
  for (Elt x = 0; x < q; ++x) {
    const Elt x2 = f.mul(x, x);
    const Elt rhs = f.add(f.add(f.mul(x2, x), f.mul(e.a2(), x2)), f.add(f.mul(e.a4(), x), e.a6()));
    const Elt lin = f.add(f.mul(e.a1(), x), e.a3());
    for (Elt y = 0; y < q; ++y) {
      if (f.add(f.mul(y, y), f.mul(lin, y)) == rhs) out.points.push_back({false, x, y});
    }
  }
  out.count = out.points.size();
  return out;
}

std::uint64_t point_order(const EllipticModel& e, const CurvePoint& p, std::uint64_t group_order) {
  std::uint64_t order = group_order;
  for (std::uint64_t r : prime_divisors(group_order)) {
    while (order % r == 0 && multiply(e, order / r, p).infinity) order /= r;
  }
  if (!multiply(e, order, p).infinity) {
    throw Error(ErrorKind::InternalContradiction, "point order does not divide group order");
  }
  return order;
}

ClassGroupInfo class_group_structure(const EllipticModel& e, const PointCount& pc) {
  const std::uint64_t h = pc.count;
  std::uint64_t exponent = 1;
  for (const auto& p : pc.points) {
    exponent = std::lcm(exponent, point_order(e, p, h));
    if (exponent == h) break;
  }
  const std::uint64_t n1 = h / exponent;
  if (h % exponent != 0 || exponent % n1 != 0) {
    throw Error(ErrorKind::InternalContradiction, "group is not of rank <= 2");
  }
  return {h, {n1, exponent}};
}

ClassGroupInfo class_group_structure(const EllipticModel& e, std::uint64_t cap) {
  return class_group_structure(e, count_points(e, cap));
}

EllipticRing::EllipticRing(EllipticModel model)
    : model_(std::move(model)),
      cubic_(model_.field(), {model_.a6(), model_.a4(), model_.a2(), 1}),
      linear_(model_.field(), {model_.a3(), model_.a1()}) {}

EllipticElement EllipticRing::zero() const { return {Poly(field()), Poly(field())}; }
EllipticElement EllipticRing::one() const { return constant(1); }
EllipticElement EllipticRing::constant(Elt c) const {
  return {Poly::constant(field(), c), Poly(field())};
}
EllipticElement EllipticRing::x() const { return monomial(1, 0); }
EllipticElement EllipticRing::y() const { return monomial(0, 1); }

EllipticElement EllipticRing::monomial(unsigned i, unsigned j, Elt c) const {
  if (j > 1) throw Error(ErrorKind::InvalidArgument, "basis monomials have y-degree <= 1");
  Poly m = Poly::monomial(field(), c, i);
  return j == 0 ? EllipticElement{m, Poly(field())} : EllipticElement{Poly(field()), m};
}

EllipticElement EllipticRing::add(const EllipticElement& u, const EllipticElement& v) const {
  return {u.a + v.a, u.b + v.b};
}
EllipticElement EllipticRing::sub(const EllipticElement& u, const EllipticElement& v) const {
  return {u.a - v.a, u.b - v.b};
}
EllipticElement EllipticRing::neg(const EllipticElement& u) const { return {-u.a, -u.b}; }
EllipticElement EllipticRing::scale(const EllipticElement& u, Elt c) const {
  return {u.a.scale(c), u.b.scale(c)};
}

EllipticElement EllipticRing::mul(const EllipticElement& u, const EllipticElement& v) const {
  // y^2 = cubic - linear * y
  Poly bb = u.b * v.b;
  return {u.a * v.a + bb * cubic_, u.a * v.b + v.a * u.b - bb * linear_};
}

EllipticElement EllipticRing::pow(const EllipticElement& u, std::uint64_t e) const {
  EllipticElement result = one();
  EllipticElement base = u;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

EllipticElement EllipticRing::compose(const Poly& f, const EllipticElement& u) const {
  EllipticElement r = zero();
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) r = add(mul(r, u), constant(c[i]));
  return r;
}

std::string EllipticRing::to_string(const EllipticElement& u) const {
  if (u.is_zero()) return "0";
  struct Term {
    unsigned pole;
    unsigned i, j;
    Elt c;
  };
  std::vector<Term> terms;
  for (std::size_t i = 0; i < u.a.coeffs().size(); ++i) {
    if (u.a.coeffs()[i]) terms.push_back({static_cast<unsigned>(2 * i), static_cast<unsigned>(i), 0, u.a.coeffs()[i]});
  }
  for (std::size_t i = 0; i < u.b.coeffs().size(); ++i) {
    if (u.b.coeffs()[i]) terms.push_back({static_cast<unsigned>(2 * i + 3), static_cast<unsigned>(i), 1, u.b.coeffs()[i]});
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.pole > b.pole; });
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += '+';
    std::string mono;
    if (t.i > 0) mono += t.i == 1 ? "x" : "x^" + std::to_string(t.i);
    if (t.j == 1) mono += mono.empty() ? "y" : "*y";
    std::string cs = field().format(t.c);
    if (cs.find_first_of("+*^") != std::string::npos) cs = "(" + cs + ")";
    if (mono.empty()) {
      out += cs;
    } else if (t.c == 1) {
      out += mono;
    } else {
      out += cs + "*" + mono;
    }
  }
  return out;
}

unsigned elliptic_pole_order(const EllipticElement& u) {
  if (u.is_zero()) throw Error(ErrorKind::ZeroElement, "pole order of zero");
  int order = 0;
  if (!u.a.is_zero()) order = std::max(order, 2 * u.a.degree());
  if (!u.b.is_zero()) order = std::max(order, 2 * u.b.degree() + 3);
  return static_cast<unsigned>(order);
}

std::vector<std::pair<unsigned, unsigned>> ring_basis(unsigned pole_bound) {
  std::vector<std::pair<unsigned, unsigned>> basis;
  for (unsigned i = 0; 2 * i <= pole_bound; ++i) basis.emplace_back(i, 0);
  for (unsigned i = 0; 2 * i + 3 <= pole_bound; ++i) basis.emplace_back(i, 1);
  std::sort(basis.begin(), basis.end(), [](const auto& a, const auto& b) {
    return 2 * a.first + 3 * a.second < 2 * b.first + 3 * b.second;
  });
  return basis;
}

EllipticBox::EllipticBox(const EllipticRing& ring, unsigned pole_bound, std::uint64_t cap)
    : ring_(ring), basis_(ring_basis(pole_bound)) {
  BigInt total = 1;
  for (std::size_t i = 0; i < basis_.size(); ++i) total *= ring.field().order();
  if (total > cap) {
    throw Error(ErrorKind::CapExceeded,
                to_string(total) + " ring elements exceed cap " + std::to_string(cap));
  }
  count_ = total.convert_to<std::uint64_t>();
}

EllipticElement EllipticBox::at(std::uint64_t index) const {
  const Field& f = ring_.field();
  std::vector<Elt> a, b;
  for (const auto& [i, j] : basis_) {
    std::vector<Elt>& target = j == 0 ? a : b;
    if (target.size() <= i) target.resize(i + 1, 0);
    target[i] = index % f.order();
    index /= f.order();
  }
  return {Poly(f, std::move(a)), Poly(f, std::move(b))};
}

std::vector<EllipticElement> ring_of_integers_enumerate(const EllipticRing& ring, unsigned pole_bound,
                                                        std::uint64_t cap) {
  EllipticBox box(ring, pole_bound, cap);
  std::vector<EllipticElement> out;
  out.reserve(box.count());
  for (std::uint64_t i = 0; i < box.count(); ++i) out.push_back(box.at(i));
  return out;
}

}  // namespace ffdio
