#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ffdio/class_group.hpp"
#include "ffdio/field.hpp"
#include "ffdio/poly.hpp"

namespace ffdio {

/// y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6 over kappa, with the point
/// at infinity as the degree-one place.
class EllipticModel {
 public:
  /// Coefficients in the order a1, a2, a3, a4, a6. Throws SingularModel.
  static EllipticModel create(const Field& field, const std::array<Elt, 5>& a);

  const Field& field() const { return field_; }
  const std::array<Elt, 5>& a() const { return a_; }
  Elt a1() const { return a_[0]; }
  Elt a2() const { return a_[1]; }
  Elt a3() const { return a_[2]; }
  Elt a4() const { return a_[3]; }
  Elt a6() const { return a_[4]; }
  Elt discriminant() const { return discriminant_; }

  /// "elliptic(GF(5); a=[0,0,0,1,1])".
  std::string to_string() const;
  /// The same equation over an extension, along an embedding.
  EllipticModel base_change(const Field& target, Elt image) const;

  bool operator==(const EllipticModel& o) const { return field_ == o.field_ && a_ == o.a_; }

 private:
  EllipticModel(Field field, std::array<Elt, 5> a, Elt disc)
      : field_(std::move(field)), a_(a), discriminant_(disc) {}
  Field field_;
  std::array<Elt, 5> a_{};
  Elt discriminant_ = 0;
};

struct CurvePoint {
  bool infinity = true;
  Elt x = 0;
  Elt y = 0;

  static CurvePoint at_infinity() { return {}; }
  bool operator==(const CurvePoint&) const = default;
};

bool on_curve(const EllipticModel& e, const CurvePoint& p);
CurvePoint negate(const EllipticModel& e, const CurvePoint& p);
CurvePoint add(const EllipticModel& e, const CurvePoint& p, const CurvePoint& q);
CurvePoint multiply(const EllipticModel& e, std::uint64_t k, const CurvePoint& p);

struct PointCount {
  std::uint64_t count = 0;
  std::vector<CurvePoint> points;  // point at infinity first, then affine by (x, y)
};

/// Exhaustive enumeration; q^2 must stay within `cap`.
PointCount count_points(const EllipticModel& e, std::uint64_t cap = kDefaultEnumerationCap);

/// E(kappa) as Z/n1 x Z/n2 from element orders.
ClassGroupInfo class_group_structure(const EllipticModel& e,
                                     std::uint64_t cap = kDefaultEnumerationCap);
ClassGroupInfo class_group_structure(const EllipticModel& e, const PointCount& pc);

/// Order of p in E(kappa), given the group order.
std::uint64_t point_order(const EllipticModel& e, const CurvePoint& p, std::uint64_t group_order);

/// Element a(x) + b(x) y of the ring of functions regular away from infinity.
struct EllipticElement {
  Poly a;
  Poly b;

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  bool is_constant() const { return b.is_zero() && a.degree() <= 0; }
  bool operator==(const EllipticElement&) const = default;
  bool operator<(const EllipticElement& o) const {
    if (a == o.a) return b < o.b;
    return a < o.a;
  }
};

/// Arithmetic in O_F = kappa[x, y]/(Weierstrass) with y-degree reduced to <= 1.
class EllipticRing {
 public:
  explicit EllipticRing(EllipticModel model);

  const EllipticModel& model() const { return model_; }
  const Field& field() const { return model_.field(); }

  EllipticElement zero() const;
  EllipticElement one() const;
  EllipticElement constant(Elt c) const;
  EllipticElement x() const;
  EllipticElement y() const;
  /// x^i y^j, j in {0, 1}.
  EllipticElement monomial(unsigned i, unsigned j, Elt c = 1) const;

  EllipticElement add(const EllipticElement& u, const EllipticElement& v) const;
  EllipticElement sub(const EllipticElement& u, const EllipticElement& v) const;
  EllipticElement neg(const EllipticElement& u) const;
  EllipticElement mul(const EllipticElement& u, const EllipticElement& v) const;
  EllipticElement scale(const EllipticElement& u, Elt c) const;
  EllipticElement pow(const EllipticElement& u, std::uint64_t e) const;
  /// f(u) for f with coefficients in kappa.
  EllipticElement compose(const Poly& f, const EllipticElement& u) const;

  std::string to_string(const EllipticElement& u) const;

 private:
  EllipticModel model_;
  Poly cubic_;   // x^3 + a2 x^2 + a4 x + a6
  Poly linear_;  // a1 x + a3
};

/// Pole order at infinity: max over basis terms of 2i + 3j. Throws ZeroElement.
unsigned elliptic_pole_order(const EllipticElement& u);

/// (i, j) with 2i + 3j <= bound, sorted by pole order.
std::vector<std::pair<unsigned, unsigned>> ring_basis(unsigned pole_bound);

/// Indexed space of all kappa-combinations of ring_basis(pole_bound).
class EllipticBox {
 public:
  EllipticBox(const EllipticRing& ring, unsigned pole_bound,
              std::uint64_t cap = kDefaultEnumerationCap);

  std::uint64_t count() const { return count_; }
  EllipticElement at(std::uint64_t index) const;
  const std::vector<std::pair<unsigned, unsigned>>& basis() const { return basis_; }

 private:
  EllipticRing ring_;
  std::vector<std::pair<unsigned, unsigned>> basis_;
  std::uint64_t count_ = 0;
};

std::vector<EllipticElement> ring_of_integers_enumerate(const EllipticRing& ring, unsigned pole_bound,
                                                        std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace ffdio
