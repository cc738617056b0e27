#include "ffdio/backend.hpp"

#include "ffdio/error.hpp"

namespace ffdio {

Backend Backend::rational(const Field& field) {
  Backend b;
  b.model_ = field;
  b.class_group_ = ClassGroupInfo::trivial();
  return b;
}

Backend Backend::elliptic(const EllipticModel& model, std::uint64_t cap) {
  Backend b;
  b.model_ = model;
  b.cap_ = cap;
  const PointCount pc = count_points(model, cap);
  b.class_group_ = class_group_structure(model, pc);
  b.frobenius_ = FrobeniusData::from_point_count(model.field().order(), pc.count);
  return b;
}

const Field& Backend::field() const {
  if (const auto* e = elliptic_model()) return e->field();
  return std::get<Field>(model_);
}

std::string Backend::to_string() const {
  if (const auto* e = elliptic_model()) return e->to_string();
  return "rational(" + field().to_string() + ")";
}

Backend Backend::base_change(const Field& target, Elt image) const {
  if (const auto* e = elliptic_model()) return elliptic(e->base_change(target, image), cap_);
  return rational(target);
}

TowerReport Backend::tower(std::uint64_t p, std::uint64_t q, unsigned levels,
                           const TowerOptions& options) const {
  if (q == field().characteristic()) {
    throw Error(ErrorKind::CharacteristicClash, "q must differ from the characteristic");
  }
  if (!frobenius_) return trivial_tower(p, q, levels);
  return tower_qpart(*frobenius_, p, q, levels, options);
}

}  // namespace ffdio
