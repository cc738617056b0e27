#pragma once

#include <optional>
#include <string>
#include <variant>

#include "ffdio/class_group.hpp"
#include "ffdio/elliptic.hpp"
#include "ffdio/field.hpp"
#include "ffdio/tower.hpp"

namespace ffdio {

/// A function field with a degree-one place at infinity: kappa(T) or an
/// elliptic curve, with its class group precomputed.
class Backend {
 public:
  static Backend rational(const Field& field);
  static Backend elliptic(const EllipticModel& model, std::uint64_t cap = kDefaultEnumerationCap);

  bool is_rational() const { return std::holds_alternative<Field>(model_); }
  unsigned genus() const { return is_rational() ? 0 : 1; }
  const Field& field() const;
  const EllipticModel* elliptic_model() const { return std::get_if<EllipticModel>(&model_); }
  const ClassGroupInfo& class_group() const { return class_group_; }
  /// Present for genus 1.
  const std::optional<FrobeniusData>& frobenius() const { return frobenius_; }

  /// "rational(GF(5))" or "elliptic(GF(5); a=[0,0,0,1,1])".
  std::string to_string() const;
  /// Name of the ring of integers: "rational" or "elliptic".
  std::string kind() const { return is_rational() ? "rational" : "elliptic"; }

  /// Same curve over an extension of the constants, class group recomputed.
  Backend base_change(const Field& target, Elt image) const;

  TowerReport tower(std::uint64_t p, std::uint64_t q, unsigned levels, const TowerOptions& options = {}) const;

 private:
  Backend() = default;
  std::variant<Field, EllipticModel> model_;
  ClassGroupInfo class_group_;
  std::optional<FrobeniusData> frobenius_;
  std::uint64_t cap_ = kDefaultEnumerationCap;
};

}  // namespace ffdio
