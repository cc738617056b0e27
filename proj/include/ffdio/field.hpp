#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ffdio {

/// Packed element of GF(l^s): the base-l integer sum c_i * l^i of its
/// power-basis coordinates. Integer order on packed values is the canonical
/// element order used for enumeration and for every deterministic choice.
using Elt = std::uint64_t;

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

class FieldElement;

/// GF(l^s) = GF(l)[g]/(modulus(g)). Immutable, cheap to copy; copies share
/// the same tables.
class Field {
 public:
  Field();  // GF(2)

  /// Validates (l, s, modulus). Without a modulus the smallest monic
  /// irreducible of degree s in canonical order is chosen.
  static Field create(std::uint64_t characteristic, unsigned degree,
                      std::optional<std::vector<std::uint64_t>> modulus = std::nullopt);

  std::uint64_t characteristic() const;
  unsigned degree() const;
  std::uint64_t order() const;
  /// Constant-first coefficients, length degree()+1, monic.
  const std::vector<std::uint64_t>& modulus() const;
  bool has_default_modulus() const;

  Elt zero() const { return 0; }
  Elt one() const { return 1; }
  Elt from_int(std::int64_t v) const;
  /// The class of g; for prime fields this is 0 (modulus X).
  Elt generator() const;

  Elt add(Elt a, Elt b) const;
  Elt sub(Elt a, Elt b) const;
  Elt neg(Elt a) const;
  Elt mul(Elt a, Elt b) const;
  Elt inv(Elt a) const;
  Elt div(Elt a, Elt b) const;
  Elt pow(Elt a, std::uint64_t e) const;
  /// a^(l^iterations).
  Elt frobenius(Elt a, std::int64_t iterations = 1) const;

  std::vector<std::uint64_t> coeffs(Elt a) const;
  Elt from_coeffs(std::span<const std::uint64_t> c) const;
  bool in_prime_field(Elt a) const { return a < characteristic(); }
  bool is_valid(Elt a) const { return a < order(); }

  FieldElement element(Elt v) const;

  /// "GF(5)", "GF(2^2)", or "GF(3^2;mod=2,1,1)" for a non-default modulus.
  std::string to_string() const;
  /// Element text: integers for the prime field, otherwise a polynomial in g.
  std::string format(Elt a) const;

  bool operator==(const Field& other) const;
  bool same_object(const Field& other) const { return impl_ == other.impl_; }

  struct Impl;

 private:
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// An element together with the field it lives in.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(Field field, Elt value);

  const Field& field() const { return field_; }
  Elt value() const { return value_; }
  std::vector<std::uint64_t> coeffs() const { return field_.coeffs(value_); }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement pow(std::uint64_t e) const;
  FieldElement inverse() const;
  FieldElement frobenius(std::int64_t iterations = 1) const;

  bool operator==(const FieldElement& o) const;
  std::strong_ordering operator<=>(const FieldElement& o) const;

  std::string to_string() const { return field_.format(value_); }

 private:
  const Field& checked(const FieldElement& o) const;
  Field field_;
  Elt value_ = 0;
};

/// All l^s elements in canonical order. Throws CapExceeded past `cap`.
std::vector<FieldElement> enumerate_elements(const Field& field,
                                             std::uint64_t cap = kDefaultEnumerationCap);

/// Some b with b^n == a, the canonically smallest one, or nullopt.
std::optional<FieldElement> nth_root_in_field(const FieldElement& a, std::uint64_t n);
std::optional<Elt> nth_root(const Field& field, Elt a, std::uint64_t n);

/// All b in the field with b^n == 1, sorted.
std::vector<Elt> roots_of_unity(const Field& field, std::uint64_t n);

/// Canonically smallest image of `from`'s generator in `to`, i.e. the smallest
/// root in `to` of from.modulus(). Throws NoEmbedding.
Elt find_embedding(const Field& from, const Field& to);

/// Image of a under the embedding sending from's generator to `image`.
Elt embed(const Field& from, const Field& to, Elt image, Elt a);

}  // namespace ffdio
