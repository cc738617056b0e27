#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffdio/field.hpp"

namespace ffdio {

/// Dense univariate polynomial over a finite field, constant term first, no
/// trailing zeros. The zero polynomial has an empty coefficient vector.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Field field) : field_(std::move(field)) {}
  Poly(Field field, std::vector<Elt> coeffs);

  static Poly constant(const Field& field, Elt c);
  static Poly monomial(const Field& field, Elt c, std::size_t degree);
  /// The identity polynomial X.
  static Poly x(const Field& field);
  static Poly from_ints(const Field& field, const std::vector<std::int64_t>& coeffs);

  const Field& field() const { return field_; }
  const std::vector<Elt>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  Elt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Elt lc() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  FieldElement operator[](std::size_t i) const { return field_.element(coeff(i)); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scale(Elt c) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly monic() const;
  Poly derivative() const;
  Poly pow(std::uint64_t e) const;
  Elt eval(Elt x) const;
  /// this(inner).
  Poly compose(const Poly& inner) const;
  /// Coefficientwise Frobenius a -> a^(l^iterations).
  Poly frobenius(std::int64_t iterations) const;

  bool operator==(const Poly& o) const;
  /// Degree first, then coefficients from the top.
  bool operator<(const Poly& o) const;

  /// Human form, e.g. "3*X^2+2*X+4".
  std::string to_string(const std::string& var = "X") const;

 private:
  void trim();
  void check_same(const Poly& o) const;
  Field field_;
  std::vector<Elt> coeffs_;
};

/// (quotient, remainder) with deg(remainder) < deg(b). Throws DivisionByZero.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
/// base^e mod m.
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m);

/// Some Y with Y^n == g, or nullopt. Leading-coefficient root via
/// nth_root_in_field, then top-down coefficient peeling; verified by
/// re-expansion.
std::optional<Poly> qth_root_poly(const Poly& g, std::uint64_t n);

/// Coefficientwise image of f in `target` along the embedding of f's field
/// sending its generator to `image`.
Poly base_change(const Poly& f, const Field& target, Elt image);

/// Ben-Or irreducibility test.
bool is_irreducible(const Poly& f);

/// Coefficient list, constant term first: "[4,2,3]".
std::string to_list_string(const Poly& f);

}  // namespace ffdio
