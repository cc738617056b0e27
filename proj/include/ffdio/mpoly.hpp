#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ffdio/field.hpp"
#include "ffdio/poly.hpp"

namespace ffdio {

using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic order: total degree, then lexicographic with T1 most
/// significant.
bool grlex_less(const Exponents& a, const Exponents& b);

/// Sparse polynomial in K[T1, ..., Tr]; no zero coefficients are stored.
class MPoly {
 public:
  MPoly() = default;
  MPoly(Field field, unsigned num_vars);

  static MPoly constant(const Field& field, unsigned num_vars, Elt c);
  /// T_(index+1), zero-based index.
  static MPoly variable(const Field& field, unsigned num_vars, unsigned index);
  static MPoly monomial(const Field& field, Elt c, Exponents exps);

  const Field& field() const { return field_; }
  unsigned num_vars() const { return num_vars_; }
  const std::map<Exponents, Elt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial (0 for the zero polynomial).
  Elt constant_value() const;
  std::size_t size() const { return terms_.size(); }

  /// Sets the coefficient of a monomial, dropping it when c == 0.
  void set(const Exponents& e, Elt c);
  Elt coeff(const Exponents& e) const;

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator-() const;
  MPoly operator*(const MPoly& o) const;
  MPoly scale(Elt c) const;
  MPoly pow(std::uint64_t e) const;

  /// Largest term in graded lexicographic order. Throws ZeroPolynomial.
  std::pair<Exponents, Elt> leading_term() const;
  unsigned total_degree() const;

  bool operator==(const MPoly& o) const;
  bool operator<(const MPoly& o) const;

  /// e.g. "T1^2*T2+3*T2^3"; single-variable rings print "T".
  std::string to_string() const;

 private:
  void check_same(const MPoly& o) const;
  Field field_;
  unsigned num_vars_ = 1;
  std::map<Exponents, Elt> terms_;
};

/// Degree in T_(index+1); throws ZeroPolynomial for g = 0.
unsigned per_var_degree(const MPoly& g, unsigned index);

/// Some Y with Y^n == g, or nullopt; graded-lex leading-term peeling with
/// re-expansion check.
std::optional<MPoly> mp_nth_root(const MPoly& g, std::uint64_t n);

/// f(x) for univariate f with coefficients in the same field.
MPoly compose(const Poly& f, const MPoly& x);

/// Embeds a univariate polynomial as a polynomial in T_(index+1).
MPoly to_mpoly(const Poly& p, unsigned num_vars, unsigned index = 0);

/// Polynomials with deg_Ti <= bounds[i], indexed 0 .. count-1 in a fixed
/// order (base-q digits over the monomials of the box).
class BoundedPolySpace {
 public:
  BoundedPolySpace(Field field, std::vector<unsigned> bounds,
                   std::uint64_t cap = kDefaultEnumerationCap);

  std::uint64_t count() const { return count_; }
  MPoly at(std::uint64_t index) const;
  const std::vector<Exponents>& monomials() const { return monomials_; }

 private:
  Field field_;
  std::vector<unsigned> bounds_;
  std::vector<Exponents> monomials_;
  std::uint64_t count_ = 0;
};

std::vector<MPoly> enumerate_bounded(const Field& field, unsigned num_vars,
                                     const std::vector<unsigned>& bounds,
                                     std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace ffdio
