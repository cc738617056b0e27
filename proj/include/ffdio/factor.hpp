#pragma once

#include <cstdint>
#include <vector>

#include "ffdio/poly.hpp"

namespace ffdio {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'f00dULL;

struct LinearFactor {
  FieldElement root;
  unsigned multiplicity = 0;
};

struct IrreducibleFactor {
  Poly factor;  // monic, degree >= 2
  unsigned multiplicity = 0;
};

/// f = unit * prod (X - root)^mult * prod irreducible^mult.
struct Factorization {
  Field field;
  FieldElement unit;
  std::vector<LinearFactor> linear;        // sorted by root
  std::vector<IrreducibleFactor> nonlinear;  // sorted by degree, then coefficients
  std::uint64_t seed = kDefaultSeed;

  /// Number of distinct roots in the field.
  std::size_t t() const { return linear.size(); }
  bool splits() const { return nonlinear.empty(); }
  Poly expand() const;
  std::string to_string(const std::string& var = "X") const;
};

/// Square-free decomposition of a monic polynomial: pairwise coprime
/// square-free parts with their multiplicities, handling f' = 0 by l-th roots.
std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f);

/// Distinct-degree factorization of a monic square-free polynomial.
std::vector<std::pair<Poly, unsigned>> distinct_degree(const Poly& f);

/// Equal-degree splitting (Cantor-Zassenhaus) of a monic square-free product
/// of irreducibles of degree d.
std::vector<Poly> equal_degree(const Poly& f, unsigned d, std::uint64_t seed);

/// Complete factorization. Throws ZeroPolynomial.
Factorization factor(const Poly& f, std::uint64_t seed = kDefaultSeed);

/// Distinct roots of f in its field, sorted.
std::vector<Elt> roots(const Poly& f, std::uint64_t seed = kDefaultSeed);

}  // namespace ffdio
