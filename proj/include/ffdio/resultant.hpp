#pragma once

#include <vector>

#include "ffdio/bigint.hpp"
#include "ffdio/poly.hpp"

namespace ffdio {

/// Integer polynomial, constant term first, no trailing zeros.
using IntPoly = std::vector<BigInt>;

/// Resultant by the subresultant polynomial remainder sequence.
/// Throws ZeroPolynomial if either input is zero.
FieldElement resultant(const Poly& f, const Poly& g);

/// (-1)^(d(d-1)/2) * lc^(d-2) * prod f'(roots), i.e. the discriminant with f'
/// taken at its formal degree d-1. Zero when f' vanishes identically.
FieldElement discriminant(const Poly& f);

BigInt resultant(const IntPoly& f, const IntPoly& g);
BigInt integer_poly_discriminant(const IntPoly& f);

/// Reduction mod the characteristic of `field` (which must be prime).
Poly reduce(const IntPoly& f, const Field& field);

std::string to_string(const IntPoly& f, const std::string& var = "X");

}  // namespace ffdio
