#pragma once

#include <string>

#include "ffdio/backend.hpp"
#include "ffdio/field.hpp"
#include "ffdio/mpoly.hpp"
#include "ffdio/poly.hpp"

namespace ffdio {

/// "GF(5)", "GF(2^2)", "GF(3^2;mod=1,0,1)" (modulus constant term first).
Field parse_field(const std::string& text);

/// Integer or expression in the generator g, e.g. "2*g+1".
Elt parse_element(const Field& field, const std::string& text);

/// "3*X^2+2*X+4", "(X-2)*(X-4)^3", or the coefficient list "[4,2,3]"
/// (constant term first).
Poly parse_poly(const Field& field, const std::string& text, const std::string& var = "X");

/// "T1^2*T2 + 3*T2^3"; "T" is accepted when num_vars == 1.
MPoly parse_mpoly(const Field& field, unsigned num_vars, const std::string& text);

/// "rational(GF(5))" or "elliptic(GF(5); a=[0,0,0,1,1])".
Backend parse_backend(const std::string& text, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace ffdio
