#pragma once

#include "json.hpp"

#include "ffdio/certify.hpp"
#include "ffdio/search.hpp"
#include "ffdio/tower.hpp"
#include "ffdio/valuations.hpp"

namespace ffdio {

using Json = nlohmann::ordered_json;

Json to_json(const Certificate& c);
/// Inverse of to_json; throws ParseError on schema violations.
Certificate certificate_from_json(const Json& j);

Json to_json(const SearchReport& r);
SearchReport search_report_from_json(const Json& j);

/// [[exponents, coefficient], ...] in ascending graded lexicographic order.
Json to_json(const MPoly& g);
/// Throws ParseError on malformed terms or wrong exponent length.
MPoly mpoly_from_json(const Field& field, unsigned num_vars, const Json& j);

Json to_json(const TowerReport& r);
Json to_json(const AxiomReport& r);
Json to_json(const PowerDifferenceReport& r);
Json to_json(const LawSuiteReport& r);
Json to_json(const DivisorIdentityReport& r);
Json to_json(const Confrontation& c);

}  // namespace ffdio
