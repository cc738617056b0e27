#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ffdio/certify.hpp"
#include "ffdio/elliptic.hpp"
#include "ffdio/mpoly.hpp"
#include "ffdio/poly.hpp"

namespace ffdio {

struct SearchOptions {
  std::uint64_t cap = kDefaultEnumerationCap;
  unsigned workers = 1;
  /// Elliptic only: restrict Y to the pole order forced by f(X).
  bool prune = true;
};

struct SearchBounds {
  std::string kind;  // degree | pole_order | per_variable
  std::vector<unsigned> values;

  bool operator==(const SearchBounds&) const = default;
};

struct SearchSolution {
  std::string x;
  std::string y;
  bool constant = false;

  bool operator==(const SearchSolution&) const = default;
};

struct SearchReport {
  std::string ring;
  std::string f;
  std::uint64_t n = 0;
  SearchBounds bounds;
  bool exhaustive = false;
  std::vector<SearchSolution> solutions;
  std::uint64_t tested_count = 0;
  std::uint64_t cap = 0;
  double elapsed_ms = 0;

  std::size_t nonconstant_count() const;
  const SearchSolution* first_nonconstant() const;
};

/// Rational solutions with the search report, in the same order.
struct RationalSearch {
  SearchReport report;
  std::vector<std::pair<Poly, Poly>> pairs;  // (X, Y) in kappa[T]
};

/// X ranges over kappa[T] with deg X <= D; Y over the n-th roots of f(X).
RationalSearch search_rational(const Field& field, const Poly& f, std::uint64_t n, unsigned degree_bound,
                               const SearchOptions& options = {});

/// X ranges over the ring of integers with pole order <= B.
SearchReport search_elliptic(const EllipticModel& model, const Poly& f, std::uint64_t n, unsigned pole_bound,
                             const SearchOptions& options = {});

/// X ranges over K[T1..Tr] with deg_Ti X <= bounds[i].
SearchReport search_multivar(const Field& field, const Poly& f, std::uint64_t n,
                             const std::vector<unsigned>& bounds, const SearchOptions& options = {});

struct Confrontation {
  bool agree = true;
  std::string detail;
};

/// A certified equation must have no nonconstant solution in the report.
Confrontation confront(const Certificate& certificate, const SearchReport& report);

}  // namespace ffdio
