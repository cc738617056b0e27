#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ffdio {

/// Rational-backend equation Y^q = f(X) with its expected verdict.
struct CatalogEntry {
  std::string field;
  std::string f;
  std::uint64_t q = 0;
  bool certified = false;
  /// For negative controls: a nonconstant solution in kappa[T], and the
  /// hypothesis expected to fail.
  std::optional<std::pair<std::string, std::string>> witness;
  std::string violated;
};

std::vector<CatalogEntry> certified_catalog();
std::vector<CatalogEntry> negative_controls();

}  // namespace ffdio
