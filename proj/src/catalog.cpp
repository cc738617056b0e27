#include "ffdio/catalog.hpp"

namespace ffdio {

std::vector<CatalogEntry> certified_catalog() {
  return {
      {"GF(5)", "[4,2,3]", 3, true, std::nullopt, ""},
      {"GF(5)", "X*(X-1)", 2, true, std::nullopt, ""},
      {"GF(5)", "X*(X-1)*(X-2)", 3, true, std::nullopt, ""},
      {"GF(5)", "(X-1)*(X-2)*(X-3)*(X-4)", 3, true, std::nullopt, ""},
      {"GF(5)", "2*X*(X-1)^2*(X-3)^3", 2, true, std::nullopt, ""},
      {"GF(3)", "X*(X-1)", 2, true, std::nullopt, ""},
      {"GF(3)", "X*(X+1)^2", 5, true, std::nullopt, ""},
      {"GF(3)", "2*X*(X-2)", 5, true, std::nullopt, ""},
      {"GF(7)", "(X-1)*(X-2)", 3, true, std::nullopt, ""},
      {"GF(7)", "X^2*(X-3)^3", 5, true, std::nullopt, ""},
      {"GF(7)", "(X-1)*(X-2)*(X-3)*(X-4)", 2, true, std::nullopt, ""},
      {"GF(7)", "X^3*(X-1)^2*(X-5)", 3, true, std::nullopt, ""},
  };
}

std::vector<CatalogEntry> negative_controls() {
  return {
      {"GF(5)", "X^3", 3, false, std::make_pair("T", "T"), "H3"},
      {"GF(5)", "2*X^3", 3, false, std::make_pair("T", "3*T"), "H3"},
      {"GF(5)", "X^3*(X-1)^3", 3, false, std::make_pair("T", "T^2+4*T"), "H4"},
      {"GF(3)", "X^2*(X-1)^2", 2, false, std::make_pair("T", "T^2+2*T"), "H4"},
      {"GF(7)", "(X-1)^2*(X-2)^4", 2, false, std::make_pair("T", "T^3+2*T^2+T+3"), "H4"},
      {"GF(3)", "X*(X-1)", 3, false, std::make_pair("T^3", "T^2+2*T"), "H1"},
      {"GF(3)", "X*(X+1)*(X+2)", 3, false, std::make_pair("T^3", "T^3+2*T"), "H1"},
  };
}

}  // namespace ffdio
