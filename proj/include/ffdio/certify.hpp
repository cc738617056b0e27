#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffdio/backend.hpp"
#include "ffdio/bigint.hpp"
#include "ffdio/factor.hpp"
#include "ffdio/poly.hpp"
#include "ffdio/resultant.hpp"

namespace ffdio {

enum class HypothesisStatus { Satisfied, Violated, NotChecked };

std::string to_string(HypothesisStatus s);
HypothesisStatus parse_hypothesis_status(const std::string& s);

struct Hypothesis {
  std::string name;
  HypothesisStatus status = HypothesisStatus::NotChecked;
  std::string detail;

  bool operator==(const Hypothesis&) const = default;
};

class Hypotheses {
 public:
  void add(std::string name, bool ok, std::string detail);
  void add_unchecked(std::string name, std::string detail);
  void append(const Hypotheses& other);

  bool all_satisfied() const;
  const Hypothesis* find(const std::string& name) const;
  /// Names of the violated entries, in order.
  std::vector<std::string> violated() const;
  const std::vector<Hypothesis>& items() const { return items_; }
  std::vector<Hypothesis>& items() { return items_; }

  bool operator==(const Hypotheses&) const = default;

 private:
  std::vector<Hypothesis> items_;
};

enum class Conclusion { OnlyConstantSolutions, NotCertified };

std::string to_string(Conclusion c);
Conclusion parse_conclusion(const std::string& s);

struct CertificateEquation {
  std::string f;      // polynomial in X over the field below
  std::string field;  // e.g. "GF(5)"
  std::uint64_t q = 0;
  std::optional<std::uint64_t> n;  // exponent of Y; absent when k is unknown

  bool operator==(const CertificateEquation&) const = default;
};

struct CertificateRing {
  std::string kind;     // rational | elliptic | tower | multivariate
  std::string backend;  // e.g. "rational(GF(5))"
  std::optional<std::uint64_t> p;         // tower prime
  std::optional<unsigned> num_vars;       // multivariate rank

  bool operator==(const CertificateRing&) const = default;
};

struct BaseChangeRecord {
  std::string from;
  std::string to;
  std::string embedding;  // image of the generator of `from`

  bool operator==(const BaseChangeRecord&) const = default;
};

struct TowerSummary {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  unsigned levels = 0;
  std::vector<unsigned> vq_sequence;
  std::optional<unsigned> rigorous_bound;

  bool operator==(const TowerSummary&) const = default;
};

struct ProgressionSummary {
  std::uint64_t m = 0, d = 0, r = 0, l = 0;
  std::string integer_poly;
  std::string discriminant;  // decimal
  std::uint64_t discriminant_mod_l = 0;
  std::string reduced_poly;
  std::optional<std::string> route;  // "P3a" or "P3b"

  bool operator==(const ProgressionSummary&) const = default;
};

/// Declarative record of a constancy criterion applied to Y^n = f(X).
struct Certificate {
  CertificateEquation equation;
  CertificateRing ring;
  std::string theorem;
  std::optional<unsigned> k;
  Hypotheses hypotheses;
  Conclusion conclusion = Conclusion::NotCertified;
  std::optional<BaseChangeRecord> base_change;
  std::optional<TowerSummary> tower;
  std::optional<ProgressionSummary> progression;

  bool certified() const { return conclusion == Conclusion::OnlyConstantSolutions; }
  /// Sets the conclusion from the hypotheses.
  void finalize();

  bool operator==(const Certificate&) const = default;
};

struct CertifyOptions {
  /// Pass to the splitting field of f when it does not split over kappa.
  bool allow_base_change = false;
  std::uint64_t seed = kDefaultSeed;
  TowerOptions tower;
};

/// Class-group torsion criterion in the ring of integers of the backend.
/// Throws ZeroPolynomial, SpecMismatch.
Certificate certify_torsion(const Backend& backend, const Poly& f, std::uint64_t q,
                            const CertifyOptions& options = {});

/// Constant Z_p-tower over the backend: coprime case (p != q) via the cycle
/// bound on q-parts, same-prime case via p not dividing h.
Certificate certify_constant_tower(const Backend& backend, const Poly& f, std::uint64_t p, std::uint64_t q,
                                   unsigned levels, const CertifyOptions& options = {});

/// K[T1..Tr]; the verdict does not depend on r.
Certificate certify_polynomial_ring(const Field& field, const Poly& f, std::uint64_t q, unsigned num_vars,
                                    const CertifyOptions& options = {});

struct ProgressionParams {
  std::uint64_t m = 2;
  std::uint64_t d = 2;
  std::uint64_t r = 1;
  std::uint64_t l = 5;
  std::uint64_t q = 3;

  /// Throws InvalidArgument / NotPrime / CharacteristicClash.
  void validate() const;
};

struct ProgressionTerm {
  unsigned j = 0;
  BigInt binomial;   // C(m, j)
  BigInt r_power;    // r^j
  BigInt power_sum;  // sum_{i=1}^d i^j
  BigInt coefficient;
};

struct ProgressionPoly {
  IntPoly integer;  // sum_{i=1}^d (X + i r)^m
  std::vector<ProgressionTerm> table;  // j = 0..m, coefficient of X^(m-j)
  Poly reduced;                        // over the requested field of characteristic l
};

/// Builds the progression polynomial twice (direct expansion and the
/// binomial power-sum formula) and checks they agree.
ProgressionPoly build_progression_poly(const ProgressionParams& params, const Field& field);
ProgressionPoly build_progression_poly(const ProgressionParams& params);

enum class ProgressionMode { Torsion, Tower, PolynomialRing };

struct ProgressionOptions {
  ProgressionMode mode = ProgressionMode::Torsion;
  std::uint64_t tower_p = 2;
  unsigned tower_levels = 3;
  unsigned num_vars = 1;
  CertifyOptions certify;
};

/// Progression criterion: P1 roots in kappa, P2 l does not divide r, P3 via
/// the discriminant (P3a) or the congruence route (P3b); then the delegated
/// certifier must confirm the factorization shape.
Certificate certify_progression(const ProgressionParams& params, const Backend& backend,
                                const ProgressionOptions& options = {});

struct PlaceCheck {
  std::string place;  // irreducible in T, or "infinity"
  long lhs = 0;       // n * ord(Y)
  long rhs = 0;       // sum n_i * ord(g_i(X))

  bool holds() const { return lhs == rhs; }
};

struct DivisorIdentityReport {
  bool zero_solution = false;  // Y = 0 with X a root of f
  std::vector<PlaceCheck> places;
  long degree_f_times_degree_x = 0;

  bool holds() const;
};

/// n div(Y) = sum n_i div(g_i(X)) over kappa[T] for a solution of Y^n = f(X).
/// Throws NotASolution.
DivisorIdentityReport verify_divisor_identity(const Poly& x, const Poly& y, const Factorization& f,
                                              std::uint64_t n);

}  // namespace ffdio
