#include "ffdio/certify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "ffdio/arith.hpp"
#include "ffdio/error.hpp"

namespace ffdio {

namespace {

constexpr const char* kTorsion = "class_group_torsion";
constexpr const char* kTowerCoprime = "constant_tower_coprime";
constexpr const char* kTowerSamePrime = "constant_tower_same_prime";
constexpr const char* kPolynomialRing = "polynomial_ring";
constexpr const char* kProgression = "arithmetic_progression";

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

/// H1-H4 for f over kappa, possibly after passing to the splitting field.
struct Shape {
  Hypotheses hypotheses;
  Factorization factorization;
  std::optional<BaseChangeRecord> base_change;
  std::optional<std::pair<Field, Elt>> extension;  // target field and embedding image
};

Shape check_shape(const Poly& f, std::uint64_t q, const CertifyOptions& options) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "f must be nonzero");
  if (!is_prime(q)) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not prime");
  const Field& field = f.field();
  const std::uint64_t ell = field.characteristic();
  Shape s;
  s.hypotheses.add("H1", q != ell,
                   q != ell ? "q = " + std::to_string(q) + " differs from the characteristic " + std::to_string(ell)
                            : "q = " + std::to_string(q) + " equals the characteristic");
  s.factorization = factor(f, options.seed);
  const Field* over = &field;
  if (!s.factorization.splits() && options.allow_base_change) {
    unsigned l = 1;
    for (const auto& nf : s.factorization.nonlinear) l = std::lcm(l, static_cast<unsigned>(nf.factor.degree()));
    const unsigned degree = field.degree() * l;
    if (!checked_pow(ell, degree) || *checked_pow(ell, degree) >= (1ULL << 62)) {
      throw Error(ErrorKind::CapExceeded, "splitting field GF(" + std::to_string(ell) + "^" +
                                              std::to_string(degree) + ") is too large");
    }
    Field target = Field::create(ell, degree, std::nullopt);
    const Elt image = find_embedding(field, target);
    s.base_change = BaseChangeRecord{field.to_string(), target.to_string(), target.format(image)};
    s.factorization = factor(base_change(f, target, image), options.seed);
    s.extension = std::make_pair(target, image);
    over = &s.factorization.field;
  }
  const Factorization& fa = s.factorization;
  if (fa.splits()) {
    s.hypotheses.add("H2", true, "f = " + fa.to_string() + " splits over " + over->to_string());
  } else {
    const auto& g = fa.nonlinear.front().factor;
    s.hypotheses.add("H2", false,
                     "irreducible factor " + g.to_string() + " of degree " + std::to_string(g.degree()) +
                         " over " + over->to_string());
  }
  std::vector<std::string> roots, mults;
  std::size_t coprime = 0;
  for (const auto& lf : fa.linear) {
    roots.push_back(lf.root.to_string());
    mults.push_back(std::to_string(lf.multiplicity));
    if (lf.multiplicity % q != 0) ++coprime;
  }
  s.hypotheses.add("H3", fa.t() >= 2,
                   "t = " + std::to_string(fa.t()) + " distinct roots" +
                       (roots.empty() ? std::string() : ": " + join(roots, ", ")));
  s.hypotheses.add("H4", coprime >= 2,
                   "multiplicities [" + join(mults, ",") + "]; " + std::to_string(coprime) +
                       " of them prime to " + std::to_string(q));
  return s;
}

std::optional<std::uint64_t> exponent(std::uint64_t q, std::optional<unsigned> k) {
  if (!k) return std::nullopt;
  auto n = checked_pow(q, *k);
  if (!n) throw Error(ErrorKind::CapExceeded, "exponent q^k exceeds 64 bits");
  return n;
}

Certificate skeleton(const Poly& f, std::uint64_t q, const Shape& s, const Backend& used) {
  Certificate c;
  c.equation.f = to_list_string(f);
  c.equation.field = f.field().to_string();
  c.equation.q = q;
  c.ring.kind = used.kind();
  c.ring.backend = used.to_string();
  c.hypotheses = s.hypotheses;
  c.base_change = s.base_change;
  return c;
}

Backend backend_after(const Backend& backend, const Shape& s) {
  if (!s.extension) return backend;
  return backend.base_change(s.extension->first, s.extension->second);
}

void check_field(const Backend& backend, const Poly& f) {
  if (!(backend.field() == f.field())) {
    throw Error(ErrorKind::SpecMismatch,
                "f is over " + f.field().to_string() + ", backend over " + backend.field().to_string());
  }
}

TowerSummary summarize(const TowerReport& t) {
  return {t.p, t.q, t.levels, t.vq_sequence, t.rigorous_bound};
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

IntPoly trim(IntPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return trim(r);
}

long order_at(Poly h, const Poly& pi) {
  long k = 0;
  for (;;) {
    auto [quo, rem] = divrem(h, pi);
    if (!rem.is_zero()) return k;
    h = std::move(quo);
    ++k;
  }
}

}  // namespace

std::string to_string(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::Satisfied:
      return "satisfied";
    case HypothesisStatus::Violated:
      return "violated";
    case HypothesisStatus::NotChecked:
      return "not_checked";
  }
  return "not_checked";
}

HypothesisStatus parse_hypothesis_status(const std::string& s) {
  if (s == "satisfied") return HypothesisStatus::Satisfied;
  if (s == "violated") return HypothesisStatus::Violated;
  if (s == "not_checked") return HypothesisStatus::NotChecked;
  throw Error(ErrorKind::ParseError, "unknown hypothesis status '" + s + "'");
}

std::string to_string(Conclusion c) {
  return c == Conclusion::OnlyConstantSolutions ? "only_constant_solutions" : "not_certified";
}

Conclusion parse_conclusion(const std::string& s) {
  if (s == "only_constant_solutions") return Conclusion::OnlyConstantSolutions;
  if (s == "not_certified") return Conclusion::NotCertified;
  throw Error(ErrorKind::ParseError, "unknown conclusion '" + s + "'");
}

void Hypotheses::add(std::string name, bool ok, std::string detail) {
  items_.push_back({std::move(name), ok ? HypothesisStatus::Satisfied : HypothesisStatus::Violated,
                    std::move(detail)});
}

void Hypotheses::add_unchecked(std::string name, std::string detail) {
  items_.push_back({std::move(name), HypothesisStatus::NotChecked, std::move(detail)});
}

void Hypotheses::append(const Hypotheses& other) {
  items_.insert(items_.end(), other.items_.begin(), other.items_.end());
}

bool Hypotheses::all_satisfied() const {
  if (items_.empty()) return false;
  for (const auto& h : items_) {
    if (h.status != HypothesisStatus::Satisfied) return false;
  }
  return true;
}

const Hypothesis* Hypotheses::find(const std::string& name) const {
  for (const auto& h : items_) {
    if (h.name == name) return &h;
  }
  return nullptr;
}

std::vector<std::string> Hypotheses::violated() const {
  std::vector<std::string> out;
  for (const auto& h : items_) {
    if (h.status == HypothesisStatus::Violated) out.push_back(h.name);
  }
  return out;
}

void Certificate::finalize() {
  conclusion = hypotheses.all_satisfied() ? Conclusion::OnlyConstantSolutions : Conclusion::NotCertified;
}

Certificate certify_torsion(const Backend& backend, const Poly& f, std::uint64_t q, const CertifyOptions& options) {
  check_field(backend, f);
  Shape s = check_shape(f, q, options);
  const Backend used = backend_after(backend, s);
  Certificate c = skeleton(f, q, s, used);
  c.theorem = kTorsion;
  if (q != f.field().characteristic()) c.k = least_stable_k(used.class_group(), q);
  c.equation.n = exponent(q, c.k);
  c.finalize();
  return c;
}

Certificate certify_constant_tower(const Backend& backend, const Poly& f, std::uint64_t p, std::uint64_t q,
                                   unsigned levels, const CertifyOptions& options) {
  check_field(backend, f);
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  Shape s = check_shape(f, q, options);
  const Backend used = backend_after(backend, s);
  Certificate c = skeleton(f, q, s, used);
  c.ring.kind = "tower";
  c.ring.p = p;
  const bool q_ok = q != f.field().characteristic();
  if (p != q) {
    c.theorem = kTowerCoprime;
    if (q_ok) {
      const TowerReport t = used.tower(p, q, levels, options.tower);
      c.tower = summarize(t);
      const unsigned bound = *t.rigorous_bound;
      std::ostringstream detail;
      detail << "v_" << q << "(h_n) <= " << bound << " at every level";
      if (used.frobenius()) {
        detail << " (" << t.cycle_length << " residues of p^n modulo the order " << t.matrix_order
               << " of Frobenius mod " << q << "^" << t.modulus_exponent << ")";
      } else {
        detail << " (class numbers are 1)";
      }
      c.hypotheses.add("tower_bound", true, detail.str());
      c.k = bound + 1;
    } else {
      c.hypotheses.add_unchecked("tower_bound", "requires q different from the characteristic");
    }
    c.equation.n = exponent(q, c.k);
  } else {
    c.theorem = kTowerSamePrime;
    const std::uint64_t h = used.class_group().h;
    c.hypotheses.add("p_does_not_divide_h", h % p != 0,
                     "h = " + std::to_string(h) + (h % p != 0 ? ", coprime to p = " : ", divisible by p = ") +
                         std::to_string(p));
    if (q_ok) c.tower = summarize(used.tower(p, q, levels, options.tower));
    c.k = 1;
    c.equation.n = p;
  }
  c.finalize();
  return c;
}

Certificate certify_polynomial_ring(const Field& field, const Poly& f, std::uint64_t q, unsigned num_vars,
                                    const CertifyOptions& options) {
  if (num_vars == 0) throw Error(ErrorKind::InvalidArgument, "need at least one variable");
  if (!(f.field() == field)) throw Error(ErrorKind::SpecMismatch, "f is not over " + field.to_string());
  Shape s = check_shape(f, q, options);
  const Field used = s.extension ? s.extension->first : field;
  Certificate c = skeleton(f, q, s, Backend::rational(used));
  c.ring.kind = "multivariate";
  c.ring.backend = used.to_string() + "[T1..T" + std::to_string(num_vars) + "]";
  c.ring.num_vars = num_vars;
  c.theorem = kPolynomialRing;
  if (q != field.characteristic()) c.k = 1;
  c.equation.n = exponent(q, c.k);
  c.finalize();
  return c;
}

void ProgressionParams::validate() const {
  if (m < 2 || d < 2 || r < 1) throw Error(ErrorKind::InvalidArgument, "need m >= 2, d >= 2, r >= 1");
  if (l < 5 || !is_prime(l)) throw Error(ErrorKind::InvalidArgument, "characteristic must be a prime >= 5");
  if (!is_prime(q)) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not prime");
  if (q == l) throw Error(ErrorKind::CharacteristicClash, "q equals the characteristic");
}

ProgressionPoly build_progression_poly(const ProgressionParams& params, const Field& field) {
  if (field.characteristic() != params.l) {
    throw Error(ErrorKind::SpecMismatch, "field characteristic differs from l");
  }
  ProgressionPoly out;
  IntPoly sum;
  for (std::uint64_t i = 1; i <= params.d; ++i) {
    const IntPoly lin{BigInt(i) * params.r, 1};
    IntPoly term{1};
    for (std::uint64_t e = 0; e < params.m; ++e) term = mul(term, lin);
    if (sum.size() < term.size()) sum.resize(term.size(), 0);
    for (std::size_t k = 0; k < term.size(); ++k) sum[k] += term[k];
  }
  out.integer = trim(sum);

  IntPoly formula(params.m + 1, 0);
  for (unsigned j = 0; j <= params.m; ++j) {
    ProgressionTerm t;
    t.j = j;
    t.binomial = binomial(params.m, j);
    t.r_power = pow(BigInt(params.r), j);
    t.power_sum = 0;
    for (std::uint64_t i = 1; i <= params.d; ++i) t.power_sum += pow(BigInt(i), j);
    t.coefficient = t.binomial * t.r_power * t.power_sum;
    formula[params.m - j] = t.coefficient;
    out.table.push_back(std::move(t));
  }
  if (trim(formula) != out.integer) {
    throw Error(ErrorKind::InternalContradiction, "expansion and power-sum formula disagree");
  }
  out.reduced = reduce(out.integer, field);
  return out;
}

ProgressionPoly build_progression_poly(const ProgressionParams& params) {
  return build_progression_poly(params, Field::create(params.l, 1, std::nullopt));
}

Certificate certify_progression(const ProgressionParams& params, const Backend& backend,
                                const ProgressionOptions& options) {
  params.validate();
  const Field& field = backend.field();
  const ProgressionPoly pp = build_progression_poly(params, field);
  const BigInt disc = integer_poly_discriminant(pp.integer);
  BigInt disc_mod = disc % params.l;
  if (disc_mod < 0) disc_mod += params.l;
  const std::uint64_t l = params.l;

  ProgressionSummary summary;
  summary.m = params.m;
  summary.d = params.d;
  summary.r = params.r;
  summary.l = l;
  summary.integer_poly = to_string(pp.integer);
  summary.discriminant = to_string(disc);
  summary.discriminant_mod_l = disc_mod.convert_to<std::uint64_t>();
  summary.reduced_poly = pp.reduced.to_string();

  std::optional<Certificate> delegated;
  if (!pp.reduced.is_zero()) {
    switch (options.mode) {
      case ProgressionMode::Torsion:
        delegated = certify_torsion(backend, pp.reduced, params.q, options.certify);
        break;
      case ProgressionMode::Tower:
        delegated = certify_constant_tower(backend, pp.reduced, options.tower_p, params.q, options.tower_levels,
                                           options.certify);
        break;
      case ProgressionMode::PolynomialRing:
        delegated = certify_polynomial_ring(field, pp.reduced, params.q, options.num_vars, options.certify);
        break;
    }
  }

  Certificate c;
  Hypotheses p_hyps;
  if (!delegated) {
    p_hyps.add("P1", false, "f vanishes modulo " + std::to_string(l));
  } else {
    const Hypothesis* h2 = delegated->hypotheses.find("H2");
    p_hyps.add("P1", h2->status == HypothesisStatus::Satisfied, h2->detail);
  }
  p_hyps.add("P2", params.r % l != 0,
             "r = " + std::to_string(params.r) + (params.r % l ? " is prime to " : " is divisible by ") +
                 std::to_string(l));
  const bool p3a = disc_mod != 0;
  const std::uint64_t dm = params.d % l;
  const bool d_ok = dm != 0 && dm != 1 && dm != l - 1;
  const bool p3b = params.q > params.m && d_ok;
  std::string p3a_text = "P3a: discriminant " + summary.discriminant + " = " +
                         std::to_string(summary.discriminant_mod_l) + " mod " + std::to_string(l);
  std::string p3b_text = "P3b: q = " + std::to_string(params.q) + (params.q > params.m ? " > " : " <= ") +
                         "m = " + std::to_string(params.m) + ", d = " + std::to_string(dm) + " mod " +
                         std::to_string(l) + (d_ok ? " (not 0, 1, -1)" : " (in {0, 1, -1})");
  if (p3a) {
    summary.route = "P3a";
    p_hyps.add("P3", true, "route " + p3a_text);
  } else if (p3b) {
    summary.route = "P3b";
    p_hyps.add("P3", true, "route " + p3b_text + "; " + p3a_text);
  } else {
    p_hyps.add("P3", false, p3a_text + "; " + p3b_text);
  }
  c.hypotheses = p_hyps;

  if (delegated) {
    c.equation = delegated->equation;
    c.ring = delegated->ring;
    c.k = delegated->k;
    c.base_change = delegated->base_change;
    c.tower = delegated->tower;
    c.hypotheses.append(delegated->hypotheses);
  } else {
    c.equation = {to_list_string(pp.reduced), field.to_string(), params.q, std::nullopt};
    c.ring = {backend.kind(), backend.to_string(), std::nullopt, std::nullopt};
  }
  if (p_hyps.all_satisfied()) {
    const bool shape_ok = delegated->hypotheses.find("H3")->status == HypothesisStatus::Satisfied &&
                          delegated->hypotheses.find("H4")->status == HypothesisStatus::Satisfied;
    c.hypotheses.add("shape_from_progression", shape_ok,
                     shape_ok ? "factorization has t >= 2 and two multiplicities prime to q"
                              : "P1-P3 hold but the factorization " + delegated->hypotheses.find("H3")->detail +
                                    ", " + delegated->hypotheses.find("H4")->detail +
                                    " does not meet the shape conditions");
  } else {
    c.hypotheses.add_unchecked("shape_from_progression", "P1-P3 not all satisfied");
  }
  c.theorem = kProgression;
  c.progression = summary;
  c.finalize();
  return c;
}

bool DivisorIdentityReport::holds() const {
  for (const auto& p : places) {
    if (!p.holds()) return false;
  }
  return true;
}

DivisorIdentityReport verify_divisor_identity(const Poly& x, const Poly& y, const Factorization& f,
                                              std::uint64_t n) {
  if (!(x.field() == f.field) || !(y.field() == f.field)) {
    throw Error(ErrorKind::SpecMismatch, "solution and factorization over different fields");
  }
  const Poly fx = f.expand().compose(x);
  if (!(y.pow(n) == fx)) throw Error(ErrorKind::NotASolution, "Y^n differs from f(X)");

  DivisorIdentityReport report;
  const Field& k = f.field;
  std::vector<std::pair<Poly, unsigned>> factors;  // g_i(X) with multiplicity n_i
  for (const auto& lf : f.linear) {
    factors.emplace_back(x - Poly::constant(k, lf.root.value()), lf.multiplicity);
  }
  for (const auto& nf : f.nonlinear) factors.emplace_back(nf.factor.compose(x), nf.multiplicity);

  if (y.is_zero()) {
    report.zero_solution = true;
    return report;
  }
  std::set<Poly> places;
  auto collect = [&](const Poly& h) {
    if (h.degree() <= 0) return;
    const Factorization fh = factor(h, f.seed);
    for (const auto& lf : fh.linear) places.insert(Poly(k, {k.neg(lf.root.value()), 1}));
    for (const auto& nf : fh.nonlinear) places.insert(nf.factor);
  };
  collect(y);
  for (const auto& [g, mult] : factors) collect(g);
  for (const Poly& pi : places) {
    PlaceCheck pc{pi.to_string("T"), static_cast<long>(n) * order_at(y, pi), 0};
    for (const auto& [g, mult] : factors) pc.rhs += static_cast<long>(mult) * order_at(g, pi);
    report.places.push_back(pc);
  }
  PlaceCheck inf{"infinity", static_cast<long>(n) * y.degree(), 0};
  for (const auto& [g, mult] : factors) inf.rhs += static_cast<long>(mult) * g.degree();
  report.places.push_back(inf);
  const Poly fe = f.expand();
  report.degree_f_times_degree_x = static_cast<long>(fe.degree()) * std::max(x.degree(), 0);
  report.places.push_back({"degree", inf.lhs, report.degree_f_times_degree_x});
  return report;
}

}  // namespace ffdio
