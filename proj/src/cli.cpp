#include "ffdio/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ffdio/backend.hpp"
#include "ffdio/certify.hpp"
#include "ffdio/error.hpp"
#include "ffdio/factor.hpp"
#include "ffdio/json_io.hpp"
#include "ffdio/parse.hpp"
#include "ffdio/resultant.hpp"
#include "ffdio/search.hpp"
#include "ffdio/selftest.hpp"

namespace ffdio::cli {

namespace {

constexpr const char* kEnvHelp =
    "Environment overrides (flags take precedence):\n"
    "  FFDIO_CAP            enumeration cap (default 10000000)\n"
    "  FFDIO_CYCLE_CAP      tower cycle cap (default 1000000)\n"
    "  FFDIO_MODULUS_BITS   largest q^K for tower bounds, in bits (default 64)\n"
    "  FFDIO_WORKERS        search worker threads (default 1)\n";

template <class T>
void env_override(const char* name, T& value) {
  if (const char* v = std::getenv(name)) {
    try {
      value = static_cast<T>(std::stoull(v));
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, std::string("bad value for ") + name);
    }
  }
}

Backend resolve_backend(const RunConfig& c) {
  if (c.backend == "rational") return Backend::rational(parse_field(c.field));
  if (c.backend == "elliptic") {
    if (c.a.empty()) throw Error(ErrorKind::ParseError, "--backend elliptic needs --a [a1,a2,a3,a4,a6]");
    const std::string a = c.a.front() == '[' ? c.a : "[" + c.a + "]";
    return parse_backend("elliptic(" + c.field + "; a=" + a + ")", c.cap);
  }
  return parse_backend(c.backend, c.cap);
}

CertifyOptions certify_options(const RunConfig& c) {
  CertifyOptions o;
  o.allow_base_change = c.base_change;
  o.seed = c.seed;
  o.tower.cycle_cap = c.cycle_cap;
  o.tower.max_modulus_bits = c.modulus_bits;
  return o;
}

SearchOptions search_options(const RunConfig& c) {
  SearchOptions o;
  o.cap = c.cap;
  o.workers = c.workers;
  o.prune = !c.no_prune;
  return o;
}

void emit_json(const RunConfig& c, const Json& j, std::ostream& out) {
  if (c.json_path.empty()) return;
  if (c.json_path == "-") {
    out << j.dump(2) << '\n';
    return;
  }
  std::ofstream file(c.json_path);
  if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write " + c.json_path);
  file << j.dump(2) << '\n';
}

/// Text output is suppressed when JSON goes to standard output.
std::ostream& text_stream(const RunConfig& c, std::ostream& out) {
  static std::ostringstream sink;
  sink.str("");
  return c.json_path == "-" ? sink : out;
}

void print_certificate(const Certificate& c, std::ostream& os) {
  os << "equation    Y^" << (c.equation.n ? std::to_string(*c.equation.n) : std::to_string(c.equation.q) + "^k")
     << " = " << c.equation.f << " over " << c.equation.field << '\n';
  os << "ring        " << c.ring.kind << " / " << c.ring.backend;
  if (c.ring.p) os << " (p = " << *c.ring.p << ")";
  os << '\n';
  os << "criterion   " << c.theorem << '\n';
  if (c.progression) {
    const auto& p = *c.progression;
    os << "f           " << p.integer_poly << '\n';
    os << "disc        " << p.discriminant << " = " << p.discriminant_mod_l << " mod " << p.l << '\n';
    os << "f mod l     " << p.reduced_poly << '\n';
    os << "route       " << (p.route ? *p.route : "none") << '\n';
  }
  if (c.base_change) os << "base change " << c.base_change->from << " -> " << c.base_change->to << '\n';
  for (const auto& h : c.hypotheses.items()) {
    os << "  " << std::left << std::setw(24) << h.name << std::setw(12) << to_string(h.status) << h.detail << '\n';
  }
  if (c.tower) {
    os << "tower v_" << c.tower->q << "    ";
    for (unsigned v : c.tower->vq_sequence) os << v << ' ';
    if (c.tower->rigorous_bound) os << " (bound " << *c.tower->rigorous_bound << ")";
    os << '\n';
  }
  os << "k           " << (c.k ? std::to_string(*c.k) : "-") << '\n';
  os << "conclusion  " << to_string(c.conclusion) << '\n';
}

void print_search(const SearchReport& r, std::ostream& os) {
  os << "ring        " << r.ring << '\n';
  os << "equation    Y^" << r.n << " = " << r.f << '\n';
  os << "bounds      " << r.bounds.kind;
  for (unsigned v : r.bounds.values) os << ' ' << v;
  os << '\n';
  os << "tested      " << r.tested_count << (r.exhaustive ? " (exhaustive)" : "") << '\n';
  os << "solutions   " << r.solutions.size() << " (" << r.nonconstant_count() << " nonconstant)\n";
  for (const auto& s : r.solutions) {
    os << "  X = " << s.x << ", Y = " << s.y << (s.constant ? "" : "   [nonconstant]") << '\n';
  }
}

/// Confronts a certificate with an exhaustive search over the base ring.
std::optional<std::pair<SearchReport, Confrontation>> confront_certificate(const RunConfig& c, const Backend& b,
                                                                           const Poly& f, const Certificate& cert) {
  if (!c.confront || !cert.equation.n) return std::nullopt;
  const std::uint64_t n = *cert.equation.n;
  SearchReport report;
  if (cert.ring.kind == "multivariate") {
    report = search_multivar(f.field(), f, n, std::vector<unsigned>(c.vars, *c.confront), search_options(c));
  } else if (const auto* e = b.elliptic_model()) {
    report = search_elliptic(*e, f, n, *c.confront, search_options(c));
  } else {
    report = search_rational(f.field(), f, n, *c.confront, search_options(c)).report;
  }
  Confrontation con = confront(cert, report);
  return std::make_pair(std::move(report), std::move(con));
}

int finish_certificate(const RunConfig& c, const Backend& b, const Poly& f, const Certificate& cert,
                       std::ostream& out, std::ostream& err) {
  std::ostream& os = text_stream(c, out);
  print_certificate(cert, os);
  Json j = to_json(cert);
  const auto con = confront_certificate(c, b, f, cert);
  if (con) {
    os << "search      " << con->first.tested_count << " candidates, " << con->first.nonconstant_count()
       << " nonconstant solutions\n";
    os << "confront    " << con->second.detail << '\n';
    j["confrontation"] = to_json(con->second);
    j["confrontation"]["search"] = to_json(con->first);
  }
  emit_json(c, j, out);
  if (con && !con->second.agree) {
    err << "internal contradiction: " << con->second.detail << '\n';
    return kContradiction;
  }
  return cert.certified() ? kOk : kNotCertified;
}

int cmd_certify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Backend b = resolve_backend(c);
  const Poly f = parse_poly(b.field(), c.f);
  Certificate cert;
  if (c.theorem == "torsion") {
    cert = certify_torsion(b, f, c.q, certify_options(c));
  } else if (c.theorem == "tower") {
    cert = certify_constant_tower(b, f, c.p, c.q, c.levels, certify_options(c));
  } else if (c.theorem == "polynomial-ring") {
    cert = certify_polynomial_ring(b.field(), f, c.q, c.vars, certify_options(c));
  } else {
    throw Error(ErrorKind::ParseError, "unknown --theorem '" + c.theorem + "'");
  }
  return finish_certificate(c, b, f, cert, out, err);
}

int cmd_progression(const RunConfig& c, std::ostream& out, std::ostream& err) {
  ProgressionParams params{c.m, c.d, c.r, c.l, c.q};
  params.validate();
  const std::string field = c.s == 1 ? "GF(" + std::to_string(c.l) + ")"
                                     : "GF(" + std::to_string(c.l) + "^" + std::to_string(c.s) + ")";
  RunConfig cc = c;
  cc.field = field;
  const Backend b = resolve_backend(cc);
  ProgressionOptions o;
  o.certify = certify_options(c);
  o.tower_p = c.p;
  o.tower_levels = c.levels;
  o.num_vars = c.vars;
  if (c.theorem == "torsion") {
    o.mode = ProgressionMode::Torsion;
  } else if (c.theorem == "tower") {
    o.mode = ProgressionMode::Tower;
  } else if (c.theorem == "polynomial-ring") {
    o.mode = ProgressionMode::PolynomialRing;
  } else {
    throw Error(ErrorKind::ParseError, "unknown --theorem '" + c.theorem + "'");
  }
  const Certificate cert = certify_progression(params, b, o);
  const Poly f = build_progression_poly(params, b.field()).reduced;
  if (f.is_zero()) {
    cc.confront.reset();
    return finish_certificate(cc, b, f, cert, out, err);
  }
  return finish_certificate(c, b, f, cert, out, err);
}

int cmd_tower(const RunConfig& c, std::ostream& out) {
  const Backend b = resolve_backend(c);
  TowerOptions o;
  o.cycle_cap = c.cycle_cap;
  o.max_modulus_bits = c.modulus_bits;
  const TowerReport t = b.tower(c.p, c.q, c.levels, o);
  std::ostream& os = text_stream(c, out);
  os << "backend     " << b.to_string() << '\n';
  os << "h_F         " << b.class_group().h << '\n';
  os << "tower       p = " << t.p << ", q = " << t.q << '\n';
  for (unsigned n = 0; n <= t.levels; ++n) {
    os << "  level " << std::setw(3) << n << "  v_q = " << std::setw(3) << t.vq_sequence[n];
    if (t.class_numbers[n]) os << "  h = " << to_string(*t.class_numbers[n]);
    os << '\n';
  }
  if (t.rigorous_bound) {
    os << "bound       " << *t.rigorous_bound << " (modulus q^" << t.modulus_exponent << ", order " << t.matrix_order
       << ", " << t.cycle_length << " residues)\n";
  } else {
    os << "bound       none (p = q)\n";
  }
  Json j = to_json(t);
  j["backend"] = b.to_string();
  emit_json(c, j, out);
  return kOk;
}

int cmd_search(const RunConfig& c, std::ostream& out) {
  SearchReport r;
  if (c.ring == "rational") {
    const Field k = parse_field(c.field);
    r = search_rational(k, parse_poly(k, c.f), c.n, c.bound, search_options(c)).report;
  } else if (c.ring == "elliptic") {
    RunConfig cc = c;
    if (cc.backend == "rational") cc.backend = "elliptic";
    const Backend b = resolve_backend(cc);
    if (!b.elliptic_model()) throw Error(ErrorKind::ParseError, "elliptic search needs an elliptic backend");
    r = search_elliptic(*b.elliptic_model(), parse_poly(b.field(), c.f), c.n, c.bound, search_options(c));
  } else if (c.ring == "multivar") {
    const Field k = parse_field(c.field);
    const std::vector<unsigned> bounds = c.bounds.empty() ? std::vector<unsigned>(c.vars, c.bound) : c.bounds;
    r = search_multivar(k, parse_poly(k, c.f), c.n, bounds, search_options(c));
  } else {
    throw Error(ErrorKind::ParseError, "unknown --ring '" + c.ring + "'");
  }
  print_search(r, text_stream(c, out));
  emit_json(c, to_json(r), out);
  return kOk;
}

int cmd_factor(const RunConfig& c, std::ostream& out) {
  const Field k = parse_field(c.field);
  const Poly f = parse_poly(k, c.f);
  const Factorization fa = factor(f, c.seed);
  std::ostream& os = text_stream(c, out);
  os << "f           " << f.to_string() << " over " << k.to_string() << '\n';
  os << "factored    " << fa.to_string() << '\n';
  os << "roots       " << fa.t() << '\n';
  const FieldElement disc = f.degree() >= 1 ? discriminant(f) : k.element(0);
  os << "disc        " << disc.to_string() << '\n';
  Json lin = Json::array(), nonlin = Json::array();
  for (const auto& l : fa.linear) lin.push_back({{"root", l.root.to_string()}, {"multiplicity", l.multiplicity}});
  for (const auto& n : fa.nonlinear) {
    nonlin.push_back({{"factor", n.factor.to_string()}, {"multiplicity", n.multiplicity}});
  }
  emit_json(c,
            {{"field", k.to_string()},
             {"f", to_list_string(f)},
             {"seed", fa.seed},
             {"unit", fa.unit.to_string()},
             {"linear", lin},
             {"nonlinear", nonlin},
             {"factorization", fa.to_string()},
             {"discriminant", disc.to_string()}},
            out);
  return kOk;
}

int cmd_selftest(const RunConfig& c, std::ostream& out) {
  Mutation m = Mutation::None;
  if (c.mutation == "dominance") {
    m = Mutation::Dominance;
  } else if (c.mutation != "none") {
    throw Error(ErrorKind::ParseError, "unknown --mutation '" + c.mutation + "'");
  }
  const SelftestReport r = run_selftest(c.seed, m);
  std::ostream& os = text_stream(c, out);
  for (const auto& s : r.suites) {
    os << (s.passed ? "PASS " : "FAIL ") << s.name << " (" << s.checks << " checks)";
    if (!s.passed) os << "\n     witness: " << s.witness;
    os << '\n';
  }
  os << (r.passed() ? "selftest passed" : "selftest FAILED") << '\n';
  emit_json(c, to_json(r), out);
  return r.passed() ? kOk : kNotCertified;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  try {
    env_override("FFDIO_CAP", c.cap);
    env_override("FFDIO_CYCLE_CAP", c.cycle_cap);
    env_override("FFDIO_MODULUS_BITS", c.modulus_bits);
    env_override("FFDIO_WORKERS", c.workers);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  CLI::App app{"Constancy certificates for Y^n = f(X) over function fields", "ffdio"};
  app.footer(kEnvHelp);
  app.require_subcommand(1);
  app.add_option("--json", c.json_path, "Write the JSON report to this path ('-' for stdout)");
  app.add_option("--seed", c.seed, "Seed for randomized splitting and sampling");
  app.add_option("--cap", c.cap, "Enumeration cap");
  app.add_option("--cycle-cap", c.cycle_cap, "Tower cycle cap");
  app.add_option("--modulus-bits", c.modulus_bits, "Largest q^K for the tower bound, in bits");
  app.add_option("--workers", c.workers, "Search worker threads");

  auto field_opts = [&](CLI::App* s) {
    s->add_option("--field", c.field, "Constant field, e.g. GF(5), GF(2^2)");
    s->add_option("--backend", c.backend,
                  "rational | elliptic | rational(GF(5)) | elliptic(GF(5); a=[0,0,0,1,1])");
    s->add_option("--a", c.a, "Weierstrass coefficients [a1,a2,a3,a4,a6] for --backend elliptic");
  };
  auto common = [&](CLI::App* s) {
    s->add_option("--json", c.json_path, "Write the JSON report to this path ('-' for stdout)");
    s->add_option("--seed", c.seed, "Seed");
    s->add_option("--cap", c.cap, "Enumeration cap");
    s->add_option("--workers", c.workers, "Search worker threads");
  };

  auto* certify = app.add_subcommand("certify", "Check a constancy criterion for Y^(q^k) = f(X)");
  field_opts(certify);
  common(certify);
  certify->add_option("--f", c.f, "f(X), e.g. \"[4,2,3]\" or \"3*X^2+2*X+4\"")->required();
  certify->add_option("--q", c.q, "Prime q")->required();
  certify->add_option("--theorem", c.theorem, "torsion | tower | polynomial-ring");
  certify->add_option("--p", c.p, "Tower prime");
  certify->add_option("--levels", c.levels, "Tower levels");
  certify->add_option("--vars", c.vars, "Number of variables for polynomial-ring");
  certify->add_flag("--base-change", c.base_change, "Pass to the splitting field of f if needed");
  certify->add_option("--confront", c.confront, "Exhaustive search bound for the oracle check");

  auto* tower = app.add_subcommand("tower", "q-adic valuations along the constant Z_p-tower");
  field_opts(tower);
  common(tower);
  tower->add_option("--p", c.p, "Tower prime")->required();
  tower->add_option("--q", c.q, "Prime q")->required();
  tower->add_option("--levels", c.levels, "Levels 0..N");
  tower->add_option("--cycle-cap", c.cycle_cap, "Tower cycle cap");
  tower->add_option("--modulus-bits", c.modulus_bits, "Largest q^K in bits");

  auto* prog = app.add_subcommand("progression", "Y^q = sum_{i=1}^d (X + i r)^m in characteristic l");
  prog->add_option("--backend", c.backend, "rational | elliptic (with --a)");
  prog->add_option("--a", c.a, "Weierstrass coefficients for --backend elliptic");
  common(prog);
  prog->add_option("--l", c.l, "Characteristic l >= 5")->required();
  prog->add_option("--m", c.m, "Exponent m")->required();
  prog->add_option("--d", c.d, "Number of terms d")->required();
  prog->add_option("--r", c.r, "Step r")->required();
  prog->add_option("--q", c.q, "Prime q")->required();
  prog->add_option("--s", c.s, "Constant field GF(l^s)");
  prog->add_option("--theorem", c.theorem, "torsion | tower | polynomial-ring");
  prog->add_option("--p", c.p, "Tower prime");
  prog->add_option("--levels", c.levels, "Tower levels");
  prog->add_option("--vars", c.vars, "Number of variables");
  prog->add_flag("--base-change", c.base_change, "Pass to the splitting field if needed");
  prog->add_option("--confront", c.confront, "Exhaustive search bound for the oracle check");

  auto* search = app.add_subcommand("search", "Exhaustive search for solutions of Y^n = f(X)");
  field_opts(search);
  common(search);
  search->add_option("--ring", c.ring, "rational | elliptic | multivar");
  search->add_option("--f", c.f, "f(X)")->required();
  search->add_option("--n", c.n, "Exponent n")->required();
  search->add_option("--bound", c.bound, "Degree bound D, or pole-order bound B for elliptic");
  search->add_option("--bounds", c.bounds, "Per-variable degree bounds (multivar)")->delimiter(',');
  search->add_option("--vars", c.vars, "Number of variables (multivar)");
  search->add_flag("--no-prune", c.no_prune, "Elliptic: test every Y in the full box");

  auto* fac = app.add_subcommand("factor", "Factor f over the field");
  fac->add_option("--field", c.field, "Field");
  common(fac);
  fac->add_option("--f", c.f, "f(X)")->required();

  auto* self = app.add_subcommand("selftest", "Run the invariant suites");
  common(self);
  self->add_option("--mutation", c.mutation, "none | dominance");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  for (auto* sub : app.get_subcommands()) {
    if (sub->get_name() == "certify" || sub->get_name() == "tower" || sub->get_name() == "search" ||
        sub->get_name() == "factor" || sub->get_name() == "selftest" || sub->get_name() == "progression") {
      c.subcommand = sub->get_name();
    }
  }

  try {
    if (c.subcommand == "certify") return cmd_certify(c, out, err);
    if (c.subcommand == "progression") return cmd_progression(c, out, err);
    if (c.subcommand == "tower") return cmd_tower(c, out);
    if (c.subcommand == "search") return cmd_search(c, out);
    if (c.subcommand == "factor") return cmd_factor(c, out);
    if (c.subcommand == "selftest") return cmd_selftest(c, out);
    err << "usage error: unknown subcommand\n";
    return kUsage;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.kind() == ErrorKind::InternalContradiction ? kContradiction : kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kContradiction;
  }
}

}  // namespace ffdio::cli
