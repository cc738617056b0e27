#include "ffdio/json_io.hpp"

#include <algorithm>

#include "ffdio/error.hpp"

namespace ffdio {

namespace {

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> optional_from(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorKind::ParseError, std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

template <class Fn>
auto guarded(Fn fn) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

}  // namespace

Json to_json(const Certificate& c) {
  Json j;
  j["equation"] = {{"f", c.equation.f}, {"field", c.equation.field}, {"q", c.equation.q},
                   {"n", optional_json(c.equation.n)}};
  Json ring = {{"kind", c.ring.kind}, {"backend", c.ring.backend}};
  if (c.ring.p) ring["p"] = *c.ring.p;
  if (c.ring.num_vars) ring["num_vars"] = *c.ring.num_vars;
  j["ring"] = ring;
  j["theorem"] = c.theorem;
  j["k"] = optional_json(c.k);
  Json hyps = Json::array();
  for (const auto& h : c.hypotheses.items()) {
    hyps.push_back({{"name", h.name}, {"status", to_string(h.status)}, {"detail", h.detail}});
  }
  j["hypotheses"] = hyps;
  j["conclusion"] = to_string(c.conclusion);
  if (c.base_change) {
    j["base_change"] = {{"from", c.base_change->from}, {"to", c.base_change->to},
                        {"embedding", c.base_change->embedding}};
  } else {
    j["base_change"] = nullptr;
  }
  if (c.tower) {
    j["tower"] = {{"p", c.tower->p},
                  {"q", c.tower->q},
                  {"levels", c.tower->levels},
                  {"vq_sequence", c.tower->vq_sequence},
                  {"rigorous_bound", optional_json(c.tower->rigorous_bound)}};
  } else {
    j["tower"] = nullptr;
  }
  if (c.progression) {
    const auto& p = *c.progression;
    j["progression"] = {{"m", p.m},
                        {"d", p.d},
                        {"r", p.r},
                        {"l", p.l},
                        {"integer_poly", p.integer_poly},
                        {"discriminant", p.discriminant},
                        {"discriminant_mod_l", p.discriminant_mod_l},
                        {"reduced_poly", p.reduced_poly},
                        {"route", optional_json(p.route)}};
  }
  return j;
}

Certificate certificate_from_json(const Json& j) {
  return guarded([&] {
    Certificate c;
    const Json& eq = field(j, "equation");
    c.equation.f = field(eq, "f").get<std::string>();
    c.equation.field = field(eq, "field").get<std::string>();
    c.equation.q = field(eq, "q").get<std::uint64_t>();
    c.equation.n = optional_from<std::uint64_t>(eq, "n");
    const Json& ring = field(j, "ring");
    c.ring.kind = field(ring, "kind").get<std::string>();
    c.ring.backend = field(ring, "backend").get<std::string>();
    c.ring.p = optional_from<std::uint64_t>(ring, "p");
    c.ring.num_vars = optional_from<unsigned>(ring, "num_vars");
    c.theorem = field(j, "theorem").get<std::string>();
    c.k = optional_from<unsigned>(j, "k");
    for (const auto& h : field(j, "hypotheses")) {
      c.hypotheses.items().push_back({field(h, "name").get<std::string>(),
                                      parse_hypothesis_status(field(h, "status").get<std::string>()),
                                      field(h, "detail").get<std::string>()});
    }
    c.conclusion = parse_conclusion(field(j, "conclusion").get<std::string>());
    if (c.hypotheses.all_satisfied() != c.certified()) {
      throw Error(ErrorKind::ParseError, "conclusion inconsistent with hypotheses");
    }
    const Json& bc = field(j, "base_change");
    if (!bc.is_null()) {
      c.base_change = BaseChangeRecord{field(bc, "from").get<std::string>(), field(bc, "to").get<std::string>(),
                                       field(bc, "embedding").get<std::string>()};
    }
    const Json& t = field(j, "tower");
    if (!t.is_null()) {
      c.tower = TowerSummary{field(t, "p").get<std::uint64_t>(), field(t, "q").get<std::uint64_t>(),
                             field(t, "levels").get<unsigned>(),
                             field(t, "vq_sequence").get<std::vector<unsigned>>(),
                             optional_from<unsigned>(t, "rigorous_bound")};
    }
    if (j.contains("progression")) {
      const Json& p = j.at("progression");
      ProgressionSummary s;
      s.m = field(p, "m").get<std::uint64_t>();
      s.d = field(p, "d").get<std::uint64_t>();
      s.r = field(p, "r").get<std::uint64_t>();
      s.l = field(p, "l").get<std::uint64_t>();
      s.integer_poly = field(p, "integer_poly").get<std::string>();
      s.discriminant = field(p, "discriminant").get<std::string>();
      s.discriminant_mod_l = field(p, "discriminant_mod_l").get<std::uint64_t>();
      s.reduced_poly = field(p, "reduced_poly").get<std::string>();
      s.route = optional_from<std::string>(p, "route");
      c.progression = s;
    }
    return c;
  });
}

Json to_json(const SearchReport& r) {
  Json sols = Json::array();
  for (const auto& s : r.solutions) sols.push_back({{"X", s.x}, {"Y", s.y}, {"constant", s.constant}});
  return {{"ring", r.ring},
          {"f", r.f},
          {"n", r.n},
          {"bounds", {{"kind", r.bounds.kind}, {"values", r.bounds.values}}},
          {"exhaustive", r.exhaustive},
          {"solutions", sols},
          {"tested_count", r.tested_count},
          {"cap", r.cap},
          {"elapsed_ms", r.elapsed_ms}};
}

SearchReport search_report_from_json(const Json& j) {
  return guarded([&] {
    SearchReport r;
    r.ring = field(j, "ring").get<std::string>();
    r.f = field(j, "f").get<std::string>();
    r.n = field(j, "n").get<std::uint64_t>();
    const Json& b = field(j, "bounds");
    r.bounds = {field(b, "kind").get<std::string>(), field(b, "values").get<std::vector<unsigned>>()};
    r.exhaustive = field(j, "exhaustive").get<bool>();
    for (const auto& s : field(j, "solutions")) {
      r.solutions.push_back(
          {field(s, "X").get<std::string>(), field(s, "Y").get<std::string>(), field(s, "constant").get<bool>()});
    }
    r.tested_count = field(j, "tested_count").get<std::uint64_t>();
    r.cap = field(j, "cap").get<std::uint64_t>();
    r.elapsed_ms = field(j, "elapsed_ms").get<double>();
    return r;
  });
}

Json to_json(const TowerReport& r) {
  Json hs = Json::array();
  for (const auto& h : r.class_numbers) hs.push_back(h ? Json(to_string(*h)) : Json(nullptr));
  return {{"p", r.p},
          {"q", r.q},
          {"levels", r.levels},
          {"vq_sequence", r.vq_sequence},
          {"class_numbers", hs},
          {"rigorous_bound", optional_json(r.rigorous_bound)},
          {"modulus_exponent", r.modulus_exponent},
          {"matrix_order", to_string(r.matrix_order)},
          {"cycle_length", r.cycle_length}};
}

Json to_json(const AxiomReport& r) {
  Json axioms = Json::array();
  for (const auto& a : r.axioms) {
    axioms.push_back({{"axiom", a.axiom},
                      {"checked", a.checked},
                      {"failures", a.failures},
                      {"witness", a.failures ? Json(a.witness) : Json(nullptr)}});
  }
  return {{"instance", r.instance}, {"samples", r.samples}, {"seed", r.seed}, {"passed", r.passed()},
          {"axioms", axioms}};
}

Json to_json(const PowerDifferenceReport& r) {
  return {{"f", r.f}, {"g", r.g}, {"c", r.c}, {"q", r.q}, {"d_f", r.d_f},
          {"d_g", r.d_g}, {"d_c", r.d_c}, {"holds", r.holds}};
}

Json to_json(const LawSuiteReport& r) {
  return {{"instance", r.instance},
          {"samples", r.samples},
          {"seed", r.seed},
          {"failures", r.failures},
          {"passed", r.passed()},
          {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)}};
}

Json to_json(const MPoly& g) {
  std::vector<std::pair<Exponents, Elt>> terms(g.terms().begin(), g.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return grlex_less(a.first, b.first); });
  Json out = Json::array();
  for (const auto& [e, c] : terms) out.push_back(Json::array({e, c}));
  return out;
}

MPoly mpoly_from_json(const Field& field, unsigned num_vars, const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "polynomial must be a list of terms");
  MPoly g(field, num_vars);
  try {
    for (const auto& t : j) {
      if (!t.is_array() || t.size() != 2) throw Error(ErrorKind::ParseError, "term must be [exponents, coefficient]");
      const auto e = t[0].get<Exponents>();
      const auto c = t[1].get<Elt>();
      if (e.size() != num_vars) throw Error(ErrorKind::ParseError, "exponent vector length differs from num_vars");
      if (!field.is_valid(c)) throw Error(ErrorKind::ParseError, "coefficient outside " + field.to_string());
      g = g + MPoly::monomial(field, c, e);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return g;
}

Json to_json(const DivisorIdentityReport& r) {
  Json places = Json::array();
  for (const auto& p : r.places) {
    places.push_back({{"place", p.place}, {"lhs", p.lhs}, {"rhs", p.rhs}, {"holds", p.holds()}});
  }
  return {{"holds", r.holds()}, {"zero_solution", r.zero_solution}, {"places", places}};
}

Json to_json(const Confrontation& c) { return {{"agree", c.agree}, {"detail", c.detail}}; }

}  // namespace ffdio
