#include "ffdio/valuations.hpp"

namespace ffdio {

namespace {

Elt random_elt(const Field& f, std::mt19937_64& rng) { return rng() % f.order(); }

Elt random_nonzero_elt(const Field& f, std::mt19937_64& rng) { return 1 + rng() % (f.order() - 1); }

}  // namespace

std::string to_string(RingKind kind) {
  switch (kind) {
    case RingKind::RationalPoly:
      return "rational_poly";
    case RingKind::EllipticIntegers:
      return "elliptic_integers";
    case RingKind::MultivarPoly:
      return "multivar_poly";
  }
  return "unknown";
}

long DegreeValuation::value(const Poly& f) const {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "degree of zero");
  return f.degree();
}

Poly DegreeValuation::random_nonzero(std::mt19937_64& rng) const {
  const unsigned deg = rng() % (max_degree_ + 1);
  std::vector<Elt> c(deg + 1);
  for (auto& v : c) v = random_elt(field_, rng);
  c[deg] = random_nonzero_elt(field_, rng);
  return Poly(field_, std::move(c));
}

long TAdicOrderValuation::value(const Poly& f) const {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "order of zero");
  long k = 0;
  while (f.coeffs()[k] == 0) ++k;
  return k;
}

EllipticElement PoleOrderValuation::random_nonzero(std::mt19937_64& rng) const {
  const Field& f = ring_.field();
  const unsigned bound = rng() % (max_pole_ + 1);
  for (;;) {
    EllipticElement u = ring_.zero();
    for (const auto& [i, j] : ring_basis(bound)) {
      u = ring_.add(u, ring_.monomial(i, j, random_elt(f, rng)));
    }
    if (!u.is_zero()) return u;
  }
}

VariableDegreeValuation::VariableDegreeValuation(Field field, unsigned num_vars, unsigned index,
                                                 unsigned max_random_degree)
    : field_(std::move(field)), num_vars_(num_vars), index_(index), max_degree_(max_random_degree) {
  if (index >= num_vars) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
}

std::string VariableDegreeValuation::name() const {
  return "degree in T" + std::to_string(index_ + 1) + " on " + field_.to_string() + "[T1..T" +
         std::to_string(num_vars_) + "]";
}

MPoly VariableDegreeValuation::random_nonzero(std::mt19937_64& rng) const {
  std::vector<unsigned> bounds(num_vars_);
  for (auto& b : bounds) b = rng() % (max_degree_ + 1);
  for (;;) {
    MPoly g(field_, num_vars_);
    Exponents e(num_vars_, 0);
    // Odometer over the box, each monomial kept with probability 1/2.
    for (;;) {
      if (rng() & 1) g.set(e, random_elt(field_, rng));
      unsigned i = 0;
      while (i < num_vars_ && e[i] == bounds[i]) e[i++] = 0;
      if (i == num_vars_) break;
      ++e[i];
    }
    if (!g.is_zero()) return g;
  }
}

}  // namespace ffdio
