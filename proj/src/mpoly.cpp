#include "ffdio/mpoly.hpp"

#include <algorithm>
#include <numeric>

#include "ffdio/bigint.hpp"
#include "ffdio/error.hpp"

namespace ffdio {

bool grlex_less(const Exponents& a, const Exponents& b) {
  const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da < db;
  return a < b;
}

MPoly::MPoly(Field field, unsigned num_vars) : field_(std::move(field)), num_vars_(num_vars) {
  if (num_vars == 0) throw Error(ErrorKind::InvalidArgument, "need at least one variable");
}

MPoly MPoly::constant(const Field& field, unsigned num_vars, Elt c) {
  MPoly p(field, num_vars);
  p.set(Exponents(num_vars, 0), c);
  return p;
}

MPoly MPoly::variable(const Field& field, unsigned num_vars, unsigned index) {
  if (index >= num_vars) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
  Exponents e(num_vars, 0);
  e[index] = 1;
  return monomial(field, 1, std::move(e));
}

MPoly MPoly::monomial(const Field& field, Elt c, Exponents exps) {
  MPoly p(field, static_cast<unsigned>(exps.size()));
  p.set(exps, c);
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                      [](std::uint32_t e) { return e == 0; }));
}

Elt MPoly::constant_value() const {
  if (terms_.empty()) return 0;
  return coeff(Exponents(num_vars_, 0));
}

void MPoly::set(const Exponents& e, Elt c) {
  if (e.size() != num_vars_) throw Error(ErrorKind::InvalidArgument, "exponent vector length");
  if (c == 0) {
    terms_.erase(e);
  } else {
    terms_[e] = c;
  }
}

Elt MPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void MPoly::check_same(const MPoly& o) const {
  if (num_vars_ != o.num_vars_ || !(field_ == o.field_)) {
    throw Error(ErrorKind::SpecMismatch, "multivariate operands from different rings");
  }
}

MPoly MPoly::operator+(const MPoly& o) const {
  check_same(o);
  MPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.set(e, field_.add(r.coeff(e), c));
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  check_same(o);
  MPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.set(e, field_.sub(r.coeff(e), c));
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r(field_, num_vars_);
  for (const auto& [e, c] : terms_) r.terms_[e] = field_.neg(c);
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  check_same(o);
  MPoly r(field_, num_vars_);
  Exponents e(num_vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (unsigned i = 0; i < num_vars_; ++i) e[i] = ea[i] + eb[i];
      r.set(e, field_.add(r.coeff(e), field_.mul(ca, cb)));
    }
  }
  return r;
}

MPoly MPoly::scale(Elt c) const {
  MPoly r(field_, num_vars_);
  for (const auto& [e, v] : terms_) r.set(e, field_.mul(v, c));
  return r;
}

MPoly MPoly::pow(std::uint64_t e) const {
  MPoly result = constant(field_, num_vars_, 1);
  MPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::pair<Exponents, Elt> MPoly::leading_term() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, "leading term of zero");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
    if (grlex_less(best->first, it->first)) best = it;
  }
  return *best;
}

unsigned MPoly::total_degree() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, "degree of zero");
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
  return d;
}

bool MPoly::operator==(const MPoly& o) const {
  return num_vars_ == o.num_vars_ && field_ == o.field_ && terms_ == o.terms_;
}

bool MPoly::operator<(const MPoly& o) const {
  if (terms_.size() != o.terms_.size()) return terms_.size() < o.terms_.size();
  return terms_ < o.terms_;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, Elt>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return grlex_less(b.first, a.first); });
  std::string out;
  for (const auto& [e, c] : sorted) {
    if (!out.empty()) out += '+';
    std::string mono;
    for (unsigned i = 0; i < num_vars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += num_vars_ == 1 ? "T" : "T" + std::to_string(i + 1);
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    std::string cs = field_.format(c);
    if (cs.find_first_of("+*^") != std::string::npos) cs = "(" + cs + ")";
    if (mono.empty()) {
      out += cs;
    } else if (c == 1) {
      out += mono;
    } else {
      out += cs + '*' + mono;
    }
  }
  return out;
}

unsigned per_var_degree(const MPoly& g, unsigned index) {
  if (g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "degree of the zero polynomial");
  if (index >= g.num_vars()) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
  unsigned d = 0;
  for (const auto& [e, c] : g.terms()) d = std::max(d, e[index]);
  return d;
}

std::optional<MPoly> mp_nth_root(const MPoly& g, std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "root index must be positive");
  if (g.is_zero()) return g;
  const Field& f = g.field();
  const unsigned r = g.num_vars();
  const std::uint64_t l = f.characteristic();

  MPoly h = g;
  while (n % l == 0) {
    MPoly next(f, r);
    for (const auto& [e, c] : h.terms()) {
      Exponents reduced(r);
      for (unsigned i = 0; i < r; ++i) {
        if (e[i] % l != 0) return std::nullopt;
        reduced[i] = static_cast<std::uint32_t>(e[i] / l);
      }
      next.set(reduced, f.frobenius(c, -1));
    }
    h = std::move(next);
    n /= l;
  }
  if (n == 1) return h;

  auto [alpha, lead] = h.leading_term();
  Exponents lead_exp(r);
  for (unsigned i = 0; i < r; ++i) {
    if (alpha[i] % n != 0) return std::nullopt;
    lead_exp[i] = static_cast<std::uint32_t>(alpha[i] / n);
  }
  auto lead_root = nth_root(f, lead, n);
  if (!lead_root) return std::nullopt;
  MPoly y = MPoly::monomial(f, *lead_root, lead_exp);
  const Elt scale = f.inv(f.mul(f.from_int(static_cast<std::int64_t>(n % l)), f.pow(*lead_root, n - 1)));

  Exponents previous = lead_exp;
  for (;;) {
    MPoly rest = h - y.pow(n);
    if (rest.is_zero()) return y;
    auto [beta, c] = rest.leading_term();
    // The new term T^gamma satisfies LT(n * y_lead^(n-1) * T^gamma) = LT(rest).
    Exponents gamma(r);
    for (unsigned i = 0; i < r; ++i) {
      const std::int64_t v = static_cast<std::int64_t>(beta[i]) -
                             static_cast<std::int64_t>(n - 1) * lead_exp[i];
      if (v < 0) return std::nullopt;
      gamma[i] = static_cast<std::uint32_t>(v);
    }
    if (!grlex_less(gamma, previous)) return std::nullopt;
    previous = gamma;
    y.set(gamma, f.add(y.coeff(gamma), f.mul(c, scale)));
  }
}

MPoly compose(const Poly& f, const MPoly& x) {
  if (!(f.field() == x.field())) throw Error(ErrorKind::SpecMismatch, "compose across fields");
  MPoly r(x.field(), x.num_vars());
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    r = r * x + MPoly::constant(x.field(), x.num_vars(), c[i]);
  }
  return r;
}

MPoly to_mpoly(const Poly& p, unsigned num_vars, unsigned index) {
  MPoly r(p.field(), num_vars);
  Exponents e(num_vars, 0);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    e[index] = static_cast<std::uint32_t>(i);
    r.set(e, p.coeffs()[i]);
  }
  return r;
}

BoundedPolySpace::BoundedPolySpace(Field field, std::vector<unsigned> bounds, std::uint64_t cap)
    : field_(std::move(field)), bounds_(std::move(bounds)) {
  if (bounds_.empty()) throw Error(ErrorKind::InvalidArgument, "need at least one variable");
  const auto r = static_cast<unsigned>(bounds_.size());
  Exponents e(r, 0);
  for (;;) {
    monomials_.push_back(e);
    unsigned i = r;
    while (i-- > 0) {
      if (e[i] < bounds_[i]) {
        ++e[i];
        break;
      }
      e[i] = 0;
    }
    if (i == static_cast<unsigned>(-1)) break;
  }
  BigInt total = 1;
  for (std::size_t i = 0; i < monomials_.size(); ++i) total *= field_.order();
  if (total > cap) {
    throw Error(ErrorKind::CapExceeded,
                to_string(total) + " candidates exceed cap " + std::to_string(cap));
  }
  count_ = total.convert_to<std::uint64_t>();
}

MPoly BoundedPolySpace::at(std::uint64_t index) const {
  const auto r = static_cast<unsigned>(bounds_.size());
  MPoly p(field_, r);
  const std::uint64_t q = field_.order();
  for (std::size_t m = monomials_.size(); m-- > 0;) {
    p.set(monomials_[m], index % q);
    index /= q;
  }
  return p;
}

std::vector<MPoly> enumerate_bounded(const Field& field, unsigned num_vars,
                                     const std::vector<unsigned>& bounds, std::uint64_t cap) {
  if (bounds.size() != num_vars) {
    throw Error(ErrorKind::InvalidArgument, "one degree bound per variable is required");
  }
  BoundedPolySpace space(field, bounds, cap);
  std::vector<MPoly> out;
  out.reserve(space.count());
  for (std::uint64_t i = 0; i < space.count(); ++i) out.push_back(space.at(i));
  return out;
}

}  // namespace ffdio
