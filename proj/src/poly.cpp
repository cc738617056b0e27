#include "ffdio/poly.hpp"

#include <algorithm>

#include "ffdio/error.hpp"

namespace ffdio {

Poly::Poly(Field field, std::vector<Elt> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  trim();
}

Poly Poly::constant(const Field& field, Elt c) { return Poly(field, {c}); }

Poly Poly::monomial(const Field& field, Elt c, std::size_t degree) {
  std::vector<Elt> v(degree + 1, 0);
  v[degree] = c;
  return Poly(field, std::move(v));
}

Poly Poly::x(const Field& field) { return monomial(field, 1, 1); }

Poly Poly::from_ints(const Field& field, const std::vector<std::int64_t>& coeffs) {
  std::vector<Elt> v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.push_back(field.from_int(c));
  return Poly(field, std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Poly::check_same(const Poly& o) const {
  if (!field_.same_object(o.field_) && !(field_ == o.field_)) {
    throw Error(ErrorKind::SpecMismatch,
                "polynomials over " + field_.to_string() + " and " + o.field_.to_string());
  }
}

Poly Poly::operator+(const Poly& o) const {
  check_same(o);
  std::vector<Elt> r(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.add(coeff(i), o.coeff(i));
  return Poly(field_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  check_same(o);
  std::vector<Elt> r(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.sub(coeff(i), o.coeff(i));
  return Poly(field_, std::move(r));
}

Poly Poly::operator-() const {
  std::vector<Elt> r(coeffs_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.neg(coeffs_[i]);
  return Poly(field_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  check_same(o);
  if (is_zero() || o.is_zero()) return Poly(field_);
  std::vector<Elt> r(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      r[i + j] = field_.add(r[i + j], field_.mul(coeffs_[i], o.coeffs_[j]));
    }
  }
  return Poly(field_, std::move(r));
}

Poly Poly::scale(Elt c) const {
  std::vector<Elt> r(coeffs_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.mul(coeffs_[i], c);
  return Poly(field_, std::move(r));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scale(field_.inv(lc()));
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly(field_);
  std::vector<Elt> r(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    r[i - 1] = field_.mul(coeffs_[i], field_.from_int(static_cast<std::int64_t>(i % field_.characteristic())));
  }
  return Poly(field_, std::move(r));
}

Poly Poly::pow(std::uint64_t e) const {
  Poly result = constant(field_, 1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Elt Poly::eval(Elt x) const {
  Elt r = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) r = field_.add(field_.mul(r, x), coeffs_[i]);
  return r;
}

Poly Poly::compose(const Poly& inner) const {
  check_same(inner);
  Poly r(field_);
  for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * inner + constant(field_, coeffs_[i]);
  return r;
}

Poly Poly::frobenius(std::int64_t iterations) const {
  std::vector<Elt> r(coeffs_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.frobenius(coeffs_[i], iterations);
  return Poly(field_, std::move(r));
}

bool Poly::operator==(const Poly& o) const { return coeffs_ == o.coeffs_ && field_ == o.field_; }

bool Poly::operator<(const Poly& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  return std::lexicographical_compare(coeffs_.rbegin(), coeffs_.rend(), o.coeffs_.rbegin(),
                                      o.coeffs_.rend());
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    Elt c = coeffs_[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    std::string cs = field_.format(c);
    bool compound = cs.find_first_of("+*^g") != std::string::npos;
    if (i == 0) {
      out += cs;
      continue;
    }
    if (c != 1) out += (compound ? "(" + cs + ")" : cs) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  const Field& f = a.field();
  if (a.degree() < b.degree()) return {Poly(f), a};
  std::vector<Elt> r = a.coeffs();
  std::vector<Elt> quot(a.degree() - b.degree() + 1, 0);
  const Elt inv_lc = f.inv(b.lc());
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  for (std::size_t i = r.size(); i-- > db;) {
    Elt c = r[i];
    if (c == 0) continue;
    Elt t = f.mul(c, inv_lc);
    quot[i - db] = t;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(t, bc[j]));
  }
  r.resize(db);
  return {Poly(f, std::move(quot)), Poly(f, std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m) {
  Poly result = Poly::constant(base.field(), 1) % m;
  Poly b = base % m;
  while (e > 0) {
    if (e & 1) result = (result * b) % m;
    e >>= 1;
    if (e) b = (b * b) % m;
  }
  return result;
}

std::optional<Poly> qth_root_poly(const Poly& g, std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "root index must be positive");
  const Field& f = g.field();
  if (g.is_zero()) return g;
  if (static_cast<std::uint64_t>(g.degree()) % n != 0) return std::nullopt;

  // Y^(l^e * n') = g: first the unique l^e-th root h, then Y = h^(1/n').
  const std::uint64_t l = f.characteristic();
  Poly h = g;
  while (n % l == 0) {
    std::vector<Elt> c;
    const auto& hc = h.coeffs();
    for (std::size_t i = 0; i < hc.size(); ++i) {
      if (i % l != 0) {
        if (hc[i] != 0) return std::nullopt;
        continue;
      }
      c.push_back(f.frobenius(hc[i], -1));
    }
    h = Poly(f, std::move(c));
    n /= l;
  }
  if (n == 1) return h;

  const std::size_t m = static_cast<std::size_t>(h.degree()) / n;
  auto lead = nth_root(f, h.lc(), n);
  if (!lead) return std::nullopt;
  std::vector<Elt> y(m + 1, 0);
  y[m] = *lead;
  const Elt scale = f.inv(f.mul(f.from_int(static_cast<std::int64_t>(n % l)), f.pow(*lead, n - 1)));
  for (std::size_t j = 1; j <= m; ++j) {
    Poly partial(f, y);
    Poly power = partial.pow(n);
    const std::size_t e = m * n - j;
    Elt diff = f.sub(h.coeff(e), power.coeff(e));
    y[m - j] = f.mul(diff, scale);
  }
  Poly root(f, std::move(y));
  if (!(root.pow(n) == h)) return std::nullopt;
  return root;
}

Poly base_change(const Poly& f, const Field& target, Elt image) {
  std::vector<Elt> c;
  c.reserve(f.coeffs().size());
  for (Elt a : f.coeffs()) c.push_back(embed(f.field(), target, image, a));
  return Poly(target, std::move(c));
}

bool is_irreducible(const Poly& f) {
  const int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const Poly x = Poly::x(f.field());
  Poly h = x % f;
  for (int i = 1; i <= n / 2; ++i) {
    h = powmod(h, f.field().order(), f);
    if (!gcd(f, h - x).is_one()) return false;
  }
  return true;
}

std::string to_list_string(const Poly& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) out += ',';
    out += f.field().format(f.coeffs()[i]);
  }
  return out + "]";
}

}  // namespace ffdio
