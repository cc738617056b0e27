#include "ffdio/resultant.hpp"

#include <algorithm>

#include "ffdio/error.hpp"

namespace ffdio {

namespace {

// Coefficient ring interface for the subresultant algorithm: exact division
// is required for the intermediate divisions by g*h^delta.
struct FieldOps {
  Field f;
  using T = Elt;
  T zero() const { return 0; }
  T one() const { return 1; }
  T add(T a, T b) const { return f.add(a, b); }
  T sub(T a, T b) const { return f.sub(a, b); }
  T mul(T a, T b) const { return f.mul(a, b); }
  T neg(T a) const { return f.neg(a); }
  T exact_div(T a, T b) const { return f.div(a, b); }
  bool is_zero(T a) const { return a == 0; }
};

struct IntOps {
  using T = BigInt;
  T zero() const { return 0; }
  T one() const { return 1; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T neg(const T& a) const { return -a; }
  T exact_div(const T& a, const T& b) const {
    if (a % b != 0) throw Error(ErrorKind::InternalContradiction, "inexact subresultant division");
    return a / b;
  }
  bool is_zero(const T& a) const { return a == 0; }
};

template <class Ops>
using Vec = std::vector<typename Ops::T>;

template <class Ops>
void trim(const Ops& ops, Vec<Ops>& p) {
  while (!p.empty() && ops.is_zero(p.back())) p.pop_back();
}

template <class Ops>
typename Ops::T power(const Ops& ops, typename Ops::T b, unsigned e) {
  typename Ops::T r = ops.one();
  while (e > 0) {
    if (e & 1) r = ops.mul(r, b);
    e >>= 1;
    if (e) b = ops.mul(b, b);
  }
  return r;
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
template <class Ops>
Vec<Ops> prem(const Ops& ops, Vec<Ops> a, const Vec<Ops>& b) {
  const std::size_t db = b.size() - 1;
  const auto lb = b.back();
  int steps = static_cast<int>(a.size()) - static_cast<int>(db);
  int used = 0;
  while (a.size() > db && !a.empty()) {
    const auto la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c = ops.mul(c, lb);
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] = ops.sub(a[shift + j], ops.mul(la, b[j]));
    ++used;
    trim(ops, a);
  }
  // Missing steps (leading cancellations) still count towards the power.
  for (; used < steps; ++used) {
    for (auto& c : a) c = ops.mul(c, lb);
  }
  return a;
}

template <class Ops>
typename Ops::T subresultant(const Ops& ops, Vec<Ops> a, Vec<Ops> b) {
  trim(ops, a);
  trim(ops, b);
  if (a.empty() || b.empty()) throw Error(ErrorKind::ZeroPolynomial, "resultant with zero polynomial");
  auto sign = ops.one();
  auto deg = [](const Vec<Ops>& p) { return static_cast<int>(p.size()) - 1; };
  if (deg(a) < deg(b)) {
    if (deg(a) % 2 == 1 && deg(b) % 2 == 1) sign = ops.neg(sign);
    std::swap(a, b);
  }
  if (deg(b) == 0) return ops.mul(sign, power(ops, b[0], static_cast<unsigned>(deg(a))));
  auto g = ops.one();
  auto h = ops.one();
  for (;;) {
    const int delta = deg(a) - deg(b);
    if (deg(a) % 2 == 1 && deg(b) % 2 == 1) sign = ops.neg(sign);
    Vec<Ops> r = prem(ops, a, b);
    if (r.empty()) return ops.zero();
    a = std::move(b);
    const auto divisor = ops.mul(g, power(ops, h, static_cast<unsigned>(delta)));
    for (auto& c : r) c = ops.exact_div(c, divisor);
    b = std::move(r);
    g = a.back();
    // h <- g^delta / h^(delta-1)
    if (delta > 0) {
      h = ops.exact_div(power(ops, g, static_cast<unsigned>(delta)),
                        power(ops, h, static_cast<unsigned>(delta - 1)));
    }
    if (deg(b) == 0) {
      const int da = deg(a);
      // h <- b0^da / h^(da-1)
      auto num = power(ops, b[0], static_cast<unsigned>(da));
      auto res = ops.exact_div(num, power(ops, h, static_cast<unsigned>(da - 1)));
      return ops.mul(sign, res);
    }
  }
}

}  // namespace

FieldElement resultant(const Poly& f, const Poly& g) {
  FieldOps ops{f.field()};
  if (!(f.field() == g.field())) throw Error(ErrorKind::SpecMismatch, "resultant across fields");
  return f.field().element(subresultant(ops, f.coeffs(), g.coeffs()));
}

FieldElement discriminant(const Poly& f) {
  const Field& field = f.field();
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "discriminant of zero");
  const int d = f.degree();
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "discriminant needs degree >= 1");
  Poly fp = f.derivative();
  if (fp.is_zero()) return field.element(0);
  // res(f, f') at actual degrees is lc^(deg f') * prod f'(roots).
  Elt r = resultant(f, fp).value();
  const Elt a = f.lc();
  const int extra = (d - 2) - fp.degree();  // >= -1
  if (extra >= 0) {
    r = field.mul(r, field.pow(a, static_cast<std::uint64_t>(extra)));
  } else {
    r = field.div(r, a);
  }
  if ((static_cast<long>(d) * (d - 1) / 2) % 2 == 1) r = field.neg(r);
  return field.element(r);
}

BigInt resultant(const IntPoly& f, const IntPoly& g) { return subresultant(IntOps{}, f, g); }

BigInt integer_poly_discriminant(const IntPoly& f0) {
  IntPoly f = f0;
  while (!f.empty() && f.back() == 0) f.pop_back();
  if (f.empty()) throw Error(ErrorKind::ZeroPolynomial, "discriminant of zero");
  const int d = static_cast<int>(f.size()) - 1;
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "discriminant needs degree >= 1");
  IntPoly fp;
  for (int i = 1; i <= d; ++i) fp.push_back(f[i] * i);
  // Over Z the derivative keeps degree d-1.
  BigInt r = resultant(f, fp);
  if (r % f.back() != 0) throw Error(ErrorKind::InternalContradiction, "lc does not divide res(f, f')");
  r /= f.back();
  if ((static_cast<long>(d) * (d - 1) / 2) % 2 == 1) r = -r;
  return r;
}

Poly reduce(const IntPoly& f, const Field& field) {
  const BigInt l = field.characteristic();
  std::vector<Elt> c;
  for (const auto& a : f) {
    BigInt m = a % l;
    if (m < 0) m += l;
    c.push_back(m.convert_to<Elt>());
  }
  return Poly(field, std::move(c));
}

std::string to_string(const IntPoly& f, const std::string& var) {
  std::string out;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] == 0) continue;
    BigInt c = f[i];
    if (!out.empty()) out += c < 0 ? "-" : "+";
    else if (c < 0) out += "-";
    if (c < 0) c = -c;
    if (i == 0) {
      out += c.str();
      continue;
    }
    if (c != 1) out += c.str() + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace ffdio
