#include "ffdio/field.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "ffdio/arith.hpp"
#include "ffdio/error.hpp"
#include "ffdio/factor.hpp"
#include "ffdio/poly.hpp"

namespace ffdio {

namespace {

constexpr unsigned kMaxDegree = 64;
constexpr std::uint64_t kMaxCharacteristic = std::uint64_t{1} << 32;
// Fields up to this size get discrete log tables for multiplication.
constexpr std::uint64_t kLogTableLimit = std::uint64_t{1} << 16;
// Below this size nth_root enumerates; above it, it factors X^g - c.
constexpr std::uint64_t kRootEnumerationLimit = std::uint64_t{1} << 16;

using Digits = std::array<std::uint64_t, 2 * kMaxDegree>;

}  // namespace

struct Field::Impl {
  std::uint64_t l = 2;
  unsigned s = 1;
  std::uint64_t q = 2;
  std::vector<std::uint64_t> modulus{0, 1};
  bool default_modulus = true;
  std::vector<std::uint32_t> exp_table;  // size 2(q-1)
  std::vector<std::uint32_t> log_table;  // size q

  void unpack(Elt a, Digits& d) const {
    for (unsigned i = 0; i < s; ++i) {
      d[i] = a % l;
      a /= l;
    }
  }
  Elt pack(const Digits& d) const {
    Elt v = 0;
    for (unsigned i = s; i-- > 0;) v = v * l + d[i];
    return v;
  }

  Elt add(Elt a, Elt b) const {
    if (s == 1) {
      Elt r = a + b;
      return r >= l ? r - l : r;
    }
    if (l == 2) return a ^ b;
    Elt r = 0, place = 1;
    for (unsigned i = 0; i < s; ++i) {
      std::uint64_t x = a % l + b % l;
      if (x >= l) x -= l;
      r += x * place;
      a /= l;
      b /= l;
      place *= l;
    }
    return r;
  }

  Elt neg(Elt a) const {
    if (s == 1) return a == 0 ? 0 : l - a;
    if (l == 2) return a;
    Elt r = 0, place = 1;
    for (unsigned i = 0; i < s; ++i) {
      std::uint64_t x = a % l;
      r += (x == 0 ? 0 : l - x) * place;
      a /= l;
      place *= l;
    }
    return r;
  }

  Elt mul_generic(Elt a, Elt b) const {
    Digits x{}, y{}, r{};
    unpack(a, x);
    unpack(b, y);
    for (unsigned i = 0; i < s; ++i) {
      if (x[i] == 0) continue;
      for (unsigned j = 0; j < s; ++j) {
        r[i + j] = (r[i + j] + mul_mod(x[i], y[j], l)) % l;
      }
    }
    for (unsigned i = 2 * s - 1; i-- > s;) {
      std::uint64_t t = r[i];
      if (t == 0) continue;
      r[i] = 0;
      for (unsigned j = 0; j < s; ++j) {
        // r[i-s+j] -= t * modulus[j]
        std::uint64_t m = mul_mod(t, modulus[j], l);
        r[i - s + j] = (r[i - s + j] + l - m) % l;
      }
    }
    return pack(r);
  }

  Elt mul(Elt a, Elt b) const {
    if (s == 1) return mul_mod(a, b, l);
    if (a == 0 || b == 0) return 0;
    if (!log_table.empty()) return exp_table[log_table[a] + log_table[b]];
    return mul_generic(a, b);
  }

  Elt pow(Elt a, std::uint64_t e) const {
    if (s == 1) return pow_mod(a, e, l);
    Elt result = 1;
    while (e > 0) {
      if (e & 1) result = mul(result, a);
      a = mul(a, a);
      e >>= 1;
    }
    return result;
  }

  Elt inv(Elt a) const {
    if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    if (s == 1) return pow_mod(a, l - 2, l);
    if (!log_table.empty()) return exp_table[(q - 1 - log_table[a]) % (q - 1)];
    return pow(a, q - 2);
  }

  void build_log_tables() {
    if (s == 1 || q > kLogTableLimit) return;
    std::vector<std::uint64_t> factors = prime_divisors(q - 1);
    Elt primitive = 0;
    for (Elt c = 2; c < q && primitive == 0; ++c) {
      bool ok = true;
      for (std::uint64_t p : factors) {
        if (pow(c, (q - 1) / p) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) primitive = c;
    }
    std::vector<std::uint32_t> e(2 * (q - 1)), lg(q, 0);
    Elt x = 1;
    for (std::uint64_t i = 0; i < q - 1; ++i) {
      e[i] = static_cast<std::uint32_t>(x);
      lg[x] = static_cast<std::uint32_t>(i);
      x = mul_generic(x, primitive);
    }
    for (std::uint64_t i = q - 1; i < 2 * (q - 1); ++i) e[i] = e[i - (q - 1)];
    exp_table = std::move(e);
    log_table = std::move(lg);
  }
};

namespace {

const std::shared_ptr<const Field::Impl>& gf2_impl() {
  static const std::shared_ptr<const Field::Impl> impl = std::make_shared<Field::Impl>();
  return impl;
}

bool modulus_irreducible(std::uint64_t l, const std::vector<std::uint64_t>& m) {
  Field prime = Field::create(l, 1);
  std::vector<Elt> c(m.begin(), m.end());
  return is_irreducible(Poly(prime, c));
}

}  // namespace

Field::Field() : impl_(gf2_impl()) {}

Field Field::create(std::uint64_t characteristic, unsigned degree,
                    std::optional<std::vector<std::uint64_t>> modulus) {
  if (!is_prime(characteristic)) {
    throw Error(ErrorKind::NotPrime, std::to_string(characteristic) + " is not prime");
  }
  if (characteristic >= kMaxCharacteristic) {
    throw Error(ErrorKind::InvalidArgument, "characteristic must be below 2^32");
  }
  if (degree < 1 || degree > kMaxDegree) {
    throw Error(ErrorKind::DegreeMismatch, "extension degree must lie in [1, 64]");
  }
  auto order = checked_pow(characteristic, degree);
  if (!order || *order >= (std::uint64_t{1} << 63)) {
    throw Error(ErrorKind::InvalidArgument, "field order must be below 2^63");
  }

  auto impl = std::make_shared<Impl>();
  impl->l = characteristic;
  impl->s = degree;
  impl->q = *order;

  if (degree == 1) {
    if (modulus && *modulus != std::vector<std::uint64_t>{0, 1}) {
      // Any monic linear X - a defines GF(l) itself; only X is the canonical form.
      if (modulus->size() != 2 || (*modulus)[1] % characteristic != 1) {
        throw Error(ErrorKind::DegreeMismatch, "modulus must be monic of degree 1");
      }
      if ((*modulus)[0] % characteristic != 0) {
        throw Error(ErrorKind::InvalidArgument, "prime fields use the placeholder modulus X");
      }
    }
    impl->modulus = {0, 1};
    impl->default_modulus = true;
    return Field(std::move(impl));
  }

  if (modulus) {
    std::vector<std::uint64_t> m = *modulus;
    for (auto& c : m) c %= characteristic;
    while (!m.empty() && m.back() == 0) m.pop_back();
    if (m.size() != degree + 1) {
      throw Error(ErrorKind::DegreeMismatch, "modulus degree differs from extension degree");
    }
    if (m.back() != 1) throw Error(ErrorKind::DegreeMismatch, "modulus must be monic");
    if (!modulus_irreducible(characteristic, m)) {
      throw Error(ErrorKind::ReducibleModulus, "modulus is reducible over GF(" +
                                                   std::to_string(characteristic) + ")");
    }
    impl->modulus = m;
  }

  // Smallest irreducible in canonical order; also decides default_modulus.
  std::vector<std::uint64_t> smallest;
  std::vector<std::uint64_t> candidate(degree + 1, 0);
  candidate[degree] = 1;
  const std::uint64_t count = *order;
  for (std::uint64_t v = 0; v < count; ++v) {
    std::uint64_t t = v;
    for (unsigned i = 0; i < degree; ++i) {
      candidate[i] = t % characteristic;
      t /= characteristic;
    }
    if (candidate[0] == 0) continue;
    if (modulus_irreducible(characteristic, candidate)) {
      smallest = candidate;
      break;
    }
  }
  if (modulus) {
    impl->default_modulus = impl->modulus == smallest;
  } else {
    impl->modulus = smallest;
    impl->default_modulus = true;
  }
  impl->build_log_tables();
  return Field(std::move(impl));
}

std::uint64_t Field::characteristic() const { return impl_->l; }
unsigned Field::degree() const { return impl_->s; }
std::uint64_t Field::order() const { return impl_->q; }
const std::vector<std::uint64_t>& Field::modulus() const { return impl_->modulus; }
bool Field::has_default_modulus() const { return impl_->default_modulus; }

Elt Field::from_int(std::int64_t v) const {
  auto l = static_cast<std::int64_t>(impl_->l);
  std::int64_t r = v % l;
  if (r < 0) r += l;
  return static_cast<Elt>(r);
}

Elt Field::generator() const { return impl_->s == 1 ? 0 : impl_->l; }

Elt Field::add(Elt a, Elt b) const { return impl_->add(a, b); }
Elt Field::sub(Elt a, Elt b) const { return impl_->add(a, impl_->neg(b)); }
Elt Field::neg(Elt a) const { return impl_->neg(a); }
Elt Field::mul(Elt a, Elt b) const { return impl_->mul(a, b); }
Elt Field::inv(Elt a) const { return impl_->inv(a); }
Elt Field::div(Elt a, Elt b) const { return impl_->mul(a, impl_->inv(b)); }
Elt Field::pow(Elt a, std::uint64_t e) const { return impl_->pow(a, e); }

Elt Field::frobenius(Elt a, std::int64_t iterations) const {
  auto s = static_cast<std::int64_t>(impl_->s);
  std::int64_t it = iterations % s;
  if (it < 0) it += s;
  for (std::int64_t i = 0; i < it; ++i) a = impl_->pow(a, impl_->l);
  return a;
}

std::vector<std::uint64_t> Field::coeffs(Elt a) const {
  std::vector<std::uint64_t> c(impl_->s);
  for (auto& x : c) {
    x = a % impl_->l;
    a /= impl_->l;
  }
  return c;
}

Elt Field::from_coeffs(std::span<const std::uint64_t> c) const {
  if (c.size() > impl_->s) throw Error(ErrorKind::DegreeMismatch, "too many coordinates");
  Elt v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * impl_->l + c[i] % impl_->l;
  return v;
}

FieldElement Field::element(Elt v) const {
  if (v >= impl_->q) throw Error(ErrorKind::InvalidArgument, "element out of range");
  return FieldElement(*this, v);
}

std::string Field::to_string() const {
  std::ostringstream os;
  os << "GF(" << impl_->l;
  if (impl_->s > 1) os << '^' << impl_->s;
  if (!impl_->default_modulus) {
    os << ";mod=";
    for (std::size_t i = 0; i < impl_->modulus.size(); ++i) {
      if (i) os << ',';
      os << impl_->modulus[i];
    }
  }
  os << ')';
  return os.str();
}

std::string Field::format(Elt a) const {
  if (a < impl_->l) return std::to_string(a);
  std::vector<std::uint64_t> c = coeffs(a);
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) out += std::to_string(c[i]) + '*';
    out += 'g';
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out;
}

bool Field::operator==(const Field& other) const {
  if (impl_ == other.impl_) return true;
  return impl_->l == other.impl_->l && impl_->s == other.impl_->s &&
         impl_->modulus == other.impl_->modulus;
}

FieldElement::FieldElement(Field field, Elt value) : field_(std::move(field)), value_(value) {}

const Field& FieldElement::checked(const FieldElement& o) const {
  if (!(field_ == o.field_)) {
    throw Error(ErrorKind::SpecMismatch,
                "elements of " + field_.to_string() + " and " + o.field_.to_string());
  }
  return field_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  return {checked(o), field_.add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  return {checked(o), field_.sub(value_, o.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  return {checked(o), field_.mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  checked(o);
  if (o.value_ == 0) throw Error(ErrorKind::DivisionByZero, "division by zero element");
  return {field_, field_.div(value_, o.value_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_.neg(value_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_.pow(value_, e)}; }
FieldElement FieldElement::inverse() const { return {field_, field_.inv(value_)}; }
FieldElement FieldElement::frobenius(std::int64_t iterations) const {
  return {field_, field_.frobenius(value_, iterations)};
}
bool FieldElement::operator==(const FieldElement& o) const {
  return value_ == o.value_ && field_ == o.field_;
}
std::strong_ordering FieldElement::operator<=>(const FieldElement& o) const {
  checked(o);
  return value_ <=> o.value_;
}

std::vector<FieldElement> enumerate_elements(const Field& field, std::uint64_t cap) {
  if (field.order() > cap) {
    throw Error(ErrorKind::CapExceeded, field.to_string() + " has " +
                                            std::to_string(field.order()) +
                                            " elements, cap is " + std::to_string(cap));
  }
  std::vector<FieldElement> out;
  out.reserve(field.order());
  for (Elt v = 0; v < field.order(); ++v) out.emplace_back(field, v);
  return out;
}

namespace {

std::optional<Elt> smallest_root_of_binomial(const Field& field, std::uint64_t g, Elt c) {
  // Roots of X^g - c.
  std::vector<Elt> coeffs(g + 1, 0);
  coeffs[0] = field.neg(c);
  coeffs[g] = 1;
  std::vector<Elt> r = roots(Poly(field, std::move(coeffs)));
  if (r.empty()) return std::nullopt;
  return *std::min_element(r.begin(), r.end());
}

}  // namespace

std::optional<Elt> nth_root(const Field& field, Elt a, std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "root index must be positive");
  if (a == 0) return Elt{0};
  const std::uint64_t q = field.order();
  if (q <= kRootEnumerationLimit) {
    for (Elt b = 1; b < q; ++b) {
      if (field.pow(b, n) == a) return b;
    }
    return std::nullopt;
  }
  // Strip the l-part: b^(l^e) = a has the unique solution frobenius^-e(a).
  const std::uint64_t l = field.characteristic();
  std::int64_t e = 0;
  while (n % l == 0) {
    n /= l;
    ++e;
  }
  a = field.frobenius(a, -e);
  // b^n = a reduces to b^g = c with g = gcd(n, q-1) and c the unique
  // solution in the subgroup of g-th powers of c^(n/g) = a.
  const std::uint64_t g = std::gcd(n, q - 1);
  const std::uint64_t h = (q - 1) / g;
  if (field.pow(a, h) != 1) return std::nullopt;
  const std::uint64_t m = (n / g) % h;
  // m is invertible mod h.
  std::int64_t inv_m = 1;
  if (h > 1) {
    __int128 t0 = 0, t1 = 1, r0 = static_cast<__int128>(h), r1 = static_cast<__int128>(m);
    while (r1 != 0) {
      __int128 quot = r0 / r1;
      std::tie(t0, t1) = std::make_pair(t1, t0 - quot * t1);
      std::tie(r0, r1) = std::make_pair(r1, r0 - quot * r1);
    }
    if (t0 < 0) t0 += h;
    inv_m = static_cast<std::int64_t>(t0);
  }
  Elt c = field.pow(a, static_cast<std::uint64_t>(inv_m));
  return smallest_root_of_binomial(field, g, c);
}

std::optional<FieldElement> nth_root_in_field(const FieldElement& a, std::uint64_t n) {
  auto r = nth_root(a.field(), a.value(), n);
  if (!r) return std::nullopt;
  return FieldElement(a.field(), *r);
}

std::vector<Elt> roots_of_unity(const Field& field, std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "root index must be positive");
  const std::uint64_t g = std::gcd(n, field.order() - 1);
  if (field.order() <= kRootEnumerationLimit) {
    std::vector<Elt> out;
    for (Elt b = 1; b < field.order(); ++b) {
      if (field.pow(b, g) == 1) out.push_back(b);
    }
    return out;
  }
  std::vector<Elt> coeffs(g + 1, 0);
  coeffs[0] = field.neg(1);
  coeffs[g] = 1;
  std::vector<Elt> r = roots(Poly(field, std::move(coeffs)));
  std::sort(r.begin(), r.end());
  return r;
}

Elt find_embedding(const Field& from, const Field& to) {
  if (from.characteristic() != to.characteristic() || to.degree() % from.degree() != 0) {
    throw Error(ErrorKind::NoEmbedding,
                from.to_string() + " does not embed in " + to.to_string());
  }
  if (from.degree() == 1) return to.zero();
  std::vector<Elt> m(from.modulus().begin(), from.modulus().end());
  std::vector<Elt> r = roots(Poly(to, std::move(m)));
  if (r.empty()) {
    throw Error(ErrorKind::NoEmbedding, "modulus of " + from.to_string() + " has no root");
  }
  return *std::min_element(r.begin(), r.end());
}

Elt embed(const Field& from, const Field& to, Elt image, Elt a) {
  std::vector<std::uint64_t> c = from.coeffs(a);
  Elt result = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    result = to.add(to.mul(result, image), to.from_int(static_cast<std::int64_t>(c[i])));
  }
  return result;
}

}  // namespace ffdio
