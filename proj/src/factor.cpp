#include "ffdio/factor.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "ffdio/error.hpp"

namespace ffdio {

namespace {

/// For c with c' = 0, the unique h with h^l = c.
Poly lth_root(const Poly& c) {
  const Field& f = c.field();
  const std::uint64_t l = f.characteristic();
  std::vector<Elt> out;
  const auto& cc = c.coeffs();
  for (std::size_t i = 0; i < cc.size(); i += l) out.push_back(f.frobenius(cc[i], -1));
  return Poly(f, std::move(out));
}

Poly random_poly(const Field& f, int max_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elt> dist(0, f.order() - 1);
  std::vector<Elt> c(static_cast<std::size_t>(max_degree) + 1);
  for (auto& x : c) x = dist(rng);
  return Poly(f, std::move(c));
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f) {
  std::vector<std::pair<Poly, unsigned>> out;
  if (f.degree() <= 0) return out;
  const auto l = static_cast<unsigned>(f.field().characteristic());
  Poly fp = f.derivative();
  if (fp.is_zero()) {
    for (auto& [p, m] : squarefree_decomposition(lth_root(f))) out.emplace_back(p, m * l);
    return out;
  }
  Poly c = gcd(f, fp);
  Poly w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly z = w / y;
    if (!z.is_one()) out.emplace_back(z.monic(), i);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) {
    for (auto& [p, m] : squarefree_decomposition(lth_root(c.monic()))) out.emplace_back(p, m * l);
  }
  return out;
}

std::vector<std::pair<Poly, unsigned>> distinct_degree(const Poly& f) {
  std::vector<std::pair<Poly, unsigned>> out;
  const Field& field = f.field();
  const Poly x = Poly::x(field);
  Poly rest = f.monic();
  Poly h = x % rest;
  for (unsigned d = 1; rest.degree() >= 2 * static_cast<int>(d); ++d) {
    h = powmod(h, field.order(), rest);
    Poly g = gcd(rest, h - x);
    if (!g.is_one()) {
      out.emplace_back(g, d);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest, static_cast<unsigned>(rest.degree()));
  return out;
}

std::vector<Poly> equal_degree(const Poly& f, unsigned d, std::uint64_t seed) {
  std::vector<Poly> done;
  std::vector<Poly> pending{f.monic()};
  const Field& field = f.field();
  const std::uint64_t q = field.order();
  const unsigned ext = field.degree() * d;  // [GF(l^(s d)) : GF(l)]
  std::mt19937_64 rng(seed);
  while (!pending.empty()) {
    Poly h = std::move(pending.back());
    pending.pop_back();
    if (h.degree() == static_cast<int>(d)) {
      done.push_back(std::move(h));
      continue;
    }
    if (h.degree() < static_cast<int>(d) || h.degree() % static_cast<int>(d) != 0) {
      throw Error(ErrorKind::InternalContradiction, "equal-degree input has wrong degree");
    }
    for (;;) {
      Poly a = random_poly(field, h.degree() - 1, rng);
      if (a.degree() < 1) continue;
      Poly b(field);
      if (q % 2 == 1) {
        // a^((q^d - 1)/2) = (a * a^q * ... * a^(q^(d-1)))^((q-1)/2).
        Poly norm = Poly::constant(field, 1);
        Poly cur = a % h;
        for (unsigned i = 0; i < d; ++i) {
          norm = (norm * cur) % h;
          if (i + 1 < d) cur = powmod(cur, q, h);
        }
        b = powmod(norm, (q - 1) / 2, h) - Poly::constant(field, 1);
      } else {
        // Absolute trace a + a^2 + ... + a^(2^(ext-1)).
        Poly cur = a % h;
        b = cur;
        for (unsigned i = 1; i < ext; ++i) {
          cur = (cur * cur) % h;
          b = b + cur;
        }
      }
      Poly g = gcd(h, b);
      if (g.degree() > 0 && g.degree() < h.degree()) {
        pending.push_back(h / g);
        pending.push_back(std::move(g));
        break;
      }
    }
  }
  std::sort(done.begin(), done.end());
  return done;
}

Factorization factor(const Poly& f, std::uint64_t seed) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "cannot factor the zero polynomial");
  const Field& field = f.field();
  Factorization out{field, field.element(f.lc()), {}, {}, seed};
  std::map<Elt, unsigned> linear;
  std::map<Poly, unsigned> nonlinear;
  std::uint64_t salt = 0;
  for (auto& [part, mult] : squarefree_decomposition(f.monic())) {
    for (auto& [block, d] : distinct_degree(part)) {
      for (Poly& irr : equal_degree(block, d, mix_seed(seed, salt++))) {
        if (irr.degree() == 1) {
          linear[field.neg(irr.coeff(0))] += mult;
        } else {
          nonlinear[irr] += mult;
        }
      }
    }
  }
  for (auto& [root, mult] : linear) out.linear.push_back({field.element(root), mult});
  for (auto& [p, mult] : nonlinear) out.nonlinear.push_back({p, mult});
  return out;
}

Poly Factorization::expand() const {
  Poly r = Poly::constant(field, unit.value());
  for (const auto& lf : linear) {
    Poly lin(field, {field.neg(lf.root.value()), 1});
    r = r * lin.pow(lf.multiplicity);
  }
  for (const auto& nf : nonlinear) r = r * nf.factor.pow(nf.multiplicity);
  return r;
}

std::string Factorization::to_string(const std::string& var) const {
  std::vector<std::string> parts;
  for (const auto& lf : linear) {
    std::string base = var;
    if (!lf.root.is_zero()) {
      std::string r = lf.root.to_string();
      if (r.find_first_of("+*^") != std::string::npos) r = "(" + r + ")";
      base = "(" + var + "-" + r + ")";
    }
    if (lf.multiplicity > 1) base += "^" + std::to_string(lf.multiplicity);
    parts.push_back(base);
  }
  for (const auto& nf : nonlinear) {
    std::string base = "(" + nf.factor.to_string(var) + ")";
    if (nf.multiplicity > 1) base += "^" + std::to_string(nf.multiplicity);
    parts.push_back(base);
  }
  std::string u = unit.to_string();
  if (u.find_first_of("+*^") != std::string::npos) u = "(" + u + ")";
  std::string out = parts.empty() || unit.value() != 1 ? u : "";
  for (const auto& p : parts) out += (out.empty() ? "" : "*") + p;
  return out;
}

std::vector<Elt> roots(const Poly& f, std::uint64_t seed) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "roots of the zero polynomial");
  if (f.degree() < 1) return {};
  const Field& field = f.field();
  const Poly x = Poly::x(field);
  Poly monic = f.monic();
  Poly g = gcd(monic, powmod(x, field.order(), monic) - x);
  std::vector<Elt> out;
  if (g.degree() < 1) return out;
  for (const Poly& lin : equal_degree(g, 1, seed)) out.push_back(field.neg(lin.coeff(0)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ffdio
