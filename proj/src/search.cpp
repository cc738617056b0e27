#include "ffdio/search.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <thread>

#include "ffdio/bigint.hpp"
#include "ffdio/error.hpp"

namespace ffdio {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

/// Runs body(begin, end, out) over [0, count) in contiguous blocks and
/// concatenates the outputs in block order.
template <class T, class Body>
std::vector<T> partitioned(std::uint64_t count, unsigned workers, Body body) {
  workers = std::max(1u, workers);
  if (count < 2 * workers) workers = 1;
  std::vector<std::vector<T>> parts(workers);
  std::vector<std::thread> threads;
  const std::uint64_t block = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = std::min(count, w * block);
    const std::uint64_t end = std::min(count, begin + block);
    if (workers == 1) {
      body(begin, end, parts[w]);
    } else {
      threads.emplace_back([&, w, begin, end] { body(begin, end, parts[w]); });
    }
  }
  for (auto& t : threads) t.join();
  std::vector<T> out;
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  return out;
}

void check_count(const BigInt& count, std::uint64_t cap, const std::string& what) {
  if (count > cap) {
    throw Error(ErrorKind::CapExceeded, to_string(count) + " " + what + " exceed cap " + std::to_string(cap));
  }
}

std::vector<Elt> unit_multipliers(const Field& field, std::uint64_t n) {
  std::vector<Elt> z = roots_of_unity(field, n);
  std::sort(z.begin(), z.end());
  return z;
}

}  // namespace

std::size_t SearchReport::nonconstant_count() const {
  return std::count_if(solutions.begin(), solutions.end(), [](const auto& s) { return !s.constant; });
}

const SearchSolution* SearchReport::first_nonconstant() const {
  for (const auto& s : solutions) {
    if (!s.constant) return &s;
  }
  return nullptr;
}

RationalSearch search_rational(const Field& field, const Poly& f, std::uint64_t n, unsigned degree_bound,
                               const SearchOptions& options) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "exponent must be positive");
  if (!(f.field() == field)) throw Error(ErrorKind::SpecMismatch, "f is not over " + field.to_string());
  const auto start = Clock::now();
  const std::uint64_t q = field.order();
  check_count(pow(BigInt(q), degree_bound + 1), options.cap, "candidates");
  const std::uint64_t count = pow(BigInt(q), degree_bound + 1).convert_to<std::uint64_t>();
  const std::vector<Elt> units = unit_multipliers(field, n);

  using Found = std::pair<Poly, Poly>;
  auto found = partitioned<Found>(count, options.workers, [&](std::uint64_t begin, std::uint64_t end,
                                                              std::vector<Found>& out) {
    std::vector<Elt> c(degree_bound + 1);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      std::uint64_t v = idx;
      for (auto& e : c) {
        e = v % q;
        v /= q;
      }
      const Poly x(field, c);
      const Poly fx = f.compose(x);
      if (fx.is_zero()) {
        out.emplace_back(x, Poly(field));
        continue;
      }
      const auto root = qth_root_poly(fx, n);
      if (!root) continue;
      std::vector<Poly> ys;
      for (Elt z : units) ys.push_back(root->scale(z));
      std::sort(ys.begin(), ys.end());
      for (auto& y : ys) {
        if (!(y.pow(n) == fx)) throw Error(ErrorKind::InternalContradiction, "root failed re-verification");
        out.emplace_back(x, std::move(y));
      }
    }
  });

  RationalSearch result;
  SearchReport& r = result.report;
  r.ring = "rational(" + field.to_string() + ")";
  r.f = to_list_string(f);
  r.n = n;
  r.bounds = {"degree", {degree_bound}};
  r.exhaustive = true;
  r.tested_count = count;
  r.cap = options.cap;
  for (auto& [x, y] : found) {
    r.solutions.push_back({x.to_string("T"), y.to_string("T"), x.degree() <= 0 && y.degree() <= 0});
    result.pairs.emplace_back(std::move(x), std::move(y));
  }
  r.elapsed_ms = since(start);
  return result;
}

SearchReport search_elliptic(const EllipticModel& model, const Poly& f, std::uint64_t n, unsigned pole_bound,
                             const SearchOptions& options) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "exponent must be positive");
  if (!(f.field() == model.field())) throw Error(ErrorKind::SpecMismatch, "f is not over the curve's field");
  const auto start = Clock::now();
  const EllipticRing ring(model);
  const EllipticBox xs(ring, pole_bound, options.cap);
  const unsigned deg_f = std::max(f.degree(), 0);
  const unsigned y_bound = (pole_bound * deg_f + n - 1) / n;

  // Without pruning: a table of every n-th power from the full Y box.
  std::multimap<EllipticElement, EllipticElement> powers;
  if (!options.prune) {
    const EllipticBox ys(ring, y_bound, options.cap);
    for (std::uint64_t j = 0; j < ys.count(); ++j) {
      EllipticElement y = ys.at(j);
      powers.emplace(ring.pow(y, n), std::move(y));
    }
  }
  using Found = std::pair<EllipticElement, EllipticElement>;
  auto found = partitioned<Found>(xs.count(), options.workers, [&](std::uint64_t begin, std::uint64_t end,
                                                                   std::vector<Found>& out) {
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      const EllipticElement x = xs.at(idx);
      const EllipticElement fx = ring.compose(f, x);
      std::vector<EllipticElement> ys;
      if (fx.is_zero()) {
        ys.push_back(ring.zero());
      } else if (!options.prune) {
        auto [lo, hi] = powers.equal_range(fx);
        for (auto it = lo; it != hi; ++it) ys.push_back(it->second);
      } else {
        const unsigned pole = elliptic_pole_order(fx);
        if (pole % n != 0) continue;
        const unsigned target = pole / n;
        const EllipticBox candidates(ring, target, options.cap);
        for (std::uint64_t j = 0; j < candidates.count(); ++j) {
          EllipticElement y = candidates.at(j);
          if (y.is_zero() || elliptic_pole_order(y) != target) continue;
          if (ring.pow(y, n) == fx) ys.push_back(std::move(y));
        }
      }
      std::sort(ys.begin(), ys.end());
      for (auto& y : ys) {
        if (!(ring.pow(y, n) == fx)) throw Error(ErrorKind::InternalContradiction, "root failed re-verification");
        out.emplace_back(x, std::move(y));
      }
    }
  });

  SearchReport r;
  r.ring = model.to_string();
  r.f = to_list_string(f);
  r.n = n;
  r.bounds = {"pole_order", {pole_bound}};
  r.exhaustive = true;
  r.tested_count = xs.count();
  r.cap = options.cap;
  for (const auto& [x, y] : found) {
    r.solutions.push_back({ring.to_string(x), ring.to_string(y), x.is_constant() && y.is_constant()});
  }
  r.elapsed_ms = since(start);
  return r;
}

SearchReport search_multivar(const Field& field, const Poly& f, std::uint64_t n,
                             const std::vector<unsigned>& bounds, const SearchOptions& options) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "exponent must be positive");
  if (bounds.empty()) throw Error(ErrorKind::InvalidArgument, "need at least one variable");
  if (!(f.field() == field)) throw Error(ErrorKind::SpecMismatch, "f is not over " + field.to_string());
  const auto start = Clock::now();
  const BoundedPolySpace space(field, bounds, options.cap);
  const std::vector<Elt> units = unit_multipliers(field, n);

  using Found = std::pair<MPoly, MPoly>;
  auto found = partitioned<Found>(space.count(), options.workers, [&](std::uint64_t begin, std::uint64_t end,
                                                                      std::vector<Found>& out) {
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      const MPoly x = space.at(idx);
      const MPoly fx = compose(f, x);
      if (fx.is_zero()) {
        out.emplace_back(x, MPoly(field, static_cast<unsigned>(bounds.size())));
        continue;
      }
      const auto root = mp_nth_root(fx, n);
      if (!root) continue;
      std::vector<MPoly> ys;
      for (Elt z : units) ys.push_back(root->scale(z));
      std::sort(ys.begin(), ys.end());
      for (auto& y : ys) {
        if (!(y.pow(n) == fx)) throw Error(ErrorKind::InternalContradiction, "root failed re-verification");
        out.emplace_back(x, std::move(y));
      }
    }
  });

  SearchReport r;
  r.ring = field.to_string() + "[T1..T" + std::to_string(bounds.size()) + "]";
  r.f = to_list_string(f);
  r.n = n;
  r.bounds = {"per_variable", bounds};
  r.exhaustive = true;
  r.tested_count = space.count();
  r.cap = options.cap;
  for (const auto& [x, y] : found) {
    r.solutions.push_back({x.to_string(), y.to_string(), x.is_constant() && y.is_constant()});
  }
  r.elapsed_ms = since(start);
  return r;
}

Confrontation confront(const Certificate& certificate, const SearchReport& report) {
  if (certificate.equation.n && *certificate.equation.n != report.n) {
    throw Error(ErrorKind::InvalidArgument, "search exponent " + std::to_string(report.n) +
                                                " differs from the certified exponent " +
                                                std::to_string(*certificate.equation.n));
  }
  Confrontation c;
  const SearchSolution* witness = report.first_nonconstant();
  if (!certificate.certified()) {
    c.detail = witness ? "not certified; nonconstant solution X = " + witness->x + ", Y = " + witness->y
                       : "not certified; no nonconstant solution within bounds";
    return c;
  }
  if (witness) {
    c.agree = false;
    c.detail = "certified, but X = " + witness->x + ", Y = " + witness->y + " is a nonconstant solution";
  } else {
    c.detail = "certified; " + std::to_string(report.tested_count) + " candidates, only constant solutions";
  }
  return c;
}

}  // namespace ffdio
