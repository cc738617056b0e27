#include "ffdio/parse.hpp"

#include <cctype>
#include <charconv>
#include <functional>
#include <map>
#include <optional>

#include "ffdio/error.hpp"

namespace ffdio {

namespace {

[[noreturn]] void fail(const std::string& text, std::size_t pos, const std::string& what) {
  throw Error(ErrorKind::ParseError, what + " at position " + std::to_string(pos) + " in '" + text + "'");
}

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::uint64_t parse_u64(const std::string& s) {
  const std::string t = strip(s);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw Error(ErrorKind::ParseError, "expected a non-negative integer, got '" + s + "'");
  }
  return v;
}

std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

/// Recursive descent over any ring type T with +, -, *, unary - and pow.
template <class T>
class ExprParser {
 public:
  ExprParser(const std::string& text, std::function<T(std::uint64_t)> number, std::map<std::string, T> symbols)
      : text_(text), number_(std::move(number)), symbols_(std::move(symbols)) {}

  T parse() {
    T v = expr();
    skip();
    if (pos_ != text_.size()) fail(text_, pos_, "unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool starts_atom() {
    skip();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == '(' || std::isalnum(static_cast<unsigned char>(c));
  }

  T expr() {
    bool negate = false;
    if (eat('-')) {
      negate = true;
    } else {
      eat('+');
    }
    T v = term();
    if (negate) v = -v;
    for (;;) {
      if (eat('+')) {
        v = v + term();
      } else if (eat('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  T term() {
    T v = factor();
    for (;;) {
      if (eat('*')) {
        v = v * factor();
      } else if (starts_atom()) {
        v = v * factor();  // juxtaposition, as in 3X^2
      } else {
        return v;
      }
    }
  }

  T factor() {
    T v = atom();
    if (eat('^')) {
      skip();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail(text_, pos_, "expected exponent");
      v = v.pow(parse_u64(text_.substr(start, pos_ - start)));
    }
    return v;
  }

  T atom() {
    skip();
    if (pos_ >= text_.size()) fail(text_, pos_, "unexpected end");
    if (eat('(')) {
      T v = expr();
      if (!eat(')')) fail(text_, pos_, "expected ')'");
      return v;
    }
    const std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return number_(parse_u64(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
      // Symbols are a letter followed by digits (X, g, T1, T12).
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string name = text_.substr(start, pos_ - start);
      auto it = symbols_.find(name);
      if (it == symbols_.end()) fail(text_, start, "unknown symbol '" + name + "'");
      return it->second;
    }
    fail(text_, pos_, "unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::function<T(std::uint64_t)> number_;
  std::map<std::string, T> symbols_;
};

Elt reduce_u64(const Field& field, std::uint64_t v) { return v % field.characteristic(); }

}  // namespace

Field parse_field(const std::string& text) {
  const std::string t = strip(text);
  if (t.size() < 5 || t.compare(0, 3, "GF(") != 0 || t.back() != ')') {
    throw Error(ErrorKind::ParseError, "expected GF(...), got '" + text + "'");
  }
  const std::string inner = t.substr(3, t.size() - 4);
  const auto semi = inner.find(';');
  const std::string size = inner.substr(0, semi);
  std::uint64_t l = 0;
  unsigned s = 1;
  const auto caret = size.find('^');
  if (caret == std::string::npos) {
    l = parse_u64(size);
  } else {
    l = parse_u64(size.substr(0, caret));
    s = static_cast<unsigned>(parse_u64(size.substr(caret + 1)));
  }
  std::optional<std::vector<std::uint64_t>> modulus;
  if (semi != std::string::npos) {
    const std::string opt = strip(inner.substr(semi + 1));
    if (opt.compare(0, 4, "mod=") != 0) throw Error(ErrorKind::ParseError, "expected mod= in '" + text + "'");
    std::vector<std::uint64_t> m;
    for (const auto& part : split_top(opt.substr(4), ',')) m.push_back(parse_u64(part));
    modulus = std::move(m);
  }
  return Field::create(l, s, modulus);
}

Elt parse_element(const Field& field, const std::string& text) {
  std::map<std::string, FieldElement> symbols;
  if (field.degree() > 1) symbols.emplace("g", field.element(field.generator()));
  ExprParser<FieldElement> p(
      text, [&](std::uint64_t v) { return field.element(reduce_u64(field, v)); }, symbols);
  return p.parse().value();
}

Poly parse_poly(const Field& field, const std::string& text, const std::string& var) {
  const std::string t = strip(text);
  if (!t.empty() && t.front() == '[') {
    if (t.back() != ']') throw Error(ErrorKind::ParseError, "unterminated list '" + text + "'");
    std::vector<Elt> c;
    const std::string inner = t.substr(1, t.size() - 2);
    if (!strip(inner).empty()) {
      for (const auto& part : split_top(inner, ',')) c.push_back(parse_element(field, part));
    }
    return Poly(field, std::move(c));
  }
  std::map<std::string, Poly> symbols{{var, Poly::x(field)}};
  if (field.degree() > 1) symbols.emplace("g", Poly::constant(field, field.generator()));
  ExprParser<Poly> p(
      t, [&](std::uint64_t v) { return Poly::constant(field, reduce_u64(field, v)); }, symbols);
  return p.parse();
}

MPoly parse_mpoly(const Field& field, unsigned num_vars, const std::string& text) {
  std::map<std::string, MPoly> symbols;
  for (unsigned i = 0; i < num_vars; ++i) {
    symbols.emplace("T" + std::to_string(i + 1), MPoly::variable(field, num_vars, i));
  }
  if (num_vars == 1) symbols.emplace("T", MPoly::variable(field, 1, 0));
  if (field.degree() > 1) symbols.emplace("g", MPoly::constant(field, num_vars, field.generator()));
  const std::string t = strip(text);
  ExprParser<MPoly> p(
      t, [&](std::uint64_t v) { return MPoly::constant(field, num_vars, reduce_u64(field, v)); }, symbols);
  return p.parse();
}

Backend parse_backend(const std::string& text, std::uint64_t cap) {
  const std::string t = strip(text);
  auto body = [&](const std::string& prefix) {
    if (t.back() != ')') throw Error(ErrorKind::ParseError, "expected ')' at end of '" + text + "'");
    return t.substr(prefix.size(), t.size() - prefix.size() - 1);
  };
  if (t.compare(0, 9, "rational(") == 0) return Backend::rational(parse_field(body("rational(")));
  if (t.compare(0, 9, "elliptic(") == 0) {
    const auto parts = split_top(body("elliptic("), ';');
    if (parts.size() != 2) throw Error(ErrorKind::ParseError, "expected 'elliptic(field; a=[...])'");
    const Field field = parse_field(parts[0]);
    const std::string a = strip(parts[1]);
    if (a.compare(0, 3, "a=[") != 0 || a.back() != ']') {
      throw Error(ErrorKind::ParseError, "expected a=[a1,a2,a3,a4,a6] in '" + text + "'");
    }
    const auto coeffs = split_top(a.substr(3, a.size() - 4), ',');
    if (coeffs.size() != 5) throw Error(ErrorKind::ParseError, "need five coefficients a1,a2,a3,a4,a6");
    std::array<Elt, 5> c{};
    for (std::size_t i = 0; i < 5; ++i) c[i] = parse_element(field, coeffs[i]);
    return Backend::elliptic(EllipticModel::create(field, c), cap);
  }
  throw Error(ErrorKind::ParseError, "unknown curve spec '" + text + "'");
}

}  // namespace ffdio
