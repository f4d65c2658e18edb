#include "cremona/text.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <regex>

namespace cremona {

ParseError::ParseError(const std::string& message, std::string token, std::size_t position)
    : std::invalid_argument(message), token_(std::move(token)), position_(position) {}

namespace {

using Sparse = std::map<Monomial, Scalar>;

class PolyParser {
 public:
  PolyParser(std::string_view text, const Field& field, std::size_t nx, std::size_t nparams)
      : text_(text), field_(field), nx_(nx), nparams_(nparams) {}

  Sparse parse() {
    skip();
    if (pos_ >= text_.size()) fail("empty polynomial", "");
    Sparse p = expr();
    skip();
    if (pos_ < text_.size()) fail("unexpected token", std::string(1, text_[pos_]));
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what, const std::string& token) const {
    std::string msg = what;
    if (!token.empty()) msg += " '" + token + "'";
    msg += " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"";
    throw ParseError(msg, token, pos_);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void add_into(Sparse& a, const Sparse& b, bool negate) {
    for (const auto& [m, c] : b) {
      auto it = a.find(m);
      const Scalar v = negate ? -c : c;
      if (it == a.end()) {
        a.emplace(m, v);
      } else {
        it->second += v;
        if (it->second.is_zero()) a.erase(it);
      }
    }
  }

  Sparse multiply(const Sparse& a, const Sparse& b) {
    Sparse out;
    for (const auto& [m1, c1] : a)
      for (const auto& [m2, c2] : b) add_into(out, Sparse{{m1 * m2, c1 * c2}}, false);
    return out;
  }

  Sparse expr() {
    Sparse acc;
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = text_[pos_] == '-';
      ++pos_;
    }
    add_into(acc, term(), negate);
    while (peek() == '+' || peek() == '-') {
      negate = text_[pos_] == '-';
      ++pos_;
      add_into(acc, term(), negate);
    }
    return acc;
  }

  bool starts_factor(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'a' || c == '('; }

  Sparse term() {
    Sparse acc = power();
    while (true) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc = multiply(acc, power());
      } else if (starts_factor(c)) {
        acc = multiply(acc, power());
      } else {
        return acc;
      }
    }
  }

  Sparse power() {
    Sparse base = primary();
    if (peek() != '^') return base;
    ++pos_;
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent", pos_ < text_.size() ? std::string(1, text_[pos_]) : "");
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 3 || std::stoul(digits) > 255) fail("exponent too large", digits);
    const unsigned e = static_cast<unsigned>(std::stoul(digits));
    Sparse r{{Monomial(), Scalar::one(field_)}};
    for (unsigned i = 0; i < e; ++i) r = multiply(r, base);
    return r;
  }

  std::string integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Sparse primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Sparse inner = expr();
      if (peek() != ')') fail("expected ')'", pos_ < text_.size() ? std::string(1, text_[pos_]) : "end of input");
      ++pos_;
      return inner;
    }
    if (c == '-') {
      ++pos_;
      Sparse inner = power();
      for (auto& [m, s] : inner) s = -s;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::string num = integer();
      mpz_class den = 1;
      if (peek() == '/') {
        ++pos_;
        skip();
        const std::string d = integer();
        if (d.empty()) fail("expected an integer denominator", pos_ < text_.size() ? std::string(1, text_[pos_]) : "");
        den = mpz_class(d);
        if (den == 0) fail("zero denominator", num + "/" + d);
        try {
          return constant(Scalar::from_ratio(field_, mpz_class(num), den));
        } catch (const DomainError&) {
          fail("denominator not invertible in " + field_.to_string(), num + "/" + d);
        }
      }
      return constant(Scalar::from_ratio(field_, mpz_class(num), den));
    }
    if (c == 'x' || c == 'a') {
      const std::size_t start = pos_;
      ++pos_;
      const std::string idx = integer();
      const std::string tok(text_.substr(start, pos_ - start));
      if (idx.empty() || idx.size() > 1) {
        pos_ = start;
        fail("unknown variable (expected x0..x9 or a0..a9)", tok);
      }
      const std::size_t i = std::stoul(idx);
      const std::size_t limit = c == 'x' ? nx_ : nparams_;
      if (i >= limit) {
        pos_ = start;
        if (c == 'x')
          fail("variable out of range for n = " + std::to_string(nx_ - 1), tok);
        fail(nparams_ ? "parameter out of range (have a0..a" + std::to_string(nparams_ - 1) + ")"
                      : "parameters are not allowed here",
             tok);
      }
      const std::size_t var = c == 'x' ? i : nx_ + i;
      return Sparse{{Monomial::variable(var), Scalar::one(field_)}};
    }
    if (c == '\0') fail("unexpected end of input", "");
    fail("unexpected token", std::string(1, c));
  }

  Sparse constant(const Scalar& s) {
    if (s.is_zero()) return {};
    return Sparse{{Monomial(), s}};
  }

  std::string_view text_;
  Field field_;
  std::size_t nx_;
  std::size_t nparams_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

/// Splits on a separator at parenthesis depth 0.
std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == sep && depth == 0) {
      out.push_back(std::string(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(std::string(s.substr(start)));
  return out;
}

/// Text between the leading '[' and its ']' plus the remainder after it.
std::pair<std::string, std::string> bracketed(std::string_view text) {
  const std::string t = trim(text);
  if (t.empty() || t.front() != '[') throw ParseError("a tuple must start with '['", t.substr(0, 1), 0);
  const auto close = t.find(']');
  if (close == std::string::npos) throw ParseError("missing ']' in tuple", t, t.size());
  return {t.substr(1, close - 1), t.substr(close + 1)};
}

std::vector<HomogeneousPoly> parse_components(const std::string& body, const Field& field, std::size_t n,
                                              std::size_t nparams) {
  const auto parts = split_top(body, ':');
  if (parts.size() != n + 1)
    throw ParseError("tuple has " + std::to_string(parts.size()) + " components, expected " + std::to_string(n + 1) +
                         " for n = " + std::to_string(n),
                     body, 0);
  std::vector<HomogeneousPoly> comps;
  for (const auto& p : parts) comps.push_back(parse_poly(p, field, n + 1, nparams));
  return comps;
}

}  // namespace

HomogeneousPoly parse_poly(std::string_view text, const Field& field, std::size_t nx, std::size_t nparams) {
  if (nx + nparams > kMaxVars) throw ParseError("too many variables", "", 0);
  PolyParser parser(text, field, nx, nparams);
  Sparse s = parser.parse();
  std::vector<Term> terms;
  for (auto& [m, c] : s) terms.push_back(Term{m, c});
  try {
    return HomogeneousPoly::from_terms(field, nx + nparams, std::move(terms), 0);
  } catch (const ShapeError& e) {
    throw ParseError(std::string(e.what()) + ": \"" + std::string(text) + "\"", std::string(text), 0);
  }
}

MapTuple parse_tuple(std::string_view text, const Field& field, std::size_t n) {
  auto [body, rest] = bracketed(text);
  if (!trim(rest).empty()) throw ParseError("trailing text after tuple", trim(rest), 0);
  auto comps = parse_components(body, field, n, 0);
  try {
    return MapTuple(std::move(comps));
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid tuple: ") + e.what(), std::string(text), 0);
  }
}

ParametricFamily parse_family(std::string_view text, const Field& field, std::size_t n) {
  auto [body, rest] = bracketed(text);
  std::string tail = trim(rest);
  std::string constraints_text;
  std::optional<std::size_t> declared;
  if (tail.rfind("over", 0) == 0) {
    tail = trim(std::string_view(tail).substr(4));
    if (tail.empty() || tail.front() != '{') throw ParseError("expected '{' after 'over'", tail.substr(0, 1), 0);
    const auto close = tail.find('}');
    if (close == std::string::npos) throw ParseError("missing '}' after constraints", tail, 0);
    constraints_text = tail.substr(1, close - 1);
    tail = trim(std::string_view(tail).substr(close + 1));
  }
  if (tail.rfind("params", 0) == 0) {
    static const std::regex decl(R"(params\s*\(\s*a0\s*\.\.\s*a([0-9])\s*\))");
    std::smatch m;
    if (!std::regex_match(tail, m, decl)) throw ParseError("expected 'params (a0..ak)'", tail, 0);
    declared = std::stoul(m[1].str()) + 1;
    tail.clear();
  }
  if (!tail.empty()) throw ParseError("unexpected text after family", tail, 0);

  std::size_t nparams = 0;
  if (declared) {
    nparams = *declared;
  } else {
    const std::string all = body + " " + constraints_text;
    static const std::regex param(R"(a([0-9]))");
    for (auto it = std::sregex_iterator(all.begin(), all.end(), param); it != std::sregex_iterator(); ++it)
      nparams = std::max<std::size_t>(nparams, std::stoul((*it)[1].str()) + 1);
    if (nparams == 0) throw ParseError("family has no parameters", body, 0);
  }

  auto comps = parse_components(body, field, n, nparams);
  std::vector<HomogeneousPoly> constraints;
  if (!trim(constraints_text).empty())
    for (const auto& c : split_top(constraints_text, ',')) constraints.push_back(parse_poly(c, field, n + 1, nparams));
  try {
    return ParametricFamily(n, nparams, std::move(comps), std::move(constraints));
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid family: ") + e.what(), std::string(text), 0);
  }
}

Vector parse_point(std::string_view text, const Field& field) {
  std::string t = trim(text);
  if (!t.empty() && t.front() == '(') {
    if (t.back() != ')') throw ParseError("missing ')' in point", t, t.size());
    t = t.substr(1, t.size() - 2);
  }
  static const std::regex entry(R"(\s*(-?)\s*([0-9]+)\s*(?:/\s*([0-9]+))?\s*)");
  Vector out;
  for (const auto& part : split_top(t, ':')) {
    std::smatch m;
    if (!std::regex_match(part, m, entry)) throw ParseError("bad point coordinate", trim(part), 0);
    mpz_class num(m[2].str());
    if (m[1].length()) num = -num;
    const mpz_class den(m[3].matched ? m[3].str() : "1");
    if (den == 0) throw ParseError("zero denominator in point", trim(part), 0);
    try {
      out.push_back(Scalar::from_ratio(field, num, den));
    } catch (const DomainError&) {
      throw ParseError("denominator not invertible in " + field.to_string(), trim(part), 0);
    }
  }
  if (out.size() < 2) throw ParseError("a projective point needs at least two coordinates", t, 0);
  return out;
}

Matrix parse_matrix(std::string_view text, const Field& field) {
  Matrix m;
  for (const auto& row : split_top(text, ';')) {
    std::string r = row;
    for (auto& ch : r)
      if (ch == ',') ch = ':';
    m.push_back(parse_point(r, field));
  }
  return m;
}

std::string format_poly(const HomogeneousPoly& p) { return p.to_string(); }
std::string format_tuple(const MapTuple& t) { return t.to_string(); }

std::string format_point(std::span<const Scalar> point) {
  std::string s = "(";
  for (std::size_t i = 0; i < point.size(); ++i) s += (i ? ":" : "") + point[i].to_string();
  return s + ")";
}

}  // namespace cremona
