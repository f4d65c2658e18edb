#include "cremona/poly.hpp"

#include <algorithm>
#include <map>

namespace cremona {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::span<const unsigned> exponents) {
  if (exponents.size() > kMaxVars) throw ShapeError("too many variables");
  unsigned total = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > 255) throw ShapeError("exponent overflow");
    e_[i] = static_cast<std::uint8_t>(exponents[i]);
    total += exponents[i];
  }
  deg_ = static_cast<std::uint16_t>(total);
}

Monomial Monomial::variable(std::size_t i, unsigned power) {
  if (i >= kMaxVars) throw ShapeError("variable index out of range");
  return Monomial().with_exponent(i, power);
}

Monomial Monomial::with_exponent(std::size_t i, unsigned e) const {
  if (e > 255) throw ShapeError("exponent overflow");
  Monomial m = *this;
  m.deg_ = static_cast<std::uint16_t>(m.deg_ - m.e_[i] + e);
  m.e_[i] = static_cast<std::uint8_t>(e);
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

int Monomial::last_variable() const {
  for (int i = static_cast<int>(kMaxVars) - 1; i >= 0; --i)
    if (e_[i]) return i;
  return -1;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  if (a.deg_ + b.deg_ <= 255) {
    for (std::size_t i = 0; i < kMaxVars; ++i) m.e_[i] = static_cast<std::uint8_t>(a.e_[i] + b.e_[i]);
  } else {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      const unsigned s = unsigned{a.e_[i]} + b.e_[i];
      if (s > 255) throw ShapeError("exponent overflow");
      m.e_[i] = static_cast<std::uint8_t>(s);
    }
  }
  m.deg_ = static_cast<std::uint16_t>(a.deg_ + b.deg_);
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.e_[i] = static_cast<std::uint8_t>(a.e_[i] - b.e_[i]);
  m.deg_ = static_cast<std::uint16_t>(a.deg_ - b.deg_);
  return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.deg_ <=> b.deg_; c != 0) return c;
  return a.e_ <=> b.e_;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  std::vector<unsigned> e(nvars, 0);
  // Lexicographically decreasing exponent vectors of a fixed total degree.
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == nvars) {
      e[i] = left;
      out.emplace_back(std::span<const unsigned>(e));
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[i] = k;
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(0, degree);
  return out;
}

std::uint64_t monomial_count(std::size_t nvars, unsigned degree) {
  if (nvars == 0) return degree == 0 ? 1 : 0;
  // binomial(degree + nvars - 1, nvars - 1)
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i < nvars; ++i) r = r * (degree + i) / i;
  return r;
}

// ---------------------------------------------------------------------------
// HomogeneousPoly

struct PolyAccess {
  static HomogeneousPoly make(Field f, std::size_t nvars, unsigned deg, std::vector<Term> sorted) {
    return HomogeneousPoly(std::move(f), nvars, deg, std::move(sorted));
  }
  static std::vector<Term>& terms(HomogeneousPoly& p) { return p.terms_; }
};

namespace {

bool term_greater(const Term& a, const Term& b) { return a.mono > b.mono; }

void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Term acc = terms[i];
    std::size_t j = i + 1;
    for (; j < terms.size() && terms[j].mono == acc.mono; ++j) acc.coeff += terms[j].coeff;
    if (!acc.coeff.is_zero()) terms[out++] = std::move(acc);
    i = j;
  }
  terms.resize(out);
}

void check_compatible(const HomogeneousPoly& a, const HomogeneousPoly& b, const char* op) {
  if (a.field() != b.field())
    throw ShapeError(std::string(op) + ": field mismatch (" + a.field().to_string() + " vs " +
                     b.field().to_string() + ")");
  if (a.nvars() != b.nvars())
    throw ShapeError(std::string(op) + ": arity mismatch (" + std::to_string(a.nvars()) + " vs " +
                     std::to_string(b.nvars()) + " variables)");
}

}  // namespace

HomogeneousPoly::HomogeneousPoly(Field field, std::size_t nvars, unsigned degree)
    : field_(std::move(field)), nvars_(nvars), degree_(degree) {
  if (nvars > kMaxVars) throw ShapeError("too many variables");
}

HomogeneousPoly HomogeneousPoly::from_terms(Field field, std::size_t nvars, std::vector<Term> terms,
                                            unsigned nominal_degree) {
  if (nvars > kMaxVars) throw ShapeError("too many variables");
  for (const auto& t : terms) {
    if (t.coeff.field() != field) throw ShapeError("coefficient from a different field");
    if (t.mono.last_variable() >= static_cast<int>(nvars))
      throw ShapeError("monomial uses a variable beyond x" + std::to_string(nvars - 1));
  }
  canonicalize(terms);
  unsigned deg = nominal_degree;
  if (!terms.empty()) {
    deg = terms.front().mono.degree();
    for (const auto& t : terms)
      if (t.mono.degree() != deg) throw ShapeError("polynomial is not homogeneous");
  }
  return HomogeneousPoly(std::move(field), nvars, deg, std::move(terms));
}

HomogeneousPoly HomogeneousPoly::constant(Field field, std::size_t nvars, const Scalar& c) {
  return monomial(std::move(field), nvars, Monomial(), c);
}

HomogeneousPoly HomogeneousPoly::one(Field field, std::size_t nvars) {
  Scalar c = Scalar::one(field);
  return constant(std::move(field), nvars, c);
}

HomogeneousPoly HomogeneousPoly::variable(Field field, std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw ShapeError("variable index " + std::to_string(i) + " out of range");
  Scalar c = Scalar::one(field);
  return monomial(std::move(field), nvars, Monomial::variable(i), c);
}

HomogeneousPoly HomogeneousPoly::monomial(Field field, std::size_t nvars, const Monomial& m,
                                          const Scalar& c) {
  return from_terms(std::move(field), nvars, {Term{m, c}}, m.degree());
}

Scalar HomogeneousPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return t.mono > x; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return Scalar::zero(field_);
}

unsigned HomogeneousPoly::degree_in(std::size_t i) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[i]);
  return d;
}

HomogeneousPoly HomogeneousPoly::monic() const {
  if (is_zero() || leading().coeff.is_one()) return *this;
  return scaled(leading().coeff.inverse());
}

HomogeneousPoly HomogeneousPoly::scaled(const Scalar& c) const {
  if (c.is_zero()) return HomogeneousPoly(field_, nvars_, degree_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff *= c;
  return HomogeneousPoly(field_, nvars_, degree_, std::move(out));
}

HomogeneousPoly HomogeneousPoly::times_monomial(const Monomial& m) const {
  if (m.last_variable() >= static_cast<int>(nvars_)) throw ShapeError("monomial out of range");
  std::vector<Term> out = terms_;
  for (auto& t : out) t.mono = t.mono * m;
  return HomogeneousPoly(field_, nvars_, degree_ + m.degree(), std::move(out));
}

HomogeneousPoly HomogeneousPoly::with_nominal_degree(unsigned d) const {
  if (!is_zero()) {
    if (d != degree_) throw ShapeError("cannot change the degree of a nonzero polynomial");
    return *this;
  }
  return HomogeneousPoly(field_, nvars_, d);
}

Scalar HomogeneousPoly::evaluate(std::span<const Scalar> point) const {
  if (point.size() != nvars_) throw ShapeError("evaluation point has the wrong arity");
  Scalar sum = Scalar::zero(field_);
  for (const auto& t : terms_) {
    Scalar v = t.coeff;
    for (std::size_t i = 0; i < nvars_ && !v.is_zero(); ++i)
      if (t.mono[i]) v *= point[i].pow(t.mono[i]);
    sum += v;
  }
  return sum;
}

HomogeneousPoly HomogeneousPoly::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = -t.coeff;
  return HomogeneousPoly(field_, nvars_, degree_, std::move(out));
}

namespace {

HomogeneousPoly merge(const HomogeneousPoly& a, const HomogeneousPoly& b, bool subtract,
                      const char* op) {
  check_compatible(a, b, op);
  if (!a.is_zero() && !b.is_zero() && a.degree() != b.degree())
    throw ShapeError(std::string(op) + ": degree mismatch (" + std::to_string(a.degree()) + " vs " +
                     std::to_string(b.degree()) + ")");
  const unsigned deg = a.is_zero() ? b.degree() : a.degree();
  auto x = a.terms();
  auto y = b.terms();
  std::vector<Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].mono > y[j].mono)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].mono > x[i].mono) {
      out.push_back(subtract ? Term{y[j].mono, -y[j].coeff} : y[j]);
      ++j;
    } else {
      Scalar c = subtract ? x[i].coeff - y[j].coeff : x[i].coeff + y[j].coeff;
      if (!c.is_zero()) out.push_back(Term{x[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return PolyAccess::make(a.field(), a.nvars(), deg, std::move(out));
}

}  // namespace

HomogeneousPoly operator+(const HomogeneousPoly& a, const HomogeneousPoly& b) {
  return merge(a, b, false, "add");
}

HomogeneousPoly operator-(const HomogeneousPoly& a, const HomogeneousPoly& b) {
  return merge(a, b, true, "sub");
}

HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b) {
  check_compatible(a, b, "mul");
  const unsigned deg = a.degree() + b.degree();
  if (a.is_zero() || b.is_zero()) return HomogeneousPoly(a.field(), a.nvars(), deg);
  if (a.size() == 1) return b.times_monomial(a.leading().mono).scaled(a.leading().coeff);
  if (b.size() == 1) return a.times_monomial(b.leading().mono).scaled(b.leading().coeff);
  std::vector<Term> out;
  out.reserve(a.size() * b.size());
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) out.push_back(Term{s.mono * t.mono, s.coeff * t.coeff});
  canonicalize(out);
  return PolyAccess::make(a.field(), a.nvars(), deg, std::move(out));
}

bool operator==(const HomogeneousPoly& a, const HomogeneousPoly& b) {
  if (a.field_ != b.field_ || a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  return true;
}

std::string HomogeneousPoly::to_string(const std::function<std::string(std::size_t)>& name) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    const bool neg = t.coeff.is_negative();
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    const Scalar mag = neg ? -t.coeff : t.coeff;
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (!t.mono[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += name(i);
      if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
    }
    if (mono.empty()) {
      s += mag.to_string();
    } else if (mag.is_one()) {
      s += mono;
    } else {
      s += mag.to_string() + "*" + mono;
    }
  }
  return s;
}

std::string HomogeneousPoly::to_string() const {
  return to_string([](std::size_t i) { return "x" + std::to_string(i); });
}

// ---------------------------------------------------------------------------
// Operations

HomogeneousPoly add(const HomogeneousPoly& p, const HomogeneousPoly& q) { return p + q; }
HomogeneousPoly mul(const HomogeneousPoly& p, const HomogeneousPoly& q) { return p * q; }

HomogeneousPoly substitute(const HomogeneousPoly& p, std::span<const HomogeneousPoly> f) {
  if (f.size() != p.nvars())
    throw ShapeError("substitute: " + std::to_string(p.nvars()) + " variables but " +
                     std::to_string(f.size()) + " substitutes");
  if (f.empty()) throw ShapeError("substitute: empty tuple");
  std::optional<unsigned> d;
  for (const auto& fi : f) {
    check_compatible(f.front(), fi, "substitute");
    if (fi.field() != p.field()) throw ShapeError("substitute: field mismatch");
    if (!fi.is_zero()) {
      if (d && *d != fi.degree()) throw ShapeError("substitute: components of unequal degree");
      d = fi.degree();
    }
  }
  const unsigned fd = d.value_or(f.front().degree());
  const std::size_t nv = f.front().nvars();
  HomogeneousPoly result(p.field(), nv, p.degree() * fd);
  // powers[i][k] = f_i^k, filled on demand
  std::vector<std::vector<HomogeneousPoly>> powers(f.size());
  auto power = [&](std::size_t i, unsigned k) -> const HomogeneousPoly& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(HomogeneousPoly::one(p.field(), nv));
    while (pw.size() <= k) pw.push_back(pw.back() * f[i]);
    return pw[k];
  };
  for (const auto& t : p.terms()) {
    HomogeneousPoly prod = HomogeneousPoly::constant(p.field(), nv, t.coeff);
    for (std::size_t i = 0; i < p.nvars() && !prod.is_zero(); ++i)
      if (t.mono[i]) prod = prod * power(i, t.mono[i]);
    if (!prod.is_zero()) result = result + prod;
  }
  return result.with_nominal_degree(p.degree() * fd);
}

HomogeneousPoly partial_derivative(const HomogeneousPoly& p, std::size_t i) {
  if (i >= p.nvars())
    throw ShapeError("partial_derivative: index " + std::to_string(i) + " out of range for " +
                     std::to_string(p.nvars()) + " variables");
  const unsigned deg = p.degree() == 0 ? 0 : p.degree() - 1;
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    const unsigned e = t.mono[i];
    if (!e) continue;
    Scalar c = t.coeff * Scalar::from_int(p.field(), static_cast<long>(e));
    if (!c.is_zero()) out.push_back(Term{t.mono.with_exponent(i, e - 1), std::move(c)});
  }
  // Lowering one exponent keeps grlex order among the survivors.
  return PolyAccess::make(p.field(), p.nvars(), deg, std::move(out));
}

HomogeneousPoly divide_exact(const HomogeneousPoly& p, const HomogeneousPoly& q) {
  check_compatible(p, q, "divide_exact");
  if (q.is_zero()) throw DomainError("divide_exact: division by zero");
  if (p.is_zero())
    return HomogeneousPoly(p.field(), p.nvars(), p.degree() >= q.degree() ? p.degree() - q.degree() : 0);
  if (p.degree() < q.degree()) throw NonExactDivision("divide_exact: divisor has larger degree");
  const Term& lq = q.leading();
  const Scalar lq_inv = lq.coeff.inverse();
  std::vector<Term> quotient;
  HomogeneousPoly r = p;
  while (!r.is_zero()) {
    const Term& lr = r.leading();
    if (!lq.mono.divides(lr.mono)) throw NonExactDivision("divide_exact: remainder is nonzero");
    Term t{lr.mono / lq.mono, lr.coeff * lq_inv};
    r = r - q.times_monomial(t.mono).scaled(t.coeff);
    quotient.push_back(std::move(t));
  }
  return PolyAccess::make(p.field(), p.nvars(), p.degree() - q.degree(), std::move(quotient));
}

namespace {

/// Coefficients of p viewed as a polynomial in variable v, keyed by power.
std::map<unsigned, HomogeneousPoly, std::greater<>> coefficients_in(const HomogeneousPoly& p,
                                                                    std::size_t v) {
  std::map<unsigned, std::vector<Term>, std::greater<>> groups;
  for (const auto& t : p.terms()) groups[t.mono[v]].push_back(Term{t.mono.with_exponent(v, 0), t.coeff});
  std::map<unsigned, HomogeneousPoly, std::greater<>> out;
  for (auto& [k, terms] : groups)
    out.emplace(k, PolyAccess::make(p.field(), p.nvars(), p.degree() - k, std::move(terms)));
  return out;
}

HomogeneousPoly leading_coefficient_in(const HomogeneousPoly& p, std::size_t v, unsigned deg) {
  std::vector<Term> terms;
  for (const auto& t : p.terms())
    if (t.mono[v] == deg) terms.push_back(Term{t.mono.with_exponent(v, 0), t.coeff});
  return PolyAccess::make(p.field(), p.nvars(), p.degree() - deg, std::move(terms));
}

HomogeneousPoly content_in(const HomogeneousPoly& p, std::size_t v) {
  auto coeffs = coefficients_in(p, v);
  std::optional<HomogeneousPoly> g;
  for (auto& [k, c] : coeffs) {
    g = g ? gcd(*g, c) : c.monic();
    if (g->degree() == 0) break;
  }
  return *g;
}

/// Sparse pseudo-remainder of a by b in variable v, scaled monic at each step.
HomogeneousPoly pseudo_remainder(HomogeneousPoly a, const HomogeneousPoly& b, std::size_t v) {
  const unsigned db = b.degree_in(v);
  const HomogeneousPoly lcb = leading_coefficient_in(b, v, db);
  while (!a.is_zero()) {
    const unsigned da = a.degree_in(v);
    if (da < db) break;
    const HomogeneousPoly lca = leading_coefficient_in(a, v, da);
    a = (lcb * a - (lca * b).times_monomial(Monomial::variable(v, da - db))).monic();
  }
  return a;
}

int main_variable(const HomogeneousPoly& p) {
  int v = -1;
  for (const auto& t : p.terms()) v = std::max(v, t.mono.last_variable());
  return v;
}

}  // namespace

HomogeneousPoly gcd(const HomogeneousPoly& p, const HomogeneousPoly& q) {
  check_compatible(p, q, "gcd");
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();
  if (p.degree() == 0 || q.degree() == 0) return HomogeneousPoly::one(p.field(), p.nvars());
  if (p.size() == 1 && q.size() == 1) {
    // gcd of two monomials: componentwise minimum of exponents
    std::vector<unsigned> e(p.nvars());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(p.leading().mono[i], q.leading().mono[i]);
    return HomogeneousPoly::monomial(p.field(), p.nvars(), Monomial(std::span<const unsigned>(e)),
                                     Scalar::one(p.field()));
  }
  const std::size_t v = static_cast<std::size_t>(std::max(main_variable(p), main_variable(q)));

  const HomogeneousPoly cp = content_in(p, v);
  const HomogeneousPoly cq = content_in(q, v);
  const HomogeneousPoly content = gcd(cp, cq);

  HomogeneousPoly a = divide_exact(p, cp).monic();
  HomogeneousPoly b = divide_exact(q, cq).monic();
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);

  HomogeneousPoly prim = HomogeneousPoly::one(p.field(), p.nvars());
  while (true) {
    if (b.degree_in(v) == 0) break;  // primitive and free of v: a unit
    HomogeneousPoly r = pseudo_remainder(a, b, v);
    if (r.is_zero()) {
      prim = b;
      break;
    }
    a = std::move(b);
    b = divide_exact(r, content_in(r, v)).monic();
  }
  return (content * prim).monic();
}

HomogeneousPoly gcd_tuple(std::span<const HomogeneousPoly> polys) {
  if (polys.empty()) throw DomainError("gcd_tuple: empty input");
  HomogeneousPoly g(polys.front().field(), polys.front().nvars(), 0);
  bool any = false;
  for (const auto& p : polys) {
    check_compatible(polys.front(), p, "gcd_tuple");
    if (p.is_zero()) continue;
    g = any ? gcd(g, p) : p.monic();
    any = true;
    if (g.degree() == 0) break;
  }
  if (!any) throw DomainError("gcd_tuple: all inputs are zero");
  return g;
}

HomogeneousPoly determinant(std::vector<std::vector<HomogeneousPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) throw ShapeError("determinant: empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw ShapeError("determinant: matrix is not square");
  const Field field = m[0][0].field();
  const std::size_t nv = m[0][0].nvars();
  bool negate = false;
  HomogeneousPoly prev = HomogeneousPoly::one(field, nv);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return HomogeneousPoly(field, nv, 0);
      std::swap(m[k], m[piv]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        HomogeneousPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = divide_exact(num, prev);
      }
    }
    prev = m[k][k];
  }
  HomogeneousPoly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

HomogeneousPoly jacobian_det(std::span<const HomogeneousPoly> f) {
  if (f.empty()) throw ShapeError("jacobian_det: empty tuple");
  const std::size_t n = f.size();
  std::optional<unsigned> d;
  for (const auto& fi : f) {
    check_compatible(f.front(), fi, "jacobian_det");
    if (fi.nvars() != n)
      throw ShapeError("jacobian_det: " + std::to_string(n) + " components in " +
                       std::to_string(fi.nvars()) + " variables");
    if (!fi.is_zero()) {
      if (d && *d != fi.degree()) throw ShapeError("jacobian_det: components of unequal degree");
      d = fi.degree();
    }
  }
  const unsigned deg = d.value_or(f.front().degree());
  if (deg == 0) throw ShapeError("jacobian_det: degree must be at least 1");
  std::vector<std::vector<HomogeneousPoly>> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m[i].reserve(n);
    for (std::size_t j = 0; j < n; ++j)
      m[i].push_back(partial_derivative(f[i].with_nominal_degree(f[i].is_zero() ? deg : f[i].degree()), j));
  }
  HomogeneousPoly det = determinant(std::move(m));
  return det.is_zero() ? det.with_nominal_degree(static_cast<unsigned>(n) * (deg - 1)) : det;
}

HomogeneousPoly specialize_trailing(const HomogeneousPoly& p, std::size_t keep,
                                    std::span<const Scalar> values) {
  if (keep > p.nvars() || values.size() != p.nvars() - keep)
    throw ShapeError("specialize: expected " + std::to_string(p.nvars() - keep) + " values");
  std::vector<Term> out;
  unsigned nominal = 0;
  bool have_nominal = false;
  for (const auto& t : p.terms()) {
    Scalar c = t.coeff;
    std::vector<unsigned> e(keep);
    unsigned kept_degree = 0;
    for (std::size_t i = 0; i < keep; ++i) kept_degree += (e[i] = t.mono[i]);
    if (!have_nominal) {
      nominal = kept_degree;
      have_nominal = true;
    }
    for (std::size_t j = 0; j < values.size() && !c.is_zero(); ++j)
      if (t.mono[keep + j]) c *= values[j].pow(t.mono[keep + j]);
    if (!c.is_zero()) out.push_back(Term{Monomial(std::span<const unsigned>(e)), std::move(c)});
  }
  return HomogeneousPoly::from_terms(p.field(), keep, std::move(out), nominal);
}

HomogeneousPoly extend_variables(const HomogeneousPoly& p, std::size_t nvars) {
  if (nvars < p.nvars()) throw ShapeError("extend_variables: cannot shrink");
  std::vector<Term> terms(p.terms().begin(), p.terms().end());
  return PolyAccess::make(p.field(), nvars, p.degree(), std::move(terms));
}

HomogeneousPoly rename_variables(const HomogeneousPoly& p, std::size_t nvars,
                                 std::span<const std::size_t> map) {
  if (map.size() != p.nvars()) throw ShapeError("rename_variables: map has the wrong length");
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    std::vector<unsigned> e(nvars, 0);
    for (std::size_t i = 0; i < map.size(); ++i) {
      if (map[i] >= nvars) throw ShapeError("rename_variables: target out of range");
      e[map[i]] += t.mono[i];
    }
    out.push_back(Term{Monomial(std::span<const unsigned>(e)), t.coeff});
  }
  return HomogeneousPoly::from_terms(p.field(), nvars, std::move(out), p.degree());
}

}  // namespace cremona
