#include "cremona/scalar.hpp"

namespace cremona {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32)) throw std::invalid_argument("prime too large: " + std::to_string(p));
  if (!cremona::is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
  return Field(Kind::Prime, p);
}

std::string Field::to_string() const {
  return is_rational() ? "q" : "fp:" + std::to_string(p_);
}

Field Field::from_string(const std::string& s) {
  if (s == "q" || s == "Q") return rational();
  if (s.rfind("fp:", 0) == 0) {
    const std::string digits = s.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad field selector '" + s + "'");
    return prime(std::stoull(digits));
  }
  throw std::invalid_argument("bad field selector '" + s + "' (expected q or fp:<prime>)");
}

Scalar Scalar::zero(const Field& f) {
  if (f.is_rational()) return Scalar(mpq_class(0));
  return Scalar(Residue{0, f.characteristic()});
}

Scalar Scalar::one(const Field& f) {
  if (f.is_rational()) return Scalar(mpq_class(1));
  return Scalar(Residue{1 % f.characteristic(), f.characteristic()});
}

Scalar Scalar::from_int(const Field& f, long v) {
  return from_ratio(f, mpz_class(v), mpz_class(1));
}

Scalar Scalar::from_ratio(const Field& f, const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("zero denominator");
  if (f.is_rational()) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::move(q));
  }
  const std::uint64_t p = f.characteristic();
  const std::uint64_t d = reduce_mpz(den, p);
  if (d == 0) throw DomainError("denominator " + den.get_str() + " vanishes mod " + std::to_string(p));
  return Scalar(Residue{mulmod(reduce_mpz(num, p), powmod(d, p - 2, p), p), p});
}

Scalar Scalar::from_rational(const Field& f, const mpq_class& q) {
  return from_ratio(f, q.get_num(), q.get_den());
}

Field Scalar::field() const {
  if (auto* r = std::get_if<Residue>(&value_)) return Field(Field::Kind::Prime, r->p);
  return Field::rational();
}

bool Scalar::is_zero() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->v == 0;
  return std::get<mpq_class>(value_) == 0;
}

bool Scalar::is_one() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->v == 1;
  return std::get<mpq_class>(value_) == 1;
}

bool Scalar::is_negative() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) < 0;
  return false;
}

const mpq_class& Scalar::rational() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw ShapeError("rational value requested from a prime-field scalar");
}

std::uint64_t Scalar::residue() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->v;
  throw ShapeError("residue requested from a rational scalar");
}

Scalar Scalar::operator-() const {
  if (auto* r = std::get_if<Residue>(&value_)) return Scalar(Residue{r->v ? r->p - r->v : 0, r->p});
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  if (auto* r = std::get_if<Residue>(&value_)) return Scalar(Residue{powmod(r->v, r->p - 2, r->p), r->p});
  return Scalar(mpq_class(1 / std::get<mpq_class>(value_)));
}

namespace {

template <class ModOp, class QOp>
Scalar combine(const auto& a, const auto& b, ModOp mod, QOp q) {
  return std::visit(
      [&](const auto& x, const auto& y) -> Scalar {
        using X = std::decay_t<decltype(x)>;
        using Y = std::decay_t<decltype(y)>;
        if constexpr (std::is_same_v<X, Y> && std::is_same_v<X, mpq_class>) {
          return q(x, y);
        } else if constexpr (std::is_same_v<X, Y>) {
          if (x.p != y.p) throw ShapeError("scalars from different prime fields");
          return mod(x, y);
        } else {
          throw ShapeError("scalars from different fields");
        }
      },
      a, b);
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  return combine(
      a.value_, b.value_,
      [](const Scalar::Residue& x, const Scalar::Residue& y) {
        std::uint64_t s = x.v + y.v;
        if (s >= x.p) s -= x.p;
        return Scalar(Scalar::Residue{s, x.p});
      },
      [](const mpq_class& x, const mpq_class& y) { return Scalar(mpq_class(x + y)); });
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  return combine(
      a.value_, b.value_,
      [](const Scalar::Residue& x, const Scalar::Residue& y) {
        return Scalar(Scalar::Residue{x.v >= y.v ? x.v - y.v : x.v + x.p - y.v, x.p});
      },
      [](const mpq_class& x, const mpq_class& y) { return Scalar(mpq_class(x - y)); });
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  return combine(
      a.value_, b.value_,
      [](const Scalar::Residue& x, const Scalar::Residue& y) {
        return Scalar(Scalar::Residue{mulmod(x.v, y.v, x.p), x.p});
      },
      [](const mpq_class& x, const mpq_class& y) { return Scalar(mpq_class(x * y)); });
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) return false;
  if (auto* x = std::get_if<Scalar::Residue>(&a.value_)) {
    const auto& y = std::get<Scalar::Residue>(b.value_);
    return x->p == y.p && x->v == y.v;
  }
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

Scalar Scalar::pow(unsigned e) const {
  Scalar r = one(field());
  Scalar b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::string Scalar::to_string() const {
  if (auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->v);
  return std::get<mpq_class>(value_).get_str();
}

}  // namespace cremona
