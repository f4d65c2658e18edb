#pragma once

// Exact field elements: arbitrary-precision rationals (GMP) or residues mod a prime.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace cremona {

/// Raised when an operation mixes incompatible fields, arities or degrees.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised for arithmetic that has no answer (division by zero, non-exact division).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

bool is_prime(std::uint64_t p);

/// Field descriptor: Q or F_p.
class Field {
 public:
  enum class Kind : std::uint8_t { Rational, Prime };

  static Field rational() { return Field(Kind::Rational, 0); }
  /// Throws std::invalid_argument unless p is prime and below 2^32.
  static Field prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  bool is_prime() const { return kind_ == Kind::Prime; }
  std::uint64_t characteristic() const { return p_; }

  /// "q" or "fp:<p>", the selector syntax understood by the CLI.
  std::string to_string() const;
  static Field from_string(const std::string& selector);

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  Field(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint64_t p_;
};

class Scalar {
 public:
  /// Zero of Q.
  Scalar() : value_(mpq_class(0)) {}

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar from_int(const Field& f, long v);
  /// num/den reduced into the field; throws DomainError if den maps to zero.
  static Scalar from_ratio(const Field& f, const mpz_class& num, const mpz_class& den);
  static Scalar from_rational(const Field& f, const mpq_class& q);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  /// Only valid over Q.
  const mpq_class& rational() const;
  /// Only valid over F_p: canonical representative in [0, p).
  std::uint64_t residue() const;

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  Scalar pow(unsigned e) const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Integer or "num/den" over Q; the residue over F_p.
  std::string to_string() const;
  bool is_negative() const;  // sign over Q; always false over F_p

 private:
  struct Residue {
    std::uint64_t v;
    std::uint64_t p;
  };
  explicit Scalar(Residue r) : value_(r) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}

  std::variant<Residue, mpq_class> value_;
};

}  // namespace cremona
