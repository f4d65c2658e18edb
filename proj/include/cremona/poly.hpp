#pragma once

// Sparse homogeneous multivariate polynomials over an exact field.
//
// Terms are kept sorted in decreasing graded-lexicographic order with
// x0 > x1 > ... ; no stored coefficient is zero. The zero polynomial keeps a
// nominal degree so that a degree-d slot of a tuple may hold zero.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cremona/scalar.hpp"

namespace cremona {

inline constexpr std::size_t kMaxVars = 24;

class Monomial {
 public:
  Monomial() = default;
  /// Throws ShapeError for more than kMaxVars exponents or an exponent above 255.
  explicit Monomial(std::span<const unsigned> exponents);
  static Monomial variable(std::size_t i, unsigned power = 1);

  unsigned operator[](std::size_t i) const { return e_[i]; }
  unsigned degree() const { return deg_; }

  bool divides(const Monomial& other) const;
  /// Highest index with a positive exponent, or -1 for the unit monomial.
  int last_variable() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);

  Monomial with_exponent(std::size_t i, unsigned e) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Graded lex: total degree first, then the exponent of x0, x1, ...
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::array<std::uint8_t, kMaxVars> e_{};
  std::uint16_t deg_ = 0;
};

struct Term {
  Monomial mono;
  Scalar coeff;
};

/// All monomials of the given degree in nvars variables, in decreasing grlex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);
/// Number of monomials of the given degree: binomial(degree + nvars - 1, nvars - 1).
std::uint64_t monomial_count(std::size_t nvars, unsigned degree);

class NonExactDivision : public DomainError {
 public:
  using DomainError::DomainError;
};

class HomogeneousPoly {
 public:
  /// The zero polynomial of nominal degree `degree`.
  HomogeneousPoly(Field field, std::size_t nvars, unsigned degree = 0);

  /// Combines repeated monomials and drops zeros. Throws ShapeError if the
  /// monomials do not all share one degree or use variables beyond nvars.
  static HomogeneousPoly from_terms(Field field, std::size_t nvars, std::vector<Term> terms,
                                    unsigned nominal_degree = 0);
  static HomogeneousPoly constant(Field field, std::size_t nvars, const Scalar& c);
  static HomogeneousPoly one(Field field, std::size_t nvars);
  static HomogeneousPoly variable(Field field, std::size_t nvars, std::size_t i);
  static HomogeneousPoly monomial(Field field, std::size_t nvars, const Monomial& m,
                                  const Scalar& c);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Leading term in grlex order; requires a nonzero polynomial.
  const Term& leading() const { return terms_.front(); }
  Scalar coefficient(const Monomial& m) const;
  /// Highest exponent of variable i among all terms.
  unsigned degree_in(std::size_t i) const;
  bool uses_variable(std::size_t i) const { return degree_in(i) > 0; }

  /// Scales so the leading coefficient is 1 (no-op on zero).
  HomogeneousPoly monic() const;
  HomogeneousPoly scaled(const Scalar& c) const;
  HomogeneousPoly times_monomial(const Monomial& m) const;
  HomogeneousPoly with_nominal_degree(unsigned d) const;

  Scalar evaluate(std::span<const Scalar> point) const;

  HomogeneousPoly operator-() const;
  friend HomogeneousPoly operator+(const HomogeneousPoly& a, const HomogeneousPoly& b);
  friend HomogeneousPoly operator-(const HomogeneousPoly& a, const HomogeneousPoly& b);
  friend HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b);

  /// Equal field, arity and terms; nominal degrees of zero polynomials are ignored.
  friend bool operator==(const HomogeneousPoly& a, const HomogeneousPoly& b);

  /// Renders with the given variable names, e.g. "x0^2 + 3/2*x1*x2".
  std::string to_string(const std::function<std::string(std::size_t)>& name) const;
  /// Variables named x0, x1, ...
  std::string to_string() const;

 private:
  HomogeneousPoly(Field field, std::size_t nvars, unsigned degree, std::vector<Term> sorted)
      : field_(std::move(field)), nvars_(nvars), degree_(degree), terms_(std::move(sorted)) {}

  friend struct PolyAccess;

  Field field_;
  std::size_t nvars_;
  unsigned degree_;
  std::vector<Term> terms_;
};

HomogeneousPoly add(const HomogeneousPoly& p, const HomogeneousPoly& q);
HomogeneousPoly mul(const HomogeneousPoly& p, const HomogeneousPoly& q);

/// p(f0, ..., fn): f must hold p.nvars() polynomials of one common degree.
HomogeneousPoly substitute(const HomogeneousPoly& p, std::span<const HomogeneousPoly> f);

HomogeneousPoly partial_derivative(const HomogeneousPoly& p, std::size_t i);

/// Monic gcd of two polynomials; gcd(0, 0) = 0.
HomogeneousPoly gcd(const HomogeneousPoly& p, const HomogeneousPoly& q);
/// Monic gcd of a list; throws DomainError if every input is zero.
HomogeneousPoly gcd_tuple(std::span<const HomogeneousPoly> polys);

/// Throws NonExactDivision when q does not divide p, DomainError when q is zero.
HomogeneousPoly divide_exact(const HomogeneousPoly& p, const HomogeneousPoly& q);

/// det(d f_i / d x_j) for a square tuple of a common degree >= 1.
HomogeneousPoly jacobian_det(std::span<const HomogeneousPoly> f);

/// Determinant of a square matrix of polynomials by fraction-free elimination.
HomogeneousPoly determinant(std::vector<std::vector<HomogeneousPoly>> m);

/// Replace variables [keep, nvars) by the given values; the result lives in
/// `keep` variables. Throws ShapeError if the result would not be homogeneous.
HomogeneousPoly specialize_trailing(const HomogeneousPoly& p, std::size_t keep,
                                    std::span<const Scalar> values);

/// Re-embed in a ring with more variables; the new variables come after the old ones.
HomogeneousPoly extend_variables(const HomogeneousPoly& p, std::size_t nvars);

/// Move variables: variable i of p becomes variable map[i] of a ring with nvars variables.
HomogeneousPoly rename_variables(const HomogeneousPoly& p, std::size_t nvars,
                                 std::span<const std::size_t> map);

}  // namespace cremona
