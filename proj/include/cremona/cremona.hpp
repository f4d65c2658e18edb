#pragma once

// Certified birational maps of P^n.

#include <optional>
#include <stdexcept>
#include <vector>

#include "cremona/linalg.hpp"
#include "cremona/wspace.hpp"

namespace cremona {

/// A stored certificate failed re-verification.
class CertificateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A reduced tuple together with a verified inverse:
///   inverse o forward = (a*x0 : ... : a*xn),  forward o inverse = (a'*x0 : ... : a'*xn),
/// with a, a' nonzero and computed from the canonical representatives.
class CremonaMap {
 public:
  /// Verifies both compositions, reducedness and the inverse degree bound
  /// deg(inverse) <= deg(forward)^(n-1). Throws CertificateError otherwise.
  static CremonaMap from_pair(const MapTuple& forward, const MapTuple& inverse);

  const MapTuple& forward() const { return forward_; }
  const MapTuple& inverse() const { return inverse_; }
  /// a with inverse o forward = a * id.
  const HomogeneousPoly& certificate_cofactor() const { return cofactor_; }
  /// a' with forward o inverse = a' * id.
  const HomogeneousPoly& inverse_cofactor() const { return inverse_cofactor_; }

  std::size_t n() const { return forward_.n(); }
  const Field& field() const { return forward_.field(); }
  unsigned degree() const { return forward_.degree(); }

  /// Re-runs the substitution checks; false if either fails.
  bool verify() const;

  friend bool operator==(const CremonaMap& a, const CremonaMap& b) { return a.forward_ == b.forward_; }

 private:
  CremonaMap(MapTuple f, MapTuple g, HomogeneousPoly a, HomogeneousPoly a_inv)
      : forward_(std::move(f)), inverse_(std::move(g)), cofactor_(std::move(a)), inverse_cofactor_(std::move(a_inv)) {}

  MapTuple forward_;
  MapTuple inverse_;
  HomogeneousPoly cofactor_;
  HomogeneousPoly inverse_cofactor_;
};

/// The composite tuple (g0(f) : ... : gn(f)); callers normalize as needed.
MapTuple substitute_tuple(const MapTuple& g, const MapTuple& f);

struct CertifyOptions {
  /// Over Q, reject tuples with vanishing Jacobian before any linear algebra.
  bool jacobian_filter = true;
  /// Optional cap below the d^(n-1) bound.
  std::optional<unsigned> max_inverse_degree;
};

struct Certification {
  std::optional<CremonaMap> map;
  /// Reduced degree of the input.
  unsigned reduced_degree = 0;
  /// Inverse degrees whose linear systems were solved.
  unsigned degrees_tried = 0;
  /// Proven non-dominant: zero Jacobian over Q, or a nonzero g with g o f = 0.
  bool non_dominant = false;
  /// Over Q: the Jacobian was nonzero yet no certificate exists up to the
  /// bound. Expected for dominant non-birational maps (finite covers); reported
  /// so the inverse degree bound is never trusted silently.
  bool dominant_without_certificate = false;
};

Certification certify_detailed(const MapTuple& t, const CertifyOptions& options = {});
std::optional<CremonaMap> certify_birational(const MapTuple& t);

CremonaMap inverse(const CremonaMap& f);
/// f o g: apply g first, then f.
CremonaMap compose(const CremonaMap& f, const CremonaMap& g);

/// Image of a point, canonicalized so its first nonzero coordinate is 1;
/// nullopt at a base point. Throws DomainError for the zero vector.
std::optional<Vector> apply_to_point(const CremonaMap& f, std::span<const Scalar> point);

/// First nonzero coordinate scaled to 1.
Vector canonical_point(std::span<const Scalar> point);

unsigned true_degree(const CremonaMap& f);
/// Reduced degree of an uncertified tuple.
unsigned true_degree(const MapTuple& t);

CremonaMap identity(const Field& field, std::size_t n);
/// (x1*x2 : x0*x2 : x0*x1).
CremonaMap standard_quadratic(const Field& field);
/// (prod_{j != 0} xj : ... : prod_{j != n} xj), the standard involution of degree n.
CremonaMap standard_involution(const Field& field, std::size_t n);
/// x_i -> sum_j m[i][j] x_j. Throws DomainError when m is singular.
CremonaMap linear_from_matrix(const Matrix& m);
/// Homogenized (x1 + q(x2, ..., xn), x2, ..., xn) for a form q of degree m >= 1 in
/// x0, x2, ..., xn (q must not involve x1): (x0^m : x0^(m-1) x1 + q : x0^(m-1) x2 : ...).
MapTuple de_jonquieres_tuple(const HomogeneousPoly& q);
CremonaMap de_jonquieres(const HomogeneousPoly& q);

}  // namespace cremona
