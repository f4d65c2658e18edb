#pragma once

// Points of W_d: projective classes of (n+1)-tuples of degree-d forms.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cremona/poly.hpp"

namespace cremona {

/// A nonzero (n+1)-tuple of degree-d forms in x0..xn, up to a common scalar.
/// Always stored in canonical form: the first nonzero coefficient, scanning
/// components in order and each component in grlex order, is 1.
class MapTuple {
 public:
  /// Throws ShapeError on arity/degree/field mismatch and DomainError if every component is zero.
  explicit MapTuple(std::vector<HomogeneousPoly> components);

  static MapTuple identity(const Field& field, std::size_t n);

  const Field& field() const { return components_.front().field(); }
  std::size_t n() const { return components_.size() - 1; }
  /// Formal degree; the true degree of the map is normalize(t).reduced.degree().
  unsigned degree() const { return degree_; }
  std::span<const HomogeneousPoly> components() const { return components_; }
  const HomogeneousPoly& operator[](std::size_t i) const { return components_[i]; }

  friend bool operator==(const MapTuple& a, const MapTuple& b) { return a.components_ == b.components_; }

  /// "[p0 : p1 : ... : pn]"
  std::string to_string() const;

 private:
  std::vector<HomogeneousPoly> components_;
  unsigned degree_ = 0;
};

struct ReducedForm {
  MapTuple reduced;          // component gcd is 1
  HomogeneousPoly cofactor;  // monic, degree = formal degree - reduced degree
};

/// Strip the common factor of the components.
ReducedForm normalize(const MapTuple& t);

/// The form a with t = (a*x0 : ... : a*xn), if t has that shape.
std::optional<HomogeneousPoly> is_multiple_of_identity(const MapTuple& t);

/// Coefficients of all components against monomials_of_degree(n+1, d), concatenated.
std::vector<mpq_class> coefficient_vector(const MapTuple& t);

/// sum_{i<j} (v_i w_j - v_j w_i)^2 / (|v|^2 |w|^2): the squared sine of the angle
/// between two nonzero rational vectors.
mpq_class chordal_distance_sq(std::span<const mpq_class> v, std::span<const mpq_class> w);

/// Weyl metric on W_d over Q, squared. Throws DomainError over F_p.
mpq_class distance_sq(const MapTuple& p, const MapTuple& q);
double distance(const MapTuple& p, const MapTuple& q);

/// Squared sine of the angle between t and the fiber {(g0*a : ... : gn*a)} of
/// degree-d representatives of the map g. Zero iff t represents the same map as g.
mpq_class fiber_distance_sq(const MapTuple& t, const MapTuple& g);

}  // namespace cremona
