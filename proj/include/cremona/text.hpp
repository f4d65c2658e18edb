#pragma once

// Text grammar shared by the CLI and the Python module.
//
//   polynomial  x0^2 + 3/2*x1*x2 - (x0 + x2)*x1     ('*' may be omitted)
//   tuple       [p0 : p1 : ... : pn]
//   family      [p0 : ... : pn] over {c1, c2} params (a0..ak)
//   point       1:2:3  or  (1 : -1/2 : 0)
//   matrix      1,0,0;0,1,0;0,0,1
//
// Variables are x0..x9 and, in families, parameters a0..a9.

#include <stdexcept>
#include <string>
#include <string_view>

#include "cremona/families.hpp"

namespace cremona {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::string token, std::size_t position);
  const std::string& token() const { return token_; }
  std::size_t position() const { return position_; }

 private:
  std::string token_;
  std::size_t position_;
};

/// A homogeneous polynomial in x0..x(nx-1) followed by a0..a(nparams-1).
HomogeneousPoly parse_poly(std::string_view text, const Field& field, std::size_t nx, std::size_t nparams = 0);
MapTuple parse_tuple(std::string_view text, const Field& field, std::size_t n);
ParametricFamily parse_family(std::string_view text, const Field& field, std::size_t n);
Vector parse_point(std::string_view text, const Field& field);
Matrix parse_matrix(std::string_view text, const Field& field);

std::string format_poly(const HomogeneousPoly& p);
std::string format_tuple(const MapTuple& t);
std::string format_point(std::span<const Scalar> point);

}  // namespace cremona
