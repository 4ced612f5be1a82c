#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nashkit/cluster.hpp"
#include "nashkit/rational.hpp"

namespace nashkit {

/// Sparse bivariate polynomial in x, y with exact rational coefficients.
/// Only nonzero terms are stored.
class LocalPolynomial {
 public:
  using Exponent = std::pair<int, int>;  // (deg_x, deg_y)

  LocalPolynomial() = default;
  static LocalPolynomial constant(const Rational& c);
  static LocalPolynomial monomial(int a, int b, const Rational& c = 1);
  static LocalPolynomial x() { return monomial(1, 0); }
  static LocalPolynomial y() { return monomial(0, 1); }

  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int a, int b) const;

  /// Lowest total degree of a term: the multiplicity at the origin.
  int order() const;
  /// Homogeneous part of degree order().
  LocalPolynomial initial_form() const;

  /// Strict transform through one blow-up of the origin, expressed in the
  /// chart centered at `direction`: g(x, x(y+c)) / x^m, or g(xy, x) / x^m
  /// for the infinite direction, with m = order().
  LocalPolynomial chart_transform(const Tangent& direction) const;

  /// Multiplicity of `direction` as a root of the tangent cone: the
  /// intersection number at that point of the strict transform with the
  /// exceptional line after one blow-up.
  int tangent_multiplicity(const Tangent& direction) const;

  LocalPolynomial& operator+=(const LocalPolynomial& o);
  LocalPolynomial& operator-=(const LocalPolynomial& o);
  friend LocalPolynomial operator+(LocalPolynomial a, const LocalPolynomial& b) { return a += b; }
  friend LocalPolynomial operator-(LocalPolynomial a, const LocalPolynomial& b) { return a -= b; }
  friend LocalPolynomial operator*(const LocalPolynomial& a, const LocalPolynomial& b);
  friend LocalPolynomial operator*(const Rational& c, const LocalPolynomial& p);
  friend bool operator==(const LocalPolynomial&, const LocalPolynomial&) = default;

 private:
  void add_term(int a, int b, const Rational& c);
  std::map<Exponent, Rational> terms_;
};

/// Terms `c*x^a*y^b` joined by + or -, c an integer or p/q.
/// Throws InputError with the offending column.
LocalPolynomial parse_polynomial(std::string_view text);
std::string to_string(const LocalPolynomial& p);

/// Univariate polynomial in t, coefficient i of t^i.
using UniPoly = std::vector<Rational>;
UniPoly uni_mul(const UniPoly& a, const UniPoly& b);
UniPoly uni_add(const UniPoly& a, const UniPoly& b);

}  // namespace nashkit
