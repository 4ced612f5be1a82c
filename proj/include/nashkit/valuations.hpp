#pragma once

#include <vector>

#include "nashkit/cluster.hpp"
#include "nashkit/exact_matrix.hpp"
#include "nashkit/polynomial.hpp"

namespace nashkit {

/// ord_{F_e} of curvettes, or of any germ, indexed by the cluster components.
using ValuationVector = RationalVector;

/// -M^{-1} for the intersection matrix of the final model.
ExactMatrix negative_inverse_intersection(const BlowupCluster& cluster);

/// Row e of -M^{-1}: entry i is ord_{F_e} of a curvette of F_i.
ValuationVector curvette_orders(const BlowupCluster& cluster, PointIndex e);

/// Multiplicity of the strict transform of g at each point, and the orders
/// v_j = m_j + sum of v_i over points p_j is proximate to.
struct OrderTrace {
  std::vector<int> multiplicities;
  std::vector<long> orders;
};

/// Needs tangent data on every free point. Throws InputError for g = 0 or
/// missing tangents.
OrderTrace order_trace(const BlowupCluster& cluster, const LocalPolynomial& g);

/// ord_{F_e}(g), via chart substitution along the chain of p_e only.
long ord_poly(const BlowupCluster& cluster, const LocalPolynomial& g, PointIndex e);

/// t_i = (strict transform of g) . F_i in the final model, read off from the
/// tangent-cone root multiplicities at each chart. Independent of the
/// proximity recursion used by ord_poly.
std::vector<long> strict_transform_profile(const BlowupCluster& cluster, const LocalPolynomial& g);

/// Implicit equation of a curvette of F_i: image of a line transverse to F_i
/// at a general rational point of its chart. Needs tangent data on the chain of p_i.
LocalPolynomial curvette_polynomial(const BlowupCluster& cluster, PointIndex i);

/// For a smooth germ through p_0: the number of centers its strict transform
/// passes through, and the component it finally meets.
struct GermTouch {
  long centers_touched = 0;
  PointIndex last_component = 0;
};
GermTouch smooth_germ_touch(const BlowupCluster& cluster, const LocalPolynomial& g);

enum class Comparison { LessEq, GreaterEq, Equal, Incomparable };
const char* to_string(Comparison c);

/// nu_{F_e} against nu_{F_f}, decided componentwise on rows of -M^{-1} in
/// the minimal model containing both.
Comparison compare(const BlowupCluster& cluster, PointIndex e, PointIndex f);

}  // namespace nashkit
