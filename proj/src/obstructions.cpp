#include "nashkit/obstructions.hpp"

#include "nashkit/dual_graph.hpp"
#include "nashkit/error.hpp"
#include "nashkit/valuations.hpp"

namespace nashkit {

const char* to_string(ObstructionStatus s) { return s == ObstructionStatus::RuledOut ? "RULED_OUT" : "NOT_RULED_OUT"; }

ObstructionStatus parse_obstruction_status(const std::string& text) {
  if (text == "RULED_OUT") return ObstructionStatus::RuledOut;
  if (text == "NOT_RULED_OUT") return ObstructionStatus::NotRuledOut;
  throw InputError("unknown verdict '" + text + "'");
}

namespace {

void check_index(const BlowupCluster& cluster, PointIndex i, const char* what) {
  if (i >= cluster.size())
    throw InputError(std::string(what) + " index " + std::to_string(i) + " is outside the cluster (size " +
                     std::to_string(cluster.size()) + ")");
}

}  // namespace

ObstructionVerdict valuative_obstruction(const BlowupCluster& cluster, PointIndex e, PointIndex f) {
  check_index(cluster, e, "e");
  check_index(cluster, f, "f");
  if (e == f) throw InputError("an adjacency needs two distinct divisors");

  auto joint = minimal_joint_model(cluster, e, f);
  auto orders = negative_inverse_intersection(joint.cluster);
  ObstructionVerdict verdict;
  for (PointIndex i = 0; i < joint.cluster.size(); ++i) {
    if (orders(joint.f, i) >= orders(joint.e, i)) continue;
    CurvetteWitness w{joint.original[i], orders(joint.e, i), orders(joint.f, i), std::nullopt};
    if (joint.cluster.has_coordinates()) {
      auto g = curvette_polynomial(joint.cluster, i);
      // The joint model shares the chart chain of p_e and p_f with the full
      // cluster, so the same germ witnesses there.
      if (ord_poly(cluster, g, e) != w.order_e || ord_poly(cluster, g, f) != w.order_f)
        throw InvariantViolation("curvette polynomial does not reproduce the curvette orders");
      w.polynomial = std::move(g);
    }
    verdict.status = ObstructionStatus::RuledOut;
    verdict.curvette = std::move(w);
    break;
  }
  return verdict;
}

ObstructionVerdict refined_valuative_obstruction(const BlowupCluster& cluster, PointIndex e, PointIndex f,
                                                 PointIndex f2, const LocalPolynomial& g) {
  check_index(cluster, e, "e");
  check_index(cluster, f, "f");
  check_index(cluster, f2, "f2");
  OrderWitness w{g, ord_poly(cluster, g, e), ord_poly(cluster, g, f), ord_poly(cluster, g, f2)};
  ObstructionVerdict verdict;
  if (w.order_e < w.order_f + w.order_f2) verdict.status = ObstructionStatus::RuledOut;
  verdict.orders = std::move(w);
  return verdict;
}

ReturnsResult returns_system(const ExactMatrix& m, const std::vector<long>& b, std::size_t special,
                             bool require_indeterminacy) {
  if (!m.is_square()) throw InputError("intersection matrix is not square");
  const std::size_t n = m.rows();
  if (b.size() != n)
    throw InputError("returns profile has " + std::to_string(b.size()) + " entries for " + std::to_string(n) +
                     " components");
  if (special >= n) throw InputError("special component index " + std::to_string(special) + " is out of range");
  for (std::size_t i = 0; i < n; ++i)
    if (b[i] < 0) throw InputError("returns b_" + std::to_string(i) + " = " + std::to_string(b[i]) + " is negative");

  RationalVector rhs(b.begin(), b.end());
  RationalVector printed = rhs;
  rhs[special] -= 1;
  printed[special] = 1 - printed[special];

  ReturnsResult out;
  out.a = solve_exact(m, rhs);
  out.a_printed = solve_exact(m, printed);

  SolutionWitness w{out.a, {}, false};
  for (std::size_t i = 0; i < n; ++i)
    if (out.a[i] < 0 || !is_integral(out.a[i])) w.offending.push_back(i);
  w.special_vanishes = out.a[special] == 0;
  if (!w.offending.empty() || (require_indeterminacy && w.special_vanishes))
    out.verdict.status = ObstructionStatus::RuledOut;
  out.verdict.solution = std::move(w);
  return out;
}

AdjacencyTable adjacency_table(const BlowupCluster& cluster) {
  const std::size_t n = cluster.size();
  AdjacencyTable table(n, std::vector<std::optional<ObstructionVerdict>>(n));
  for (PointIndex e = 0; e < n; ++e)
    for (PointIndex f = 0; f < n; ++f)
      if (e != f) table[e][f] = valuative_obstruction(cluster, e, f);
  return table;
}

}  // namespace nashkit
