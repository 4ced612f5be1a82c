#pragma once

#include <optional>
#include <vector>

#include "nashkit/cluster.hpp"
#include "nashkit/exact_matrix.hpp"
#include "nashkit/polynomial.hpp"

namespace nashkit {

enum class ObstructionStatus { RuledOut, NotRuledOut };
const char* to_string(ObstructionStatus s);
ObstructionStatus parse_obstruction_status(const std::string& text);

/// A curvette of F_curvette whose orders along the two divisors differ in
/// the obstructing direction. Indices refer to the caller's cluster.
struct CurvetteWitness {
  PointIndex curvette = 0;
  Rational order_e, order_f;
  std::optional<LocalPolynomial> polynomial;  // when the cluster has tangent data

  friend bool operator==(const CurvetteWitness&, const CurvetteWitness&) = default;
};

/// Orders of an explicit germ for the returns-refined criterion.
struct OrderWitness {
  LocalPolynomial g;
  long order_e = 0, order_f = 0, order_f2 = 0;

  friend bool operator==(const OrderWitness&, const OrderWitness&) = default;
};

/// Exact solution of the returns system and what is wrong with it.
struct SolutionWitness {
  RationalVector a;
  std::vector<std::size_t> offending;  // negative or non-integral entries
  bool special_vanishes = false;

  friend bool operator==(const SolutionWitness&, const SolutionWitness&) = default;
};

/// RULED_OUT always carries exactly one witness.
struct ObstructionVerdict {
  ObstructionStatus status = ObstructionStatus::NotRuledOut;
  std::optional<CurvetteWitness> curvette;
  std::optional<OrderWitness> orders;
  std::optional<SolutionWitness> solution;

  bool ruled_out() const { return status == ObstructionStatus::RuledOut; }
  friend bool operator==(const ObstructionVerdict&, const ObstructionVerdict&) = default;
};

/// Valuative test for the adjacency N_{F_f} ⊂ N_{F_e}: it is impossible as
/// soon as some germ has ord_{F_f} < ord_{F_e}. Only curvettes of the
/// minimal joint model are searched, which is enough because every germ's
/// order vector is a non-negative combination of theirs. Throws InputError
/// for e == f.
ObstructionVerdict valuative_obstruction(const BlowupCluster& cluster, PointIndex e, PointIndex f);

/// Adjacency N_{F_e} ⊂ N_{F_f} with a return lifting through F_f2 is
/// impossible if ord_{F_e}(g) < ord_{F_f}(g) + ord_{F_f2}(g).
ObstructionVerdict refined_valuative_obstruction(const BlowupCluster& cluster, PointIndex e, PointIndex f,
                                                 PointIndex f2, const LocalPolynomial& g);

struct ReturnsResult {
  RationalVector a;          // M a = b - e_special
  RationalVector a_printed;  // M a = (1 - b_special, other b_i), kept for audit
  ObstructionVerdict verdict;
};

/// `b` holds the returns through each component (non-negative).
/// With require_indeterminacy, a vanishing a_special also rules the wedge out.
ReturnsResult returns_system(const ExactMatrix& m, const std::vector<long>& b, std::size_t special,
                             bool require_indeterminacy = true);

/// table[e][f] = valuative_obstruction(cluster, e, f); empty on the diagonal.
using AdjacencyTable = std::vector<std::vector<std::optional<ObstructionVerdict>>>;
AdjacencyTable adjacency_table(const BlowupCluster& cluster);

}  // namespace nashkit
