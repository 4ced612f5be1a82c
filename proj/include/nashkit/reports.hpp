#pragma once

// One report type per CLI analysis. Each renders as text and as JSON, and
// from_json(to_json(r)) == r. Reports echo the exact matrices they used.

#include <optional>
#include <string>
#include <vector>

#include "nashkit/canonical.hpp"
#include "nashkit/dfd.hpp"
#include "nashkit/euler.hpp"
#include "nashkit/io.hpp"
#include "nashkit/obstructions.hpp"
#include "nashkit/valuations.hpp"

namespace nashkit::reports {

using io::Json;

struct GraphReport {
  DualGraph graph;
  ExactMatrix m;
  Rational det;
  std::vector<Rational> minors;
  bool negative_definite = false;
  bool connected = false;
  std::optional<ExactMatrix> inverse;  // absent when singular
  bool inverse_all_nonpositive = false;
  bool inverse_all_negative = false;
  std::vector<MatrixEntry> offending;
  CanonicalKey key;

  static GraphReport build(const DualGraph& g);
  Json to_json() const;
  static GraphReport from_json(const Json& j);
  std::string to_text() const;
  friend bool operator==(const GraphReport&, const GraphReport&) = default;
};

struct ClusterReport {
  BlowupCluster cluster;
  DualGraph graph;
  ExactMatrix p, m, inverse;
  Rational det;
  bool proximity_identity = false;
  std::vector<long> canonical;

  /// Throws InvariantViolation if the simulated M differs from -P^T P.
  static ClusterReport build(const BlowupCluster& c);
  Json to_json() const;
  static ClusterReport from_json(const Json& j);
  std::string to_text() const;
  friend bool operator==(const ClusterReport&, const ClusterReport&) = default;
};

struct CompareReport {
  PointIndex e = 0, f = 0;
  std::vector<PointIndex> joint;  // kept points of the minimal joint model
  RationalVector row_e, row_f;    // over the joint model
  Comparison result = Comparison::Equal;
  ExactMatrix m, inverse;         // joint model

  static CompareReport build(const BlowupCluster& c, PointIndex e, PointIndex f);
  Json to_json() const;
  static CompareReport from_json(const Json& j);
  std::string to_text() const;
  friend bool operator==(const CompareReport&, const CompareReport&) = default;
};

struct OrdReport {
  LocalPolynomial g;
  std::vector<int> multiplicities;
  std::vector<long> orders;
  std::vector<long> profile;
  RationalVector orders_from_profile;  // -M^{-1} t
  ExactMatrix m, inverse;

  static OrdReport build(const BlowupCluster& c, const LocalPolynomial& g);
  Json to_json() const;
  static OrdReport from_json(const Json& j);
  std::string to_text() const;
  friend bool operator==(const OrdReport&, const OrdReport&) = default;
};

/// Valuative test of N_{F_f} ⊂ N_{F_e}, or the refined test when g is given.
struct ObstructReport {
  std::string mode;  // "valuative" | "refined"
  PointIndex e = 0, f = 0;
  std::optional<PointIndex> f2;
  std::string adjacency;
  ObstructionVerdict verdict;
  ExactMatrix m, inverse;  // of the cluster

  static ObstructReport valuative(const BlowupCluster& c, PointIndex e, PointIndex f);
  static ObstructReport refined(const BlowupCluster& c, PointIndex e, PointIndex f, PointIndex f2, const LocalPolynomial& g);
  Json to_json() const;
  static ObstructReport from_json(const Json& j);
  std::string to_text() const;
  friend bool operator==(const ObstructReport&, const ObstructReport&) = default;
};

struct ReturnsReport {
  std::vector<long> b;
  std::size_t special = 0;
  bool require_indeterminacy = true;
  RationalVector a, a_printed;
  ObstructionVerdict verdict;
  ExactMatrix m, inverse;

  static ReturnsReport build(const ExactMatrix& m, const std::vector<long>& b, std::size_t special,
                             bool require_indeterminacy);
  Json to_json() const;
  static ReturnsReport from_json(const Json& j);
  std::string to_text() const;
  friend bool operator==(const ReturnsReport&, const ReturnsReport&) = default;
};

struct TableReport {
  struct Entry {
    PointIndex e = 0, f = 0;
    ObstructionVerdict verdict;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  std::size_t size = 0;
  std::vector<Entry> entries;
  ExactMatrix m, inverse;

  static TableReport build(const BlowupCluster& c);
  Json to_json() const;
  static TableReport from_json(const Json& j);
  std::string to_text() const;
  friend bool operator==(const TableReport&, const TableReport&) = default;
};

struct EulerReport {
  DualGraph graph;
  std::vector<long> a;
  VertexId attach = 0;
  EulerCertificate certificate;
  ExactMatrix m;

  static EulerReport build(const EulerInput& in);
  Json to_json() const;
  static EulerReport from_json(const Json& j);
  std::string to_text() const;
  friend bool operator==(const EulerReport&, const EulerReport&) = default;
};

struct DfdReport {
  std::vector<long> a, c, d;
  PointIndex special = 0;
  std::optional<RationalVector> b_supplied;
  std::optional<bool> verified;  // only with b supplied
  RationalVector b;
  std::optional<LiftingVerdict> lifting;  // only for a minimal target
  ExactMatrix m, inverse;

  static DfdReport build(const WedgeNumericalModel& model);
  Json to_json() const;
  static DfdReport from_json(const Json& j);
  std::string to_text() const;
  friend bool operator==(const DfdReport&, const DfdReport&) = default;
};

struct PairReport {
  PointIndex e = 0, f = 0;
  DualGraph pair_graph;
  CanonicalKey key;
  std::optional<ObstructionVerdict> computed;  // for N_F ⊂ N_E; absent when e == f
  std::string kb_status;                       // "", "hit", "miss", "stored"
  std::optional<ObstructionStatus> kb_verdict;
  std::string kb_provenance;

  static PairReport build(const BlowupCluster& c, PointIndex e, PointIndex f);
  Json to_json() const;
  static PairReport from_json(const Json& j);
  std::string to_text() const;
  friend bool operator==(const PairReport&, const PairReport&) = default;
};

}  // namespace nashkit::reports
