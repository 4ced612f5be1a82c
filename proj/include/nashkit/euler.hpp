#pragma once

#include <vector>

#include "nashkit/dual_graph.hpp"

namespace nashkit {

/// Limit divisor Y_0 = Z_0 + sum a_i E_i over the components of `graph`
/// (a in vertex order), with Z_0 meeting E_attach transversely.
struct EulerInput {
  DualGraph graph;
  std::vector<long> a;
  VertexId attach = 0;
};

/// Throws InputError on size mismatch, negative a_i or unknown attach.
void validate(const EulerInput& in);

/// Disks over the ball around the attach point: a_attach - 1.
/// Throws InputError when a_attach = 0 (the wedge lifts; no estimate).
long b0_bound(const EulerInput& in);
/// 1 + sum_{i,k} a_i E_i.E_k, diagonal included.
long balls_bound(const EulerInput& in);
/// Tube contributions; the attach component loses one extra for Z_0.
long tubes_bound(const EulerInput& in);
/// sum a_i (2 - 2 g_i + E_i.E_i). Checks it equals the sum of the three
/// partial bounds and throws InvariantViolation otherwise.
long final_bound(const EulerInput& in);

struct EulerCertificate {
  long b0 = 0, balls = 0, tubes = 0, bound = 0;
  bool contradicts_disk = false;        // bound < 1
  std::vector<VertexId> minimality_flags;  // rational -1 curves
  /// The disk contradiction only stands on a resolution without rational -1 curves.
  bool fires() const { return contradicts_disk && minimality_flags.empty(); }
  friend bool operator==(const EulerCertificate&, const EulerCertificate&) = default;
};

EulerCertificate contradiction_certificate(const EulerInput& in);

}  // namespace nashkit
