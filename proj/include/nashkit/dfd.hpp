#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nashkit/cluster.hpp"

namespace nashkit {

/// Numerical data of a wedge source model Z over (C^2, O) mapped to the
/// target resolution: K_Z = sum a_i F_i, c_i = K^hor.F_i, d_i = (pullback of
/// K of the target).F_i, and optionally the exceptional part coefficients b.
struct WedgeNumericalModel {
  BlowupCluster cluster;
  PointIndex special = 0;  // component met by the strict transform of the special arc
  std::optional<std::vector<long>> a;  // canonical_coeffs(cluster) when absent
  std::vector<long> c;
  std::vector<long> d;
  std::optional<RationalVector> b;

  bool minimal_target = false;
  bool assert_b1_lt_1 = false;   // the special arc is transverse: b_special < 1
  bool assert_no_lift = false;   // the wedge is known not to lift: a_special >= 1
};

/// Throws InputError on size mismatch, negative c, or negative d when the
/// target is declared minimal.
void validate(const WedgeNumericalModel& model);

std::vector<long> effective_a(const WedgeNumericalModel& model);

/// b = a - M^{-1}(c + d).
RationalVector solve_b(const WedgeNumericalModel& model);

/// (a - b) == M^{-1}(c + d) exactly. Requires model.b.
bool verify_numerical(const WedgeNumericalModel& model);

enum class LiftStatus { Lifts, Contradiction, Inconclusive };
const char* to_string(LiftStatus s);

struct LiftingVerdict {
  LiftStatus status = LiftStatus::Inconclusive;
  bool lifts = false;
  RationalVector b;  // computed
  Rational a_special, b_special;
  std::string reason;

  friend bool operator==(const LiftingVerdict&, const LiftingVerdict&) = default;
};

/// Needs minimal_target. Since M^{-1} <= 0 and c + d >= 0, a <= b entrywise;
/// b_special < 1 then forces the integer a_special to 0, i.e. the wedge lifts.
LiftingVerdict lifting_verdict(const WedgeNumericalModel& model);

}  // namespace nashkit
