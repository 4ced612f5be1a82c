#include "nashkit/dfd.hpp"

#include "nashkit/error.hpp"
#include "nashkit/valuations.hpp"

namespace nashkit {

namespace {

void check_size(std::size_t got, std::size_t n, const char* what) {
  if (got != n)
    throw InputError(std::string(what) + " has " + std::to_string(got) + " entries for " + std::to_string(n) +
                     " components");
}

ExactMatrix cluster_inverse(const BlowupCluster& cluster) { return -negative_inverse_intersection(cluster); }

RationalVector c_plus_d(const WedgeNumericalModel& m) {
  RationalVector s(m.c.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = m.c[i] + m.d[i];
  return s;
}

}  // namespace

void validate(const WedgeNumericalModel& model) {
  const std::size_t n = model.cluster.size();
  if (model.special >= n) throw InputError("special component " + std::to_string(model.special) + " is out of range");
  check_size(model.c.size(), n, "c");
  check_size(model.d.size(), n, "d");
  if (model.a) {
    check_size(model.a->size(), n, "a");
    for (std::size_t i = 0; i < n; ++i)
      if ((*model.a)[i] < 0) throw InputError("a_" + std::to_string(i) + " is negative");
  }
  if (model.b) check_size(model.b->size(), n, "b");
  for (std::size_t i = 0; i < n; ++i) {
    if (model.c[i] < 0) throw InputError("c_" + std::to_string(i) + " = " + std::to_string(model.c[i]) + " is negative");
    if (model.minimal_target && model.d[i] < 0)
      throw InputError("d_" + std::to_string(i) + " = " + std::to_string(model.d[i]) +
                       " is negative, impossible over a minimal target");
  }
}

std::vector<long> effective_a(const WedgeNumericalModel& model) {
  return model.a ? *model.a : canonical_coeffs(model.cluster);
}

RationalVector solve_b(const WedgeNumericalModel& model) {
  validate(model);
  auto a = effective_a(model);
  RationalVector shift = cluster_inverse(model.cluster) * c_plus_d(model);
  RationalVector b(a.begin(), a.end());
  return b - shift;
}

bool verify_numerical(const WedgeNumericalModel& model) {
  validate(model);
  if (!model.b) throw InputError("verification needs b");
  auto a = effective_a(model);
  RationalVector lhs(a.begin(), a.end());
  return lhs - *model.b == cluster_inverse(model.cluster) * c_plus_d(model);
}

const char* to_string(LiftStatus s) {
  switch (s) {
    case LiftStatus::Lifts:
      return "LIFTS";
    case LiftStatus::Contradiction:
      return "CONTRADICTION";
    case LiftStatus::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

LiftingVerdict lifting_verdict(const WedgeNumericalModel& model) {
  if (!model.minimal_target) throw InputError("the lifting argument needs a minimal target (set minimal_target)");
  LiftingVerdict v;
  v.b = solve_b(model);
  auto a = effective_a(model);
  v.a_special = a[model.special];
  v.b_special = v.b[model.special];
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > v.b[i]) throw InvariantViolation("a exceeds b although M^{-1} <= 0 and c + d >= 0");

  if (!model.assert_b1_lt_1) {
    v.reason = "b_special = " + to_string(v.b_special) + "; without the transversality assumption b_special < 1 nothing follows";
    return v;
  }
  if (v.b_special >= 1) {
    v.status = LiftStatus::Contradiction;
    v.reason = "asserted b_special < 1 but the numerical identity gives b_special = " + to_string(v.b_special);
    return v;
  }
  // a_special <= b_special < 1 and a_special is a non-negative integer.
  if (v.a_special != 0) throw InvariantViolation("a_special is positive although b_special < 1");
  if (model.assert_no_lift) {
    v.status = LiftStatus::Contradiction;
    v.reason = "b_special = " + to_string(v.b_special) + " < 1 forces a_special = 0, so the wedge lifts, contradicting the no-lift assumption";
    return v;
  }
  v.status = LiftStatus::Lifts;
  v.lifts = true;
  v.reason = "a_special <= b_special = " + to_string(v.b_special) + " < 1 forces a_special = 0: the wedge lifts";
  return v;
}

}  // namespace nashkit
