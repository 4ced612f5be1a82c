#include <random>

#include "cluster_helpers.hpp"
#include "doctest.h"
#include "nashkit/dfd.hpp"
#include "nashkit/error.hpp"
#include "oracles.hpp"

using namespace nashkit;
using namespace helpers;

namespace {

RationalVector ints(std::initializer_list<long> xs) { return RationalVector(xs.begin(), xs.end()); }

WedgeNumericalModel model(BlowupCluster c, std::vector<long> cc, std::vector<long> d, PointIndex special = 0) {
  WedgeNumericalModel m;
  m.cluster = std::move(c);
  m.c = std::move(cc);
  m.d = std::move(d);
  m.special = special;
  return m;
}

}  // namespace

TEST_CASE("solve_b examples") {
  CHECK(solve_b(model(single(), {0}, {0})) == ints({1}));
  CHECK(solve_b(model(single(), {1}, {0})) == ints({2}));
  // M^{-1} = [[-1,-1],[-1,-2]], so b = (1,2) + (1,2).
  CHECK(solve_b(model(chain2(), {0, 0}, {0, 1}, 1)) == ints({2, 4}));
  CHECK(solve_b(model(satellite3(), {0, 0, 0}, {0, 0, 0})) == ints({1, 2, 4}));
}

TEST_CASE("verify_numerical") {
  auto m = model(chain2(), {1, 0}, {0, 2}, 1);
  m.b = solve_b(m);
  CHECK(verify_numerical(m));
  (*m.b)[0] += 1;
  CHECK_FALSE(verify_numerical(m));

  auto plain = model(satellite3(), {0, 0, 0}, {0, 0, 0});
  plain.b = ints({1, 2, 4});
  CHECK(verify_numerical(plain));
  plain.b.reset();
  CHECK_THROWS_AS(verify_numerical(plain), InputError);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(solve_b(model(chain2(), {0}, {0, 0})), InputError);
  CHECK_THROWS_AS(solve_b(model(chain2(), {-1, 0}, {0, 0})), InputError);
  auto neg_d = model(chain2(), {0, 0}, {0, -1});
  CHECK_NOTHROW(solve_b(neg_d));
  neg_d.minimal_target = true;
  CHECK_THROWS_AS(solve_b(neg_d), InputError);
  CHECK_THROWS_AS(solve_b(model(chain2(), {0, 0}, {0, 0}, 2)), InputError);
}

TEST_CASE("lifting verdict") {
  auto one = model(single(), {0}, {0});
  CHECK_THROWS_AS(lifting_verdict(one), InputError);
  one.minimal_target = true;
  CHECK(lifting_verdict(one).status == LiftStatus::Inconclusive);
  one.assert_b1_lt_1 = true;
  auto v = lifting_verdict(one);
  CHECK(v.status == LiftStatus::Contradiction);
  CHECK(v.b_special == 1);
  CHECK_FALSE(v.lifts);

  auto two = model(chain2(), {0, 0}, {0, 1}, 1);
  two.minimal_target = two.assert_b1_lt_1 = true;
  auto w = lifting_verdict(two);
  CHECK(w.status == LiftStatus::Contradiction);
  CHECK(w.b_special == 4);

  // A supplied a with a_special = 0 and no returns: b_special = 0 < 1.
  auto lifts = model(chain2(), {0, 0}, {0, 0}, 1);
  lifts.a = std::vector<long>{1, 0};
  lifts.minimal_target = lifts.assert_b1_lt_1 = true;
  auto l = lifting_verdict(lifts);
  CHECK(l.status == LiftStatus::Lifts);
  CHECK(l.lifts);
  lifts.assert_no_lift = true;
  CHECK(lifting_verdict(lifts).status == LiftStatus::Contradiction);
}

TEST_CASE("random models: roundtrip and sign of a - b") {
  std::mt19937_64 rng(7);
  auto clusters = all_clusters(6);
  for (int trial = 0; trial < 500; ++trial) {
    const auto& c = clusters[rng() % clusters.size()];
    const std::size_t n = c.size();
    std::vector<long> cc(n), d(n);
    for (auto& x : cc) x = static_cast<long>(rng() % 4);
    for (auto& x : d) x = static_cast<long>(rng() % 4);
    auto m = model(c, cc, d, rng() % n);
    m.minimal_target = true;
    auto b = solve_b(m);
    auto neg_inv = oracle::negative_inverse_from_proximity(proximity_matrix(c));
    auto a = canonical_coeffs(c);
    for (std::size_t i = 0; i < n; ++i) {
      Rational shift = 0;
      for (std::size_t j = 0; j < n; ++j) shift += neg_inv(i, j) * (cc[j] + d[j]);
      REQUIRE(b[i] == a[i] + shift);
      REQUIRE(a[i] <= b[i]);
    }
    m.b = b;
    REQUIRE(verify_numerical(m));
  }
}
