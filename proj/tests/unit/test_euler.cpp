#include <random>

#include "doctest.h"
#include "nashkit/error.hpp"
#include "nashkit/euler.hpp"
#include "nashkit/fixtures.hpp"
#include "oracles.hpp"

using namespace nashkit;

namespace {

// Direct transcription of the three estimates, summing over vertex pairs.
long naive_sum(const DualGraph& g, const std::vector<long>& a, std::size_t attach) {
  auto m = intersection_matrix(g);
  long b0 = a[attach] - 1;
  long balls = 1;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t k = 0; k < g.size(); ++k) balls += a[i] * m(i, k).get_num().get_si();
  long tubes = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    long s = 2 - 2 * g.vertices()[i].genus - (i == attach ? 1 : 0);
    for (std::size_t k = 0; k < g.size(); ++k)
      if (k != i) s -= m(i, k).get_num().get_si();
    tubes += a[i] * s;
  }
  return b0 + balls + tubes;
}

}  // namespace

TEST_CASE("b0 bound") {
  auto a1 = fixtures::a_n(1);
  CHECK(b0_bound({a1, {1}, 0}) == 0);
  CHECK(b0_bound({a1, {3}, 0}) == 2);
  CHECK_THROWS_AS(b0_bound({a1, {0}, 0}), InputError);
}

TEST_CASE("balls and tubes bounds") {
  auto a1 = fixtures::a_n(1), a2 = fixtures::a_n(2);
  CHECK(balls_bound({a1, {1}, 0}) == -1);
  CHECK(balls_bound({a2, {1, 1}, 0}) == -1);
  CHECK(balls_bound({fixtures::e_n(7), std::vector<long>(7, 0), 3}) == 1);
  CHECK(tubes_bound({a1, {1}, 0}) == 1);
  CHECK(tubes_bound({a2, {1, 1}, 0}) == 1);
  CHECK(tubes_bound({a2, {0, 0}, 0}) == 0);
}

TEST_CASE("final bound") {
  CHECK(final_bound({fixtures::a_n(1), {1}, 0}) == 0);
  std::vector<long> a(8, 0);
  a[0] = 1;
  CHECK(final_bound({fixtures::e_n(8), a, 0}) == 0);
  DualGraph elliptic({{0, -1, 1, {}}}, {});
  CHECK(final_bound({elliptic, {1}, 0}) == -1);
}

TEST_CASE("input validation") {
  auto a2 = fixtures::a_n(2);
  CHECK_THROWS_AS(balls_bound({a2, {1}, 0}), InputError);
  CHECK_THROWS_AS(balls_bound({a2, {1, -1}, 0}), InputError);
  CHECK_THROWS_AS(balls_bound({a2, {1, 1}, 7}), InputError);
}

TEST_CASE("certificate") {
  auto c = contradiction_certificate({fixtures::a_n(1), {1}, 0});
  CHECK(c.bound == 0);
  CHECK(c.contradicts_disk);
  CHECK(c.minimality_flags.empty());
  CHECK(c.fires());

  std::vector<long> a(8, 0);
  a[0] = 1;
  CHECK(contradiction_certificate({fixtures::e_n(8), a, 0}).fires());

  DualGraph with_minus_one({{0, -2, 0, {}}, {5, -1, 0, {}}}, {{0, 5}});
  auto flagged = contradiction_certificate({with_minus_one, {1, 1}, 5});
  CHECK(flagged.minimality_flags == std::vector<VertexId>{5});
  CHECK_FALSE(flagged.fires());
  CHECK(flagged.bound == 1);  // the -1 curve contributes +1
}

TEST_CASE("assembly identity and linearity on random inputs") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> coef(0, 5);
  for (int trial = 0; trial < 2000; ++trial) {
    auto g = oracle::random_graph(rng, 1 + trial % 10, trial % 5 != 0, trial % 4, -5, 1, 2);
    std::vector<long> a(g.size()), a2(g.size());
    for (auto& x : a) x = coef(rng);
    for (auto& x : a2) x = coef(rng);
    std::size_t attach = rng() % g.size();
    a[attach] = std::max(a[attach], 1L);
    a2[attach] = std::max(a2[attach], 1L);
    EulerInput in{g, a, g.vertices()[attach].id};
    long fb = final_bound(in);
    REQUIRE(fb == b0_bound(in) + balls_bound(in) + tubes_bound(in));
    REQUIRE(fb == naive_sum(g, a, attach));
    // final_bound is linear in a.
    std::vector<long> sum(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) sum[i] = a[i] + a2[i];
    REQUIRE(final_bound({g, sum, in.attach}) == fb + final_bound({g, a2, in.attach}));
  }
}

TEST_CASE("minimal ADE resolutions always fire") {
  for (const auto& name : fixtures::graph_names()) {
    auto g = *fixtures::graph(name);
    std::mt19937_64 rng(name.size() * 31 + name[1]);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<long> a(g.size());
      for (auto& x : a) x = static_cast<long>(rng() % 4);
      std::size_t attach = rng() % g.size();
      a[attach] = std::max(a[attach], 1L);
      auto c = contradiction_certificate({g, a, g.vertices()[attach].id});
      REQUIRE(c.bound <= 0);
      REQUIRE(c.fires());
    }
  }
}
