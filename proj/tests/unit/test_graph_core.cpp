#include <random>

#include "doctest.h"
#include "nashkit/canonical.hpp"
#include "nashkit/error.hpp"
#include "nashkit/exact_matrix.hpp"
#include "nashkit/fixtures.hpp"
#include "oracles.hpp"

using namespace nashkit;

namespace {

DualGraph chain(std::vector<int> weights) {
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    vs.push_back({static_cast<VertexId>(i), weights[i], 0, {}});
    if (i) es.emplace_back(i - 1, i);
  }
  return DualGraph(vs, es);
}

ExactMatrix rational_matrix(std::initializer_list<std::initializer_list<long>> rows, long den) {
  ExactMatrix m(rows);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) /= den;
  return m;
}

}  // namespace

TEST_CASE("intersection_matrix reads weights and edge counts") {
  CHECK(intersection_matrix(DualGraph({{0, -2, 0, {}}}, {})) == ExactMatrix{{-2}});
  CHECK(intersection_matrix(chain({-2, -2})) == ExactMatrix{{-2, 1}, {1, -2}});
  CHECK(intersection_matrix(DualGraph({{0, -3, 0, {}}, {1, -1, 0, {}}}, {})) == ExactMatrix{{-3, 0}, {0, -1}});

  DualGraph doubled({{4, -3, 1, {}}, {9, -2, 0, {}}}, {{4, 9}, {9, 4}});
  CHECK(intersection_matrix(doubled) == ExactMatrix{{-3, 2}, {2, -2}});
}

TEST_CASE("DualGraph rejects malformed input") {
  CHECK_THROWS_AS(DualGraph({{0, -1, 0, {}}, {0, -2, 0, {}}}, {}), InputError);
  CHECK_THROWS_AS(DualGraph({{0, -1, -1, {}}}, {}), InputError);
  CHECK_THROWS_AS(DualGraph({{0, -1, 0, {}}}, {{0, 5}}), InputError);
  CHECK_THROWS_AS(DualGraph({{0, -1, 0, {}}}, {{0, 0}}), InputError);
}

TEST_CASE("negative definiteness by minors") {
  CHECK(is_negative_definite(ExactMatrix{{-1}}));
  CHECK(is_negative_definite(ExactMatrix{{-2, 1}, {1, -2}}));
  CHECK(leading_principal_minors(ExactMatrix{{-2, 1}, {1, -2}}) == std::vector<Rational>{-2, 3});
  CHECK_FALSE(is_negative_definite(ExactMatrix{{0}}));
  CHECK_FALSE(is_negative_definite(ExactMatrix{{-1, 2}, {2, -1}}));
  CHECK_THROWS_AS(is_negative_definite(ExactMatrix{{-2, 1}, {0, -2}}), InputError);
}

TEST_CASE("inverse_exact matches worked examples") {
  CHECK(inverse_exact(ExactMatrix{{-2}}) == rational_matrix({{-1}}, 2));
  CHECK(inverse_exact(ExactMatrix{{-2, 1}, {1, -2}}) == rational_matrix({{-2, -1}, {-1, -2}}, 3));
  CHECK(inverse_exact(ExactMatrix{{-2, 1}, {1, -1}}) == ExactMatrix{{-1, -1}, {-1, -2}});
  CHECK_THROWS_AS(inverse_exact(ExactMatrix{{1, 2}, {2, 4}}), SingularMatrixError);
  CHECK_THROWS_AS(inverse_exact(ExactMatrix{{0}}), SingularMatrixError);
}

TEST_CASE("check_inverse_nonpositive") {
  auto a2 = check_inverse_nonpositive(ExactMatrix{{-2, 1}, {1, -2}});
  CHECK(a2.all_nonpositive);
  CHECK(a2.all_negative);
  CHECK(a2.offending_entries.empty());

  auto split = check_inverse_nonpositive(ExactMatrix{{-2, 0}, {0, -2}});
  CHECK(split.all_nonpositive);
  CHECK_FALSE(split.all_negative);
  CHECK(split.inverse(0, 1) == 0);

  auto positive = check_inverse_nonpositive(ExactMatrix{{1}});
  CHECK_FALSE(positive.all_nonpositive);
  REQUIRE(positive.offending_entries.size() == 1);
  CHECK(positive.offending_entries[0].value == 1);
  CHECK_THROWS_AS(check_inverse_nonpositive(ExactMatrix{{0}}), SingularMatrixError);
}

TEST_CASE("determinant and inverse agree with the cofactor oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = oracle::random_graph(rng, 1 + trial % 6, trial % 3 != 0, trial % 3, -4, 1);
    auto m = intersection_matrix(g);
    auto det = oracle::cofactor_det(m);
    CHECK(determinant(m) == det);
    if (det == 0) {
      CHECK_THROWS_AS(inverse_exact(m), SingularMatrixError);
      continue;
    }
    auto inv = inverse_exact(m);
    CHECK(inv == oracle::adjugate_inverse(m));
    CHECK(m * inv == ExactMatrix::identity(m.rows()));
  }
}

TEST_CASE("ADE fixtures are negative definite with unimodular or small determinant") {
  for (const auto& name : fixtures::graph_names()) {
    auto g = fixtures::graph(name);
    REQUIRE(g.has_value());
    CAPTURE(name);
    auto m = intersection_matrix(*g);
    CHECK(is_negative_definite(m));
    CHECK(g->is_connected());
    CHECK(check_inverse_nonpositive(m).all_negative);
  }
  CHECK(determinant(intersection_matrix(fixtures::e_n(8))) == 1);
  CHECK(determinant(intersection_matrix(fixtures::a_n(4))) == 5);
  CHECK(determinant(intersection_matrix(fixtures::d_n(5))) == -4);
  CHECK(fixtures::graph("fixtures/D4").has_value());
  CHECK_FALSE(fixtures::graph("A11").has_value());
  CHECK_FALSE(fixtures::graph("E9").has_value());
}

TEST_CASE("negative definiteness agrees with the quadratic form on a box") {
  std::mt19937_64 rng(5);
  int definite = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto g = oracle::random_graph(rng, 1 + trial % 5, trial % 2 == 0, trial % 2, -3, 0);
    auto m = intersection_matrix(g);
    bool nd = is_negative_definite(m);
    bool box = oracle::quadratic_form_negative_on_box(m, 3);
    // The box test is a necessary condition; a failure on the box refutes definiteness.
    if (nd) CHECK(box);
    if (!box) CHECK_FALSE(nd);
    definite += nd;
  }
  CHECK(definite > 50);
}

TEST_CASE("connected negative-definite graphs have strictly negative inverses") {
  std::mt19937_64 rng(8);
  int seen = 0;
  for (int trial = 0; trial < 1500 && seen < 400; ++trial) {
    auto g = oracle::random_graph(rng, 1 + trial % 8, true, trial % 3, -5, -1, 2);
    auto m = intersection_matrix(g);
    if (!is_negative_definite(m)) continue;
    ++seen;
    auto report = check_inverse_nonpositive(m);
    CHECK(report.all_negative);
    CHECK(report.inverse == oracle::adjugate_inverse(m));
  }
  CHECK(seen >= 200);
}

TEST_CASE("canonical_key examples") {
  DualGraph a({{1, -2, 0, {}}, {2, -2, 0, {}}}, {{1, 2}});
  DualGraph b({{7, -2, 0, {}}, {3, -2, 0, {}}}, {{3, 7}});
  CHECK(canonical_key(a) == canonical_key(b));

  DualGraph star({{0, -2, 0, {}}, {1, -2, 0, {}}, {2, -2, 0, {}}, {3, -2, 0, {}}}, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(canonical_key(chain({-2, -2, -2})) != canonical_key(star));

  auto c = chain({-2, -2, -2});
  CHECK(canonical_key(c.with_label(0, "E")) == canonical_key(c.with_label(2, "E")));
  CHECK(canonical_key(c.with_label(0, "E")) != canonical_key(c.with_label(1, "E")));
  CHECK(canonical_key(chain({-2, -3})) != canonical_key(chain({-2, -2})));
  CHECK(canonical_key(DualGraph({{0, -2, 1, {}}}, {})) != canonical_key(DualGraph({{0, -2, 0, {}}}, {})));
}

TEST_CASE("canonical_key is stable under 1000 relabelings") {
  std::mt19937_64 rng(2024);
  std::vector<DualGraph> graphs = {fixtures::e_n(8), fixtures::d_n(7), chain({-1, -2, -3, -2, -1})};
  graphs.push_back(oracle::random_graph(rng, 9, true, 4, -3, -1, 1));
  // Vertex-transitive shape: every vertex in one refinement class.
  graphs.push_back(DualGraph({{0, -2, 0, {}}, {1, -2, 0, {}}, {2, -2, 0, {}}, {3, -2, 0, {}}, {4, -2, 0, {}}, {5, -2, 0, {}}},
                             {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}));
  for (const auto& g : graphs) {
    auto key = canonical_key(g);
    for (int k = 0; k < 1000; ++k) REQUIRE(canonical_key(oracle::relabel(g, rng)) == key);
  }
}

TEST_CASE("canonical_key equality coincides with brute-force isomorphism") {
  std::mt19937_64 rng(77);
  std::vector<DualGraph> pool;
  for (int k = 0; k < 120; ++k) pool.push_back(oracle::random_graph(rng, 2 + k % 5, k % 4 != 0, k % 2, -2, -1));
  for (int k = 0; k < 40; ++k) pool.push_back(oracle::relabel(pool[k], rng));
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      bool same_key = canonical_key(pool[i]) == canonical_key(pool[j]);
      REQUIRE(same_key == oracle::brute_force_isomorphic(pool[i], pool[j]));
    }
}

TEST_CASE("encode_in_order reproduces the key for the canonical order") {
  auto g = fixtures::d_n(6).with_label(3, "F");
  CHECK(encode_in_order(g, canonical_order(g)) == canonical_key(g).bytes);
}
