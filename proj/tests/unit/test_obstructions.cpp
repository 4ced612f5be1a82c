#include <filesystem>
#include <fstream>
#include <random>

#include <unistd.h>

#include "cluster_helpers.hpp"
#include "doctest.h"
#include "nashkit/canonical.hpp"
#include "nashkit/error.hpp"
#include "nashkit/fixtures.hpp"
#include "nashkit/knowledge_base.hpp"
#include "nashkit/obstructions.hpp"
#include "nashkit/valuations.hpp"
#include "oracles.hpp"

using namespace nashkit;
using namespace helpers;

namespace {

RationalVector q(std::initializer_list<Rational> xs) { return RationalVector(xs); }

std::filesystem::path temp_file(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("nashkit_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove(p);
  return p;
}

}  // namespace

TEST_CASE("valuative obstruction worked examples") {
  // N_F1 in N_F2 on two directions: a curvette of F_2 has ord_F1 = 1 < ord_F2 = 2.
  auto v = valuative_obstruction(two_directions(), 2, 1);
  REQUIRE(v.ruled_out());
  REQUIRE(v.curvette);
  CHECK(v.curvette->curvette == 2);
  CHECK(v.curvette->order_f == 1);
  CHECK(v.curvette->order_e == 2);

  CHECK(valuative_obstruction(chain2(), 0, 1).status == ObstructionStatus::NotRuledOut);
  CHECK_FALSE(valuative_obstruction(chain2(), 0, 1).curvette);

  auto up = valuative_obstruction(chain2(), 1, 0);
  REQUIRE(up.ruled_out());
  CHECK(up.curvette->curvette == 1);
  CHECK(up.curvette->order_f == 1);
  CHECK(up.curvette->order_e == 2);
  REQUIRE(up.curvette->polynomial);
  CHECK(ord_poly(chain2(), *up.curvette->polynomial, 0) == 1);
  CHECK(ord_poly(chain2(), *up.curvette->polynomial, 1) == 2);

  CHECK_THROWS_AS(valuative_obstruction(chain2(), 1, 1), InputError);
  CHECK_THROWS_AS(valuative_obstruction(chain2(), 0, 5), InputError);
}

TEST_CASE("curvette witness without tangent data has no polynomial") {
  BlowupCluster bare({root(), free_on(0)});
  auto v = valuative_obstruction(bare, 1, 0);
  REQUIRE(v.ruled_out());
  CHECK_FALSE(v.curvette->polynomial);
}

TEST_CASE("refined valuative obstruction") {
  auto c = chain2();
  auto x = LocalPolynomial::x(), y = LocalPolynomial::y();
  auto r1 = refined_valuative_obstruction(c, 1, 0, 0, x);
  CHECK(r1.ruled_out());
  CHECK(r1.orders->order_e == 1);
  CHECK(r1.orders->order_f + r1.orders->order_f2 == 2);

  auto r2 = refined_valuative_obstruction(c, 1, 0, 1, y);
  CHECK(r2.ruled_out());
  CHECK(r2.orders->order_e == 2);
  CHECK(r2.orders->order_f == 1);
  CHECK(r2.orders->order_f2 == 2);

  CHECK(refined_valuative_obstruction(c, 0, 1, 1, x).ruled_out());
  // ord_F1(y) = 2 is not below ord_F0(y) + ord_F0(y) = 2.
  CHECK_FALSE(refined_valuative_obstruction(c, 1, 0, 0, y).ruled_out());
  CHECK_THROWS_AS(refined_valuative_obstruction(c, 1, 0, 0, LocalPolynomial()), InputError);
}

TEST_CASE("returns system closed forms") {
  const ExactMatrix a1{{-2}}, a2{{-2, 1}, {1, -2}};

  auto r = returns_system(a1, {0}, 0);
  CHECK(r.a == q({Rational(1, 2)}));
  CHECK(r.a_printed == q({Rational(-1, 2)}));
  CHECK(r.verdict.ruled_out());
  CHECK(r.verdict.solution->offending == std::vector<std::size_t>{0});

  auto lift = returns_system(a1, {1}, 0);
  CHECK(lift.a == q({0}));
  CHECK(lift.verdict.ruled_out());
  CHECK(lift.verdict.solution->special_vanishes);
  CHECK_FALSE(returns_system(a1, {1}, 0, false).verdict.ruled_out());

  auto s = returns_system(a2, {0, 1}, 0);
  CHECK(s.a == q({Rational(1, 3), Rational(-1, 3)}));
  CHECK(s.verdict.ruled_out());
  CHECK(s.verdict.solution->offending == std::vector<std::size_t>{0, 1});

  auto z = returns_system(a2, {0, 0}, 0);
  CHECK(z.a == q({Rational(2, 3), Rational(1, 3)}));
  CHECK(z.verdict.ruled_out());

  // Same numbers from the adjugate.
  CHECK(oracle::adjugate_solve(a2, q({-1, 1})) == s.a);
  CHECK(oracle::adjugate_solve(a2, q({-1, 0})) == z.a);

  CHECK_THROWS_AS(returns_system(a1, {-1}, 0), InputError);
  CHECK_THROWS_AS(returns_system(ExactMatrix{{0}}, {0}, 0), SingularMatrixError);
  CHECK_THROWS_AS(returns_system(a2, {0}, 0), InputError);
  CHECK_THROWS_AS(returns_system(a2, {0, 0}, 2), InputError);
}

TEST_CASE("returns system without returns gives curvette orders") {
  for (const auto& c : all_clusters(6)) {
    auto m = intersection_matrix(simulate(c));
    auto expected = oracle::negative_inverse_from_proximity(proximity_matrix(c));
    for (std::size_t s = 0; s < c.size(); ++s) {
      auto r = returns_system(m, std::vector<long>(c.size(), 0), s);
      REQUIRE(r.a == expected.row(s));
      for (const auto& x : r.a) REQUIRE(x > 0);
      REQUIRE_FALSE(r.verdict.ruled_out());
    }
  }
}

TEST_CASE("valuative verdicts match compare and carry checkable witnesses") {
  std::vector<Tangent> tangents = {Tangent::finite(0), Tangent::finite(1), Tangent::infinity()};
  std::size_t ruled = 0;
  for (const auto& c : all_clusters_with_tangents(5, tangents)) {
    for (PointIndex e = 0; e < c.size(); ++e)
      for (PointIndex f = 0; f < c.size(); ++f) {
        if (e == f) continue;
        auto v = valuative_obstruction(c, e, f);
        auto cmp = compare(c, e, f);
        REQUIRE(!v.ruled_out() == (cmp == Comparison::LessEq || cmp == Comparison::Equal));
        if (!v.ruled_out()) continue;
        ++ruled;
        REQUIRE(v.curvette);
        REQUIRE(v.curvette->polynomial);
        const auto& g = *v.curvette->polynomial;
        REQUIRE(ord_poly(c, g, f) < ord_poly(c, g, e));
      }
  }
  CHECK(ruled > 100);
}

TEST_CASE("adjacency tables") {
  auto sat = adjacency_table(satellite3());
  for (PointIndex e = 0; e < 3; ++e)
    for (PointIndex f = 0; f < 3; ++f) {
      if (e == f) {
        CHECK_FALSE(sat[e][f]);
        continue;
      }
      CAPTURE(e);
      CAPTURE(f);
      CHECK(sat[e][f]->ruled_out() == (f < e));
    }
  auto two = adjacency_table(two_directions());
  CHECK(two[1][2]->ruled_out());
  CHECK(two[2][1]->ruled_out());
  CHECK_FALSE(two[0][1]->ruled_out());

  auto one = adjacency_table(single());
  REQUIRE(one.size() == 1);
  CHECK_FALSE(one[0][0]);
}

TEST_CASE("not-ruled-out relation is transitive") {
  for (const auto& c : all_clusters(5)) {
    auto t = adjacency_table(c);
    const std::size_t n = c.size();
    auto open = [&](std::size_t a, std::size_t b) { return a == b || !t[a][b]->ruled_out(); };
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t d = 0; d < n; ++d)
          if (open(a, b) && open(b, d)) REQUIRE(open(a, d));
  }
}

TEST_CASE("knowledge base store and lookup") {
  auto path = temp_file("kb");
  auto key = canonical_key(pair_graph(chain2(), 0, 1));
  {
    KnowledgeBase kb(path);
    CHECK(kb.size() == 0);
    CHECK_FALSE(kb.lookup(key));
    kb.store(key, ObstructionStatus::NotRuledOut, "chain2 0 1");
    CHECK(kb.store(key, ObstructionStatus::NotRuledOut, "again").provenance == "chain2 0 1");
    CHECK_THROWS_AS(kb.store(key, ObstructionStatus::RuledOut, "x"), KbConflict);
  }
  KnowledgeBase reread(path);
  CHECK(reread.size() == 1);

  // The same pair in a different cluster (other tangent, extra points) shares the key.
  BlowupCluster bigger({root(), free_on(0, 3L), free_on(0, 1L), free_on(1, 2L)});
  auto hit = reread.lookup(canonical_key(pair_graph(bigger, 0, 1)));
  REQUIRE(hit);
  CHECK(hit->verdict == ObstructionStatus::NotRuledOut);

  std::mt19937_64 rng(3);
  auto relabeled = oracle::relabel(pair_graph(chain2(), 0, 1), rng);
  CHECK(reread.lookup(canonical_key(relabeled)));
  CHECK_FALSE(reread.lookup(canonical_key(pair_graph(chain2(), 1, 0))));
  std::filesystem::remove(path);
}

TEST_CASE("knowledge base rejects corrupt files") {
  auto path = temp_file("kb_bad");
  {
    std::ofstream out(path);
    out << R"({"schema":1,"key":"k","verdict":"RULED_OUT","provenance":"p"})" << "\n";
    out << "{not json\n";
  }
  CHECK_THROWS_WITH_AS(KnowledgeBase{path}, doctest::Contains(":2:"), InputError);

  {
    std::ofstream out(path);
    out << R"({"schema":1,"key":"k","verdict":"RULED_OUT","provenance":"p"})" << "\n";
    out << R"({"schema":1,"key":"k","verdict":"NOT_RULED_OUT","provenance":"q"})" << "\n";
  }
  CHECK_THROWS_AS(KnowledgeBase{path}, KbConflict);

  {
    std::ofstream out(path);
    out << R"({"schema":2,"key":"k","verdict":"RULED_OUT","provenance":"p"})" << "\n";
  }
  CHECK_THROWS_AS(KnowledgeBase{path}, InputError);

  {
    std::ofstream out(path);
    out << R"({"schema":1,"key":"k","verdict":"MAYBE","provenance":"p"})" << "\n";
  }
  CHECK_THROWS_AS(KnowledgeBase{path}, InputError);
  std::filesystem::remove(path);
}
