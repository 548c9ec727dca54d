#include <doctest.h>

#include <random>

#include "apflood/engine.hpp"
#include "apflood/metrics.hpp"
#include "apflood/topology.hpp"
#include "test_support.hpp"

using namespace apflood;
using namespace apflood::testing;

TEST_CASE("message bounds") {
  CHECK(message_bound(11, 2.6, 0.5) == doctest::Approx(35.2));
  CHECK(message_bound(22, 3.6, 0.9) == doctest::Approx(572.0));
  CHECK(message_bound(7, 3.0, 0.0) == doctest::Approx(14.0));
  CHECK(message_bound_corrected(3, 2.0, 0.0) == doctest::Approx(5.0));
  CHECK(message_bound_corrected(11, 2.6, 0.5) == doctest::Approx(37.8));
  CHECK(message_bound_corrected(22, 3.6, 0.9) == doctest::Approx(575.6));
  CHECK_THROWS_AS(message_bound(11, 2.6, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(message_bound_corrected(11, 2.6, 1.2), std::invalid_argument);
}

TEST_CASE("path_quality on the triangle after a beta-0 round") {
  const Graph g = triangle();
  const auto run = run_full_round(g, 0.0, 1);
  const auto q = evaluate_round(g, run, 0.0);
  CHECK(q.pc == 1.0);
  CHECK(q.po == 1.0);
  CHECK(q.sc == 1.0);
  CHECK(q.so == 1.0);
  CHECK_FALSE(q.mean_suboptimal_node_overlap);
  CHECK(q.n_m == 4.0);
  CHECK(q.bound_paper == doctest::Approx(3.0));
  CHECK(q.bound_corrected == doctest::Approx(5.0));
  CHECK(q.n_m > q.bound_paper);  // the uncorrected bound misses the source's own sends
  CHECK(q.n_m <= q.bound_corrected);
}

TEST_CASE("path_quality counting") {
  const Graph g = triangle();
  auto run = run_full_round(g, 0.0, 1);
  SUBCASE("one missing secondary of six") {
    run.route_tables[2].route(0).secondary.reset();
    const auto q = path_quality(g, run.route_tables);
    CHECK(q.pairs == 6);
    CHECK(q.sc == doctest::Approx(5.0 / 6.0));
    CHECK(q.so == doctest::Approx(5.0 / 6.0));
    CHECK(q.pc == 1.0);
  }
  SUBCASE("missing primary") {
    run.route_tables[1].route(2) = RouteEntry{};
    const auto q = path_quality(g, run.route_tables);
    CHECK(q.pc == doctest::Approx(5.0 / 6.0));
    CHECK(q.po == doctest::Approx(5.0 / 6.0));
  }
  SUBCASE("invalid stored path is rejected") {
    run.route_tables[1].route(2).secondary = Path{1, 1, 2};
    CHECK_THROWS_AS(path_quality(g, run.route_tables), ValidationError);
  }
}

TEST_CASE("secondary one hop longer than S' counts as suboptimal") {
  const Graph g(5, {{0, 1}, {1, 2}, {0, 3}, {3, 2}, {0, 4}, {4, 3}});
  auto tables = initial_states(g);
  tables[0].route(2) = RouteEntry{Path{0, 1, 2}, Path{0, 4, 3, 2}};
  auto q = path_quality(g, tables);
  CHECK(q.suboptimal_secondaries == 1);
  REQUIRE(q.mean_suboptimal_node_overlap);
  CHECK(*q.mean_suboptimal_node_overlap == 0.0);

  tables[0].route(2).secondary = Path{0, 3, 2};
  q = path_quality(g, tables);
  CHECK(q.suboptimal_secondaries == 0);
  CHECK(q.so == doctest::Approx(1.0 / 20.0));
}

TEST_CASE("overlap statistic counts shared intermediate nodes of suboptimal secondaries") {
  const Graph g(8, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 2}, {2, 5}, {5, 3}, {0, 6}, {6, 7}, {7, 3}});
  auto tables = initial_states(g);
  // Link-disjoint but crosses node 2; S' is 0-6-7-3.
  tables[0].route(3) = RouteEntry{Path{0, 1, 2, 3}, Path{0, 4, 2, 5, 3}};
  const auto q = path_quality(g, tables);
  CHECK(q.suboptimal_secondaries == 1);
  REQUIRE(q.mean_suboptimal_node_overlap);
  CHECK(*q.mean_suboptimal_node_overlap == 1.0);
}

TEST_CASE("pairs without a distinct oracle secondary leave the so denominator") {
  const Graph g = path3();
  const auto run = run_full_round(g, 0.9, 4);
  const auto q = path_quality(g, run.route_tables);
  CHECK(q.pairs_without_distinct_secondary == 6);
  CHECK(q.pc == 1.0);
  CHECK(q.sc == 0.0);
  CHECK(q.so == 0.0);
}

TEST_CASE("refresh_count") {
  std::vector<NodeState> tables{NodeState(0, 2), NodeState(1, 2)};
  tables[0].route(1) = RouteEntry{Path{0, 5, 1}, Path{0, 6, 7, 1}};
  CHECK(refresh_count(1.0, 0.05, tables) == 100);
  CHECK(refresh_count(0.05, 0.05, tables) == 5);
  CHECK(refresh_count(2.0, 0.05, tables) == 2 * refresh_count(1.0, 0.05, tables));
  tables[0].route(1).secondary.reset();
  CHECK(refresh_count(1.0, 0.05, tables) == 40);
  CHECK_THROWS_AS(refresh_count(1.0, 0.0, tables), std::invalid_argument);
  CHECK_THROWS_AS(refresh_count(1.0, -1.0, tables), std::invalid_argument);
}

TEST_CASE("overhead_report") {
  const auto run = run_full_round(triangle(), 0.0, 1);
  const auto r = overhead_report(1.0, 1.0, 0.05, run);
  CHECK(r.n_adv == 12);
  CHECK(r.n_refresh == 20 * 6 * 3);
  CHECK(r.adv_share == doctest::Approx(12.0 / 372.0));
  CHECK_FALSE(r.t_adv_out_of_range);
  CHECK(overhead_report(1.0, 0.25, 0.05, run).n_adv == 2 * overhead_report(1.0, 0.5, 0.05, run).n_adv);
  CHECK(overhead_report(1.0, 0.3, 0.05, run).n_adv == 36);  // floor(1 / 0.3) = 3
  CHECK(overhead_report(1.0, 2.0, 0.05, run).t_adv_out_of_range);
  CHECK(overhead_report(1.0, 0.01, 0.05, run).t_adv_out_of_range);
}

TEST_CASE("measured n_m stays under the corrected bound; pc = po = 1") {
  std::mt19937_64 eng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_connected(6 + trial % 10, 0.35, eng);
    for (int b = 0; b < 10; ++b) {
      const double beta = 0.1 * b;
      const auto run = run_full_round(g, beta, static_cast<std::uint64_t>(trial * 10 + b));
      const auto q = evaluate_round(g, run, beta);
      CHECK(q.n_m <= q.bound_corrected);
      CHECK(q.pc == 1.0);
      CHECK(q.po == 1.0);
      CHECK(q.so <= 1.0);
      CHECK(q.sc <= 1.0);
    }
  }
}
