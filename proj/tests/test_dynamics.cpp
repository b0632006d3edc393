#include <doctest.h>

#include <cmath>
#include <random>

#include "opdiv/dynamics.hpp"
#include "opdiv/error.hpp"
#include "opdiv/tree_families.hpp"
#include "oracles.hpp"

using namespace opdiv;

namespace {

double max_abs_diff(const OpinionVector& a, const OpinionVector& b) {
  REQUIRE(a.nodes == b.nodes);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
  return worst;
}

} // namespace

TEST_CASE("steady state on the worked instances") {
  Graph p5 = path_graph(5);
  OpinionVector x = steady_state(p5, LeaderConfig::single(p5, 1, 5));
  CHECK(x.nodes == std::vector<Node>{2, 3, 4});
  CHECK(x.at(2) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(x.at(3) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(x.at(4) == doctest::Approx(0.75).epsilon(1e-12));

  Graph p3 = path_graph(3);
  CHECK(steady_state(p3, LeaderConfig::single(p3, 1, 3)).at(2) == doctest::Approx(0.5));

  // l1 = 2 separates every follower from l0 = 1.
  Graph tree11 = oracle::eleven_node_tree();
  OpinionVector all_one = steady_state(tree11, LeaderConfig::single(tree11, 1, 2));
  CHECK(all_one.size() == 9);
  for (double v : all_one.values) CHECK(std::abs(v - 1.0) < 1e-12);

  CHECK_THROWS_AS(x.at(1), Error);
}

TEST_CASE("steady state agrees with harmonic relaxation") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 3 + trial % 25;
    Graph g = trial % 4 == 0 ? cycle_graph(n) : random_tree(n, rng);
    std::uniform_int_distribution<Node> pick(1, n);
    Node a = pick(rng), b = pick(rng);
    while (b == a) b = pick(rng);
    OpinionVector x = steady_state(g, LeaderConfig::single(g, a, b));
    auto ref = oracle::harmonic_relaxation(g, {a}, {b});
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(std::abs(x.values[i] - ref[x.nodes[i]]) < 1e-9);
  }
}

TEST_CASE("multi-leader sets solve too") {
  Graph p6 = path_graph(6);
  OpinionVector x = steady_state(p6, LeaderConfig(p6, {1, 6}, {3}));
  auto ref = oracle::harmonic_relaxation(p6, {1, 6}, {3});
  CHECK(x.at(2) == doctest::Approx(0.5));
  CHECK(x.at(4) == doctest::Approx(ref[4]));
  CHECK(x.at(4) == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("steady state stays in [0,1] on random families, n <= 50") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 3 + static_cast<int>(rng() % 48);
    Graph g = trial % 3 == 0 ? random_tree(n, rng) : (trial % 3 == 1 ? cycle_graph(n) : path_graph(n));
    std::uniform_int_distribution<Node> pick(1, n);
    Node a = pick(rng), b = pick(rng);
    while (b == a) b = pick(rng);
    for (double v : steady_state(g, LeaderConfig::single(g, a, b)).values) {
      CHECK(v >= -1e-12);
      CHECK(v <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("path closed form") {
  OpinionVector x = path_closed_form(5, 1, 5);
  CHECK(x.values == std::vector<double>{0.25, 0.5, 0.75});

  OpinionVector y = path_closed_form(6, 2, 5);
  CHECK(y.nodes == std::vector<Node>{1, 3, 4, 6});
  CHECK(y.at(1) == 0.0);
  CHECK(y.at(6) == 1.0);
  CHECK(y.at(3) == doctest::Approx(1.0 / 3.0));
  CHECK(y.at(4) == doctest::Approx(2.0 / 3.0));
  Graph p6 = path_graph(6);
  CHECK(max_abs_diff(y, steady_state(p6, LeaderConfig::single(p6, 2, 5))) < 1e-12);

  CHECK(path_closed_form(3, 1, 3).at(2) == 0.5);

  CHECK_THROWS_AS(path_closed_form(5, 3, 3), Error);
  try {
    path_closed_form(5, 4, 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LeaderOrderViolation);
  }
}

TEST_CASE("closed form equals the solve on every path n <= 30") {
  double worst = 0.0;
  for (int n = 3; n <= 30; ++n) {
    Graph g = path_graph(n);
    for (Node k = 1; k <= n; ++k) {
      for (Node j = k + 1; j <= n; ++j) {
        OpinionVector solved = steady_state(g, LeaderConfig::single(g, k, j));
        worst = std::max(worst, max_abs_diff(solved, path_closed_form(n, k, j)));
        // strictly increasing between the leaders
        for (Node v = k + 1; v + 1 < j; ++v) CHECK(solved.at(v) < solved.at(v + 1));
      }
    }
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("explicit Euler converges to the steady state") {
  SUBCASE("path(3) from zero") {
    Graph p3 = path_graph(3);
    LeaderConfig lc = LeaderConfig::single(p3, 1, 3);
    std::vector<double> x0{0.0, 0.0, 0.0};
    double horizon = convergence_horizon(p3, lc, 1e-7);
    Trajectory t = simulate(p3, lc, x0, default_euler_step(p3), horizon);
    CHECK(t.states.front()[0] == 0.0);
    CHECK(t.times.back() == doctest::Approx(horizon));
    CHECK(std::abs(t.final_state().at(2) - 0.5) < 1e-6);
  }
  SUBCASE("fixed point stays put") {
    Graph g = oracle::eleven_node_tree();
    LeaderConfig lc = LeaderConfig::single(g, 1, 11);
    OpinionVector fixed = steady_state(g, lc);
    std::vector<double> x0(11, 0.0);
    for (std::size_t i = 0; i < fixed.size(); ++i) x0[fixed.nodes[i] - 1] = fixed.values[i];
    Trajectory t = simulate(g, lc, x0, default_euler_step(g), 50.0);
    for (const auto& state : t.states) {
      for (std::size_t i = 0; i < state.size(); ++i) CHECK(std::abs(state[i] - fixed.values[i]) < 1e-12);
    }
  }
  SUBCASE("eleven-node tree from an arbitrary start") {
    Graph g = oracle::eleven_node_tree();
    LeaderConfig lc = LeaderConfig::single(g, 1, 11);
    std::vector<double> x0{0.3, 0.9, 0.1, 0.0, 1.0, 0.4, 0.6, 0.2, 0.8, 0.5, 0.7};
    Trajectory t = simulate(g, lc, x0, default_euler_step(g), convergence_horizon(g, lc, 1e-7));
    CHECK(max_abs_diff(t.final_state(), steady_state(g, lc)) <= 1e-6);
    for (const auto& state : t.states) {
      for (double v : state) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
      }
    }
  }
}

TEST_CASE("simulate rejects bad inputs") {
  Graph p4 = path_graph(4);
  LeaderConfig lc = LeaderConfig::single(p4, 1, 4);
  std::vector<double> x0{0.0, 0.5, 0.5, 1.0};
  double bound = euler_stability_bound(p4, lc);
  // Lff = [[2,-1],[-1,2]] has eigenvalues 1 and 3.
  CHECK(bound == doctest::Approx(2.0 / 3.0));
  CHECK(default_euler_step(p4) < bound);

  auto code = [&](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code([&] { simulate(p4, lc, x0, 0.7, 1.0); }) == ErrorCode::UnstableStep);
  std::vector<double> bad{0.0, 1.5, 0.5, 1.0};
  CHECK(code([&] { simulate(p4, lc, bad, 0.1, 1.0); }) == ErrorCode::OpinionOutOfRange);
  // Leader entries are ignored, even out of range.
  std::vector<double> leaders_ignored{7.0, 0.5, 0.5, -3.0};
  CHECK_NOTHROW(simulate(p4, lc, leaders_ignored, 0.1, 1.0));
  CHECK_THROWS_AS(simulate(p4, lc, x0, -0.1, 1.0), Error);
}

TEST_CASE("opinion CSV") {
  Graph p5 = path_graph(5);
  CHECK(to_csv(steady_state(p5, LeaderConfig::single(p5, 1, 5))) ==
        "node,opinion\n2,0.25\n3,0.5\n4,0.75\n");
  CHECK(to_csv(path_closed_form(4, 1, 4)) == "node,opinion\n2,0.333333333333\n3,0.666666666667\n");
}
