#include <doctest.h>

#include <algorithm>
#include <random>

#include "opdiv/dynamics.hpp"
#include "opdiv/error.hpp"
#include "opdiv/resistance.hpp"
#include "opdiv/tree_families.hpp"
#include "opdiv/verify.hpp"
#include "oracles.hpp"

using namespace opdiv;

namespace {

// Component id per follower row in the graph with the leaders deleted.
std::vector<int> follower_components(const Graph& g, const LeaderConfig& lc) {
  const auto& f = lc.followers();
  std::vector<int> comp(f.size(), -1);
  auto row = [&](Node v) { return std::find(f.begin(), f.end(), v) - f.begin(); };
  int label = 0;
  for (std::size_t s = 0; s < f.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Node> stack{f[s]};
    comp[s] = label;
    while (!stack.empty()) {
      Node v = stack.back();
      stack.pop_back();
      for (Node w : g.neighbors(v)) {
        if (lc.is_leader(w) || comp[row(w)] >= 0) continue;
        comp[row(w)] = label;
        stack.push_back(w);
      }
    }
    ++label;
  }
  return comp;
}

} // namespace

TEST_CASE("grounded inverse on small paths") {
  Graph p3 = path_graph(3);
  GroundedInverse g3 = grounded_inverse(p3, LeaderConfig::single(p3, 1, 3));
  CHECK(g3.inv(0, 0) == doctest::Approx(0.5));
  CHECK(leader_set_resistance(g3, 2) == doctest::Approx(0.5));

  Graph p4 = path_graph(4);
  GroundedInverse g4 = grounded_inverse(p4, LeaderConfig::single(p4, 1, 4));
  CHECK(g4.inv(0, 0) == doctest::Approx(2.0 / 3.0));
  CHECK(g4.inv(0, 1) == doctest::Approx(1.0 / 3.0));
  CHECK(g4.inv(1, 0) == doctest::Approx(1.0 / 3.0));
  CHECK(g4.inv(1, 1) == doctest::Approx(2.0 / 3.0));
  CHECK(pairwise_resistance(g4, 2, 3) == doctest::Approx(2.0 / 3.0));
  CHECK(pairwise_resistance(g4, 3, 2) == doctest::Approx(2.0 / 3.0));
  CHECK(pairwise_resistance(g4, 2, 2) == 0.0);
  CHECK(leader_set_resistance(g4, 2) == doctest::Approx(2.0 / 3.0));

  CHECK_THROWS_AS(pairwise_resistance(g4, 1, 2), Error);
  CHECK_THROWS_AS(leader_set_resistance(g4, 4), Error);
}

TEST_CASE("a leaf hanging off a leader sees unit resistance to ground") {
  // 1 - 2 - 3 with 4 attached to leader 2 only.
  Graph g(4, {{1, 2}, {2, 3}, {2, 4}});
  GroundedInverse gi = grounded_inverse(g, LeaderConfig::single(g, 1, 2));
  CHECK(leader_set_resistance(gi, 4) == doctest::Approx(1.0));
  CHECK(leader_set_resistance(gi, 3) == doctest::Approx(1.0));
}

TEST_CASE("grounded inverse matches an independent Gauss-Jordan inverse") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4 + trial % 10;
    Graph g = trial % 5 == 0 ? cycle_graph(n) : random_tree(n, rng);
    std::uniform_int_distribution<Node> pick(1, n);
    Node a = pick(rng), b = pick(rng);
    while (b == a) b = pick(rng);
    LeaderConfig lc = LeaderConfig::single(g, a, b);
    GroundedInverse gi = grounded_inverse(g, lc);
    LaplacianBlocks blocks = laplacian_blocks(g, lc);

    const auto nf = static_cast<std::size_t>(blocks.Lff.rows());
    std::vector<std::vector<double>> dense(nf, std::vector<double>(nf));
    for (std::size_t i = 0; i < nf; ++i) {
      for (std::size_t j = 0; j < nf; ++j) dense[i][j] = blocks.Lff(i, j);
    }
    auto ref = oracle::gauss_jordan_inverse(dense);
    Eigen::MatrixXd identity = gi.inv * blocks.Lff;
    auto component = follower_components(g, lc);
    for (std::size_t i = 0; i < nf; ++i) {
      for (std::size_t j = 0; j < nf; ++j) {
        CHECK(std::abs(gi.inv(i, j) - ref[i][j]) < 1e-10);
        CHECK(std::abs(identity(i, j) - (i == j ? 1.0 : 0.0)) < 1e-10);
        CHECK(gi.inv(i, j) == gi.inv(j, i));
        // Positive within a follower component, zero across components.
        if (component[i] == component[j]) {
          CHECK(gi.inv(i, j) > 0.0);
        } else {
          CHECK(std::abs(gi.inv(i, j)) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("cutpoint additivity through a tree vertex") {
  // Spine 1-2-3-4-5 with a branch 3-6-7; leaders at the spine ends.
  Graph g(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}, {6, 7}});
  GroundedInverse gi = grounded_inverse(g, LeaderConfig::single(g, 1, 5));
  // Node 3 separates the branch {6,7} from the rest in the grounded network.
  CHECK(pairwise_resistance(gi, 7, 2) ==
        doctest::Approx(pairwise_resistance(gi, 7, 3) + pairwise_resistance(gi, 3, 2)));
  CHECK(pairwise_resistance(gi, 7, 3) == doctest::Approx(2.0));
  CHECK(leader_set_resistance(gi, 7) ==
        doctest::Approx(pairwise_resistance(gi, 7, 3) + leader_set_resistance(gi, 3)));
}

TEST_CASE("resistance lemmas hold on Y-trees and random trees with leaf leaders") {
  for (int a0 = 1; a0 <= 4; ++a0) {
    for (int a1 = 1; a1 <= 4; ++a1) {
      for (int a2 = 1; a2 <= 4; ++a2) {
        Graph g = y_tree(a0, a1, a2);
        YTreeShape s = y_tree_shape(a0, a1, a2);
        for (auto [l0, l1] : {std::pair{s.leaf0, s.leaf1}, std::pair{s.leaf0, s.leaf2},
                              std::pair{s.leaf1, s.leaf2}}) {
          LemmaOutcome o = check_resistance_lemmas(g, l0, l1);
          CHECK(o.checks > 0);
          CHECK_MESSAGE(o.failures.empty(), (o.failures.empty() ? "" : o.failures.front()));
        }
      }
    }
  }

  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    Graph t = random_tree(4 + trial % 9, rng);
    auto tips = leaves(t);
    LemmaOutcome o = check_resistance_lemmas(t, tips.front(), tips.back());
    CHECK_MESSAGE(o.failures.empty(), (o.failures.empty() ? "" : o.failures.front()));
  }
}

TEST_CASE("branch opinions on the eleven-node tree") {
  Graph g = oracle::eleven_node_tree();
  OpinionVector x = steady_state(g, LeaderConfig::single(g, 1, 11));
  for (Node u : {3, 4, 5, 6}) CHECK(x.at(u) == doctest::Approx(x.at(2)));
  for (Node u : {8, 9}) CHECK(x.at(u) == doctest::Approx(x.at(7)));
  CHECK(x.at(2) == doctest::Approx(0.25));
  CHECK(x.at(7) == doctest::Approx(0.5));
  CHECK(x.at(10) == doctest::Approx(0.75));
}
