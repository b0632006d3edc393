#ifndef OPDIV_RESISTANCE_HPP_
#define OPDIV_RESISTANCE_HPP_

#include <vector>

#include <Eigen/Dense>

#include "opdiv/graph.hpp"

namespace opdiv {

/// Inverse of the grounded Laplacian Lff: every leader is tied to ground.
struct GroundedInverse {
  Eigen::MatrixXd inv;
  std::vector<Node> followers;
  std::vector<int> row_of;  // index v-1: row, or -1 for leaders

  std::size_t row(Node v) const;  // throws NotAFollower
};

GroundedInverse grounded_inverse(const Graph& g, const LeaderConfig& lc);

// inv(u,u) + inv(v,v) - 2 inv(u,v) in the grounded network.
double pairwise_resistance(const GroundedInverse& gi, Node u, Node v);

// Resistance between u and the (grounded) leader set: inv(u,u).
double leader_set_resistance(const GroundedInverse& gi, Node u);

} // namespace opdiv

#endif // OPDIV_RESISTANCE_HPP_
