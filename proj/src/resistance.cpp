#include "opdiv/resistance.hpp"

#include <string>

#include "opdiv/error.hpp"

namespace opdiv {

std::size_t GroundedInverse::row(Node v) const {
  if (v < 1 || static_cast<std::size_t>(v) > row_of.size() || row_of[v - 1] < 0) {
    throw Error(ErrorCode::NotAFollower, "node " + std::to_string(v) + " is not a follower");
  }
  return static_cast<std::size_t>(row_of[v - 1]);
}

GroundedInverse grounded_inverse(const Graph& g, const LeaderConfig& lc) {
  LaplacianBlocks b = laplacian_blocks(g, lc);
  Eigen::LLT<Eigen::MatrixXd> llt(b.Lff);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::SolveFailure, "grounded Laplacian is not positive definite");
  }
  const auto nf = b.Lff.rows();
  Eigen::MatrixXd inv = llt.solve(Eigen::MatrixXd::Identity(nf, nf));
  // Symmetrise away the last-bit asymmetry of the two triangular solves.
  inv = 0.5 * (inv + inv.transpose()).eval();
  return {std::move(inv), std::move(b.followers), std::move(b.row_of)};
}

double pairwise_resistance(const GroundedInverse& gi, Node u, Node v) {
  auto i = static_cast<Eigen::Index>(gi.row(u));
  auto j = static_cast<Eigen::Index>(gi.row(v));
  if (i == j) return 0.0;
  return gi.inv(i, i) + gi.inv(j, j) - 2.0 * gi.inv(i, j);
}

double leader_set_resistance(const GroundedInverse& gi, Node u) {
  auto i = static_cast<Eigen::Index>(gi.row(u));
  return gi.inv(i, i);
}

} // namespace opdiv
