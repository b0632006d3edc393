#ifndef OPDIV_GRAPH_HPP_
#define OPDIV_GRAPH_HPP_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace opdiv {

// Node labels are 1-based on every interface.
using Node = int;
using Edge = std::pair<Node, Node>;

/**
 * Connected, undirected, unweighted simple graph over nodes 1..n.
 *
 * Immutable once built. Edges keep their input order and orientation so the
 * edge-list writer reproduces them verbatim.
 */
class Graph {
public:
  // Throws Error{SelfLoop, DuplicateEdge, EndpointOutOfRange, DisconnectedGraph, TooFewNodes}.
  Graph(int n, std::vector<Edge> edges);

  int node_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  const std::vector<Node>& neighbors(Node v) const { return adjacency_.at(v - 1); }
  int degree(Node v) const { return static_cast<int>(neighbors(v).size()); }
  int max_degree() const noexcept;
  bool has_edge(Node u, Node v) const;
  bool contains(Node v) const noexcept { return v >= 1 && v <= n_; }

  bool is_tree() const noexcept { return edges_.size() + 1 == static_cast<std::size_t>(n_); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Node>> adjacency_;  // sorted ascending
};

inline Graph build_graph(int n, std::vector<Edge> edges) { return Graph(n, std::move(edges)); }

// Canonical families. Paths and cycles are numbered 1..n in order. A Y-tree
// numbers arm0 from its leaf to the centre, then arm1 and arm2 outward from
// the centre; arm lengths count nodes excluding the centre.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph y_tree(int arm0, int arm1, int arm2);

struct YTreeShape {
  Node center;
  Node leaf0, leaf1, leaf2;
};
YTreeShape y_tree_shape(int arm0, int arm1, int arm2);

/// Disjoint, non-empty 0-leader and 1-leader sets leaving at least one follower.
class LeaderConfig {
public:
  LeaderConfig(const Graph& g, std::vector<Node> zeros, std::vector<Node> ones);
  static LeaderConfig single(const Graph& g, Node l0, Node l1) { return {g, {l0}, {l1}}; }

  const std::vector<Node>& zeros() const noexcept { return zeros_; }
  const std::vector<Node>& ones() const noexcept { return ones_; }
  const std::vector<Node>& followers() const noexcept { return followers_; }
  bool is_leader(Node v) const noexcept;
  // 0 or 1 for leaders; unspecified for followers.
  double leader_value(Node v) const noexcept;

private:
  std::vector<Node> zeros_, ones_, followers_;
  std::vector<char> role_;  // index v-1: 0 follower, 1 zero-leader, 2 one-leader
};

/**
 * Follower/leader blocks of the graph Laplacian L = D - A.
 *
 * Rows follow `followers` (ascending label); Lfl columns follow `leaders`
 * (ascending label). x_l holds the pinned leader opinions in column order.
 */
struct LaplacianBlocks {
  Eigen::MatrixXd Lff;
  Eigen::MatrixXd Lfl;
  Eigen::VectorXd x_l;
  std::vector<Node> followers;
  std::vector<Node> leaders;
  std::vector<int> row_of;  // index v-1: follower row, or -1 for leaders

  std::size_t row(Node v) const;  // throws NotAFollower
};

LaplacianBlocks laplacian_blocks(const Graph& g, const LeaderConfig& lc);

// Unique path between a and b in a tree, inclusive. Throws NotATree.
std::vector<Node> tree_path(const Graph& g, Node a, Node b);

/**
 * Tree follower partition for a single leader pair:
 *   behind_l0 (P1): followers whose path to l1 passes through l0,
 *   between   (P2): the rest,
 *   behind_l1 (P3): followers whose path to l0 passes through l1.
 * Each set is sorted ascending.
 */
struct FollowerPartition {
  std::vector<Node> behind_l0;
  std::vector<Node> between;
  std::vector<Node> behind_l1;
};

FollowerPartition partition_followers(const Graph& g, Node l0, Node l1);

// Node on path(l0, l1) closest to v; v itself when v lies on the path.
Node projection_onto_path(const Graph& g, Node v, Node l0, Node l1);

} // namespace opdiv

#endif // OPDIV_GRAPH_HPP_
