#include "opdiv/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "opdiv/error.hpp"

namespace opdiv {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::EndpointOutOfRange: return "EndpointOutOfRange";
    case ErrorCode::InvalidLeaders: return "InvalidLeaders";
    case ErrorCode::TooFewNodes: return "TooFewNodes";
    case ErrorCode::ArmTooShort: return "ArmTooShort";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::NotAYTree: return "NotAYTree";
    case ErrorCode::LeaderNotLeaf: return "LeaderNotLeaf";
    case ErrorCode::NotAFollower: return "NotAFollower";
    case ErrorCode::SolveFailure: return "SolveFailure";
    case ErrorCode::LeaderOrderViolation: return "LeaderOrderViolation";
    case ErrorCode::UnstableStep: return "UnstableStep";
    case ErrorCode::OpinionOutOfRange: return "OpinionOutOfRange";
    case ErrorCode::TooFewFollowers: return "TooFewFollowers";
    case ErrorCode::UnsupportedBinCount: return "UnsupportedBinCount";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

std::string edge_str(const Edge& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

// Parent pointers of a BFS tree rooted at `root`; parent[root-1] == 0.
std::vector<Node> bfs_parents(const Graph& g, Node root) {
  std::vector<Node> parent(g.node_count(), -1);
  parent[root - 1] = 0;
  std::queue<Node> frontier;
  frontier.push(root);
  while (!frontier.empty()) {
    Node v = frontier.front();
    frontier.pop();
    for (Node w : g.neighbors(v)) {
      if (parent[w - 1] == -1) {
        parent[w - 1] = v;
        frontier.push(w);
      }
    }
  }
  return parent;
}

void require_tree(const Graph& g) {
  if (!g.is_tree()) {
    throw Error(ErrorCode::NotATree, "graph has " + std::to_string(g.edge_count()) +
                                         " edges on " + std::to_string(g.node_count()) +
                                         " nodes; a tree needs n-1");
  }
}

void require_node(const Graph& g, Node v) {
  if (!g.contains(v)) {
    throw Error(ErrorCode::EndpointOutOfRange,
                "node " + std::to_string(v) + " outside 1.." + std::to_string(g.node_count()));
  }
}

} // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 1) throw Error(ErrorCode::TooFewNodes, "graph needs at least one node");
  adjacency_.resize(n);
  std::set<Edge> seen;
  for (const Edge& e : edges_) {
    auto [u, v] = e;
    if (u < 1 || u > n || v < 1 || v > n) {
      throw Error(ErrorCode::EndpointOutOfRange,
                  "edge " + edge_str(e) + " has an endpoint outside 1.." + std::to_string(n));
    }
    if (u == v) throw Error(ErrorCode::SelfLoop, "edge " + edge_str(e));
    if (!seen.insert(std::minmax(u, v)).second) {
      throw Error(ErrorCode::DuplicateEdge, "edge " + edge_str(e));
    }
    adjacency_[u - 1].push_back(v);
    adjacency_[v - 1].push_back(u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());

  auto parent = bfs_parents(*this, 1);
  auto unreached = std::find(parent.begin(), parent.end(), -1);
  if (unreached != parent.end()) {
    throw Error(ErrorCode::DisconnectedGraph,
                "node " + std::to_string(unreached - parent.begin() + 1) +
                    " is not reachable from node 1");
  }
}

int Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& nbrs : adjacency_) best = std::max(best, nbrs.size());
  return static_cast<int>(best);
}

bool Graph::has_edge(Node u, Node v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& nbrs = adjacency_[u - 1];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Graph path_graph(int n) {
  if (n < 3) throw Error(ErrorCode::TooFewNodes, "path needs n >= 3, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (Node v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorCode::TooFewNodes, "cycle needs n >= 3, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (Node v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(n, 1);
  return Graph(n, std::move(edges));
}

YTreeShape y_tree_shape(int arm0, int arm1, int arm2) {
  if (arm0 < 1 || arm1 < 1 || arm2 < 1) {
    throw Error(ErrorCode::ArmTooShort, "every y-tree arm needs at least one node");
  }
  Node center = arm0 + 1;
  return {center, 1, center + arm1, center + arm1 + arm2};
}

Graph y_tree(int arm0, int arm1, int arm2) {
  YTreeShape shape = y_tree_shape(arm0, arm1, arm2);
  std::vector<Edge> edges;
  for (Node v = 1; v < shape.center; ++v) edges.emplace_back(v, v + 1);
  Node next = shape.center + 1;
  for (int len : {arm1, arm2}) {
    Node prev = shape.center;
    for (int i = 0; i < len; ++i, ++next) {
      edges.emplace_back(prev, next);
      prev = next;
    }
  }
  return Graph(shape.leaf2, std::move(edges));
}

LeaderConfig::LeaderConfig(const Graph& g, std::vector<Node> zeros, std::vector<Node> ones)
    : zeros_(std::move(zeros)), ones_(std::move(ones)), role_(g.node_count(), 0) {
  if (zeros_.empty() || ones_.empty()) {
    throw Error(ErrorCode::InvalidLeaders, "both leader sets must be non-empty");
  }
  auto mark = [&](const std::vector<Node>& set, char role) {
    for (Node v : set) {
      require_node(g, v);
      if (role_[v - 1] != 0) {
        throw Error(ErrorCode::InvalidLeaders,
                    "node " + std::to_string(v) + " listed twice among the leaders");
      }
      role_[v - 1] = role;
    }
  };
  mark(zeros_, 1);
  mark(ones_, 2);
  std::sort(zeros_.begin(), zeros_.end());
  std::sort(ones_.begin(), ones_.end());
  for (Node v = 1; v <= g.node_count(); ++v) {
    if (role_[v - 1] == 0) followers_.push_back(v);
  }
  if (followers_.empty()) throw Error(ErrorCode::InvalidLeaders, "no followers remain");
}

bool LeaderConfig::is_leader(Node v) const noexcept {
  return v >= 1 && static_cast<std::size_t>(v) <= role_.size() && role_[v - 1] != 0;
}

double LeaderConfig::leader_value(Node v) const noexcept {
  return role_[v - 1] == 2 ? 1.0 : 0.0;
}

std::size_t LaplacianBlocks::row(Node v) const {
  if (v < 1 || static_cast<std::size_t>(v) > row_of.size() || row_of[v - 1] < 0) {
    throw Error(ErrorCode::NotAFollower, "node " + std::to_string(v) + " is not a follower");
  }
  return static_cast<std::size_t>(row_of[v - 1]);
}

LaplacianBlocks laplacian_blocks(const Graph& g, const LeaderConfig& lc) {
  LaplacianBlocks b;
  b.followers = lc.followers();
  b.leaders = lc.zeros();
  b.leaders.insert(b.leaders.end(), lc.ones().begin(), lc.ones().end());
  std::sort(b.leaders.begin(), b.leaders.end());

  std::vector<int> leader_col(g.node_count(), -1);
  b.row_of.assign(g.node_count(), -1);
  for (std::size_t i = 0; i < b.followers.size(); ++i) b.row_of[b.followers[i] - 1] = int(i);
  for (std::size_t i = 0; i < b.leaders.size(); ++i) leader_col[b.leaders[i] - 1] = int(i);

  const auto nf = static_cast<Eigen::Index>(b.followers.size());
  const auto nl = static_cast<Eigen::Index>(b.leaders.size());
  b.Lff = Eigen::MatrixXd::Zero(nf, nf);
  b.Lfl = Eigen::MatrixXd::Zero(nf, nl);
  b.x_l.resize(nl);
  for (Eigen::Index j = 0; j < nl; ++j) b.x_l(j) = lc.leader_value(b.leaders[j]);

  for (Eigen::Index i = 0; i < nf; ++i) {
    Node v = b.followers[i];
    b.Lff(i, i) = g.degree(v);
    for (Node w : g.neighbors(v)) {
      if (b.row_of[w - 1] >= 0) {
        b.Lff(i, b.row_of[w - 1]) = -1.0;
      } else {
        b.Lfl(i, leader_col[w - 1]) = -1.0;
      }
    }
  }
  return b;
}

std::vector<Node> tree_path(const Graph& g, Node a, Node b) {
  require_tree(g);
  require_node(g, a);
  require_node(g, b);
  auto parent = bfs_parents(g, b);
  std::vector<Node> path{a};
  while (path.back() != b) path.push_back(parent[path.back() - 1]);
  return path;
}

FollowerPartition partition_followers(const Graph& g, Node l0, Node l1) {
  require_tree(g);
  require_node(g, l0);
  require_node(g, l1);
  if (l0 == l1) throw Error(ErrorCode::InvalidLeaders, "l0 and l1 must differ");

  // Rooted at l1, a follower lies behind l0 iff l0 is among its ancestors;
  // rooted at l0 likewise for l1.
  auto behind = [&g](Node root, Node gate) {
    auto parent = bfs_parents(g, root);
    std::vector<char> flag(g.node_count(), 0);
    for (Node v = 1; v <= g.node_count(); ++v) {
      for (Node w = v; w != 0; w = parent[w - 1]) {
        if (w == gate) {
          flag[v - 1] = 1;
          break;
        }
      }
    }
    return flag;
  };
  auto behind0 = behind(l1, l0);
  auto behind1 = behind(l0, l1);

  FollowerPartition p;
  for (Node v = 1; v <= g.node_count(); ++v) {
    if (v == l0 || v == l1) continue;
    if (behind0[v - 1]) {
      p.behind_l0.push_back(v);
    } else if (behind1[v - 1]) {
      p.behind_l1.push_back(v);
    } else {
      p.between.push_back(v);
    }
  }
  return p;
}

Node projection_onto_path(const Graph& g, Node v, Node l0, Node l1) {
  auto spine = tree_path(g, l0, l1);
  std::vector<char> on_spine(g.node_count(), 0);
  for (Node s : spine) on_spine[s - 1] = 1;
  auto parent = bfs_parents(g, l0);
  Node w = v;
  while (!on_spine[w - 1]) w = parent[w - 1];
  return w;
}

} // namespace opdiv
