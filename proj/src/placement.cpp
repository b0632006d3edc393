#include "opdiv/placement.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include <nlohmann/json.hpp>

#include "opdiv/dynamics.hpp"
#include "opdiv/error.hpp"

namespace opdiv {

double PlacementResult::best(Measure m) const {
  double top = -1.0;
  for (const auto& [node, s] : scores) {
    top = std::max(top, m == Measure::Simpson ? s.simpson : s.shannon);
  }
  return top;
}

PlacementResult brute_force_best(const Graph& g, Node l0, int R, const PlacementOptions& opts) {
  if (!g.contains(l0)) {
    throw Error(ErrorCode::EndpointOutOfRange, "l0 = " + std::to_string(l0) + " not in graph");
  }
  if (g.node_count() < 4) {
    throw Error(ErrorCode::TooFewFollowers, "placement needs n >= 4 so that n_f >= 2");
  }
  PlacementResult r;
  r.l0 = l0;
  r.R = R;
  r.n_f = g.node_count() - 2;
  for (Node l1 = 1; l1 <= g.node_count(); ++l1) {
    if (l1 == l0) continue;
    OpinionVector x = steady_state(g, LeaderConfig::single(g, l0, l1));
    r.scores.emplace(l1, score(bin_opinions(x, R, opts.snap_tol)));
  }
  double best_sim = r.best(Measure::Simpson);
  double best_shan = r.best(Measure::Shannon);
  for (const auto& [node, s] : r.scores) {
    if (s.simpson >= best_sim - opts.tie_tol) r.argmax_simpson.push_back(node);
    if (s.shannon >= best_shan - opts.tie_tol) r.argmax_shannon.push_back(node);
  }
  return r;
}

int path_two_bin_mirror_node(int n, Node k) { return 2 * k < n ? n - k + 1 : n - k; }

std::vector<Node> predict_path(int n, Node k, BinRule rule) {
  if (rule == BinRule::PerFollower) {
    // Farthest endpoint; the centre of an odd path is equidistant from both.
    if (2 * k < n + 1) return {n};
    if (2 * k > n + 1) return {1};
    return {1, n};
  }
  int j = path_two_bin_mirror_node(n, k);
  if (j < 1 || j > n || j == k) return {};
  return {j};
}

std::vector<Node> predict_cycle(int n, BinRule rule) {
  if (rule == BinRule::PerFollower) return {2, n};
  int n_f = n - 2;
  std::vector<Node> out;
  for (Node j = 2; j <= n; ++j) {
    if (n_f % 2 == 1 || j % 2 == 0) out.push_back(j);
  }
  return out;
}

std::vector<Node> predict_y_tree(const Graph& g, Node l0) {
  if (!g.is_tree()) throw Error(ErrorCode::NotAYTree, "graph is not a tree");
  Node center = 0;
  for (Node v = 1; v <= g.node_count(); ++v) {
    int d = g.degree(v);
    if (d > 3 || (d == 3 && center != 0)) {
      throw Error(ErrorCode::NotAYTree, "node " + std::to_string(v) + " has degree " +
                                            std::to_string(d) + " beyond a single degree-3 centre");
    }
    if (d == 3) center = v;
  }
  if (center == 0) throw Error(ErrorCode::NotAYTree, "no degree-3 node");
  if (!g.contains(l0) || g.degree(l0) != 1) {
    throw Error(ErrorCode::LeaderNotLeaf, "l0 = " + std::to_string(l0) + " is not a leaf");
  }

  struct Arm {
    Node leaf;
    Node before_leaf;
    int length;
  };
  std::vector<Arm> arms;
  for (Node start : g.neighbors(center)) {
    Node prev = center, cur = start;
    int length = 1;
    while (g.degree(cur) == 2) {
      Node next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
      prev = cur;
      cur = next;
      ++length;
    }
    if (cur != l0) arms.push_back({cur, prev, length});
  }
  int longest = std::max(arms[0].length, arms[1].length);
  std::vector<Node> out;
  for (const Arm& a : arms) {
    if (a.length == longest) {
      out.push_back(a.leaf);
      out.push_back(a.before_leaf);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool check_balanced_tree_placement(const Graph& g, Node l0, Node l1, double snap_tol) {
  FollowerPartition p = partition_followers(g, l0, l1);
  if (p.behind_l0.size() != p.behind_l1.size()) return false;
  OpinionVector x = steady_state(g, LeaderConfig::single(g, l0, l1));
  std::vector<double> middle;
  for (Node v : p.between) middle.push_back(x.at(v));
  BinHistogram h = bin_opinions(middle, 2, snap_tol);
  return std::abs(h.counts[0] - h.counts[1]) <= 1;
}

std::string format_3dp(double value) {
  double rounded = std::copysign(std::floor(std::abs(value) * 1000.0 + 0.5 + 1e-9) / 1000.0, value);
  if (rounded == 0.0) rounded = 0.0;  // no "-0.000"
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3f", rounded);
  return buf;
}

std::string to_json(const PlacementResult& r) {
  nlohmann::ordered_json j;
  j["l0"] = r.l0;
  j["R"] = r.R;
  j["n_f"] = r.n_f;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& [node, s] : r.scores) {
    rows.push_back({{"l1", node}, {"simpson", s.simpson}, {"shannon", s.shannon}});
  }
  j["scores"] = std::move(rows);
  j["argmax_simpson"] = r.argmax_simpson;
  j["argmax_shannon"] = r.argmax_shannon;
  return j.dump(2);
}

std::string render_table(const PlacementResult& r) {
  std::string out = "  l1   Simpson   Shannon\n";
  char buf[96];
  for (const auto& [node, s] : r.scores) {
    std::snprintf(buf, sizeof buf, "%4d %9s %9s\n", node, format_3dp(s.simpson).c_str(),
                  format_3dp(s.shannon).c_str());
    out += buf;
  }
  return out;
}

} // namespace opdiv
