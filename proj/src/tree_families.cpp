#include "opdiv/tree_families.hpp"

#include <algorithm>
#include <set>

#include "opdiv/error.hpp"

namespace opdiv {

Graph random_tree(int n, std::mt19937_64& rng) {
  if (n < 2) throw Error(ErrorCode::TooFewNodes, "random tree needs n >= 2");
  if (n == 2) return Graph(2, {{1, 2}});

  std::uniform_int_distribution<Node> pick(1, n);
  std::vector<Node> code(n - 2);
  for (auto& c : code) c = pick(rng);

  std::vector<int> degree(n + 1, 1);
  for (Node c : code) ++degree[c];
  std::set<Node> leaf_pool;
  for (Node v = 1; v <= n; ++v) {
    if (degree[v] == 1) leaf_pool.insert(v);
  }
  std::vector<Edge> edges;
  for (Node c : code) {
    Node leaf = *leaf_pool.begin();
    leaf_pool.erase(leaf_pool.begin());
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1) leaf_pool.insert(c);
  }
  Node a = *leaf_pool.begin();
  Node b = *std::next(leaf_pool.begin());
  edges.emplace_back(a, b);
  return Graph(n, std::move(edges));
}

namespace {

std::string ahu(const Graph& g, Node v, Node parent) {
  std::vector<std::string> kids;
  for (Node w : g.neighbors(v)) {
    if (w != parent) kids.push_back(ahu(g, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string code = "(";
  for (const auto& k : kids) code += k;
  return code + ")";
}

std::vector<Node> centers(const Graph& g) {
  int n = g.node_count();
  std::vector<int> degree(n + 1);
  std::vector<Node> layer;
  for (Node v = 1; v <= n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Node> next;
    for (Node v : layer) {
      for (Node w : g.neighbors(v)) {
        if (--degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

// Beyer-Hedetniemi successor on a level sequence (root at level 0).
// Returns false once the star has been produced.
bool next_level_sequence(std::vector<int>& level) {
  int n = static_cast<int>(level.size());
  int p = n - 1;
  while (p > 0 && level[p] <= 1) --p;
  if (p == 0) return false;
  int q = p - 1;
  while (level[q] != level[p] - 1) --q;
  for (int i = p; i < n; ++i) level[i] = level[i - (p - q)];
  return true;
}

Graph from_level_sequence(const std::vector<int>& level) {
  int n = static_cast<int>(level.size());
  std::vector<Edge> edges;
  std::vector<Node> last_at_depth(n + 1, 0);
  last_at_depth[0] = 1;
  for (int i = 1; i < n; ++i) {
    edges.emplace_back(last_at_depth[level[i] - 1], i + 1);
    last_at_depth[level[i]] = i + 1;
  }
  return Graph(n, std::move(edges));
}

} // namespace

std::string canonical_tree_code(const Graph& tree) {
  if (!tree.is_tree()) throw Error(ErrorCode::NotATree, "canonical code needs a tree");
  std::string best;
  for (Node c : centers(tree)) {
    std::string code = ahu(tree, c, 0);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

void for_each_free_tree(int n, const std::function<void(const Graph&)>& visit) {
  if (n < 1) throw Error(ErrorCode::TooFewNodes, "tree enumeration needs n >= 1");
  std::vector<int> level(n);
  for (int i = 0; i < n; ++i) level[i] = i;
  std::set<std::string> seen;
  do {
    Graph g = from_level_sequence(level);
    if (seen.insert(canonical_tree_code(g)).second) visit(g);
  } while (next_level_sequence(level));
}

std::vector<Node> leaves(const Graph& g) {
  std::vector<Node> out;
  for (Node v = 1; v <= g.node_count(); ++v) {
    if (g.degree(v) == 1) out.push_back(v);
  }
  return out;
}

} // namespace opdiv
