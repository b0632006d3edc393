#ifndef OPDIV_PLACEMENT_HPP_
#define OPDIV_PLACEMENT_HPP_

#include <map>
#include <string>
#include <vector>

#include "opdiv/diversity.hpp"
#include "opdiv/graph.hpp"

namespace opdiv {

struct PlacementOptions {
  double snap_tol = kDefaultSnapTolerance;
  double tie_tol = 1e-9;
};

/// Scores of every 1-leader candidate for a fixed 0-leader, plus the argmax sets.
struct PlacementResult {
  Node l0 = 0;
  int R = 0;
  int n_f = 0;
  std::map<Node, DiversityScore> scores;  // candidate l1 -> score
  std::vector<Node> argmax_simpson;
  std::vector<Node> argmax_shannon;

  double best(Measure m) const;
  const std::vector<Node>& argmax(Measure m) const {
    return m == Measure::Simpson ? argmax_simpson : argmax_shannon;
  }
};

// Evaluates every l1 != l0. Needs n >= 4 so that n_f = n - 2 >= 2.
PlacementResult brute_force_best(const Graph& g, Node l0, int R, const PlacementOptions& opts = {});

// Which closed-form regime a predictor targets.
enum class BinRule { PerFollower, Two };  // R = n_f, R = 2

// Path 1..n with 0-leader k. PerFollower: the endpoint(s) farthest from k.
// Two: the stated mirror node (see path_two_bin_mirror_node), empty when
// that node is not a valid candidate.
std::vector<Node> predict_path(int n, Node k, BinRule rule);

// n-k+1 when k < n/2, otherwise n-k. May be 0 or equal k on degenerate inputs.
int path_two_bin_mirror_node(int n, Node k);

// Cycle 1..n with l0 = 1. PerFollower: the two neighbours of l0. Two: every
// candidate when n_f is odd, the even labels when n_f is even.
std::vector<Node> predict_cycle(int n, BinRule rule);

// Tree with one degree-3 centre and l0 at a leaf: the far leaf of the longer
// remaining arm and that leaf's neighbour (both arms on a tie).
// Throws NotAYTree, LeaderNotLeaf.
std::vector<Node> predict_y_tree(const Graph& g, Node l0);

/**
 * Certificate for a 2-bin optimum on a tree: |P1| == |P3| and the P2
 * opinions split over the two bins with |c1 - c2| <= 1. Opinions are solved,
 * not inferred from structure. A true result means l1 maximises both indices.
 */
bool check_balanced_tree_placement(const Graph& g, Node l0, Node l1,
                                   double snap_tol = kDefaultSnapTolerance);

// Rounds half away from zero to 3 decimals: 0.6385 -> "0.639".
std::string format_3dp(double value);

std::string to_json(const PlacementResult& r);

// Aligned rows `l1  Simpson  Shannon` at 3 decimals.
std::string render_table(const PlacementResult& r);

} // namespace opdiv

#endif // OPDIV_PLACEMENT_HPP_
