#ifndef OPDIV_VERIFY_HPP_
#define OPDIV_VERIFY_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "opdiv/graph.hpp"
#include "opdiv/placement.hpp"

namespace opdiv {

struct Counterexample {
  std::string check;     // which claim failed
  std::string instance;  // graph + leaders + R
  std::string detail;    // scores / argmax sets / residuals
};

struct VerifyReport {
  std::string suite;
  int bound = 0;
  long instances = 0;
  long checks = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> audit;  // informational, never a failure

  bool passed() const noexcept { return counterexamples.empty(); }
};

// Paths n in [4, max_n]: farthest-endpoint optimum at R = n_f, shortfall
// formula, bounds; the 2-bin mirror-node statement is recorded as an audit.
VerifyReport verify_paths(int max_n, const PlacementOptions& opts = {});

// Cycles n in [4, max_n], l0 = 1: exact argmax sets at R = n_f and R = 2,
// attainment of the maxima, reflection symmetry of the argmax sets.
VerifyReport verify_cycles(int max_n, const PlacementOptions& opts = {});

// Y-trees with arm lengths in [1, max_arm], l0 at the arm0 leaf, R = n_f.
VerifyReport verify_y_trees(int max_arm, const PlacementOptions& opts = {});

// Every free tree with n in [4, max_n] and every leader pair: a true balanced
// certificate must coincide with a brute-force optimum at R = 2.
VerifyReport verify_trees_r2(int max_n, const PlacementOptions& opts = {});

// Every free tree with n in [4, max_n] and every pair of leaf leaders: the
// grounded resistance lemmas.
VerifyReport verify_appendix(int max_n, double tol = 1e-9);

VerifyReport run_suite(std::string_view suite, int bound, const PlacementOptions& opts = {});

/**
 * Grounded-resistance lemmas for one tree with leaders l0, l1:
 *  - cutpoint additivity in the grounded network (all leaders fused into one
 *    ground vertex), including the ground as endpoint or cut vertex;
 *  - branch opinions: a follower takes the opinion of its projection onto path(l0, l1);
 *  - cut identity inv(u,u) - r(u,t) - inv(t,t) = 0 for the same pairs;
 *  - steady state equals the grounded inverse applied to -Lfl x_l.
 */
struct LemmaOutcome {
  long checks = 0;
  std::vector<std::string> failures;
};
LemmaOutcome check_resistance_lemmas(const Graph& tree, Node l0, Node l1, double tol = 1e-9);

// Audit row for a path: does the 2-bin mirror node attain the optimum?
struct MirrorAuditRow {
  int n = 0;
  Node k = 0;
  int stated = 0;
  bool valid = false;
  bool optimal_simpson = false;
  bool optimal_shannon = false;
  std::vector<Node> argmax_simpson;
  std::vector<Node> argmax_shannon;
};
std::vector<MirrorAuditRow> audit_path_mirror_node(int min_n, int max_n,
                                                   const PlacementOptions& opts = {});

std::string describe_graph(const Graph& g);
std::string format_set(const std::vector<Node>& nodes);
std::string render(const VerifyReport& report);

} // namespace opdiv

#endif // OPDIV_VERIFY_HPP_
