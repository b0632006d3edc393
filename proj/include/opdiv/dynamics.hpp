#ifndef OPDIV_DYNAMICS_HPP_
#define OPDIV_DYNAMICS_HPP_

#include <span>
#include <string>
#include <vector>

#include "opdiv/graph.hpp"

namespace opdiv {

/// Follower opinions keyed by node label, ascending. Leaders are excluded.
struct OpinionVector {
  std::vector<Node> nodes;
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
  double at(Node v) const;  // throws NotAFollower
};

/**
 * Converged follower opinions: solves Lff x = -Lfl x_l with a Cholesky
 * factorisation of the grounded Laplacian.
 *
 * Throws SolveFailure if Lff is not numerically positive definite or the
 * residual exceeds 1e-10 * n_f.
 */
OpinionVector steady_state(const Graph& g, const LeaderConfig& lc);

/// Closed form for a path 1..n with 0-leader k < 1-leader j.
OpinionVector path_closed_form(int n, Node k, Node j);

struct Trajectory {
  std::vector<double> times;
  std::vector<std::vector<double>> states;  // follower order of `followers`
  std::vector<Node> followers;

  OpinionVector final_state() const;
};

// Largest explicit Euler step that keeps the iteration stable: 2 / lambda_max(Lff).
double euler_stability_bound(const Graph& g, const LeaderConfig& lc);

// 1 / (2 * max degree); always below the stability bound.
double default_euler_step(const Graph& g);

// Horizon after which the contraction exp(-lambda_min(Lff) t) brings any
// start in [0,1]^n_f within `tol` (infinity norm) of the steady state.
double convergence_horizon(const Graph& g, const LeaderConfig& lc, double tol);

/**
 * Explicit Euler integration of dx_f/dt = -Lff x_f - Lfl x_l.
 *
 * `x0` has one entry per node (index v-1). Leader entries are ignored and
 * pinned to their 0/1 opinion. Throws UnstableStep when step exceeds
 * euler_stability_bound; OpinionOutOfRange when a follower start is outside [0,1].
 */
Trajectory simulate(const Graph& g, const LeaderConfig& lc, std::span<const double> x0,
                    double step, double horizon);

// `node,opinion` header then one row per follower, 12 significant digits.
std::string to_csv(const OpinionVector& x);

} // namespace opdiv

#endif // OPDIV_DYNAMICS_HPP_
