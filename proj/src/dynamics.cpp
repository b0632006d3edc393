#include "opdiv/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <Eigen/Eigenvalues>

#include "opdiv/error.hpp"

namespace opdiv {

double OpinionVector::at(Node v) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), v);
  if (it == nodes.end() || *it != v) {
    throw Error(ErrorCode::NotAFollower, "no opinion for node " + std::to_string(v));
  }
  return values[it - nodes.begin()];
}

OpinionVector steady_state(const Graph& g, const LeaderConfig& lc) {
  LaplacianBlocks b = laplacian_blocks(g, lc);
  Eigen::LLT<Eigen::MatrixXd> llt(b.Lff);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::SolveFailure, "grounded Laplacian is not positive definite");
  }
  Eigen::VectorXd rhs = -b.Lfl * b.x_l;
  Eigen::VectorXd x = llt.solve(rhs);
  double residual = (b.Lff * x - rhs).norm();
  if (!(residual <= 1e-10 * static_cast<double>(x.size()))) {
    throw Error(ErrorCode::SolveFailure, "residual " + std::to_string(residual) + " too large");
  }
  return {b.followers, std::vector<double>(x.data(), x.data() + x.size())};
}

OpinionVector path_closed_form(int n, Node k, Node j) {
  if (k >= j) {
    throw Error(ErrorCode::LeaderOrderViolation, "closed form needs 0-leader k < 1-leader j");
  }
  if (k < 1 || j > n) throw Error(ErrorCode::EndpointOutOfRange, "leaders must lie in 1..n");
  OpinionVector x;
  for (Node v = 1; v <= n; ++v) {
    if (v == k || v == j) continue;
    x.nodes.push_back(v);
    if (v < k) {
      x.values.push_back(0.0);
    } else if (v > j) {
      x.values.push_back(1.0);
    } else {
      x.values.push_back(static_cast<double>(v - k) / static_cast<double>(j - k));
    }
  }
  return x;
}

OpinionVector Trajectory::final_state() const { return {followers, states.back()}; }

namespace {

Eigen::VectorXd grounded_spectrum(const Graph& g, const LeaderConfig& lc) {
  LaplacianBlocks b = laplacian_blocks(g, lc);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(b.Lff, Eigen::EigenvaluesOnly);
  return eig.eigenvalues();  // ascending
}

} // namespace

double euler_stability_bound(const Graph& g, const LeaderConfig& lc) {
  Eigen::VectorXd spectrum = grounded_spectrum(g, lc);
  return 2.0 / spectrum(spectrum.size() - 1);
}

double default_euler_step(const Graph& g) { return 1.0 / (2.0 * g.max_degree()); }

double convergence_horizon(const Graph& g, const LeaderConfig& lc, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  Eigen::VectorXd spectrum = grounded_spectrum(g, lc);
  double initial_gap = std::sqrt(static_cast<double>(spectrum.size()));
  return std::log(initial_gap / tol) / spectrum(0);
}

Trajectory simulate(const Graph& g, const LeaderConfig& lc, std::span<const double> x0,
                    double step, double horizon) {
  if (x0.size() != static_cast<std::size_t>(g.node_count())) {
    throw Error(ErrorCode::InvalidArgument, "initial state needs one entry per node");
  }
  if (!(step > 0.0) || !(horizon >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "step must be positive and horizon non-negative");
  }
  double bound = euler_stability_bound(g, lc);
  if (step > bound) {
    throw Error(ErrorCode::UnstableStep,
                "step " + std::to_string(step) + " exceeds stability bound " + std::to_string(bound));
  }

  LaplacianBlocks b = laplacian_blocks(g, lc);
  Eigen::VectorXd x(b.followers.size());
  for (std::size_t i = 0; i < b.followers.size(); ++i) {
    double v = x0[b.followers[i] - 1];
    if (!(v >= 0.0 && v <= 1.0)) {
      throw Error(ErrorCode::OpinionOutOfRange,
                  "initial opinion of node " + std::to_string(b.followers[i]) + " outside [0,1]");
    }
    x(i) = v;
  }
  const Eigen::VectorXd drive = -b.Lfl * b.x_l;

  Trajectory traj;
  traj.followers = b.followers;
  auto record = [&](double t) {
    traj.times.push_back(t);
    traj.states.emplace_back(x.data(), x.data() + x.size());
  };
  record(0.0);
  auto steps = static_cast<long>(std::ceil(horizon / step - 1e-12));
  double t = 0.0;
  for (long s = 1; s <= steps; ++s) {
    double dt = (s == steps) ? horizon - t : step;
    x += dt * (drive - b.Lff * x);
    t = (s == steps) ? horizon : static_cast<double>(s) * step;
    record(t);
  }
  return traj;
}

std::string to_csv(const OpinionVector& x) {
  std::string out = "node,opinion\n";
  char buf[64];
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%d,%.12g\n", x.nodes[i], x.values[i]);
    out += buf;
  }
  return out;
}

} // namespace opdiv
