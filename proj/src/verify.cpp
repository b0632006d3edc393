#include "opdiv/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <queue>
#include <sstream>

#include "opdiv/dynamics.hpp"
#include "opdiv/error.hpp"
#include "opdiv/resistance.hpp"
#include "opdiv/tree_families.hpp"

namespace opdiv {

std::string format_set(const std::vector<Node>& nodes) {
  std::string out = "{";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(nodes[i]);
  }
  return out + "}";
}

std::string describe_graph(const Graph& g) {
  std::string out = "n=" + std::to_string(g.node_count()) + " edges=";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(g.edges()[i].first) + "-" + std::to_string(g.edges()[i].second);
  }
  return out;
}

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string score_table(const PlacementResult& r) {
  std::string out;
  for (const auto& [node, s] : r.scores) {
    if (!out.empty()) out += " ";
    out += std::to_string(node) + ":(" + fmt(s.simpson) + "," + fmt(s.shannon) + ")";
  }
  return out + " argmax_simpson=" + format_set(r.argmax_simpson) +
         " argmax_shannon=" + format_set(r.argmax_shannon);
}

VerifyReport start_report(std::string suite, int bound) {
  VerifyReport rep;
  rep.suite = std::move(suite);
  rep.bound = bound;
  return rep;
}

bool contains(const std::vector<Node>& set, Node v) {
  return std::find(set.begin(), set.end(), v) != set.end();
}

bool subset(const std::vector<Node>& small, const std::vector<Node>& big) {
  return std::all_of(small.begin(), small.end(), [&](Node v) { return contains(big, v); });
}

// Attained optimum never exceeds the closed-form maximum.
void check_bounds(VerifyReport& rep, const PlacementResult& r, const std::string& instance,
                  double tol) {
  for (Measure m : {Measure::Simpson, Measure::Shannon}) {
    ++rep.checks;
    double bound = max_diversity(r.n_f, r.R, m);
    if (r.best(m) > bound + tol) {
      rep.counterexamples.push_back({"bound/" + std::string(to_string(m)), instance,
                                     "attained " + fmt(r.best(m)) + " > bound " + fmt(bound)});
    }
  }
}

void check_argmax_contains(VerifyReport& rep, const std::string& check,
                           const std::vector<Node>& predicted, const PlacementResult& r,
                           const std::string& instance) {
  for (Measure m : {Measure::Simpson, Measure::Shannon}) {
    ++rep.checks;
    if (predicted.empty() || !subset(predicted, r.argmax(m))) {
      rep.counterexamples.push_back({check + "/" + std::string(to_string(m)), instance,
                                     "predicted " + format_set(predicted) + "; " + score_table(r)});
    }
  }
}

void check_argmax_equals(VerifyReport& rep, const std::string& check,
                         const std::vector<Node>& expected, const PlacementResult& r,
                         const std::string& instance) {
  for (Measure m : {Measure::Simpson, Measure::Shannon}) {
    ++rep.checks;
    if (r.argmax(m) != expected) {
      rep.counterexamples.push_back({check + "/" + std::string(to_string(m)), instance,
                                     "expected " + format_set(expected) + "; " + score_table(r)});
    }
  }
}

void check_attains_maximum(VerifyReport& rep, const std::string& check, const PlacementResult& r,
                           const std::string& instance, double tol) {
  for (Measure m : {Measure::Simpson, Measure::Shannon}) {
    ++rep.checks;
    double bound = max_diversity(r.n_f, r.R, m);
    if (std::abs(r.best(m) - bound) > tol) {
      rep.counterexamples.push_back({check + "/" + std::string(to_string(m)), instance,
                                     "attained " + fmt(r.best(m)) + " != maximum " + fmt(bound)});
    }
  }
}

} // namespace

std::vector<MirrorAuditRow> audit_path_mirror_node(int min_n, int max_n,
                                                   const PlacementOptions& opts) {
  std::vector<MirrorAuditRow> rows;
  for (int n = std::max(4, min_n); n <= max_n; ++n) {
    Graph g = path_graph(n);
    for (Node k = 1; k <= n; ++k) {
      PlacementResult r = brute_force_best(g, k, 2, opts);
      MirrorAuditRow row;
      row.n = n;
      row.k = k;
      row.stated = path_two_bin_mirror_node(n, k);
      row.valid = row.stated >= 1 && row.stated <= n && row.stated != k;
      row.optimal_simpson = row.valid && contains(r.argmax_simpson, row.stated);
      row.optimal_shannon = row.valid && contains(r.argmax_shannon, row.stated);
      row.argmax_simpson = r.argmax_simpson;
      row.argmax_shannon = r.argmax_shannon;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

VerifyReport verify_paths(int max_n, const PlacementOptions& opts) {
  VerifyReport rep = start_report("paths", max_n);
  for (int n = 4; n <= max_n; ++n) {
    Graph g = path_graph(n);
    const int n_f = n - 2;
    for (Node k = 1; k <= n; ++k) {
      std::string instance = "path(" + std::to_string(n) + ") l0=" + std::to_string(k);
      ++rep.instances;
      PlacementResult r = brute_force_best(g, k, n_f, opts);
      std::string at_nf = instance + " R=" + std::to_string(n_f);
      check_argmax_contains(rep, "farthest-endpoint", predict_path(n, k, BinRule::PerFollower), r,
                            at_nf);
      check_bounds(rep, r, at_nf, opts.tie_tol);

      // Simpson optimum 1 - (k-1)(k-2)/(n_f(n_f-1)), k measured from the near end.
      int near = std::min<int>(k, n + 1 - k);
      double expected = 1.0 - double(near - 1) * (near - 2) / (double(n_f) * (n_f - 1));
      ++rep.checks;
      if (std::abs(r.best(Measure::Simpson) - expected) > opts.tie_tol) {
        rep.counterexamples.push_back({"simpson-shortfall", at_nf,
                                       "attained " + fmt(r.best(Measure::Simpson)) +
                                           " expected " + fmt(expected)});
      }

      PlacementResult r2 = brute_force_best(g, k, 2, opts);
      check_bounds(rep, r2, instance + " R=2", opts.tie_tol);
    }
  }

  long misses = 0;
  for (const MirrorAuditRow& row : audit_path_mirror_node(4, max_n, opts)) {
    if (row.optimal_simpson && row.optimal_shannon) continue;
    ++misses;
    rep.audit.push_back("mirror-node n=" + std::to_string(row.n) + " k=" + std::to_string(row.k) +
                        " stated j=" + std::to_string(row.stated) +
                        (row.valid ? "" : " (not a valid candidate)") +
                        " argmax_simpson=" + format_set(row.argmax_simpson) +
                        " argmax_shannon=" + format_set(row.argmax_shannon));
  }
  rep.audit.push_back("mirror-node audit: " + std::to_string(misses) +
                      " (n,k) pairs where the stated 2-bin node is not optimal");
  return rep;
}

VerifyReport verify_cycles(int max_n, const PlacementOptions& opts) {
  VerifyReport rep = start_report("cycles", max_n);
  for (int n = 4; n <= max_n; ++n) {
    Graph g = cycle_graph(n);
    const int n_f = n - 2;
    for (auto [R, rule] : {std::pair{n_f, BinRule::PerFollower}, std::pair{2, BinRule::Two}}) {
      std::string instance = "cycle(" + std::to_string(n) + ") l0=1 R=" + std::to_string(R);
      ++rep.instances;
      PlacementResult r = brute_force_best(g, 1, R, opts);
      check_argmax_equals(rep, rule == BinRule::Two ? "cycle-two-bin" : "cycle-neighbours",
                          predict_cycle(n, rule), r, instance);
      check_attains_maximum(rep, "cycle-maximum", r, instance, opts.tie_tol);
      check_bounds(rep, r, instance, opts.tie_tol);

      // Reflection v -> n + 2 - v fixes node 1.
      for (Measure m : {Measure::Simpson, Measure::Shannon}) {
        ++rep.checks;
        std::vector<Node> mirrored;
        for (Node v : r.argmax(m)) mirrored.push_back(n + 2 - v);
        std::sort(mirrored.begin(), mirrored.end());
        if (mirrored != r.argmax(m)) {
          rep.counterexamples.push_back({"reflection/" + std::string(to_string(m)), instance,
                                         score_table(r)});
        }
      }
    }
  }
  return rep;
}

VerifyReport verify_y_trees(int max_arm, const PlacementOptions& opts) {
  VerifyReport rep = start_report("ytrees", max_arm);
  for (int a0 = 1; a0 <= max_arm; ++a0) {
    for (int a1 = 1; a1 <= max_arm; ++a1) {
      for (int a2 = 1; a2 <= max_arm; ++a2) {
        Graph g = y_tree(a0, a1, a2);
        const int n_f = g.node_count() - 2;
        std::string instance = "ytree(" + std::to_string(a0) + "," + std::to_string(a1) + "," +
                               std::to_string(a2) + ") l0=1 R=" + std::to_string(n_f);
        ++rep.instances;
        PlacementResult r = brute_force_best(g, 1, n_f, opts);
        check_argmax_contains(rep, "longest-path-leaf", predict_y_tree(g, 1), r, instance);
        check_bounds(rep, r, instance, opts.tie_tol);
      }
    }
  }
  return rep;
}

VerifyReport verify_trees_r2(int max_n, const PlacementOptions& opts) {
  VerifyReport rep = start_report("trees-R2", max_n);
  long certified = 0;
  for (int n = 4; n <= max_n; ++n) {
    for_each_free_tree(n, [&](const Graph& g) {
      for (Node l0 = 1; l0 <= n; ++l0) {
        std::string instance = describe_graph(g) + " l0=" + std::to_string(l0) + " R=2";
        ++rep.instances;
        PlacementResult r = brute_force_best(g, l0, 2, opts);
        check_bounds(rep, r, instance, opts.tie_tol);
        for (Node l1 = 1; l1 <= n; ++l1) {
          if (l1 == l0 || !check_balanced_tree_placement(g, l0, l1, opts.snap_tol)) continue;
          ++certified;
          check_argmax_contains(rep, "balanced-certificate", {l1}, r, instance);
        }
      }
    });
  }
  rep.audit.push_back("balanced placements certified: " + std::to_string(certified));
  return rep;
}

namespace {

// Resistance between grounded-network vertices; index `ground` is the fused leader set.
double grounded_resistance(const GroundedInverse& gi, int a, int b, int ground) {
  if (a == b) return 0.0;
  if (a == ground) return gi.inv(b, b);
  if (b == ground) return gi.inv(a, a);
  return gi.inv(a, a) + gi.inv(b, b) - 2.0 * gi.inv(a, b);
}

} // namespace

LemmaOutcome check_resistance_lemmas(const Graph& tree, Node l0, Node l1, double tol) {
  LemmaOutcome out;
  LeaderConfig lc = LeaderConfig::single(tree, l0, l1);
  GroundedInverse gi = grounded_inverse(tree, lc);
  OpinionVector x = steady_state(tree, lc);
  LaplacianBlocks b = laplacian_blocks(tree, lc);
  const int nf = static_cast<int>(gi.followers.size());
  const int ground = nf;
  auto fail = [&](const std::string& what) {
    out.failures.push_back(describe_graph(tree) + " l0=" + std::to_string(l0) +
                           " l1=" + std::to_string(l1) + ": " + what);
  };

  Eigen::VectorXd via_inverse = gi.inv * (-b.Lfl * b.x_l);
  for (int i = 0; i < nf; ++i) {
    ++out.checks;
    if (std::abs(via_inverse(i) - x.values[i]) > tol) {
      fail("inverse route differs at node " + std::to_string(gi.followers[i]));
    }
  }

  // Grounded network adjacency over followers plus the ground vertex.
  std::vector<std::vector<int>> adj(nf + 1);
  for (int i = 0; i < nf; ++i) {
    for (Node w : tree.neighbors(gi.followers[i])) {
      int j = gi.row_of[w - 1] >= 0 ? gi.row_of[w - 1] : ground;
      if (j == ground) {
        adj[i].push_back(ground);
        adj[ground].push_back(i);
      } else if (j > i) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  for (int cut = 0; cut <= nf; ++cut) {
    std::vector<int> comp(nf + 1, -1);
    int label = 0;
    for (int s = 0; s <= nf; ++s) {
      if (s == cut || comp[s] >= 0) continue;
      std::queue<int> q;
      q.push(s);
      comp[s] = label;
      while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v]) {
          if (w != cut && comp[w] < 0) {
            comp[w] = label;
            q.push(w);
          }
        }
      }
      ++label;
    }
    if (label < 2) continue;  // not an articulation vertex
    for (int u = 0; u <= nf; ++u) {
      for (int v = u + 1; v <= nf; ++v) {
        if (u == cut || v == cut || comp[u] == comp[v]) continue;
        ++out.checks;
        double direct = grounded_resistance(gi, u, v, ground);
        double split = grounded_resistance(gi, u, cut, ground) + grounded_resistance(gi, cut, v, ground);
        if (std::abs(direct - split) > tol) {
          auto name = [&](int i) {
            return i == ground ? std::string("ground") : std::to_string(gi.followers[i]);
          };
          fail("cutpoint additivity r(" + name(u) + "," + name(v) + ")=" + fmt(direct) +
               " via " + name(cut) + " = " + fmt(split));
        }
      }
    }
  }

  for (int i = 0; i < nf; ++i) {
    Node u = gi.followers[i];
    Node t = projection_onto_path(tree, u, l0, l1);
    if (t == u || lc.is_leader(t)) continue;
    out.checks += 2;
    if (std::abs(x.at(u) - x.at(t)) > tol) {
      fail("branch opinion x(" + std::to_string(u) + ")=" + fmt(x.at(u)) + " vs x(" +
           std::to_string(t) + ")=" + fmt(x.at(t)));
    }
    double identity = leader_set_resistance(gi, u) - pairwise_resistance(gi, u, t) -
                      leader_set_resistance(gi, t);
    if (std::abs(identity) > tol) {
      fail("cut identity at u=" + std::to_string(u) + " t=" + std::to_string(t) +
           " residual " + fmt(identity));
    }
  }
  return out;
}

VerifyReport verify_appendix(int max_n, double tol) {
  VerifyReport rep = start_report("appendix", max_n);
  for (int n = 4; n <= max_n; ++n) {
    for_each_free_tree(n, [&](const Graph& g) {
      std::vector<Node> tips = leaves(g);
      for (std::size_t a = 0; a < tips.size(); ++a) {
        for (std::size_t b = a + 1; b < tips.size(); ++b) {
          ++rep.instances;
          LemmaOutcome o = check_resistance_lemmas(g, tips[a], tips[b], tol);
          rep.checks += o.checks;
          for (auto& f : o.failures) rep.counterexamples.push_back({"resistance-lemma", f, ""});
        }
      }
    });
  }
  return rep;
}

VerifyReport run_suite(std::string_view suite, int bound, const PlacementOptions& opts) {
  if (suite == "paths") return verify_paths(bound, opts);
  if (suite == "cycles") return verify_cycles(bound, opts);
  if (suite == "ytrees") return verify_y_trees(bound, opts);
  if (suite == "trees-R2") return verify_trees_r2(bound, opts);
  if (suite == "appendix") return verify_appendix(bound, opts.tie_tol);
  throw Error(ErrorCode::InvalidArgument,
              "unknown suite `" + std::string(suite) + "` (paths|cycles|ytrees|trees-R2|appendix)");
}

std::string render(const VerifyReport& report) {
  std::ostringstream out;
  out << "suite: " << report.suite << " (bound " << report.bound << ")\n";
  out << "instances: " << report.instances << "\n";
  out << "checks: " << report.checks << "\n";
  for (const auto& line : report.audit) out << "audit: " << line << "\n";
  for (const auto& c : report.counterexamples) {
    out << "COUNTEREXAMPLE [" << c.check << "] " << c.instance;
    if (!c.detail.empty()) out << " :: " << c.detail;
    out << "\n";
  }
  out << "counterexamples: " << report.counterexamples.size() << "\n";
  out << (report.passed() ? "VERIFIED" : "FAILED") << "\n";
  return out.str();
}

} // namespace opdiv
