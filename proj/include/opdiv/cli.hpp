#ifndef OPDIV_CLI_HPP_
#define OPDIV_CLI_HPP_

#include <array>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opdiv/graph.hpp"
#include "opdiv/placement.hpp"
#include "opdiv/verify.hpp"

namespace opdiv::cli {

enum class OutputFormat { Table, Csv, Json };

// Exactly one of file / generator is set.
struct GraphSource {
  std::optional<std::filesystem::path> file;
  std::optional<std::string> generator;  // path:N | cycle:N | ytree:A,B,C
};

// Canonically labelled family the graph belongs to, if any.
struct Topology {
  enum class Kind { Unknown, Path, Cycle, YTree } kind = Kind::Unknown;
  int n = 0;
  std::array<int, 3> arms{};
};

struct LoadedGraph {
  Graph graph;
  Topology topology;
  std::string label;
};

Topology parse_generator(std::string_view spec);
LoadedGraph load_graph(const GraphSource& source);
Topology recognize(const Graph& g);

// "2", "nf" or an explicit integer >= 2.
int resolve_bins(std::string_view r_spec, int n_f);

struct ExperimentConfig {
  GraphSource source;
  Node l0 = 1;
  std::string r_spec = "nf";
  OutputFormat format = OutputFormat::Table;
  double snap_tol = kDefaultSnapTolerance;
};

struct PredictorCheck {
  std::string name;
  std::vector<Node> predicted;
  bool agrees_simpson = false;
  bool agrees_shannon = false;
};

struct Report {
  std::string graph_label;
  int n = 0;
  PlacementResult placement;
  std::optional<double> simpson_bound;
  std::optional<double> shannon_bound;
  std::optional<PredictorCheck> predictor;
};

Report cmd_place(const ExperimentConfig& config);
std::string render(const Report& report, OutputFormat format);

VerifyReport cmd_verify(std::string_view suite, int bound);

// Steady-state CSV, a blank line, then the histogram JSON.
std::string cmd_dump(const GraphSource& source, Node l0, Node l1, std::string_view r_spec,
                     double snap_tol);

// Exit codes: 0 success/verified, 1 usage or input error, 2 counterexample found.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace opdiv::cli

#endif // OPDIV_CLI_HPP_
