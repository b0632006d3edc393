#include "opdiv/cli.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "opdiv/diversity.hpp"
#include "opdiv/dynamics.hpp"
#include "opdiv/edge_list.hpp"
#include "opdiv/error.hpp"

namespace opdiv::cli {

namespace {

int parse_positive(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "cannot read " + std::string(what) + " from `" + std::string(text) + "`");
  }
  return value;
}

std::string label_of(const Topology& t) {
  switch (t.kind) {
    case Topology::Kind::Path: return "path(" + std::to_string(t.n) + ")";
    case Topology::Kind::Cycle: return "cycle(" + std::to_string(t.n) + ")";
    case Topology::Kind::YTree:
      return "ytree(" + std::to_string(t.arms[0]) + "," + std::to_string(t.arms[1]) + "," +
             std::to_string(t.arms[2]) + ")";
    case Topology::Kind::Unknown: break;
  }
  return "graph";
}

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

} // namespace

Topology parse_generator(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::InvalidArgument,
                "generator `" + std::string(spec) + "` must look like path:N, cycle:N or ytree:A,B,C");
  }
  std::string_view kind = spec.substr(0, colon);
  std::string_view args = spec.substr(colon + 1);
  Topology t;
  if (kind == "path" || kind == "cycle") {
    t.kind = kind == "path" ? Topology::Kind::Path : Topology::Kind::Cycle;
    t.n = parse_positive(args, "node count");
    return t;
  }
  if (kind == "ytree") {
    t.kind = Topology::Kind::YTree;
    for (int i = 0; i < 3; ++i) {
      auto comma = args.find(',');
      if ((i < 2) == (comma == std::string_view::npos)) {
        throw Error(ErrorCode::InvalidArgument, "ytree needs exactly three arm lengths A,B,C");
      }
      t.arms[i] = parse_positive(args.substr(0, comma), "arm length");
      args = comma == std::string_view::npos ? std::string_view{} : args.substr(comma + 1);
    }
    t.n = t.arms[0] + t.arms[1] + t.arms[2] + 1;
    return t;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown generator `" + std::string(kind) + "`");
}

Topology recognize(const Graph& g) {
  const int n = g.node_count();
  Topology t;
  t.n = n;
  bool chain = n >= 3;
  for (Node v = 1; v < n && chain; ++v) chain = g.has_edge(v, v + 1);
  if (chain && g.edge_count() == static_cast<std::size_t>(n - 1)) {
    t.kind = Topology::Kind::Path;
  } else if (chain && g.edge_count() == static_cast<std::size_t>(n) && g.has_edge(n, 1)) {
    t.kind = Topology::Kind::Cycle;
  } else if (g.is_tree()) {
    int deg3 = 0, higher = 0;
    for (Node v = 1; v <= n; ++v) {
      deg3 += g.degree(v) == 3;
      higher += g.degree(v) > 3;
    }
    if (deg3 == 1 && higher == 0) t.kind = Topology::Kind::YTree;
  }
  return t;
}

LoadedGraph load_graph(const GraphSource& source) {
  if (source.file.has_value() == source.generator.has_value()) {
    throw Error(ErrorCode::InvalidArgument, "give exactly one of --graph FILE or --gen SPEC");
  }
  if (source.file) {
    Graph g = read_edge_list(*source.file);
    Topology t = recognize(g);
    std::string label = source.file->filename().string();
    if (t.kind == Topology::Kind::Path || t.kind == Topology::Kind::Cycle) {
      label += " [" + label_of(t) + "]";
    } else if (t.kind == Topology::Kind::YTree) {
      label += " [y-tree]";
    }
    return {std::move(g), t, label};
  }
  Topology t = parse_generator(*source.generator);
  switch (t.kind) {
    case Topology::Kind::Path: return {path_graph(t.n), t, label_of(t)};
    case Topology::Kind::Cycle: return {cycle_graph(t.n), t, label_of(t)};
    default: return {y_tree(t.arms[0], t.arms[1], t.arms[2]), t, label_of(t)};
  }
}

int resolve_bins(std::string_view r_spec, int n_f) {
  int R = r_spec == "nf" ? n_f : parse_positive(r_spec, "bin count");
  if (R < 2) {
    throw Error(ErrorCode::UnsupportedBinCount, "R resolves to " + std::to_string(R) + "; need R >= 2");
  }
  return R;
}

namespace {

std::optional<PredictorCheck> predictor_for(const LoadedGraph& lg, Node l0, int R, int n_f) {
  std::optional<BinRule> rule;
  if (R == n_f) {
    rule = BinRule::PerFollower;
  } else if (R == 2) {
    rule = BinRule::Two;
  }
  if (!rule) return std::nullopt;

  const int n = lg.graph.node_count();
  std::string regime = *rule == BinRule::PerFollower ? "R=n_f" : "R=2";
  PredictorCheck check;
  switch (lg.topology.kind) {
    case Topology::Kind::Path:
      check.name = "path " + regime;
      check.predicted = predict_path(n, l0, *rule);
      break;
    case Topology::Kind::Cycle:
      check.name = "cycle " + regime;
      // Rotate so that l0 sits at node 1, predict, rotate back.
      for (Node v : predict_cycle(n, *rule)) check.predicted.push_back((v - 1 + l0 - 1) % n + 1);
      std::sort(check.predicted.begin(), check.predicted.end());
      break;
    case Topology::Kind::YTree:
      if (*rule != BinRule::PerFollower || lg.graph.degree(l0) != 1) return std::nullopt;
      check.name = "y-tree R=n_f";
      check.predicted = predict_y_tree(lg.graph, l0);
      break;
    case Topology::Kind::Unknown:
      return std::nullopt;
  }
  return check;
}

bool within(const std::vector<Node>& predicted, const std::vector<Node>& argmax) {
  if (predicted.empty()) return false;
  for (Node v : predicted) {
    if (std::find(argmax.begin(), argmax.end(), v) == argmax.end()) return false;
  }
  return true;
}

} // namespace

Report cmd_place(const ExperimentConfig& config) {
  LoadedGraph lg = load_graph(config.source);
  const int n = lg.graph.node_count();
  if (!lg.graph.contains(config.l0)) {
    throw Error(ErrorCode::EndpointOutOfRange,
                "--l0 " + std::to_string(config.l0) + " is outside 1.." + std::to_string(n));
  }
  const int n_f = n - 2;
  const int R = resolve_bins(config.r_spec, n_f);

  Report report;
  report.graph_label = lg.label;
  report.n = n;
  PlacementOptions opts;
  opts.snap_tol = config.snap_tol;
  report.placement = brute_force_best(lg.graph, config.l0, R, opts);
  if (R == 2 || R == n_f) {
    report.simpson_bound = max_diversity(n_f, R, Measure::Simpson);
    report.shannon_bound = max_diversity(n_f, R, Measure::Shannon);
  }
  report.predictor = predictor_for(lg, config.l0, R, n_f);
  if (report.predictor) {
    report.predictor->agrees_simpson = within(report.predictor->predicted, report.placement.argmax_simpson);
    report.predictor->agrees_shannon = within(report.predictor->predicted, report.placement.argmax_shannon);
  }
  return report;
}

std::string render(const Report& report, OutputFormat format) {
  const PlacementResult& p = report.placement;
  if (format == OutputFormat::Csv) {
    std::string out = "l1,simpson,shannon\n";
    for (const auto& [node, s] : p.scores) {
      out += std::to_string(node) + "," + fmt12(s.simpson) + "," + fmt12(s.shannon) + "\n";
    }
    return out;
  }
  if (format == OutputFormat::Json) {
    nlohmann::ordered_json j;
    j["graph"] = report.graph_label;
    j["n"] = report.n;
    j["placement"] = nlohmann::ordered_json::parse(to_json(p));
    if (report.simpson_bound) {
      j["max_simpson"] = *report.simpson_bound;
      j["max_shannon"] = *report.shannon_bound;
    }
    if (report.predictor) {
      j["predictor"] = {{"name", report.predictor->name},
                        {"predicted", report.predictor->predicted},
                        {"agrees_simpson", report.predictor->agrees_simpson},
                        {"agrees_shannon", report.predictor->agrees_shannon}};
    }
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "graph: " << report.graph_label << "  n=" << report.n << "  n_f=" << p.n_f << "\n";
  out << "l0: " << p.l0 << "  R: " << p.R << "\n\n";
  out << render_table(p) << "\n";
  out << "argmax Simpson: " << format_set(p.argmax_simpson) << "\n";
  out << "argmax Shannon: " << format_set(p.argmax_shannon) << "\n";
  out << "optimum Simpson: " << format_3dp(p.best(Measure::Simpson));
  if (report.simpson_bound) out << "  (maximum " << format_3dp(*report.simpson_bound) << ")";
  out << "\noptimum Shannon: " << format_3dp(p.best(Measure::Shannon));
  if (report.shannon_bound) out << "  (maximum " << format_3dp(*report.shannon_bound) << ")";
  out << "\n";
  if (report.predictor) {
    const auto& pc = *report.predictor;
    out << "predictor (" << pc.name << "): " << format_set(pc.predicted)
        << "  Simpson " << (pc.agrees_simpson ? "agrees" : "DISAGREES")
        << ", Shannon " << (pc.agrees_shannon ? "agrees" : "DISAGREES") << "\n";
  }
  return out.str();
}

VerifyReport cmd_verify(std::string_view suite, int bound) {
  const int minimum = suite == "ytrees" ? 1 : 4;
  if (bound < minimum) {
    throw Error(ErrorCode::InvalidArgument, "bound for " + std::string(suite) + " must be >= " +
                                                std::to_string(minimum));
  }
  return run_suite(suite, bound);
}

std::string cmd_dump(const GraphSource& source, Node l0, Node l1, std::string_view r_spec,
                     double snap_tol) {
  LoadedGraph lg = load_graph(source);
  LeaderConfig lc = LeaderConfig::single(lg.graph, l0, l1);
  OpinionVector x = steady_state(lg.graph, lc);
  int R = resolve_bins(r_spec, static_cast<int>(x.size()));
  return to_csv(x) + "\n" + to_json(bin_opinions(x, R, snap_tol)) + "\n";
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Leader placement for opinion diversity in French-DeGroot networks"};
  app.require_subcommand(1);

  GraphSource source;
  std::string graph_file, generator, r_spec = "nf", format = "table", out_file;
  Node l0 = 1, l1 = 0;
  double snap_tol = kDefaultSnapTolerance;
  std::string suite;
  int bound = 0;

  auto add_source = [&](CLI::App* cmd) {
    auto* file_opt = cmd->add_option("--graph", graph_file, "edge-list file");
    auto* gen_opt = cmd->add_option("--gen", generator, "path:N | cycle:N | ytree:A,B,C");
    file_opt->excludes(gen_opt);
  };

  auto* place = app.add_subcommand("place", "score every 1-leader placement");
  add_source(place);
  place->add_option("--l0", l0, "0-leader node")->required();
  place->add_option("--R", r_spec, "bin count: 2 | nf | integer");
  place->add_option("--format", format, "table | csv | json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  place->add_option("--snap-tol", snap_tol, "bin boundary snap tolerance");
  place->add_option("--out", out_file, "write output to FILE");

  auto* verify = app.add_subcommand("verify", "sweep a graph family against brute force");
  verify->add_option("suite", suite, "paths | cycles | ytrees | trees-R2 | appendix")
      ->required()
      ->check(CLI::IsMember({"paths", "cycles", "ytrees", "trees-R2", "appendix"}));
  verify->add_option("--bound", bound, "largest n (arm length for ytrees)")->required();
  verify->add_option("--out", out_file, "write output to FILE");

  auto* dump = app.add_subcommand("dump", "steady-state opinions and histogram");
  add_source(dump);
  dump->add_option("--l0", l0, "0-leader node")->required();
  dump->add_option("--l1", l1, "1-leader node")->required();
  dump->add_option("--R", r_spec, "bin count: 2 | nf | integer");
  dump->add_option("--snap-tol", snap_tol, "bin boundary snap tolerance");
  dump->add_option("--out", out_file, "write output to FILE");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  if (!graph_file.empty()) source.file = graph_file;
  if (!generator.empty()) source.generator = generator;

  std::string text;
  int status = 0;
  try {
    if (place->parsed()) {
      ExperimentConfig config{source, l0, r_spec, OutputFormat::Table, snap_tol};
      if (format == "csv") config.format = OutputFormat::Csv;
      if (format == "json") config.format = OutputFormat::Json;
      text = render(cmd_place(config), config.format);
    } else if (verify->parsed()) {
      VerifyReport report = cmd_verify(suite, bound);
      text = render(report);
      status = report.passed() ? 0 : 2;
    } else {
      text = cmd_dump(source, l0, l1, r_spec, snap_tol);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (out_file.empty()) {
    out << text;
  } else {
    std::ofstream file(out_file, std::ios::binary);
    if (!(file << text)) {
      err << "error: cannot write " << out_file << "\n";
      return 1;
    }
  }
  return status;
}

} // namespace opdiv::cli
