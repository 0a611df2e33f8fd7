#include "fsna/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "fsna/centrality.hpp"
#include "fsna/ingestion.hpp"
#include "fsna/io.hpp"
#include "fsna/synth.hpp"

namespace fsna {

namespace {

using Json = nlohmann::json;

/// Bad flags or parameter values; maps to kExitUsage.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string input;
  std::string out;
  std::string params_path;
  std::uint64_t seed = 1;
  std::vector<std::string> indices;
  std::string weights = "mean";
  std::size_t step_cap = 4;
  double tie_eps = default_tolerance;
  bool normalized = true;
  double scale_max = 1.0;
  std::string closeness_direction = "degree-convention";
  std::size_t max_paths = 100000;
  std::string format;
  std::string layout = "edge-list";
  bool serial = false;
  // ingest
  double q_lo = 0.05;
  double q_hi = 0.95;
  double min_spread = 0.0;
  bool uniform_weights = false;
  // synth
  std::size_t nodes = 10;
  double density = 0.5;
  double vagueness = 0.2;
  bool responses = false;
};

/// Options that were given on the command line; they override --params.
struct Given {
  std::set<std::string> names;
  bool has(const std::string& name) const { return names.count(name) != 0; }
};

template <typename T>
void take(const Json& doc, const char* key, const Given& given, const char* flag, T& target) {
  if (!doc.contains(key) || given.has(flag))
    return;
  try {
    target = doc.at(key).get<T>();
  } catch (const Json::exception&) {
    throw UsageError(std::string("--params: bad value for '") + key + "'");
  }
}

void apply_params_file(Flags& flags, const Given& given) {
  if (flags.params_path.empty())
    return;
  Json doc;
  try {
    doc = Json::parse(read_file(flags.params_path));
  } catch (const Json::parse_error& e) {
    throw UsageError("--params: " + std::string(e.what()));
  } catch (const std::runtime_error& e) {
    throw UsageError("--params: " + std::string(e.what()));
  }
  if (!doc.is_object())
    throw UsageError("--params: expected a JSON object");
  static const std::set<std::string> known = {
      "seed",     "indices",   "weights",  "step_cap",   "tie_eps",     "normalized",
      "scale_max", "closeness_direction", "max_paths", "format", "layout", "serial",
      "q_lo",     "q_hi",      "min_spread", "uniform_weights", "nodes", "density",
      "vagueness"};
  for (const auto& [key, value] : doc.items())
    if (!known.count(key))
      throw UsageError("--params: unknown key '" + key + "'");

  if (doc.contains("weights") && !given.has("weights")) {
    const auto& w = doc["weights"];
    if (w.is_string()) {
      flags.weights = w.get<std::string>();
    } else if (w.is_array()) {
      std::string joined;
      for (const auto& x : w) {
        if (!x.is_number())
          throw UsageError("--params: weights must be numbers");
        joined += (joined.empty() ? "" : ",") + format_real(x.get<double>());
      }
      flags.weights = joined;
    } else {
      throw UsageError("--params: weights must be a preset name or an array");
    }
  }
  take(doc, "seed", given, "seed", flags.seed);
  take(doc, "indices", given, "index", flags.indices);
  take(doc, "step_cap", given, "steps", flags.step_cap);
  take(doc, "tie_eps", given, "tie-eps", flags.tie_eps);
  take(doc, "normalized", given, "normalized", flags.normalized);
  take(doc, "scale_max", given, "scale-max", flags.scale_max);
  take(doc, "closeness_direction", given, "closeness-direction", flags.closeness_direction);
  take(doc, "max_paths", given, "max-paths", flags.max_paths);
  take(doc, "format", given, "format", flags.format);
  take(doc, "layout", given, "layout", flags.layout);
  take(doc, "serial", given, "serial", flags.serial);
  take(doc, "q_lo", given, "q-lo", flags.q_lo);
  take(doc, "q_hi", given, "q-hi", flags.q_hi);
  take(doc, "min_spread", given, "min-spread", flags.min_spread);
  take(doc, "uniform_weights", given, "uniform-weights", flags.uniform_weights);
  take(doc, "nodes", given, "nodes", flags.nodes);
  take(doc, "density", given, "density", flags.density);
  take(doc, "vagueness", given, "vagueness", flags.vagueness);
}

NetworkLayout layout_of(const std::string& name) {
  if (name == "edge-list")
    return NetworkLayout::edge_list;
  if (name == "matrix")
    return NetworkLayout::matrix;
  throw UsageError("unknown layout '" + name + "' (expected edge-list or matrix)");
}

std::vector<IndexKind> selected_indices(const std::vector<std::string>& names) {
  std::vector<IndexKind> kinds;
  const auto add = [&](IndexKind k) {
    if (std::find(kinds.begin(), kinds.end(), k) == kinds.end())
      kinds.push_back(k);
  };
  for (const auto& list : names) {
    std::stringstream stream(list);
    std::string name;
    while (std::getline(stream, name, ',')) {
      if (name.empty())
        continue;
      if (name == "all") {
        for (auto k : fuzzy_indices())
          add(k);
      } else if (name == "crisp-baselines" || name == "crisp_baselines") {
        for (auto k : crisp_indices())
          add(k);
      } else if (auto k = parse_index_kind(name)) {
        add(*k);
      } else {
        throw UsageError("unknown index '" + name + "'");
      }
    }
  }
  if (kinds.empty())
    throw UsageError("no index selected (use --index)");
  return kinds;
}

IndexParameters index_parameters(const Flags& flags, const Given& given) {
  IndexParameters p;
  try {
    p.weights = WeightSpec::parse(flags.weights);
  } catch (const std::exception& e) {
    throw UsageError("--weights: " + std::string(e.what()));
  }
  if (flags.step_cap < 1)
    throw UsageError("--steps must be at least 1");
  if (!(flags.tie_eps >= 0.0))
    throw UsageError("--tie-eps must be nonnegative");
  if (flags.max_paths < 1)
    throw UsageError("--max-paths must be at least 1");
  p.step_cap = flags.step_cap;
  p.tie_eps = flags.tie_eps;
  p.normalized = flags.normalized;
  p.max_paths = flags.max_paths;
  if (given.has("scale-max") || given.has("params-scale-max")) {
    if (!(flags.scale_max > 0.0))
      throw UsageError("--scale-max must be positive");
    p.scale_max = flags.scale_max;
  }
  if (flags.closeness_direction == "degree-convention")
    p.closeness_direction = ClosenessDirection::degree_convention;
  else if (flags.closeness_direction == "literal")
    p.closeness_direction = ClosenessDirection::literal;
  else
    throw UsageError("unknown closeness direction '" + flags.closeness_direction + "'");
  return p;
}

FuzzyDigraph load_network(const std::string& path) {
  if (path.empty())
    throw UsageError("missing input network");
  return parse_network(read_file(path));
}

/// Writes to --out when given, else to `out`.
void emit(const Flags& flags, std::ostream& out, const std::string& text) {
  if (flags.out.empty())
    out << text;
  else
    write_file(flags.out, text);
}

int cmd_ingest(const Flags& flags, std::ostream& out, std::ostream& err) {
  if (flags.input.empty())
    throw UsageError("missing responses file");
  FuzzificationConfig config;
  config.q_lo = flags.q_lo;
  config.q_hi = flags.q_hi;
  config.min_spread = flags.min_spread;
  config.dwell_weighting = !flags.uniform_weights;
  try {
    validate(config);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  const auto layout = layout_of(flags.layout);
  const auto responses = parse_responses(read_file(flags.input));
  const auto result = build_network(responses, config);
  for (const auto& w : result.warnings)
    err << "warning: " << w << "\n";
  for (const auto& r : result.rejected)
    err << "rejected: responses[" << r.position << "]: " << r.reason << "\n";

  std::ostream& summary = flags.out.empty() ? err : out;
  emit(flags, out, format_network(result.graph, layout));
  summary << "nodes " << result.graph.size() << " edges " << result.graph.edge_count()
          << " rejected " << result.rejected.size() << " warnings " << result.warnings.size()
          << "\n";
  return result.rejected.empty() ? kExitOk : kExitDataError;
}

std::string report_text(const FuzzyDigraph& g, const CentralityReport& report,
                        const ReportContext& context, const std::string& format) {
  return format == "json" ? format_report_json(g, report, context)
                          : format_report_table(g, report, context);
}

int cmd_analyze(const Flags& flags, const Given& given, std::ostream& out, std::ostream& err) {
  const auto kinds = selected_indices(flags.indices);
  const auto params = index_parameters(flags, given);
  const std::string format = flags.format.empty() ? "tsv" : flags.format;
  if (format != "tsv" && format != "json")
    throw UsageError("unknown report format '" + format + "' (expected tsv or json)");
  const auto g = load_network(flags.input);
  const auto policy = flags.serial ? Execution::serial : Execution::parallel;
  const auto reports = build_report(g, kinds, params, policy);
  const ReportContext context{params, std::filesystem::path(flags.input).filename().string()};

  std::size_t warnings = 0;
  for (const auto& report : reports) {
    if (report.truncated) {
      ++warnings;
      err << "warning: " << to_string(report.index) << ": path enumeration hit --max-paths "
          << params.max_paths << "; betweenness is approximate\n";
    }
  }
  if (flags.out.empty()) {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i != 0 && format == "tsv")
        out << "\n";
      out << report_text(g, reports[i], context, format);
    }
  } else {
    std::filesystem::create_directories(flags.out);
    for (const auto& report : reports) {
      const auto path = std::filesystem::path(flags.out) /
                        (std::string(to_string(report.index)) + "." + format);
      write_file(path, report_text(g, report, context, format));
    }
    out << "reports " << reports.size() << " warnings " << warnings << "\n";
  }
  return kExitOk;
}

int cmd_rank(const Flags& flags, const Given& given, std::ostream& out, std::ostream& err) {
  const auto kinds = selected_indices(flags.indices);
  if (kinds.size() != 1)
    throw UsageError("rank takes exactly one index");
  const auto params = index_parameters(flags, given);
  const auto g = load_network(flags.input);
  const auto policy = flags.serial ? Execution::serial : Execution::parallel;
  const auto report = build_report(g, kinds, params, policy).front();
  if (report.truncated)
    err << "warning: path enumeration hit --max-paths; betweenness is approximate\n";
  std::string text = "rank\tnode\tvalue\n";
  for (const auto& row : report.rows)
    text += std::to_string(row.rank) + "\t" + g.label(row.node) + "\t" + format_real(row.value) + "\n";
  emit(flags, out, text);
  return kExitOk;
}

int cmd_export(const Flags& flags, std::ostream& out) {
  const std::string format = flags.format.empty() ? "dot" : flags.format;
  const auto g = load_network(flags.input);
  if (format == "dot")
    emit(flags, out, format_dot(g));
  else if (format == "matrix" || format == "edge-list")
    emit(flags, out, format_network(g, layout_of(format)));
  else
    throw UsageError("unknown export format '" + format + "' (expected dot, matrix or edge-list)");
  return kExitOk;
}

int cmd_synth(const Flags& flags, std::ostream& out) {
  SynthOptions options;
  options.nodes = flags.nodes;
  options.density = flags.density;
  options.vagueness = flags.vagueness;
  options.seed = flags.seed;
  options.scale_max = flags.scale_max;
  try {
    validate(options);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  if (flags.responses)
    emit(flags, out, format_responses(synthesize_responses(options)));
  else
    emit(flags, out, format_network(synthesize(options), layout_of(flags.layout)));
  return kExitOk;
}

void report_format_error(const std::string& source, const FormatError& e, std::ostream& err) {
  for (const auto& d : e.diagnostics()) {
    err << "error: " << (source.empty() ? "input" : source);
    if (d.line != 0)
      err << ":" << d.line;
    err << ": ";
    if (!d.where.empty())
      err << d.where << ": ";
    err << d.message << "\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fuzzy social network analysis", "fsna"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags flags;

  app.add_option("--seed", flags.seed, "Random seed (synth)");
  app.add_option("--params", flags.params_path, "JSON parameter file; flags override it")
      ->check(CLI::ExistingFile);
  app.add_option("--out", flags.out, "Output file (analyze: output directory)");

  const auto add_index_options = [&](CLI::App* cmd) {
    cmd->add_option("--index", flags.indices,
                    "Indices: in-degree, out-degree, total-degree, betweenness, in-closeness, "
                    "out-closeness, total-closeness, all, crisp-baselines or crisp-*")
        ->delimiter(',');
    cmd->add_option("--weights", flags.weights, "OWA weights: max, min, mean or w1,w2,...");
    cmd->add_option("--steps", flags.step_cap, "Maximum ties per path");
    cmd->add_option("--tie-eps", flags.tie_eps, "Tolerance for equal strengths");
    cmd->add_option("--normalized", flags.normalized, "Divide ties by scale_max (true/false)");
    cmd->add_option("--scale-max", flags.scale_max, "Override the network's scale_max");
    cmd->add_option("--closeness-direction", flags.closeness_direction,
                    "degree-convention or literal");
    cmd->add_option("--max-paths", flags.max_paths, "Cap on tied best paths per pair");
    cmd->add_flag("--serial", flags.serial, "Run the serial kernels");
  };

  auto* ingest = app.add_subcommand("ingest", "Build a network from a responses document");
  ingest->add_option("responses", flags.input, "Responses JSON")->required();
  ingest->add_option("--layout", flags.layout, "edge-list or matrix");
  ingest->add_option("--q-lo", flags.q_lo, "Lower support quantile");
  ingest->add_option("--q-hi", flags.q_hi, "Upper support quantile");
  ingest->add_option("--min-spread", flags.min_spread, "Minimum spread on each side");
  ingest->add_flag("--uniform-weights", flags.uniform_weights, "Weight samples equally");

  auto* analyze = app.add_subcommand("analyze", "Compute centrality reports");
  analyze->add_option("network", flags.input, "Network file")->required();
  analyze->add_option("--format", flags.format, "tsv or json");
  add_index_options(analyze);

  auto* rank = app.add_subcommand("rank", "Print the node ordering for one index");
  rank->add_option("network", flags.input, "Network file")->required();
  add_index_options(rank);

  auto* exporter = app.add_subcommand("export", "Convert a network to dot, matrix or edge-list");
  exporter->add_option("network", flags.input, "Network file")->required();
  exporter->add_option("--format", flags.format, "dot, matrix or edge-list");

  auto* synth = app.add_subcommand("synth", "Generate a random network");
  synth->add_option("--nodes", flags.nodes, "Number of nodes");
  synth->add_option("--density", flags.density, "Tie probability in [0, 1]");
  synth->add_option("--vagueness", flags.vagueness, "Spread fraction in [0, 1]");
  synth->add_option("--scale-max", flags.scale_max, "Upper end of the rating scale");
  synth->add_option("--layout", flags.layout, "edge-list or matrix");
  synth->add_flag("--responses", flags.responses, "Emit a responses document instead");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  Given given;
  for (const auto* cmd : {&app, ingest, analyze, rank, exporter, synth})
    for (const auto* opt : cmd->get_options())
      if (opt->count() > 0 && !opt->get_lnames().empty())
        given.names.insert(opt->get_lnames().front());

  try {
    apply_params_file(flags, given);
    if (!flags.params_path.empty() && !given.has("scale-max")) {
      // A scale_max from --params counts as an explicit override.
      const auto doc = Json::parse(read_file(flags.params_path));
      if (doc.contains("scale_max"))
        given.names.insert("params-scale-max");
    }
    if (ingest->parsed())
      return cmd_ingest(flags, out, err);
    if (analyze->parsed())
      return cmd_analyze(flags, given, out, err);
    if (rank->parsed())
      return cmd_rank(flags, given, out, err);
    if (exporter->parsed())
      return cmd_export(flags, out);
    return cmd_synth(flags, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FormatError& e) {
    report_format_error(flags.input, e, err);
    return kExitDataError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  }
}

}  // namespace fsna
