#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dkanon/cascade.hpp"
#include "dkanon/equivalence.hpp"
#include "dkanon/graph.hpp"
#include "dkanon/report.hpp"
#include "dkanon/twins.hpp"

namespace dkanon::cli {

namespace {

using Json = nlohmann::json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

std::string twin_mode_name(TwinMode m) {
  switch (m) {
    case TwinMode::Off: return "off";
    case TwinMode::Report: return "report";
    case TwinMode::TwinUnique: return "twin-unique";
  }
  return "off";
}

std::size_t parse_levels(const std::string& text) {
  if (text == "exhaust") return kExhaust;
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != text.size() || text.front() == '-')
    throw UsageError("--levels expects a non-negative integer or 'exhaust'");
  return static_cast<std::size_t>(value);
}

Json levels_json(std::size_t levels) { return levels == kExhaust ? Json("exhaust") : Json(levels); }

struct Loaded {
  LoadResult load;
  double seconds = 0;
};

Loaded load_graph(const RunConfig& c) {
  const auto start = Clock::now();
  LoadOptions options{c.giant};
  Loaded out;
  if (c.input_path) {
    out.load = load_edge_list_file(*c.input_path, options);
  } else {
    out.load = generate(*c.model);
    if (c.giant) {
      Graph giant = largest_component(out.load.graph);
      out.load.report.nodes_dropped_outside_giant = out.load.graph.node_count() - giant.node_count();
      out.load.report.nodes_kept = giant.node_count();
      out.load.graph = std::move(giant);
    }
  }
  out.seconds = seconds_since(start);
  return out;
}

Json graph_json(const LoadResult& r) {
  return {{"n", r.graph.node_count()}, {"m", r.graph.edge_count()}, {"load_report", to_json(r.report)}};
}

// Report output shared by every command: the deterministic part plus a
// metadata object holding wall-clock data.
struct Output {
  Json results;
  std::string csv;
  Json runtime = Json::object();
};

Output run_stats(const RunConfig& c, const Graph& g) {
  Output o;
  std::vector<std::size_t> degrees(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) degrees[v] = g.degree(v);
  std::sort(degrees.begin(), degrees.end());
  const double mean = 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.node_count());
  const std::size_t half = degrees.size() / 2;
  const double median = degrees.size() % 2 ? static_cast<double>(degrees[half])
                                           : (static_cast<double>(degrees[half - 1]) + degrees[half]) / 2.0;
  auto comps = connected_components(g);
  const std::size_t component_count = comps.empty() ? 0 : *std::max_element(comps.begin(), comps.end()) + 1;

  const auto start = Clock::now();
  TwinSets twins = find_twins(g, c.threads);
  o.runtime["twin_detection"] = seconds_since(start);

  o.results = {{"n", g.node_count()},
               {"m", g.edge_count()},
               {"degree", {{"min", degrees.front()}, {"max", degrees.back()}, {"mean", mean}, {"median", median}}},
               {"components", component_count},
               {"twin_fraction", twins.twin_fraction}};
  std::ostringstream csv;
  csv << "metric,value\n"
      << "n," << g.node_count() << "\n"
      << "m," << g.edge_count() << "\n"
      << "degree_min," << degrees.front() << "\n"
      << "degree_max," << degrees.back() << "\n"
      << "degree_mean," << format_fraction(mean) << "\n"
      << "degree_median," << format_fraction(median) << "\n"
      << "components," << component_count << "\n"
      << "twin_fraction," << format_fraction(twins.twin_fraction) << "\n";
  o.csv = csv.str();
  return o;
}

TwinSets timed_twins(const RunConfig& c, const Graph& g, Output& o) {
  const auto start = Clock::now();
  TwinSets twins = find_twins(g, c.threads);
  o.runtime["twin_detection"] = seconds_since(start);
  return twins;
}

Output run_dk(const RunConfig& c, const Graph& g) {
  Output o;
  TwinSets twins;
  if (c.twins != TwinMode::Off) twins = timed_twins(c, g, o);

  PartitionOptions options;
  options.threads = c.threads;
  Json reports = Json::array();
  Json partition_seconds = Json::object();
  std::vector<AnonymityReport> rows;
  for (std::size_t d : c.d_values) {
    const auto start = Clock::now();
    EquivalencePartition p = partition(g, d, options);
    partition_seconds[std::to_string(d)] = seconds_since(start);
    AnonymityReport r = report(p, c.k_max);
    Json j = to_json(r);
    if (c.twins == TwinMode::TwinUnique) {
      j["twin_uniqueness"] =
          static_cast<double>(twin_unique_nodes(p, twins).size()) / static_cast<double>(g.node_count());
    }
    reports.push_back(std::move(j));
    rows.push_back(std::move(r));
  }
  o.runtime["partition_by_d"] = partition_seconds;
  o.results = {{"reports", reports}};
  if (c.twins != TwinMode::Off) o.results["twins"] = to_json(twins);
  std::ostringstream csv;
  write_csv(csv, rows);
  o.csv = csv.str();
  return o;
}

Output run_cascade(const RunConfig& c, const Graph& g) {
  Output o;
  TwinSets twins;
  if (c.twins != TwinMode::Off) twins = timed_twins(c, g, o);

  PartitionOptions poptions;
  poptions.threads = c.threads;
  CascadeOptions coptions;
  coptions.threads = c.threads;
  auto start = Clock::now();
  EquivalencePartition p1 = partition(g, 1, poptions);
  o.runtime["partition_d1"] = seconds_since(start);
  start = Clock::now();
  CascadeResult r = cascade(g, p1, c.levels, coptions);
  o.runtime["cascade"] = seconds_since(start);

  o.results = {{"cascade", to_json(r)}};
  if (c.twins != TwinMode::Off) o.results["twins"] = to_json(twins);
  if (c.twins == TwinMode::TwinUnique) {
    start = Clock::now();
    CascadeResult t = twin_cascade(g, p1, twins, c.levels, coptions);
    o.runtime["twin_cascade"] = seconds_since(start);
    o.results["twin_cascade"] = to_json(t);
  }
  std::ostringstream csv;
  write_levels_csv(csv, g, r);
  o.csv = csv.str();
  return o;
}

Output run_twins(const RunConfig& c, const Graph& g) {
  Output o;
  TwinSets twins = timed_twins(c, g, o);
  o.results = to_json(twins);
  std::ostringstream csv;
  csv << "node,set,kind\n";
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const std::uint32_t s = twins.set_of[v];
    if (s == kNoTwinSet) continue;
    csv << g.label(v) << ',' << s << ',' << (s < twins.open_sets.size() ? "open" : "closed") << '\n';
  }
  o.csv = csv.str();
  return o;
}

SweepGrid load_grid(const RunConfig& c) {
  std::ifstream in(*c.sweep_config);
  if (!in) throw std::runtime_error("cannot open " + *c.sweep_config);
  SweepGrid grid = sweep_grid_from_json(Json::parse(in));
  if (c.threads != 0) grid.threads = c.threads;
  return grid;
}

Json error_json(const std::string& type, const std::string& message) {
  return {{"error", {{"type", type}, {"message", message}}}};
}

}  // namespace

Json config_json(const RunConfig& c) {
  Json j = {{"command", c.command}, {"threads", c.threads}};
  if (c.command == "sweep") {
    j["config_path"] = c.sweep_config.value_or("");
    return j;
  }
  if (c.input_path) {
    j["input"] = {{"path", *c.input_path}};
  } else if (c.model) {
    j["input"] = {{"model",
                   {{"family", to_string(c.model->family)},
                    {"n", c.model->n},
                    {"degree", c.model->degree_param},
                    {"rewiring_p", c.model->rewiring_p},
                    {"seed", c.model->seed}}}};
  }
  j["giant"] = c.giant;
  j["d"] = c.d_values;
  j["k_max"] = c.k_max;
  j["levels"] = levels_json(c.levels);
  j["twins"] = twin_mode_name(c.twins);
  j["format"] = c.format == Format::Json ? "json" : "csv";
  return j;
}

std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"d-k-anonymity, anonymity cascade, and twin analysis for undirected graphs", "dkanon"};
  app.require_subcommand(1);

  RunConfig c;
  std::string input, model, levels = "exhaust", twins = "off", format, output, config;
  std::vector<std::size_t> d_values;
  std::size_t n = 0;
  double degree = 0, rewire = 0.5;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output,-o", output, "Write the report to a file instead of stdout");
    sub->add_option("--threads", c.threads, "Worker threads (0 = all hardware threads)");
  };
  auto add_input = [&](CLI::App* sub) {
    add_common(sub);
    sub->add_option("--input,-i", input, "Edge-list file");
    sub->add_option("--model", model, "Generate a model graph: ER, BA, or WS");
    sub->add_option("--n", n, "Model node count");
    sub->add_option("--degree", degree, "ER average degree, BA m, or WS k");
    sub->add_option("--seed", seed, "Model seed");
    sub->add_option("--rewire", rewire, "WS rewiring probability");
    sub->add_flag("--giant", c.giant, "Keep only the largest connected component");
  };

  CLI::App* stats = app.add_subcommand("stats", "Graph summary");
  add_input(stats);
  CLI::App* dk = app.add_subcommand("dk", "d-k-anonymity report per d");
  add_input(dk);
  dk->add_option("--d", d_values, "Comma-separated radii")->delimiter(',');
  dk->add_option("--kmax", c.k_max, "Largest k in the report");
  dk->add_option("--twins", twins, "Twin mode")->check(CLI::IsMember({"off", "report", "twin-unique"}));
  CLI::App* casc = app.add_subcommand("cascade", "Anonymity cascade");
  add_input(casc);
  casc->add_option("--levels", levels, "Level budget or 'exhaust'");
  casc->add_option("--twins", twins, "Twin mode")->check(CLI::IsMember({"off", "report", "twin-unique"}));
  CLI::App* tw = app.add_subcommand("twins", "Twin sets");
  add_input(tw);
  CLI::App* sw = app.add_subcommand("sweep", "Model grid sweep");
  add_common(sw);
  sw->add_option("--config", config, "Sweep grid JSON file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  CLI::App* chosen = app.get_subcommands().front();
  c.command = chosen->get_name();
  c.format = c.command == "sweep" ? Format::Csv : Format::Json;
  if (!format.empty()) c.format = format == "csv" ? Format::Csv : Format::Json;
  if (!output.empty()) c.output_path = output;

  if (c.command == "sweep") {
    c.sweep_config = config;
    return c;
  }

  const bool has_input = !input.empty();
  const bool has_model = !model.empty();
  if (has_input == has_model) throw UsageError("give exactly one of --input or --model");
  if (has_input) {
    c.input_path = input;
  } else {
    if (chosen->count("--n") == 0 || chosen->count("--degree") == 0)
      throw UsageError("--model needs --n and --degree");
    try {
      c.model = ModelSpec{parse_family(model), n, degree, rewire, seed};
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (!d_values.empty()) c.d_values = d_values;
  for (std::size_t d : c.d_values)
    if (d < 1) throw UsageError("--d values must be >= 1");
  if (c.k_max < 1) throw UsageError("--kmax must be >= 1");
  c.levels = parse_levels(levels);
  c.twins = twins == "report" ? TwinMode::Report : twins == "twin-unique" ? TwinMode::TwinUnique : TwinMode::Off;
  return c;
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    const std::string started = utc_timestamp();
    const auto start = Clock::now();
    Output o;
    Json doc = {{"schema_version", kReportSchemaVersion}, {"config", config_json(c)}};

    if (c.command == "sweep") {
      SweepGrid grid = load_grid(c);
      doc["config"]["grid"] = to_json(grid);
      std::vector<SweepRow> rows = sweep(grid);
      o.results = {{"rows", to_json(std::span<const SweepRow>(rows))}};
      std::ostringstream csv;
      write_sweep_csv(csv, rows);
      o.csv = csv.str();
    } else {
      Loaded loaded = load_graph(c);
      const Graph& g = loaded.load.graph;
      if (c.command == "stats") o = run_stats(c, g);
      else if (c.command == "dk") o = run_dk(c, g);
      else if (c.command == "cascade") o = run_cascade(c, g);
      else if (c.command == "twins") o = run_twins(c, g);
      else throw UsageError("unknown command " + c.command);
      o.runtime["load"] = loaded.seconds;
      doc["graph"] = graph_json(loaded.load);
    }
    o.runtime["total"] = seconds_since(start);
    doc["results"] = std::move(o.results);
    doc["metadata"] = {{"started_at", started}, {"runtime_seconds", o.runtime}};

    std::ofstream file;
    std::ostream* sink = &out;
    if (c.output_path) {
      file.open(*c.output_path);
      if (!file) throw std::runtime_error("cannot write " + *c.output_path);
      sink = &file;
    }
    if (c.format == Format::Json) {
      *sink << doc.dump(2) << '\n';
    } else {
      *sink << o.csv;
    }
    return 0;
  } catch (const UsageError& e) {
    err << error_json("usage", e.what()).dump() << '\n';
    return 2;
  } catch (const ParseError& e) {
    Json j = error_json("parse", e.what());
    j["error"]["line"] = e.line();
    err << j.dump() << '\n';
    return 1;
  } catch (const EmptyGraphError& e) {
    err << error_json("empty_graph", e.what()).dump() << '\n';
    return 1;
  } catch (const ModelError& e) {
    err << error_json("model", e.what()).dump() << '\n';
    return 1;
  } catch (const nlohmann::json::exception& e) {
    err << error_json("config", e.what()).dump() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << error_json("runtime", e.what()).dump() << '\n';
    return 1;
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::optional<RunConfig> config;
  try {
    config = parse_args(args, out);
  } catch (const UsageError& e) {
    err << error_json("usage", e.what()).dump() << '\n';
    return 2;
  }
  return config ? run(*config, out, err) : 0;
}

}  // namespace dkanon::cli
