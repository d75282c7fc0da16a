/*
    Copyright (C) 2026 The cepnet authors

    Licensed under the Apache License, Version 2.0 (the "License");
    you may not use this file except in compliance with the License.
    You may obtain a copy of the License at

        https://www.apache.org/licenses/LICENSE-2.0

    Unless required by applicable law or agreed to in writing, software
    distributed under the License is distributed on an "AS IS" BASIS,
    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
    See the License for the specific language governing permissions and
    limitations under the License.
*/

// Command-line front end: parse, explain, run-sim, replay, inspect, metrics.

#include "cepnet/placement/assign.hpp"
#include "cepnet/query/normalize.hpp"
#include "cepnet/query/parser.hpp"
#include "cepnet/sim/simulator.hpp"
#include "cepnet/tables/dump.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using namespace cepnet;

enum Exit { OK = 0, SYNTAX = 1, SEMANTIC = 2, CONFIG = 3 };

std::string
read_all(std::istream& in)
{
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool
blank(const std::string& text)
{
  return text.find_first_not_of(" \t\r\n") == std::string::npos;
}

int
report(const std::exception& e, int code)
{
  std::cerr << "error: " << e.what() << '\n';
  return code;
}

/// Runs a command body and maps the error hierarchy onto exit codes.
template<typename F>
int
guarded(F&& body)
{
  try {
    return body();
  }
  catch (const ParseError& e) {
    return report(e, SYNTAX);
  }
  catch (const SemanticError& e) {
    return report(e, SEMANTIC);
  }
  catch (const std::exception& e) {
    return report(e, CONFIG);
  }
}

void
print_parse(const OperatorNode& tree, const std::string& text)
{
  std::cout << print_tree(tree);
  std::cout << "nfn: " << tree.nfn << '\n';
  std::cout << "hash: " << query_hash(normalize_query(text)) << '\n';
}

std::string
fmt(double v)
{
  if (std::isnan(v)) {
    return "nan";
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

} // namespace

int
main(int argc, char** argv)
{
  CLI::App app{"In-network CEP broker and simulation harness"};
  app.require_subcommand(1);

  std::string queryText;
  std::string queryFile;
  auto* parse = app.add_subcommand("parse", "Parse a query and print its operator tree and NFN expression");
  parse->add_option("query", queryText, "Query text; read from stdin when omitted and no --file is given");
  parse->add_option("--file", queryFile, "Read the query from a file")->check(CLI::ExistingFile);

  bool placement = false;
  std::string scenarioPath;
  std::string queryId;
  std::string modeText;
  std::string atNode;
  auto* explain = app.add_subcommand("explain", "Show how a query of a scenario would be placed");
  explain->add_flag("--placement", placement, "Print the placement plan");
  explain->add_option("--scenario", scenarioPath, "Scenario file")->required();
  explain->add_option("--query", queryId, "Query id from the scenario (default: the first)");
  explain->add_option("--text", queryText, "Query text instead of a scenario query");
  explain->add_option("--mode", modeText, "centralized or distributed")
    ->check(CLI::IsMember({"centralized", "distributed"}));
  explain->add_option("--at", atNode, "Node that issues the query");

  std::string simScenario;
  std::optional<std::uint64_t> seed;
  std::string metricsOut;
  std::string traceOut;
  std::string dumpDir;
  auto* runSim = app.add_subcommand("run-sim", "Run a scenario");
  runSim->add_option("scenario", simScenario, "Scenario file")->required();
  runSim->add_option("--seed", seed, "Override the scenario seed");
  runSim->add_option("--metrics", metricsOut, "Write the per-query metrics CSV");
  runSim->add_option("--trace", traceOut, "Write the event trace");
  runSim->add_option("--dump-dir", dumpDir, "Write one table dump per broker");

  std::string csvPath;
  std::string schemaId = "gps";
  std::string streamName = "/stream";
  double rate = 1;
  double offset = 0;
  auto* replay = app.add_subcommand("replay", "Print the packet schedule of a dataset");
  replay->add_option("csv", csvPath, "Dataset CSV")->required();
  replay->add_option("--schema", schemaId, "gps or plug")->check(CLI::IsMember({"gps", "plug"}));
  replay->add_option("--name", streamName, "Stream name");
  replay->add_option("--rate", rate, "Dataset ms per simulated ms")->check(CLI::PositiveNumber);
  replay->add_option("--offset", offset, "Emission offset in ms");

  std::string dumpPath;
  auto* inspect = app.add_subcommand("inspect", "Print the tables of a node dump");
  inspect->add_option("dump", dumpPath, "Node dump file")->required();

  std::vector<std::string> metricFiles;
  double level = 0.95;
  auto* metrics = app.add_subcommand("metrics", "Mean and confidence interval per query and column");
  metrics->add_option("csv", metricFiles, "Metrics CSV files, one per run")->required();
  metrics->add_option("--level", level, "Confidence level")->check(CLI::Range(0.5, 0.999));

  try {
    app.parse(argc, argv);
  }
  catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  }
  catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  }
  catch (const CLI::ParseError& e) {
    app.exit(e);
    return CONFIG;
  }

  if (parse->parsed()) {
    return guarded([&] {
      std::string text = queryText;
      if (!queryFile.empty()) {
        std::ifstream in(queryFile);
        text = read_all(in);
      }
      else if (parse->count("query") == 0) {
        text = read_all(std::cin);
      }
      if (blank(text)) {
        std::cerr << "error: empty query\n";
        return static_cast<int>(SYNTAX);
      }
      auto tree = create_operator_graph(text);
      print_parse(tree, text);
      return static_cast<int>(OK);
    });
  }

  if (explain->parsed()) {
    return guarded([&] {
      auto spec = load_scenario(scenarioPath);
      const QuerySpec* q = nullptr;
      for (const auto& candidate : spec.queries) {
        if (queryId.empty() || candidate.id == queryId) {
          q = &candidate;
          break;
        }
      }
      if (q == nullptr && queryText.empty()) {
        throw ConfigError(queryId.empty() ? "scenario has no query" : "no query '" + queryId + "' in scenario");
      }
      std::string text = queryText.empty() ? q->text : queryText;
      PlacementMode mode = modeText.empty() ? (q ? q->mode : PlacementMode::Centralized) : parse_placement_mode(modeText);
      NodeId issuer = atNode.empty() ? (q ? q->issuer : "") : atNode;
      const auto* spec_node = spec.topology.find(issuer);
      if (spec_node == nullptr) {
        throw ConfigError("unknown issuing node '" + issuer + "'");
      }
      NodeId coordinator = issuer;
      if (spec_node->role != Role::Broker) {
        for (const auto& l : spec.topology.links) {
          if (l.a == issuer || l.b == issuer) {
            coordinator = l.a == issuer ? l.b : l.a;
            break;
          }
        }
      }

      auto catalog = spec.catalog();
      auto tree = create_operator_graph(text, catalog);
      if (!placement) {
        print_parse(tree, text);
        return static_cast<int>(OK);
      }
      StreamOrigins origins;
      std::vector<NodeId> producers;
      for (const auto& alias : stream_aliases(tree)) {
        const auto* s = spec.stream(alias);
        if (s == nullptr) {
          throw ConfigError("stream " + alias + " is not bound in the scenario");
        }
        origins[alias] = s->binding.producer;
        if (std::find(producers.begin(), producers.end(), s->binding.producer) == producers.end()) {
          producers.push_back(s->binding.producer);
        }
      }
      auto delays = spec.topology.configuredDelays();
      auto paths = plan_paths(delays, producers, coordinator);
      auto plan = assign_operators(tree, paths, origins, mode);
      std::cout << plan.dump() << '\n';
      std::cout << "nfn: " << tree.nfn << '\n';
      return static_cast<int>(OK);
    });
  }

  if (runSim->parsed()) {
    return guarded([&] {
      auto spec = load_scenario(simScenario);
      if (seed) {
        spec.seed = *seed;
      }
      for (const auto& path : {metricsOut, traceOut}) {
        if (!path.empty()) {
          auto dir = std::filesystem::path(path).parent_path();
          if (!dir.empty() && !std::filesystem::is_directory(dir)) {
            throw ConfigError("output directory '" + dir.string() + "' does not exist");
          }
        }
      }
      SimOptions options;
      options.recordTrace = true;
      options.dumpNodes = !dumpDir.empty();
      auto result = run_scenario(spec, options);

      if (!metricsOut.empty()) {
        emit_metrics(result.metrics, metricsOut);
      }
      if (!traceOut.empty()) {
        std::ofstream out(traceOut);
        for (const auto& line : result.trace) {
          out << line << '\n';
        }
        if (!out) {
          throw Error("failed writing trace to '" + traceOut + "'");
        }
      }
      if (!dumpDir.empty()) {
        std::filesystem::create_directories(dumpDir);
        for (const auto& [id, text] : result.dumps) {
          std::ofstream out(std::filesystem::path(dumpDir) / (id + ".dump"));
          out << text;
        }
      }

      for (const auto& q : result.metrics.queries) {
        std::cout << q.id << " coordinator=" << q.coordinator << " notifications=" << q.notifications.size()
                  << " total_ms=" << fmt(q.totalMs) << " graph_ms=" << fmt(q.graphMs)
                  << " placement_ms=" << fmt(q.placementMs) << " communication_ms=" << fmt(q.communicationMs);
        if (q.deployTimeouts > 0) {
          std::cout << " deploy_timeouts=" << q.deployTimeouts;
        }
        if (q.nacks > 0) {
          std::cout << " nacks=" << q.nacks;
        }
        std::cout << '\n';
      }
      if (result.metrics.reorderedRows > 0) {
        std::cerr << "warning: " << result.metrics.reorderedRows << " dataset rows were out of ts order\n";
      }
      char hash[32];
      std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(result.traceHash));
      std::cout << "events=" << result.events << " trace_hash=" << hash << '\n';
      return static_cast<int>(OK);
    });
  }

  if (replay->parsed()) {
    return guarded([&] {
      ReplayBinding binding;
      binding.name = Name::parse(streamName);
      binding.schema = schema_by_id(schemaId);
      binding.csvPath = csvPath;
      binding.rate = rate;
      binding.offsetMs = offset;
      auto ds = load_dataset(csvPath, binding.schema);
      if (ds.reordered > 0) {
        std::cerr << "warning: " << ds.reordered << " rows were out of ts order\n";
      }
      std::cout << "emit_ms,name,ts\n";
      for (const auto& p : replay_dataset(binding, ds)) {
        std::cout << fmt(static_cast<double>(p.emitUs) / 1000.0) << ',' << p.packet.streamName.toUri() << ','
                  << p.packet.tuple.ts << '\n';
      }
      return static_cast<int>(OK);
    });
  }

  if (inspect->parsed()) {
    return guarded([&] {
      std::ifstream in(dumpPath);
      if (!in) {
        throw Error("cannot open dump '" + dumpPath + "'");
      }
      bool first = true;
      for (const auto& section : parse_dump(in)) {
        std::cout << (first ? "" : "\n") << format_table(section);
        first = false;
      }
      return static_cast<int>(OK);
    });
  }

  if (metrics->parsed()) {
    return guarded([&] {
      std::vector<std::vector<MetricsRow>> runs;
      for (const auto& f : metricFiles) {
        runs.push_back(read_metrics_csv(f));
      }
      static const char* columns[] = {"total_ms", "graph_ms", "placement_ms", "communication_ms"};
      int pct = static_cast<int>(std::lround(level * 100));
      std::cout << "query,column,n,mean,ci" << pct << "_low,ci" << pct << "_high\n";
      for (const auto& q : summarize_metrics(runs, level)) {
        for (std::size_t i = 0; i < 4; ++i) {
          const auto& iv = q.columns[i];
          std::cout << q.query << ',' << columns[i] << ',' << iv.n << ',' << fmt(iv.mean) << ',' << fmt(iv.lo)
                    << ',' << fmt(iv.hi) << '\n';
        }
      }
      return static_cast<int>(OK);
    });
  }
  return CONFIG;
}
