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

#include "cepnet/sim/scenario.hpp"
#include "cepnet/query/parser.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace cepnet {

namespace fs = std::filesystem;

Catalog
ScenarioSpec::catalog() const
{
  Catalog c = Catalog::defaults();
  for (const auto& [name, value] : params) {
    c.setParam(name, value);
  }
  for (const auto& s : streams) {
    c.addStream({s.binding.alias, s.binding.name, s.binding.schema});
  }
  return c;
}

const StreamSpec*
ScenarioSpec::stream(const std::string& alias) const
{
  for (const auto& s : streams) {
    if (s.binding.alias == alias) {
      return &s;
    }
  }
  return nullptr;
}

void
ScenarioSpec::validate() const
{
  topology.validate();
  auto requireRole = [&](const NodeId& id, std::initializer_list<Role> roles, const std::string& what) {
    const auto* n = topology.find(id);
    if (n == nullptr) {
      throw ConfigError(source + ": " + what + " names unknown node '" + id + "'");
    }
    for (Role r : roles) {
      if (n->role == r) {
        return;
      }
    }
    throw ConfigError(source + ": " + what + " cannot use " + to_string(n->role) + " '" + id + "'");
  };

  std::set<std::string> aliases;
  std::set<std::string> names;
  for (const auto& s : streams) {
    requireRole(s.binding.producer, {Role::Producer}, "stream " + s.binding.alias);
    if (!aliases.insert(s.binding.alias).second) {
      throw ConfigError(source + ": stream alias '" + s.binding.alias + "' bound twice");
    }
    if (!names.insert(s.binding.name.toUri()).second) {
      throw ConfigError(source + ": stream name '" + s.binding.name.toUri() + "' bound twice");
    }
  }
  auto cat = catalog();
  std::set<std::string> ids;
  for (const auto& q : queries) {
    if (!ids.insert(q.id).second) {
      throw ConfigError(source + ": duplicate query id '" + q.id + "'");
    }
    requireRole(q.issuer, {Role::Consumer, Role::Broker}, "query " + q.id);
    if (q.stopMs && *q.stopMs < q.startMs) {
      throw ConfigError(source + ": query " + q.id + " stops before it starts");
    }
    OperatorNode tree;
    try {
      tree = parse_query(q.text, cat);
    }
    catch (const QueryError& e) {
      throw ConfigError(source + ": query " + q.id + ": " + e.what());
    }
    for (const auto& alias : stream_aliases(tree)) {
      if (stream(alias) == nullptr) {
        throw ConfigError(source + ": query " + q.id + " uses unbound stream " + alias);
      }
    }
  }
  for (const auto& f : failures) {
    requireRole(f.node, {Role::Broker}, "fail");
  }
}

namespace {

std::int64_t
integer(const std::string& text, const std::string& where)
{
  try {
    std::size_t used = 0;
    long long v = std::stoll(text, &used);
    if (used == text.size()) {
      return v;
    }
  }
  catch (const std::exception&) {
  }
  throw ConfigError(where + ": expected an integer, got '" + text + "'");
}

double
real(const std::string& text, const std::string& where)
{
  try {
    std::size_t used = 0;
    double v = std::stod(text, &used);
    if (used == text.size()) {
      return v;
    }
  }
  catch (const std::exception&) {
  }
  throw ConfigError(where + ": expected a number, got '" + text + "'");
}

/// Plain milliseconds or a duration with s/m/h suffix.
std::int64_t
millis(const std::string& text, const std::string& where)
{
  if (!text.empty()) {
    char unit = text.back();
    std::int64_t scale = unit == 's' ? 1000 : unit == 'm' ? 60'000 : unit == 'h' ? 3'600'000 : 0;
    if (scale != 0) {
      return integer(text.substr(0, text.size() - 1), where) * scale;
    }
  }
  return integer(text, where);
}

std::string
resolve(const std::string& path, const std::string& baseDir)
{
  fs::path p(path);
  return p.is_absolute() ? path : (fs::path(baseDir) / p).lexically_normal().string();
}

} // namespace

ScenarioSpec
parse_scenario(std::istream& in, const std::string& source, const std::string& baseDir)
{
  ScenarioSpec spec;
  spec.source = source;
  bool haveTopology = false;
  std::vector<std::pair<std::string, double>> polls;
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    std::string where = source + ":" + std::to_string(lineNo);
    std::string rest;
    std::istringstream ss(line);
    std::string directive;
    if (!(ss >> directive) || directive[0] == '#') {
      continue;
    }

    if (directive == "query") {
      QuerySpec q;
      std::string start;
      std::string stop;
      std::string mode;
      if (!(ss >> q.id >> q.issuer >> start >> stop >> mode)) {
        throw ConfigError(where + ": expected 'query <id> <issuer> <start_ms> <stop_ms|-> <mode> <text>'");
      }
      q.startMs = integer(start, where);
      if (stop != "-") {
        q.stopMs = integer(stop, where);
      }
      try {
        q.mode = parse_placement_mode(mode);
      }
      catch (const Error& e) {
        throw ConfigError(where + ": " + e.what());
      }
      std::getline(ss, q.text);
      q.text.erase(0, q.text.find_first_not_of(" \t"));
      while (!q.text.empty() && (q.text.back() == '\r' || q.text.back() == ' ')) {
        q.text.pop_back();
      }
      if (q.text.empty()) {
        throw ConfigError(where + ": query " + q.id + " has no text");
      }
      spec.queries.push_back(std::move(q));
      continue;
    }

    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream rs(line);
    std::vector<std::string> tok;
    for (std::string t; rs >> t;) {
      tok.push_back(t);
    }
    auto expect = [&](std::size_t lo, std::size_t hi, const char* usage) {
      if (tok.size() < lo || tok.size() > hi) {
        throw ConfigError(where + ": expected '" + usage + "'");
      }
    };

    if (directive == "topology") {
      expect(2, 2, "topology preset:<name> | <path>");
      if (tok[1].rfind("preset:", 0) == 0) {
        auto preset = preset_topology(tok[1].substr(7));
        if (!preset) {
          throw ConfigError(where + ": unknown preset '" + tok[1].substr(7) + "'");
        }
        spec.topology = *preset;
      }
      else {
        spec.topology = load_topology(resolve(tok[1], baseDir));
      }
      haveTopology = true;
    }
    else if (directive == "seed") {
      expect(2, 2, "seed <n>");
      spec.seed = static_cast<std::uint64_t>(integer(tok[1], where));
    }
    else if (directive == "combine") {
      expect(2, 2, "combine literal|halved");
      try {
        spec.combine = parse_combine_mode(tok[1]);
      }
      catch (const Error& e) {
        throw ConfigError(where + ": " + e.what());
      }
    }
    else if (directive == "predict-period") {
      expect(2, 2, "predict-period <ms>");
      spec.predictPeriodMs = millis(tok[1], where);
      if (spec.predictPeriodMs <= 0) {
        throw ConfigError(where + ": predict-period must be positive");
      }
    }
    else if (directive == "deploy-timeout") {
      expect(2, 2, "deploy-timeout <ms>");
      spec.deployTimeoutMs = real(tok[1], where);
    }
    else if (directive == "end") {
      expect(2, 2, "end <ms>");
      spec.endMs = millis(tok[1], where);
    }
    else if (directive == "param") {
      if (tok.size() == 3) {
        spec.params[tok[1]] = real(tok[2], where);
      }
      else if (tok.size() == 6) {
        spec.params[tok[1]] =
          Bounds{real(tok[2], where), real(tok[3], where), real(tok[4], where), real(tok[5], where)};
      }
      else {
        throw ConfigError(where + ": expected 'param <name> <number>' or 'param <name> <latMin> <latMax> <longMin> <longMax>'");
      }
    }
    else if (directive == "stream") {
      expect(6, 8, "stream <alias> <producer> <name> <schema> <csv|generate:<rows>> [rate=<r>] [offset=<ms>]");
      StreamSpec s;
      s.binding.alias = tok[1];
      s.binding.producer = tok[2];
      try {
        s.binding.name = Name::parse(tok[3]);
        s.binding.schema = schema_by_id(tok[4]);
      }
      catch (const Error& e) {
        throw ConfigError(where + ": " + e.what());
      }
      if (tok[5].rfind("generate:", 0) == 0) {
        s.generateRows = static_cast<std::size_t>(integer(tok[5].substr(9), where));
        if (s.generateRows == 0 || s.generateRows > 100'000) {
          throw ConfigError(where + ": generate row count out of range");
        }
      }
      else {
        s.binding.csvPath = resolve(tok[5], baseDir);
      }
      for (std::size_t i = 6; i < tok.size(); ++i) {
        auto eq = tok[i].find('=');
        auto key = tok[i].substr(0, eq);
        auto val = eq == std::string::npos ? std::string() : tok[i].substr(eq + 1);
        if (key == "rate") {
          s.binding.rate = real(val, where);
          if (s.binding.rate <= 0) {
            throw ConfigError(where + ": rate must be positive");
          }
        }
        else if (key == "offset") {
          s.binding.offsetMs = real(val, where);
        }
        else {
          throw ConfigError(where + ": unknown stream option '" + tok[i] + "'");
        }
      }
      spec.streams.push_back(std::move(s));
    }
    else if (directive == "poll") {
      expect(3, 3, "poll <query-id> <interval_ms>");
      double interval = real(tok[2], where);
      if (interval <= 0) {
        throw ConfigError(where + ": poll interval must be positive");
      }
      polls.emplace_back(tok[1], interval);
    }
    else if (directive == "fail") {
      expect(3, 3, "fail <node> <at_ms>");
      spec.failures.push_back({tok[1], integer(tok[2], where)});
    }
    else {
      throw ConfigError(where + ": unknown directive '" + directive + "'");
    }
  }

  if (!haveTopology) {
    throw ConfigError(source + ": missing topology directive");
  }
  for (const auto& [id, interval] : polls) {
    auto it = std::find_if(spec.queries.begin(), spec.queries.end(), [&](const auto& q) { return q.id == id; });
    if (it == spec.queries.end()) {
      throw ConfigError(source + ": poll names unknown query '" + id + "'");
    }
    it->pollIntervalMs = interval;
  }
  spec.validate();
  return spec;
}

ScenarioSpec
load_scenario(const std::string& path)
{
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open scenario '" + path + "'");
  }
  auto base = fs::path(path).parent_path().string();
  return parse_scenario(in, path, base.empty() ? "." : base);
}

} // namespace cepnet
