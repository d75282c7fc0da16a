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

#include "cepnet/sim/metrics.hpp"
#include "cepnet/common/csv.hpp"

#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace cepnet {

const QueryMetrics*
Metrics::query(const std::string& id) const
{
  for (const auto& q : queries) {
    if (q.id == id) {
      return &q;
    }
  }
  return nullptr;
}

bool
natural_less(const std::string& a, const std::string& b)
{
  std::size_t i = 0;
  std::size_t j = 0;
  auto digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  while (i < a.size() && j < b.size()) {
    if (digit(a[i]) && digit(b[j])) {
      std::size_t ei = i;
      std::size_t ej = j;
      while (ei < a.size() && digit(a[ei])) {
        ++ei;
      }
      while (ej < b.size() && digit(b[ej])) {
        ++ej;
      }
      auto na = a.substr(i, ei - i);
      auto nb = b.substr(j, ej - j);
      na.erase(0, std::min(na.find_first_not_of('0'), na.size() - 1));
      nb.erase(0, std::min(nb.find_first_not_of('0'), nb.size() - 1));
      if (na.size() != nb.size()) {
        return na.size() < nb.size();
      }
      if (na != nb) {
        return na < nb;
      }
      i = ei;
      j = ej;
    }
    else {
      if (a[i] != b[j]) {
        return a[i] < b[j];
      }
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) {
    return (a.size() - i) < (b.size() - j);
  }
  return a < b;
}

namespace {

std::string
number(double v)
{
  if (std::isnan(v)) {
    return "nan";
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

double
rounded(double v)
{
  return std::round(v * 1000) / 1000;
}

} // namespace

void
write_metrics_csv(std::ostream& out, const Metrics& metrics)
{
  out << "# graph_ms: measured parse time; placement_ms: simulated discovery and deploy delay plus measured "
         "planning time; communication_ms: simulated, mean over notifications\n";
  out << METRICS_HEADER << '\n';
  std::vector<const QueryMetrics*> rows;
  for (const auto& q : metrics.queries) {
    rows.push_back(&q);
  }
  std::stable_sort(rows.begin(), rows.end(), [](auto* a, auto* b) { return natural_less(a->id, b->id); });
  for (const auto* q : rows) {
    double total = rounded(q->graphMs) + rounded(q->placementMs) + rounded(q->communicationMs);
    out << csv::join({q->id, number(total), number(q->graphMs), number(q->placementMs), number(q->communicationMs)})
        << '\n';
  }
}

void
emit_metrics(const Metrics& metrics, const std::string& path)
{
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot write metrics to '" + path + "'");
  }
  write_metrics_csv(out, metrics);
  out.flush();
  if (!out) {
    throw Error("failed writing metrics to '" + path + "'");
  }
}

std::vector<MetricsRow>
read_metrics_csv(std::istream& in, const std::string& source)
{
  std::vector<MetricsRow> rows;
  std::string line;
  bool header = false;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty() || line[0] == '#') {
      continue;
    }
    std::string where = source + ":" + std::to_string(lineNo);
    if (!header) {
      if (line != METRICS_HEADER) {
        throw Error(where + ": expected header '" + METRICS_HEADER + "'");
      }
      header = true;
      continue;
    }
    auto cells = csv::split(line);
    if (cells.size() != 5) {
      throw Error(where + ": expected 5 fields");
    }
    MetricsRow row;
    row.query = cells[0];
    for (std::size_t i = 0; i < 4; ++i) {
      try {
        std::size_t used = 0;
        row.values[i] = std::stod(cells[i + 1], &used);
        if (used != cells[i + 1].size()) {
          throw Error("");
        }
      }
      catch (const std::exception&) {
        throw Error(where + ": bad number '" + cells[i + 1] + "'");
      }
    }
    rows.push_back(row);
  }
  if (!header) {
    throw Error(source + ": missing header '" + METRICS_HEADER + "'");
  }
  return rows;
}

std::vector<MetricsRow>
read_metrics_csv(const std::string& path)
{
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open metrics file '" + path + "'");
  }
  return read_metrics_csv(in, path);
}

Interval
confidence_interval(const std::vector<double>& samples, double level)
{
  Interval iv;
  iv.n = samples.size();
  if (samples.empty()) {
    iv.mean = iv.lo = iv.hi = std::nan("");
    return iv;
  }
  double sum = 0;
  for (double s : samples) {
    sum += s;
  }
  iv.mean = sum / static_cast<double>(iv.n);
  iv.lo = iv.hi = iv.mean;
  if (iv.n < 2) {
    return iv;
  }
  double ss = 0;
  for (double s : samples) {
    ss += (s - iv.mean) * (s - iv.mean);
  }
  double sd = std::sqrt(ss / static_cast<double>(iv.n - 1));
  boost::math::students_t dist(static_cast<double>(iv.n - 1));
  double t = boost::math::quantile(boost::math::complement(dist, (1 - level) / 2));
  double half = t * sd / std::sqrt(static_cast<double>(iv.n));
  iv.lo = iv.mean - half;
  iv.hi = iv.mean + half;
  return iv;
}

std::vector<QuerySummary>
summarize_metrics(const std::vector<std::vector<MetricsRow>>& runs, double level)
{
  std::vector<std::string> order;
  std::map<std::string, std::array<std::vector<double>, 4>> samples;
  for (const auto& run : runs) {
    for (const auto& row : run) {
      if (samples.count(row.query) == 0) {
        order.push_back(row.query);
      }
      auto& s = samples[row.query];
      for (std::size_t i = 0; i < 4; ++i) {
        if (!std::isnan(row.values[i])) {
          s[i].push_back(row.values[i]);
        }
      }
    }
  }
  std::stable_sort(order.begin(), order.end(), natural_less);
  std::vector<QuerySummary> out;
  for (const auto& q : order) {
    QuerySummary qs;
    qs.query = q;
    for (std::size_t i = 0; i < 4; ++i) {
      qs.columns[i] = confidence_interval(samples[q][i], level);
    }
    out.push_back(qs);
  }
  return out;
}

} // namespace cepnet
