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

#include "cepnet/sim/simulator.hpp"
#include "cepnet/placement/assign.hpp"
#include "cepnet/query/normalize.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <memory>
#include <queue>
#include <set>
#include <variant>

namespace cepnet {

double
CostModel::serviceMs(double processingDelayMs, const Outcome& outcome) const
{
  double ms = processingDelayMs;
  for (const auto& kind : outcome.evaluated) {
    auto it = operatorMs.find(kind);
    ms += it == operatorMs.end() ? defaultOperatorMs : it->second;
  }
  return ms + perRowMs * static_cast<double>(outcome.work);
}

std::uint64_t
trace_hash(const std::vector<std::string>& trace)
{
  std::uint64_t h = fnv1a("");
  for (const auto& line : trace) {
    h = fnv1a(line, h);
    h = fnv1a("\n", h);
  }
  return h;
}

namespace {

std::int64_t
to_us(double ms)
{
  return std::llround(ms * 1000.0);
}

struct Link
{
  NodeId peer;
  FaceId peerFace = 0;
  std::int64_t delayUs = 0;
};

struct App
{
  const QuerySpec* spec = nullptr;
  NodeId node;
  bool local = false;
  FaceId face = 0;
  std::string key;
  std::string hash;
  std::uint64_t nonce = 0;
  bool waiting = false;
  bool stopped = false;
  bool planned = false;
  QueryMetrics metrics;
  std::vector<double> samples;
};

struct Deliver
{
  NodeId to;
  FaceId face = 0;
  Packet packet;
  std::int64_t origin = 0;
  NodeId from;
  FaceId fromFace = 0;
  bool toApp = false;
  std::int64_t sentUs = 0;
  std::int64_t linkUs = 0;
};

struct Emit
{
  std::size_t stream = 0;
  std::size_t row = 0;
};

struct AppAction
{
  enum Kind { Issue, Poll, Stop };
  std::size_t app = 0;
  Kind kind = Issue;
};

struct DeployCheck
{
  NodeId node;
  std::string key;
  std::size_t app = 0;
};

struct Fail
{
  NodeId node;
};

using Action = std::variant<Deliver, Emit, AppAction, DeployCheck, Fail>;

struct Event
{
  std::int64_t t = 0;
  std::uint64_t seq = 0;
  Action action;
};

struct Later
{
  bool
  operator()(const Event& a, const Event& b) const
  {
    return a.t != b.t ? a.t > b.t : a.seq > b.seq;
  }
};

struct Fragment
{
  OperatorNode tree;
  std::set<int> hosted;
  std::vector<FaceId> upstream;
  std::vector<std::pair<Name, FaceId>> routes;
};

struct StreamFeed
{
  const StreamSpec* spec = nullptr;
  std::vector<ScheduledPacket> schedule;
};

template<typename T>
void
append_unique(std::vector<T>& v, const T& x)
{
  if (std::find(v.begin(), v.end(), x) == v.end()) {
    v.push_back(x);
  }
}

class Simulation
{
public:
  Simulation(const ScenarioSpec& spec, const SimOptions& options)
    : m_spec(spec)
    , m_options(options)
    , m_catalog(spec.catalog())
    , m_configured(spec.topology.configuredDelays())
  {
  }

  SimResult
  run()
  {
    build();
    while (!m_queue.empty()) {
      Event e = m_queue.top();
      m_queue.pop();
      if (m_spec.endMs && e.t > *m_spec.endMs * 1000) {
        break;
      }
      m_now = e.t;
      ++m_result.events;
      std::visit([&](auto& a) { handle(a); }, e.action);
    }
    m_result.endUs = m_now;
    finish();
    return std::move(m_result);
  }

private:
  void
  build()
  {
    for (const auto& n : m_spec.topology.nodes) {
      if (n.role == Role::Broker) {
        NodeConfig cfg;
        cfg.id = n.id;
        cfg.processingDelayMs = n.processingDelayMs;
        cfg.eval.catalog = m_catalog;
        cfg.eval.combine = m_spec.combine;
        cfg.eval.predictPeriodMs = m_spec.predictPeriodMs;
        auto node = std::make_unique<Node>(cfg);
        node->setCoordinator([this](Node& self, const std::string& key, OperatorNode& tree, FaceId consumer) {
          return coordinate(self, key, tree, consumer);
        });
        m_brokers.emplace(n.id, std::move(node));
      }
      m_roles[n.id] = n.role;
    }

    for (const auto& l : m_spec.topology.links) {
      FaceId fa = ++m_nextFace[l.a];
      FaceId fb = ++m_nextFace[l.b];
      m_links[l.a][fa] = {l.b, fb, to_us(l.delayMs)};
      m_links[l.b][fb] = {l.a, fa, to_us(l.delayMs)};
    }
    installFaces();
    installStaticRoutes();

    std::size_t index = 0;
    for (const auto& s : m_spec.streams) {
      StreamFeed feed;
      feed.spec = &s;
      Dataset ds;
      if (s.generateRows > 0) {
        std::uint64_t seed = m_spec.seed ^ fnv1a(s.binding.alias);
        if (s.binding.schema.schemaId == "gps") {
          GpsProfile p;
          p.sensorId = s.binding.alias;
          ds = generate_gps(seed, s.generateRows, p);
        }
        else {
          PlugProfile p;
          p.plugId = std::to_string(index + 1);
          ds = generate_plug(seed, s.generateRows, p);
        }
      }
      else {
        ds = load_dataset(s.binding.csvPath, s.binding.schema);
      }
      m_result.metrics.reorderedRows += ds.reordered;
      feed.schedule = replay_dataset(s.binding, ds);
      for (std::size_t r = 0; r < feed.schedule.size(); ++r) {
        schedule(feed.schedule[r].emitUs, Emit{m_feeds.size(), r});
      }
      m_feeds.push_back(std::move(feed));
      ++index;
    }

    SeededRandom rng(m_spec.seed);
    for (const auto& q : m_spec.queries) {
      App app;
      app.spec = &q;
      app.node = q.issuer;
      app.local = m_roles.at(q.issuer) == Role::Broker;
      app.key = normalize_query(q.text);
      app.hash = query_hash(app.key);
      app.nonce = rng.next() >> 1;
      app.metrics.id = q.id;
      if (app.local) {
        app.face = 1000 + static_cast<FaceId>(m_apps.size());
        broker(q.issuer)->addFace(app.face, q.issuer + "/" + q.id, FaceKind::Local);
        m_localApps[{q.issuer, app.face}] = m_apps.size();
      }
      else {
        if (m_links[q.issuer].empty()) {
          throw ConfigError("consumer '" + q.issuer + "' has no link");
        }
        app.face = m_links[q.issuer].begin()->first;
      }
      std::size_t id = m_apps.size();
      m_apps.push_back(std::move(app));
      schedule(q.startMs * 1000, AppAction{id, AppAction::Issue});
      if (q.pollIntervalMs) {
        std::int64_t step = to_us(*q.pollIntervalMs);
        std::int64_t limit = q.stopMs ? *q.stopMs * 1000 : lastEmissionUs() + step;
        for (std::int64_t t = q.startMs * 1000 + step; t < limit; t += step) {
          schedule(t, AppAction{id, AppAction::Poll});
        }
      }
      if (q.stopMs) {
        schedule(*q.stopMs * 1000, AppAction{id, AppAction::Stop});
      }
    }

    for (const auto& f : m_spec.failures) {
      schedule(f.atMs * 1000, Fail{f.node});
    }
  }

  void
  installFaces()
  {
    for (auto& [id, node] : m_brokers) {
      for (const auto& [face, link] : m_links[id]) {
        std::size_t cap = 64;
        for (const auto& l : m_spec.topology.links) {
          if ((l.a == id && l.b == link.peer) || (l.b == id && l.a == link.peer)) {
            cap = l.capacity;
          }
        }
        node->addFace(face, link.peer, FaceKind::Network, cap);
      }
    }
  }

  void
  installStaticRoutes()
  {
    std::vector<NodeId> all;
    for (const auto& n : m_spec.topology.nodes) {
      all.push_back(n.id);
    }
    for (auto& [id, node] : m_brokers) {
      auto nextHop = [&](const NodeId& target) -> std::optional<FaceId> {
        try {
          auto route = shortest_route(m_configured, id, target);
          if (route.nodes.size() < 2) {
            return std::nullopt;
          }
          return faceTo(id, route.nodes[1]);
        }
        catch (const NoPath&) {
          return std::nullopt;
        }
      };
      for (const auto& s : m_spec.streams) {
        if (auto f = nextHop(s.binding.producer)) {
          node->fib().addRoute(s.binding.name, *f);
        }
      }
      for (const auto& target : all) {
        if (target == id) {
          continue;
        }
        if (auto f = nextHop(target)) {
          node->fib().addRoute(Name({"node", target}), *f);
        }
      }
    }
  }

  Node*
  broker(const NodeId& id)
  {
    auto it = m_brokers.find(id);
    return it == m_brokers.end() ? nullptr : it->second.get();
  }

  FaceId
  faceTo(const NodeId& from, const NodeId& to) const
  {
    auto it = m_links.find(from);
    if (it != m_links.end()) {
      for (const auto& [face, link] : it->second) {
        if (link.peer == to) {
          return face;
        }
      }
    }
    throw Error("no link from " + from + " to " + to);
  }

  double
  latencyMs(const NodeId& a, const NodeId& b) const
  {
    if (a == b) {
      return 0;
    }
    return shortest_route(m_configured, a, b).cost;
  }

  std::int64_t
  lastEmissionUs() const
  {
    std::int64_t last = 0;
    for (const auto& f : m_feeds) {
      if (!f.schedule.empty()) {
        last = std::max(last, f.schedule.back().emitUs);
      }
    }
    return last;
  }

  template<typename A>
  void
  schedule(std::int64_t t, A action)
  {
    m_queue.push(Event{t, m_seq++, Action(std::move(action))});
  }

  void
  trace(const std::string& node, const char* dir, FaceId face, const std::string& text)
  {
    if (!m_options.recordTrace) {
      return;
    }
    char head[64];
    std::snprintf(head, sizeof head, "t=%lld.%03lld ", static_cast<long long>(m_now / 1000),
                  static_cast<long long>(m_now % 1000));
    m_result.trace.push_back(std::string(head) + "node=" + node + " dir=" + dir + " face=" + std::to_string(face) +
                             " " + text);
  }

  // Sending

  void
  sendFromBroker(const NodeId& from, FaceId face, Packet packet, std::int64_t origin)
  {
    Node& node = *broker(from);
    Face* f = node.face(face);
    if (f == nullptr) {
      trace(from, "out", face, "unknown face, dropped " + summarize(packet));
      return;
    }
    if (f->kind() == FaceKind::Local) {
      trace(from, "out", face, summarize(packet));
      schedule(m_now, Deliver{from, face, std::move(packet), origin, from, face, true, m_now, 0});
      return;
    }
    std::uint64_t tag = m_nextTag++;
    m_tagOrigin[tag] = origin;
    if (f->enqueue(std::move(packet), tag)) {
      trace(from, "out", face, "queue overflow, dropped oldest DataStream");
    }
    pump(from, face);
  }

  void
  pump(const NodeId& from, FaceId face)
  {
    Face* f = broker(from)->face(face);
    while (auto q = f->transmit()) {
      std::int64_t origin = m_tagOrigin[q->tag];
      m_tagOrigin.erase(q->tag);
      const Link& link = m_links.at(from).at(face);
      trace(from, "out", face, summarize(q->packet));
      schedule(m_now + link.delayUs,
               Deliver{link.peer, link.peerFace, std::move(q->packet), origin, from, face, false, m_now, link.delayUs});
    }
  }

  void
  sendFromEndpoint(const NodeId& from, FaceId face, Packet packet, std::int64_t origin)
  {
    const Link& link = m_links.at(from).at(face);
    trace(from, "out", face, summarize(packet));
    schedule(m_now + link.delayUs,
             Deliver{link.peer, link.peerFace, std::move(packet), origin, from, face, false, m_now, link.delayUs});
  }

  void
  sendFromApp(App& app, Packet packet)
  {
    ++app.metrics.controlPackets;
    if (app.local) {
      trace(app.node + "/" + app.spec->id, "out", app.face, summarize(packet));
      schedule(m_now, Deliver{app.node, app.face, std::move(packet), m_now, app.node, app.face, false, m_now, 0});
    }
    else {
      sendFromEndpoint(app.node, app.face, std::move(packet), m_now);
    }
  }

  // Event handlers

  void
  handle(Deliver& d)
  {
    if (m_now < d.sentUs + d.linkUs) {
      ++m_result.causalityViolations;
    }
    if (!d.toApp && m_brokers.count(d.from) != 0 && d.from != d.to) {
      if (Face* f = broker(d.from)->face(d.fromFace); f != nullptr && f->kind() == FaceKind::Network) {
        f->delivered();
        pump(d.from, d.fromFace);
      }
    }
    if (d.toApp) {
      auto it = m_localApps.find({d.to, d.face});
      if (it != m_localApps.end()) {
        App& app = m_apps[it->second];
        trace(app.node + "/" + app.spec->id, "in", d.face, summarize(d.packet));
        onResult(app, d.packet, d.origin);
      }
      return;
    }
    if (Node* node = broker(d.to)) {
      deliverToBroker(*node, d);
      return;
    }
    trace(d.to, "in", d.face, summarize(d.packet));
    if (m_roles.at(d.to) == Role::Consumer) {
      for (auto& app : m_apps) {
        if (!app.local && app.node == d.to && addressedTo(app, d.packet)) {
          onResult(app, d.packet, d.origin);
          break;
        }
      }
    }
  }

  void
  deliverToBroker(Node& node, Deliver& d)
  {
    const NodeId& id = node.id();
    if (m_dead.count(id) != 0) {
      trace(id, "in", d.face, summarize(d.packet) + " => lost (node failed)");
      ++m_result.lostToFailures;
      return;
    }
    std::int64_t start = std::max(m_now, m_busyUntil[id]);
    node.observeQueueing(static_cast<double>(start - m_now) / 1000.0);
    node.setClock(start / 1000);

    if (const auto* qi = std::get_if<AddQueryInterest>(&d.packet)) {
      auto it = m_pending.find({id, normalize_query(qi->query)});
      if (it != m_pending.end()) {
        const Fragment& f = it->second;
        node.installFragment(it->first.second, f.tree, f.hosted, d.face, f.upstream);
        for (const auto& [prefix, face] : f.routes) {
          node.addStreamRoute(it->first.second, prefix, face);
        }
        m_pending.erase(it);
      }
    }

    m_handling = &d;
    Outcome out = node.handle(d.face, d.packet);
    m_handling = nullptr;

    std::string line = summarize(d.packet) + " => " + to_string(out.disposition);
    if (!out.note.empty()) {
      line += " " + out.note;
    }
    trace(id, "in", d.face, line);

    if (out.coordinated) {
      if (App* app = appForKey(*out.coordinated)) {
        if (app->metrics.graphMs == 0) {
          app->metrics.graphMs = out.parseMicros / 1000.0;
        }
      }
    }

    std::int64_t finish = start + to_us(m_options.cost.serviceMs(node.config().processingDelayMs, out));
    m_busyUntil[id] = finish;
    std::int64_t now = m_now;
    m_now = finish;
    for (auto& s : out.sends) {
      countResultHop(id, s);
      sendFromBroker(id, s.face, std::move(s.packet), d.origin);
    }
    m_now = now;
  }

  void
  countResultHop(const NodeId& from, const Send& s)
  {
    const auto* ds = std::get_if<DataStream>(&s.packet);
    if (ds == nullptr || ds->streamName.size() < 2 || ds->streamName.components()[0] != "state") {
      return;
    }
    auto it = m_links[from].find(s.face);
    if (it == m_links[from].end() || m_brokers.count(it->second.peer) == 0) {
      return;
    }
    const auto& hash = ds->streamName.components()[1];
    for (auto& app : m_apps) {
      if (app.hash == hash) {
        ++app.metrics.resultHops;
        break;
      }
    }
  }

  bool
  addressedTo(const App& app, const Packet& p) const
  {
    const Name* name = nullptr;
    if (const auto* d = std::get_if<Data>(&p)) {
      name = &d->name;
      if (name->size() == 2 && name->components()[0] == "nack") {
        return name->components()[1] == std::to_string(app.nonce);
      }
    }
    else if (const auto* ds = std::get_if<DataStream>(&p)) {
      name = &ds->streamName;
    }
    return name != nullptr && name->size() == 4 && name->components()[2] == "query" &&
           name->components()[3] == app.hash;
  }

  void
  onResult(App& app, const Packet& p, std::int64_t origin)
  {
    Notification n;
    n.arrivalUs = m_now;
    n.originUs = origin;
    if (const auto* d = std::get_if<Data>(&p)) {
      if (d->name.size() == 2 && d->name.components()[0] == "nack") {
        ++app.metrics.nacks;
        app.waiting = false;
        return;
      }
      n.ts = d->ts;
      n.payload = d->payload;
    }
    else if (const auto* ds = std::get_if<DataStream>(&p)) {
      n.ts = ds->tuple.ts;
      if (ds->tuple.values.size() > 1) {
        n.payload = to_text(ds->tuple.values[1]);
      }
    }
    else {
      return;
    }
    app.metrics.notifications.push_back(n);
    app.samples.push_back(static_cast<double>(m_now - origin) / 1000.0);
    if (app.spec->pollIntervalMs && app.waiting) {
      app.waiting = false;
      sendFromApp(app, RemoveQueryInterest{app.spec->text, app.nonce});
    }
  }

  void
  handle(Emit& e)
  {
    const auto& feed = m_feeds[e.stream];
    const NodeId& producer = feed.spec->binding.producer;
    for (const auto& [face, link] : m_links[producer]) {
      (void)link;
      sendFromEndpoint(producer, face, feed.schedule[e.row].packet, m_now);
    }
  }

  void
  handle(AppAction& a)
  {
    App& app = m_apps[a.app];
    switch (a.kind) {
      case AppAction::Issue:
        app.waiting = true;
        sendFromApp(app, AddQueryInterest{app.spec->text, app.nonce});
        break;
      case AppAction::Poll:
        if (!app.stopped && !app.waiting) {
          app.waiting = true;
          sendFromApp(app, AddQueryInterest{app.spec->text, app.nonce});
        }
        break;
      case AppAction::Stop:
        if (!app.spec->pollIntervalMs || app.waiting) {
          sendFromApp(app, RemoveQueryInterest{app.spec->text, app.nonce});
        }
        app.stopped = true;
        app.waiting = false;
        break;
    }
  }

  void
  handle(DeployCheck& c)
  {
    auto it = m_pending.find({c.node, c.key});
    if (it == m_pending.end()) {
      return;
    }
    m_pending.erase(it);
    ++m_apps[c.app].metrics.deployTimeouts;
    trace(c.node, "in", 0, "DeployTimeout query=" + m_apps[c.app].spec->id);
  }

  void
  handle(Fail& f)
  {
    m_dead.insert(f.node);
    trace(f.node, "in", 0, "NodeFailure");
  }

  App*
  appForKey(const std::string& key)
  {
    App* found = nullptr;
    for (auto& app : m_apps) {
      if (app.key == key && !app.stopped) {
        if (m_handling != nullptr && app.node == m_handling->from && app.face == m_handling->fromFace) {
          return &app;
        }
        if (m_handling != nullptr && app.local && app.node == m_handling->to && app.face == m_handling->face) {
          return &app;
        }
        if (found == nullptr) {
          found = &app;
        }
      }
    }
    return found;
  }

  // Placement

  CoordinationResult
  coordinate(Node& self, const std::string& key, OperatorNode& tree, FaceId consumer)
  {
    (void)consumer;
    App* app = appForKey(key);
    PlacementMode mode = app != nullptr ? app->spec->mode : PlacementMode::Centralized;

    StreamOrigins origins;
    std::vector<NodeId> producers;
    for (const auto& alias : stream_aliases(tree)) {
      const auto* s = m_spec.stream(alias);
      origins[alias] = s->binding.producer;
      append_unique(producers, s->binding.producer);
    }

    DelayMap delays;
    double simulatedMs = 0;
    if (mode == PlacementMode::Distributed) {
      NetworkView view;
      view.brokers = m_spec.topology.ids(Role::Broker);
      for (const auto& l : m_spec.topology.links) {
        view.links.emplace_back(l.a, l.b, l.delayMs);
      }
      view.probe = [&](const NodeId& id) -> std::optional<DelayAdvert> {
        if (m_dead.count(id) != 0) {
          return std::nullopt;
        }
        simulatedMs = std::max(simulatedMs, 2 * latencyMs(self.id(), id));
        Node* n = broker(id);
        return DelayAdvert{n->advertisedDelayMs(), n->hostedOperators()};
      };
      delays = discover_delays(self.id(), view, m_now / 1000);
    }
    else {
      delays = m_configured;
    }

    auto t0 = std::chrono::steady_clock::now();
    PathPlan paths = plan_paths(delays, producers, self.id());
    PlacementPlan plan = assign_operators(tree, paths, origins, mode, delays.loads());
    double computeMs = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    const std::string hash = query_hash(key);
    std::map<NodeId, std::vector<FaceId>> upstream;
    std::map<NodeId, std::vector<std::pair<Name, FaceId>>> routes;
    for (const auto& p : producers) {
      auto full = paths.full(p);
      for (std::size_t i = 0; i < full.size(); ++i) {
        append_unique(upstream[full[i]], i == 0 ? faceTo(full[i], p) : faceTo(full[i], full[i - 1]));
      }
    }
    auto addRoutes = [&](const std::vector<NodeId>& path, const NodeId& from, const NodeId& to, const Name& name) {
      auto a = std::find(path.begin(), path.end(), from);
      auto b = std::find(path.begin(), path.end(), to);
      if (a == path.end() || b == path.end() || a > b) {
        throw Error("placement put " + name.toUri() + " outside its path");
      }
      for (auto it = a; it != b; ++it) {
        append_unique(routes[*it], std::pair{name, faceTo(*it, *(it + 1))});
      }
    };
    for_each_preorder(tree, [&](const OperatorNode& op, int) {
      const auto aliases = stream_aliases(op);
      const auto path = paths.full(origins.at(aliases.front()));
      const NodeId& at = plan.assignment.at(op.index);
      if (op.children.empty()) {
        for (const auto& alias : aliases) {
          addRoutes(paths.full(origins.at(alias)), paths.full(origins.at(alias)).front(), at,
                    m_catalog.findStream(alias)->name);
        }
      }
      if (const auto* parent = tree.parentOf(op.index)) {
        const NodeId& up = plan.assignment.at(parent->index);
        if (up != at) {
          addRoutes(path, at, up, state_output_name(hash, op.index));
        }
      }
    });

    for (const auto& [prefix, face] : routes[self.id()]) {
      self.addStreamRoute(key, prefix, face);
    }
    double deployMs = 0;
    std::size_t appIndex = app != nullptr ? static_cast<std::size_t>(app - m_apps.data()) : 0;
    for (const auto& x : paths.brokers()) {
      if (x == self.id()) {
        continue;
      }
      auto hosted = plan.hostedOn(x);
      m_pending[{x, key}] = Fragment{tree, {hosted.begin(), hosted.end()}, upstream[x], routes[x]};
      double latency = latencyMs(self.id(), x);
      deployMs = std::max(deployMs, latency);
      if (app != nullptr) {
        schedule(m_now + to_us(latency + m_spec.deployTimeoutMs), DeployCheck{x, key, appIndex});
      }
    }

    if (app != nullptr && !app->planned) {
      app->planned = true;
      app->metrics.coordinator = self.id();
      app->metrics.operatorCounts = plan.operatorCounts();
      app->metrics.plan = plan.dump();
      app->metrics.placementMs = mode == PlacementMode::Distributed ? simulatedMs + deployMs + computeMs : 0.0;
    }

    auto local = plan.hostedOn(self.id());
    return {{local.begin(), local.end()}, upstream[self.id()]};
  }

  void
  finish()
  {
    for (auto& app : m_apps) {
      auto& m = app.metrics;
      if (app.samples.empty()) {
        m.communicationMs = std::numeric_limits<double>::quiet_NaN();
      }
      else {
        double sum = 0;
        for (double s : app.samples) {
          sum += s;
        }
        m.communicationMs = sum / static_cast<double>(app.samples.size());
      }
      m.totalMs = m.graphMs + m.placementMs + m.communicationMs;
      m_result.metrics.queries.push_back(m);
    }
    for (const auto& [id, node] : m_brokers) {
      NodeMetrics nm;
      nm.id = id;
      nm.counters = node->counters();
      for (const auto& [_, f] : node->faces()) {
        nm.faceDrops += f.drops();
      }
      m_result.metrics.nodes.push_back(nm);
      if (m_options.dumpNodes) {
        m_result.dumps[id] = dump_node(*node);
      }
    }
    m_result.traceHash = trace_hash(m_result.trace);
  }

  const ScenarioSpec& m_spec;
  SimOptions m_options;
  Catalog m_catalog;
  DelayMap m_configured;
  std::map<NodeId, std::unique_ptr<Node>> m_brokers;
  std::map<NodeId, Role> m_roles;
  std::map<NodeId, std::map<FaceId, Link>> m_links;
  std::map<NodeId, FaceId> m_nextFace;
  std::map<NodeId, std::int64_t> m_busyUntil;
  std::set<NodeId> m_dead;
  std::vector<StreamFeed> m_feeds;
  std::vector<App> m_apps;
  std::map<std::pair<NodeId, FaceId>, std::size_t> m_localApps;
  std::map<std::pair<NodeId, std::string>, Fragment> m_pending;
  std::map<std::uint64_t, std::int64_t> m_tagOrigin;
  std::uint64_t m_nextTag = 1;
  std::priority_queue<Event, std::vector<Event>, Later> m_queue;
  std::uint64_t m_seq = 0;
  std::int64_t m_now = 0;
  const Deliver* m_handling = nullptr;
  SimResult m_result;
};

} // namespace

SimResult
run_scenario(const ScenarioSpec& spec, const SimOptions& options)
{
  spec.validate();
  Simulation sim(spec, options);
  return sim.run();
}

} // namespace cepnet
