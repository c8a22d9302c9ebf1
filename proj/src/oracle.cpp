#include "linematch/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <queue>

#include "linematch/matching.hpp"

namespace linematch::oracle {

namespace {

// Residual graph for min-cost flow; edge e and e^1 are a forward/backward pair.
class ResidualGraph {
 public:
  explicit ResidualGraph(std::size_t nodes) : adj_(nodes) {}

  std::size_t add_edge(std::size_t from, std::size_t to, Capacity cap, Cost cost) {
    const std::size_t id = to_.size();
    push(from, to, cap, cost);
    push(to, from, 0, -cost);
    return id;
  }

  Capacity flow_on(std::size_t edge) const { return cap_[edge ^ 1]; }
  std::uint64_t work() const { return work_; }

  /// Sends as much flow as possible from s to t at minimum cost; returns the
  /// amount sent. Costs on forward edges must be non-negative.
  Capacity min_cost_max_flow(std::size_t s, std::size_t t, Cost& cost) {
    const std::size_t n = adj_.size();
    std::vector<Cost> potential(n, 0);
    std::vector<Cost> dist(n);
    Capacity total = 0;
    cost = 0;
    for (;;) {
      if (!shortest_paths(s, potential, dist) || dist[t] == kUnreached) break;
      for (std::size_t v = 0; v < n; ++v) {
        if (dist[v] != kUnreached) potential[v] += dist[v];
      }
      // Blocking flows on the zero-reduced-cost subgraph.
      for (;;) {
        if (!levels(s, t, potential)) break;
        iter_.assign(n, 0);
        while (Capacity pushed = augment(s, t, std::numeric_limits<Capacity>::max(), potential)) {
          total += pushed;
          cost += static_cast<Cost>(pushed) * (potential[t] - potential[s]);
        }
      }
    }
    return total;
  }

 private:
  static constexpr Cost kUnreached = std::numeric_limits<Cost>::max();

  void push(std::size_t from, std::size_t to, Capacity cap, Cost cost) {
    adj_[from].push_back(to_.size());
    to_.push_back(to);
    cap_.push_back(cap);
    cost_.push_back(cost);
  }

  Cost reduced(std::size_t u, std::size_t e, const std::vector<Cost>& pot) const {
    return cost_[e] + pot[u] - pot[to_[e]];
  }

  bool shortest_paths(std::size_t s, const std::vector<Cost>& pot, std::vector<Cost>& dist) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    using Item = std::pair<Cost, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[s] = 0;
    heap.emplace(0, s);
    while (!heap.empty()) {
      const auto [d, u] = heap.top();
      heap.pop();
      if (d != dist[u]) continue;
      for (std::size_t e : adj_[u]) {
        ++work_;
        if (cap_[e] == 0) continue;
        const Cost nd = d + reduced(u, e, pot);
        if (nd < dist[to_[e]]) {
          dist[to_[e]] = nd;
          heap.emplace(nd, to_[e]);
        }
      }
    }
    return true;
  }

  bool levels(std::size_t s, std::size_t t, const std::vector<Cost>& pot) {
    level_.assign(adj_.size(), -1);
    std::queue<std::size_t> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (std::size_t e : adj_[u]) {
        ++work_;
        const std::size_t v = to_[e];
        if (cap_[e] > 0 && level_[v] < 0 && reduced(u, e, pot) == 0) {
          level_[v] = level_[u] + 1;
          q.push(v);
        }
      }
    }
    return level_[t] >= 0;
  }

  Capacity augment(std::size_t u, std::size_t t, Capacity limit, const std::vector<Cost>& pot) {
    if (u == t) return limit;
    for (std::size_t& k = iter_[u]; k < adj_[u].size(); ++k) {
      ++work_;
      const std::size_t e = adj_[u][k];
      const std::size_t v = to_[e];
      if (cap_[e] == 0 || level_[v] != level_[u] + 1 || reduced(u, e, pot) != 0) continue;
      if (Capacity got = augment(v, t, std::min(limit, cap_[e]), pot)) {
        cap_[e] -= got;
        cap_[e ^ 1] += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> to_;
  std::vector<Capacity> cap_;
  std::vector<Cost> cost_;
  std::vector<int> level_;
  std::vector<std::size_t> iter_;
  std::uint64_t work_ = 0;  // residual edges scanned
};

}  // namespace

FlowNetwork build_network(const ProblemInstance& inst) {
  const std::size_t ns = inst.s_points.size();
  const std::size_t nt = inst.t_points.size();
  FlowNetwork net;
  net.node_count = 2 + ns + nt;
  const auto s_node = [](std::size_t i) { return 2 + i; };
  const auto t_node = [ns](std::size_t j) { return 2 + ns + j; };
  Capacity total_cap = 0;
  for (std::size_t i = 0; i < ns; ++i) {
    net.arcs.push_back({net.source, s_node(i), 1, inst.s_points[i].cap, 0});
    total_cap += inst.s_points[i].cap;
  }
  net.first_pair_arc = net.arcs.size();
  for (std::size_t i = 0; i < ns; ++i) {
    for (std::size_t j = 0; j < nt; ++j) {
      net.arcs.push_back(
          {s_node(i), t_node(j), 0, 1, distance(inst.s_points[i].coord, inst.t_points[j].coord)});
    }
  }
  net.pair_arc_count = ns * nt;
  for (std::size_t j = 0; j < nt; ++j) {
    net.arcs.push_back({t_node(j), net.sink, 1, inst.t_points[j].cap, 0});
  }
  net.arcs.push_back({net.sink, net.source, 0, total_cap, 0});
  return net;
}

std::optional<Circulation> min_cost_circulation(const FlowNetwork& net, std::uint64_t* work) {
  const std::size_t super_source = net.node_count;
  const std::size_t super_sink = net.node_count + 1;
  ResidualGraph graph(net.node_count + 2);
  std::vector<Capacity> excess(net.node_count, 0);
  std::vector<std::size_t> edge_of(net.arcs.size());
  Cost base_cost = 0;
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    const Arc& arc = net.arcs[a];
    edge_of[a] = graph.add_edge(arc.from, arc.to, arc.upper - arc.lower, arc.unit_cost);
    excess[arc.to] += arc.lower;
    excess[arc.from] -= arc.lower;
    base_cost += static_cast<Cost>(arc.lower) * arc.unit_cost;
  }
  Capacity required = 0;
  for (std::size_t v = 0; v < net.node_count; ++v) {
    if (excess[v] > 0) {
      graph.add_edge(super_source, v, excess[v], 0);
      required += excess[v];
    } else if (excess[v] < 0) {
      graph.add_edge(v, super_sink, -excess[v], 0);
    }
  }
  Cost flow_cost = 0;
  const Capacity sent = graph.min_cost_max_flow(super_source, super_sink, flow_cost);
  if (work != nullptr) *work += graph.work();
  if (sent < required) return std::nullopt;
  Circulation result;
  result.cost = base_cost + flow_cost;
  result.flow.resize(net.arcs.size());
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    result.flow[a] = net.arcs[a].lower + graph.flow_on(edge_of[a]);
  }
  return result;
}

std::optional<Matching> oracle_olcmm(const ProblemInstance& inst, SolveStats* stats) {
  const FlowNetwork net = build_network(inst);
  std::uint64_t work = net.arcs.size();
  const auto circ = min_cost_circulation(net, &work);
  if (stats != nullptr) stats->examined = work;
  if (!circ) return std::nullopt;
  const std::size_t nt = inst.t_points.size();
  std::vector<Pair> pairs;
  for (std::size_t k = 0; k < net.pair_arc_count; ++k) {
    if (circ->flow[net.first_pair_arc + k] > 0) pairs.push_back(Pair{k / nt, k % nt});
  }
  return make_matching(inst, std::move(pairs));
}

Matching oracle_mm(const ProblemInstance& inst, SolveStats* stats) {
  return *oracle_olcmm(uncapacitated(inst), stats);
}

std::optional<Cost> exhaustive(const ProblemInstance& inst, std::size_t limit) {
  limit = std::min<std::size_t>(limit, 10);
  if (inst.size() > limit) {
    throw SizeLimitError("exhaustive search limited to " + std::to_string(limit) +
                         " points, got " + std::to_string(inst.size()));
  }
  const auto& s = inst.s_points;
  const auto& t = inst.t_points;
  const std::size_t ns = s.size();
  const std::size_t nt = t.size();
  const std::uint32_t all_t = (std::uint32_t{1} << nt) - 1;

  // Candidate neighbourhoods per S point: non-empty T subsets within cap(s).
  std::vector<std::vector<std::pair<std::uint32_t, Cost>>> options(ns);
  for (std::size_t i = 0; i < ns; ++i) {
    for (std::uint32_t mask = 1; mask <= all_t; ++mask) {
      if (std::popcount(mask) > s[i].cap) continue;
      Cost c = 0;
      for (std::size_t j = 0; j < nt; ++j) {
        if (mask >> j & 1U) c += distance(s[i].coord, t[j].coord);
      }
      options[i].emplace_back(mask, c);
    }
  }
  std::vector<Capacity> cap_after(ns + 1, 0);  // Σ cap(s) over S points i..ns-1
  for (std::size_t i = ns; i-- > 0;) cap_after[i] = cap_after[i + 1] + s[i].cap;

  Cost best = kInfiniteCost;
  std::vector<Capacity> deg_t(nt, 0);
  std::function<void(std::size_t, Cost, std::uint32_t)> search = [&](std::size_t i, Cost cost,
                                                                     std::uint32_t covered) {
    if (cost >= best) return;
    if (std::popcount(all_t & ~covered) > cap_after[i]) return;
    if (i == ns) {
      if (covered == all_t) best = cost;
      return;
    }
    for (const auto& [mask, c] : options[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < nt && ok; ++j) {
        if ((mask >> j & 1U) && deg_t[j] >= t[j].cap) ok = false;
      }
      if (!ok) continue;
      for (std::size_t j = 0; j < nt; ++j) deg_t[j] += mask >> j & 1U;
      search(i + 1, cost + c, covered | mask);
      for (std::size_t j = 0; j < nt; ++j) deg_t[j] -= mask >> j & 1U;
    }
  };
  search(0, 0, 0);
  if (best == kInfiniteCost) return std::nullopt;
  return best;
}

}  // namespace linematch::oracle
