#include "regconn/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <queue>

#include "regconn/error.hpp"

namespace regconn {

namespace {

// Unit-capacity max flow on the vertex-split network: x_in = 2x, x_out = 2x+1.
class SplitNetwork {
 public:
  SplitNetwork(const Graph& graph, int source, int sink)
      : graph_(graph), source_(source), sink_(sink), head_(2 * graph.ambient_size(), -1) {
    for (int x : graph.vertices()) {
      const int cap = (x == source || x == sink) ? kInfinite : 1;
      add_arc(in(x), out(x), cap);
      for (int y : graph.neighbors(x)) add_arc(out(x), in(y), kInfinite);
    }
  }

  int max_flow() {
    int flow = 0;
    const int s = out(source_);
    const int t = in(sink_);
    std::vector<int> via(head_.size());
    while (true) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<int> queue;
      queue.push(s);
      via[s] = -2;
      while (!queue.empty() && via[t] == -1) {
        const int node = queue.front();
        queue.pop();
        for (int a = head_[node]; a >= 0; a = arcs_[a].next) {
          if (arcs_[a].cap > 0 && via[arcs_[a].to] == -1) {
            via[arcs_[a].to] = a;
            queue.push(arcs_[a].to);
          }
        }
      }
      if (via[t] == -1) return flow;
      for (int node = t; node != s; node = arcs_[via[node] ^ 1].to) {
        arcs_[via[node]].cap -= 1;
        arcs_[via[node] ^ 1].cap += 1;
      }
      ++flow;
    }
  }

  // After max_flow(): vertices whose split arc crosses the residual cut.
  VertexSet min_cut_vertices() const {
    std::vector<bool> reached(head_.size(), false);
    std::queue<int> queue;
    queue.push(out(source_));
    reached[out(source_)] = true;
    while (!queue.empty()) {
      const int node = queue.front();
      queue.pop();
      for (int a = head_[node]; a >= 0; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && !reached[arcs_[a].to]) {
          reached[arcs_[a].to] = true;
          queue.push(arcs_[a].to);
        }
      }
    }
    VertexSet cut;
    for (int x : graph_.vertices()) {
      if (reached[in(x)] && !reached[out(x)]) cut = cut.with(x);
    }
    return cut;
  }

 private:
  static constexpr int kInfinite = std::numeric_limits<int>::max() / 4;

  struct Arc {
    int to;
    int cap;
    int next;
  };

  static int in(int x) { return 2 * x; }
  static int out(int x) { return 2 * x + 1; }

  void add_arc(int from, int to, int cap) {
    arcs_.push_back({to, cap, head_[from]});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, 0, head_[to]});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  const Graph& graph_;
  int source_;
  int sink_;
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

void require_two_vertices(const Graph& graph) {
  if (graph.vertex_count() < 2) {
    throw Error(ErrorKind::TooSmall, "vertex connectivity needs at least two vertices");
  }
}

}  // namespace

ConnectivityResult local_vertex_connectivity(const Graph& graph, int u, int v) {
  if (u == v || graph.adjacent(u, v) || !graph.vertices().contains(u) ||
      !graph.vertices().contains(v)) {
    throw Error(ErrorKind::BadParameters,
                "local connectivity needs two distinct nonadjacent vertices");
  }
  SplitNetwork network(graph, u, v);
  ConnectivityResult out;
  out.kappa = network.max_flow();
  out.min_separator = network.min_cut_vertices();
  return out;
}

ConnectivityResult vertex_connectivity(const Graph& graph, unsigned jobs) {
  require_two_vertices(graph);
  if (graph.is_complete()) return {graph.vertex_count() - 1, VertexSet()};

  std::vector<std::pair<int, int>> pairs;
  for (int u : graph.vertices()) {
    for (int v : graph.vertices() - graph.neighbors(u)) {
      if (u < v) pairs.emplace_back(u, v);
    }
  }
  // Each pair owns its slot; the reduction below scans slots in pair order so
  // the reported separator does not depend on scheduling.
  std::vector<ConnectivityResult> local(pairs.size());
  parallel_blocks(pairs.size(), 16, jobs, [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t p = begin; p < end; ++p) {
      local[p] = local_vertex_connectivity(graph, pairs[p].first, pairs[p].second);
    }
  });
  const auto best = std::min_element(
      local.begin(), local.end(),
      [](const ConnectivityResult& a, const ConnectivityResult& b) { return a.kappa < b.kappa; });
  return *best;
}

ConnectivityResult vertex_connectivity_bruteforce(const Graph& graph) {
  require_two_vertices(graph);
  const int m = graph.vertex_count();
  if (m > kBruteForceConnectivityCap) throw CapExceededError(m, kBruteForceConnectivityCap);
  const SubsetIndexer indexer(graph.vertices());
  for (int size = 0; size <= m - 2; ++size) {
    // Gosper's hack over compact indices of the given popcount.
    std::uint64_t compact = size == 0 ? 0 : (std::uint64_t{1} << size) - 1;
    const std::uint64_t limit = indexer.count();
    while (compact < limit) {
      const VertexSet removed = indexer.expand(compact);
      if (!graph.is_connected(graph.vertices() - removed)) return {size, removed};
      if (compact == 0) break;
      const std::uint64_t low = compact & (~compact + 1);
      const std::uint64_t ripple = compact + low;
      compact = (((ripple ^ compact) >> 2) / low) | ripple;
    }
  }
  return {m - 1, VertexSet()};
}

void for_each_disconnecting_subset(const SimplicialComplex& complex,
                                   const EnumerationLimits& limits,
                                   const std::function<void(VertexSet)>& visit) {
  const SubsetIndexer indexer(complex.vertices());
  check_cap(indexer.width(), limits);
  const Graph skeleton = one_skeleton(complex);
  for (std::uint64_t k = 0; k < indexer.count(); ++k) {
    if (std::popcount(k) < 2) continue;
    const VertexSet subset = indexer.expand(k);
    if (skeleton.component_count(subset) >= 2) visit(subset);
  }
}

std::vector<VertexSet> disconnecting_subsets(const SimplicialComplex& complex,
                                             const EnumerationLimits& limits) {
  std::vector<VertexSet> out;
  for_each_disconnecting_subset(complex, limits, [&](VertexSet t) { out.push_back(t); });
  return out;
}

}  // namespace regconn
