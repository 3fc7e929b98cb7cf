#include "regconn/complex.hpp"

#include <algorithm>
#include <numeric>

#include "regconn/error.hpp"

namespace regconn {

namespace {

using mask_t = VertexSet::mask_type;

// Calls fn(sub) for every submask of `mask`, including 0 and mask itself.
template <typename Fn>
void for_each_submask(mask_t mask, Fn&& fn) {
  mask_t sub = mask;
  while (true) {
    fn(sub);
    if (sub == 0) break;
    sub = (sub - 1) & mask;
  }
}

std::vector<VertexSet> all_faces(const std::vector<VertexSet>& facets) {
  std::vector<VertexSet> out;
  out.push_back(VertexSet());
  for (VertexSet f : facets) {
    for_each_submask(f.bits(), [&](mask_t sub) { out.emplace_back(sub); });
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<VertexSet> maximal_sets(std::vector<VertexSet> faces) {
  std::erase_if(faces, [](VertexSet f) { return f.empty(); });
  std::sort(faces.begin(), faces.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<VertexSet> kept;
  for (VertexSet f : faces) {
    bool covered = std::any_of(kept.begin(), kept.end(),
                               [f](VertexSet k) { return f.is_subset_of(k); });
    if (!covered) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<int> ghost_vertices(int n, std::span<const VertexSet> faces) {
  VertexSet used;
  for (VertexSet f : faces) used = used | f;
  std::vector<int> ghosts;
  for (int v : VertexSet::range(n) - used) ghosts.push_back(v);
  return ghosts;
}

SimplicialComplex::SimplicialComplex(int n, VertexSet universe,
                                     std::vector<VertexSet> facets)
    : n_(n), universe_(universe), facets_(std::move(facets)) {
  for (VertexSet f : facets_) dim_ = std::max(dim_, f.size() - 1);
}

SimplicialComplex SimplicialComplex::from_facets(int n,
                                                 std::span<const VertexSet> faces,
                                                 GhostPolicy policy) {
  if (n < 0 || n > kMaxVertices) {
    throw Error(ErrorKind::BadParameters,
                "vertex count must lie in [0, " + std::to_string(kMaxVertices) + "]");
  }
  if (faces.empty()) throw Error(ErrorKind::EmptyInput, "no faces given");
  const VertexSet ambient = VertexSet::range(n);
  for (VertexSet f : faces) {
    if (!f.is_subset_of(ambient)) {
      throw Error(ErrorKind::BadParameters,
                  "face " + f.to_string() + " is not contained in [" +
                      std::to_string(n) + "]");
    }
  }
  std::vector<int> ghosts = ghost_vertices(n, faces);
  if (ghosts.empty()) {
    return SimplicialComplex(
        n, ambient, maximal_sets(std::vector<VertexSet>(faces.begin(), faces.end())));
  }
  if (policy == GhostPolicy::Reject) {
    for (int& v : ghosts) ++v;
    throw GhostVertexError(std::move(ghosts));
  }
  // Renumber: the k-th used vertex becomes k.
  VertexSet used = ambient;
  for (int g : ghosts) used = used.without(g);
  SubsetIndexer indexer(used);
  std::vector<VertexSet> renumbered;
  renumbered.reserve(faces.size());
  for (VertexSet f : faces) renumbered.emplace_back(indexer.compress(f));
  const int m = used.size();
  return SimplicialComplex(m, VertexSet::range(m), maximal_sets(std::move(renumbered)));
}

SimplicialComplex SimplicialComplex::from_labels(
    int n, std::initializer_list<std::initializer_list<int>> faces,
    GhostPolicy policy) {
  std::vector<VertexSet> sets;
  sets.reserve(faces.size());
  for (const auto& f : faces) sets.push_back(VertexSet::from_labels(f));
  return from_facets(n, sets, policy);
}

SimplicialComplex SimplicialComplex::with_universe(int n, VertexSet universe,
                                                   std::vector<VertexSet> faces) {
  VertexSet used;
  for (VertexSet f : faces) {
    if (!f.is_subset_of(universe)) {
      throw Error(ErrorKind::BadParameters,
                  "face " + f.to_string() + " leaves the vertex universe");
    }
    used = used | f;
  }
  if (used != universe) {
    std::vector<int> ghosts = (universe - used).labels();
    throw GhostVertexError(std::move(ghosts));
  }
  return SimplicialComplex(n, universe, maximal_sets(std::move(faces)));
}

bool SimplicialComplex::contains_face(VertexSet face) const noexcept {
  if (face.empty()) return true;
  return std::any_of(facets_.begin(), facets_.end(),
                     [face](VertexSet f) { return face.is_subset_of(f); });
}

std::vector<VertexSet> SimplicialComplex::faces_of_size(int size) const {
  std::vector<VertexSet> out;
  if (size == 0) {
    out.emplace_back();
    return out;
  }
  for (VertexSet f : facets_) {
    if (f.size() < size) continue;
    for_each_submask(f.bits(), [&](mask_t sub) {
      if (std::popcount(sub) == size) out.emplace_back(sub);
    });
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::uint64_t> SimplicialComplex::face_counts() const {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(dim_ + 2), 0);
  for (VertexSet f : all_faces(facets_)) ++counts[f.size()];
  return counts;
}

SimplicialComplex restriction(const SimplicialComplex& complex, VertexSet subset) {
  const VertexSet universe = complex.vertices() & subset;
  std::vector<VertexSet> faces;
  faces.reserve(complex.facets().size());
  for (VertexSet f : complex.facets()) faces.push_back(f & universe);
  SimplicialComplex out =
      SimplicialComplex::with_universe(complex.ambient_size(), universe, std::move(faces));
  return out;
}

SimplicialComplex join(const SimplicialComplex& left, const SimplicialComplex& right) {
  const int offset = left.ambient_size();
  const int n = offset + right.ambient_size();
  if (n > kMaxVertices) {
    throw Error(ErrorKind::BadParameters, "join exceeds 64 vertices");
  }
  // {∅} has no stored facets but acts as the single facet ∅.
  std::vector<VertexSet> lf = left.facets();
  std::vector<VertexSet> rf = right.facets();
  if (lf.empty()) lf.emplace_back();
  if (rf.empty()) rf.emplace_back();
  std::vector<VertexSet> faces;
  faces.reserve(lf.size() * rf.size());
  for (VertexSet a : lf) {
    for (VertexSet b : rf) faces.push_back(a | b.shifted(offset));
  }
  const VertexSet universe = left.vertices() | right.vertices().shifted(offset);
  SimplicialComplex out = SimplicialComplex::with_universe(n, universe, std::move(faces));
  if (!left.provenance().empty() && !right.provenance().empty()) {
    out.set_provenance(left.provenance() + "*" + right.provenance());
  }
  return out;
}

std::vector<VertexSet> minimal_nonface_sets(const SimplicialComplex& complex) {
  std::vector<VertexSet> out;
  const VertexSet universe = complex.vertices();
  for (VertexSet face : all_faces(complex.facets())) {
    const int lowest_new = face.empty() ? 0 : face.max() + 1;
    for (int v : universe) {
      if (v < lowest_new) continue;
      const VertexSet candidate = face.with(v);
      if (complex.contains_face(candidate)) continue;
      bool minimal = true;
      for (int u : face) {
        if (!complex.contains_face(candidate.without(u))) {
          minimal = false;
          break;
        }
      }
      if (minimal) out.push_back(candidate);
    }
  }
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

MinimalNonfaces minimal_nonfaces(const SimplicialComplex& complex) {
  MinimalNonfaces out;
  out.sets = minimal_nonface_sets(complex);
  if (out.sets.empty()) {
    throw Error(ErrorKind::FullSimplex,
                "the complex is a full simplex; its Stanley-Reisner ideal is zero");
  }
  for (VertexSet s : out.sets) out.max_degree = std::max(out.max_degree, s.size());
  return out;
}

Predicates predicates(const SimplicialComplex& complex) {
  Predicates out;
  out.dim = complex.dim();
  const auto& facets = complex.facets();
  const int d = complex.dim();
  out.is_pure = std::all_of(facets.begin(), facets.end(),
                            [d](VertexSet f) { return f.size() == d + 1; });

  const auto nonfaces = minimal_nonface_sets(complex);
  out.is_flag = std::all_of(nonfaces.begin(), nonfaces.end(),
                            [](VertexSet s) { return s.size() == 2; });

  // Facet dual graph: adjacent when the facets share a face of dimension d-1.
  const std::size_t m = facets.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < m; ++a) {
    if (facets[a].size() != d + 1) continue;
    for (std::size_t b = a + 1; b < m; ++b) {
      if (facets[b].size() != d + 1) continue;
      if ((facets[a] & facets[b]).size() == d) parent[find(a)] = find(b);
    }
  }
  std::size_t roots = 0;
  for (std::size_t a = 0; a < m; ++a) roots += find(a) == a ? 1 : 0;
  out.is_strongly_connected = roots <= 1;

  if (out.is_pure && d >= 0) {
    std::map<VertexSet, int> containment;
    for (VertexSet f : facets) {
      for (int v : f) ++containment[f.without(v)];
    }
    std::map<int, std::uint64_t> histogram;
    for (const auto& [ridge, count] : containment) ++histogram[count];
    out.ridge_degrees = std::move(histogram);
    const bool all_two = out.ridge_degrees->size() == 1 &&
                         out.ridge_degrees->begin()->first == 2;
    out.is_pseudomanifold = out.is_strongly_connected && all_two;
  }
  return out;
}

Graph::Graph(int n, VertexSet vertices)
    : n_(n), vertices_(vertices), adjacency_(static_cast<std::size_t>(n)) {
  if (n < 0 || n > kMaxVertices) {
    throw Error(ErrorKind::BadParameters, "graph size out of range");
  }
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u == v) return;
  if (!vertices_.contains(u) || !vertices_.contains(v)) {
    throw Error(ErrorKind::BadParameters, "edge endpoint outside the graph");
  }
  adjacency_[u] = adjacency_[u].with(v);
  adjacency_[v] = adjacency_[v].with(u);
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (int v : vertices_) twice += static_cast<std::size_t>(adjacency_[v].size());
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u : vertices_) {
    for (int v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

int Graph::min_degree() const noexcept {
  int best = vertex_count();
  for (int v : vertices_) best = std::min(best, adjacency_[v].size());
  return best;
}

Graph Graph::induced(VertexSet keep) const {
  Graph g(n_, vertices_ & keep);
  for (int v : g.vertices_) g.adjacency_[v] = adjacency_[v] & g.vertices_;
  return g;
}

int Graph::component_count(VertexSet subset) const noexcept {
  VertexSet remaining = subset & vertices_;
  int components = 0;
  while (!remaining.empty()) {
    ++components;
    VertexSet frontier = VertexSet().with(remaining.min());
    VertexSet seen = frontier;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next = next | adjacency_[v];
      next = (next & remaining) - seen;
      seen = seen | next;
      frontier = next;
    }
    remaining = remaining - seen;
  }
  return components;
}

bool Graph::is_complete() const noexcept {
  for (int v : vertices_) {
    if ((adjacency_[v] | VertexSet().with(v)) != vertices_) return false;
  }
  return true;
}

Graph one_skeleton(const SimplicialComplex& complex) {
  Graph g(complex.ambient_size(), complex.vertices());
  for (VertexSet f : complex.facets()) {
    for (int u : f) {
      for (int v : f) {
        if (u < v) g.add_edge(u, v);
      }
    }
  }
  return g;
}

namespace {

// Bron-Kerbosch with pivoting over bitmasks.
void maximal_cliques(const Graph& g, VertexSet r, VertexSet p, VertexSet x,
                     std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  const VertexSet px = p | x;
  int pivot = px.min();
  int best = -1;
  for (int u : px) {
    int deg = (p & g.neighbors(u)).size();
    if (deg > best) {
      best = deg;
      pivot = u;
    }
  }
  for (int v : p - g.neighbors(pivot)) {
    maximal_cliques(g, r.with(v), p & g.neighbors(v), x & g.neighbors(v), out);
    p = p.without(v);
    x = x.with(v);
  }
}

struct ChordlessSearch {
  const Graph& g;
  int max_length;
  std::vector<int> path;
  std::vector<int> found;

  // `forbidden` holds path vertices and neighbors of internal path vertices.
  bool extend(VertexSet forbidden, VertexSet allowed) {
    const int start = path.front();
    const int last = path.back();
    for (int u : g.neighbors(last) & allowed) {
      if (forbidden.contains(u)) continue;
      if (path.size() >= 2 && g.adjacent(u, start)) {
        const std::size_t length = path.size() + 1;
        if (length >= 4 && length <= static_cast<std::size_t>(max_length)) {
          found = path;
          found.push_back(u);
          return true;
        }
        continue;
      }
      if (path.size() + 2 > static_cast<std::size_t>(max_length)) continue;
      VertexSet next_forbidden = forbidden.with(u);
      if (path.size() >= 2) next_forbidden = next_forbidden | g.neighbors(last);
      path.push_back(u);
      if (extend(next_forbidden, allowed)) return true;
      path.pop_back();
    }
    return false;
  }
};

}  // namespace

SimplicialComplex clique_complex(const Graph& graph) {
  std::vector<VertexSet> cliques;
  maximal_cliques(graph, VertexSet(), graph.vertices(), VertexSet(), cliques);
  return SimplicialComplex::with_universe(graph.ambient_size(), graph.vertices(),
                                          std::move(cliques));
}

InducedCycleCheck induced_cycle_free_up_to(const Graph& graph, int max_length) {
  if (max_length < 4) {
    throw Error(ErrorKind::BadParameters, "induced cycle length bound must be >= 4");
  }
  InducedCycleCheck out;
  for (int start : graph.vertices()) {
    // Cycles are reported from their smallest vertex.
    VertexSet allowed = graph.vertices();
    for (int v : graph.vertices()) {
      if (v <= start) allowed = allowed.without(v);
    }
    ChordlessSearch search{graph, max_length, {start}, {}};
    if (search.extend(VertexSet().with(start), allowed)) {
      out.free = false;
      out.witness = std::move(search.found);
      return out;
    }
  }
  return out;
}

std::optional<int> shortest_long_induced_cycle(const Graph& graph) {
  for (int length = 4; length <= graph.vertex_count(); ++length) {
    if (!induced_cycle_free_up_to(graph, length).free) return length;
  }
  return std::nullopt;
}

}  // namespace regconn
