#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "regconn/vertex_set.hpp"

namespace regconn {

enum class GhostPolicy {
  // Throw GhostVertexError listing every unused vertex.
  Reject,
  // Relabel the used vertices densely as 1..n', preserving order.
  Renumber,
};

// A finite simplicial complex stored by its facets. Faces are never stored;
// they are the subsets of facets.
//
// The vertex universe is usually {0..n-1}. Restrictions keep the ambient
// labels and shrink the universe to T, so witnesses stay meaningful in the
// labels of the original complex. A complex with no facets is {∅}: it has the
// empty face and nothing else.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  static SimplicialComplex from_facets(int n, std::span<const VertexSet> faces,
                                       GhostPolicy policy = GhostPolicy::Reject);
  // 1-based labels, convenient for literals.
  static SimplicialComplex from_labels(
      int n, std::initializer_list<std::initializer_list<int>> faces,
      GhostPolicy policy = GhostPolicy::Reject);

  // Builds a complex whose universe is given explicitly. Every element of
  // `universe` must be covered by some face; faces outside it are an error.
  static SimplicialComplex with_universe(int n, VertexSet universe,
                                         std::vector<VertexSet> faces);

  int ambient_size() const noexcept { return n_; }
  VertexSet vertices() const noexcept { return universe_; }
  int vertex_count() const noexcept { return universe_.size(); }
  const std::vector<VertexSet>& facets() const noexcept { return facets_; }
  // -1 for {∅}.
  int dim() const noexcept { return dim_; }
  bool has_no_vertices() const noexcept { return universe_.empty(); }

  bool contains_face(VertexSet face) const noexcept;
  // Faces of cardinality `size` (dimension size-1), ascending by mask.
  std::vector<VertexSet> faces_of_size(int size) const;
  // f-vector indexed by cardinality: f[0] = 1 for the empty face.
  std::vector<std::uint64_t> face_counts() const;

  // Free-form construction tag carried into reports, e.g. "nevo:3,3".
  const std::string& provenance() const noexcept { return provenance_; }
  SimplicialComplex& set_provenance(std::string tag) {
    provenance_ = std::move(tag);
    return *this;
  }

  bool operator==(const SimplicialComplex& other) const noexcept {
    return n_ == other.n_ && universe_ == other.universe_ &&
           facets_ == other.facets_;
  }

 private:
  SimplicialComplex(int n, VertexSet universe, std::vector<VertexSet> facets);

  int n_ = 0;
  VertexSet universe_;
  std::vector<VertexSet> facets_;
  int dim_ = -1;
  std::string provenance_;
};

// Inclusion-maximal members of `faces`, empty sets dropped, sorted ascending.
std::vector<VertexSet> maximal_sets(std::vector<VertexSet> faces);

// Unused vertices of [n] (0-based), ascending.
std::vector<int> ghost_vertices(int n, std::span<const VertexSet> faces);

SimplicialComplex restriction(const SimplicialComplex& complex, VertexSet subset);

// Right operand's vertices are shifted by the left operand's ambient size.
SimplicialComplex join(const SimplicialComplex& left,
                       const SimplicialComplex& right);

// Minimal nonfaces, i.e. the supports of the minimal generators of the
// Stanley-Reisner ideal, ascending by (size, mask).
struct MinimalNonfaces {
  std::vector<VertexSet> sets;
  int max_degree = 0;  // s
};

// Throws Error(FullSimplex) when the complex is a full simplex on its universe.
MinimalNonfaces minimal_nonfaces(const SimplicialComplex& complex);
// Same enumeration without the full-simplex error; returns an empty list.
std::vector<VertexSet> minimal_nonface_sets(const SimplicialComplex& complex);

struct Predicates {
  int dim = -1;
  bool is_pure = false;
  bool is_flag = false;
  bool is_strongly_connected = false;
  // Histogram: facet-containment count -> number of (dim-1)-faces with that
  // count. Absent for non-pure complexes.
  std::optional<std::map<int, std::uint64_t>> ridge_degrees;
  bool is_pseudomanifold = false;
};

Predicates predicates(const SimplicialComplex& complex);

// Simple undirected graph on a vertex universe, adjacency as bitmasks.
class Graph {
 public:
  Graph() = default;
  Graph(int n, VertexSet vertices);
  explicit Graph(int n) : Graph(n, VertexSet::range(n)) {}

  // 0-based endpoints. Loops and duplicate edges are ignored.
  static Graph from_edges(int n,
                          std::span<const std::pair<int, int>> edges);

  void add_edge(int u, int v);

  int ambient_size() const noexcept { return n_; }
  VertexSet vertices() const noexcept { return vertices_; }
  int vertex_count() const noexcept { return vertices_.size(); }
  VertexSet neighbors(int v) const noexcept { return adjacency_[v]; }
  bool adjacent(int u, int v) const noexcept { return adjacency_[u].contains(v); }
  std::size_t edge_count() const noexcept;
  std::vector<std::pair<int, int>> edges() const;
  int min_degree() const noexcept;

  // Graph induced on vertices() & keep.
  Graph induced(VertexSet keep) const;
  // Connected components of the subgraph induced on `subset`.
  int component_count(VertexSet subset) const noexcept;
  bool is_connected(VertexSet subset) const noexcept {
    return component_count(subset) <= 1;
  }
  bool is_complete() const noexcept;

 private:
  int n_ = 0;
  VertexSet vertices_;
  std::vector<VertexSet> adjacency_;
};

Graph one_skeleton(const SimplicialComplex& complex);

// The flag complex of a graph: faces are its cliques.
SimplicialComplex clique_complex(const Graph& graph);

struct InducedCycleCheck {
  bool free = true;
  // Vertices of a chordless cycle in cyclic order, when !free.
  std::vector<int> witness;
};

// Exhaustive search for chordless cycles of length 4..max_length.
InducedCycleCheck induced_cycle_free_up_to(const Graph& graph, int max_length);

// Length of the shortest chordless cycle of length >= 4, if any.
std::optional<int> shortest_long_induced_cycle(const Graph& graph);

}  // namespace regconn
