#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "regconn/complex.hpp"
#include "regconn/parallel.hpp"

namespace regconn {

struct ConnectivityResult {
  int kappa = 0;
  // Empty for complete graphs (kappa = n - 1) and for disconnected graphs.
  VertexSet min_separator;
};

// Largest m such that G has more than m vertices and deleting fewer than m
// vertices leaves a connected graph. Menger: minimum over nonadjacent pairs of
// the max flow in the vertex-split network. Throws Error(TooSmall) below two
// vertices.
ConnectivityResult vertex_connectivity(const Graph& graph, unsigned jobs = 0);

// Same contract by exhaustive search over removal sets of ascending size.
// Throws CapExceededError above 14 vertices.
inline constexpr int kBruteForceConnectivityCap = 14;
ConnectivityResult vertex_connectivity_bruteforce(const Graph& graph);

// Local vertex connectivity between nonadjacent u and v, with a minimum
// u-v separator.
ConnectivityResult local_vertex_connectivity(const Graph& graph, int u, int v);

// Every T ⊆ V(Δ) with |T| ≥ 2 whose restriction has a disconnected 1-skeleton
// (isolated vertices count as components), in ascending compact-index order.
void for_each_disconnecting_subset(const SimplicialComplex& complex,
                                   const EnumerationLimits& limits,
                                   const std::function<void(VertexSet)>& visit);
std::vector<VertexSet> disconnecting_subsets(const SimplicialComplex& complex,
                                             const EnumerationLimits& limits = {});

}  // namespace regconn
