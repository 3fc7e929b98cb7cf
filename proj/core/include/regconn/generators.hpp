#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "regconn/complex.hpp"

namespace regconn {

// The two euclidean divisions behind the tightness family:
//   s·h = (s-1)·q' + r',  0 ≤ r' ≤ s-2
//   ⌈sh/(s-1)⌉ = s·q + r, 0 ≤ r ≤ s-1
struct NevoParameters {
  int s = 0;
  int h = 0;
  int q_prime = 0;
  int r_prime = 0;
  int q = 0;
  int r = 0;
};

// Throws Error(BadParameters) unless s ≥ 2 and h ≥ s-1, and Error(Internal)
// if r = 1 or r' = 0 ⇎ r = 0 ever occurs.
NevoParameters nevo_parameters(int s, int h);

// ∂σ^d: d+1 vertices, every d-subset a facet.
SimplicialComplex simplex_boundary(int d);
// The full simplex on d+1 vertices.
SimplicialComplex simplex(int d);

// ∂σ¹ * (∂σ^{s-1})^{*q}, followed by * ∂σ^{r-1} when r ≥ 2. The ∂σ¹ factor
// occupies vertices 0 and 1.
std::pair<SimplicialComplex, NevoParameters> nevo_complex(int s, int h);

// Boundary faces of the (d+1)-prism taken as simplices: rings a_1..a_{d+1}
// (vertices 0..d) and b_1..b_{d+1} (vertices d+1..2d+1), the two bases and
// the d+1 quadrilaterals {a_i, a_{i+1}, b_i, b_{i+1}}.
SimplicialComplex prism_complex(int d);

// The m-cycle as a 1-dimensional complex.
SimplicialComplex cycle_complex(int m);

// Join of m copies of S⁰.
SimplicialComplex cross_polytope(int m);
inline SimplicialComplex octahedron() { return cross_polytope(3).set_provenance("octahedron"); }

// Every vertex is present; each set of size 2..dim_cap+1 is kept with
// probability `density` (in ascending size, then mask order) and the result is
// closed downward. Deterministic for fixed arguments.
inline constexpr int kRandomComplexMaxVertices = 12;
SimplicialComplex random_complex(int n, int dim_cap, double density, std::uint64_t seed);

// "name" or "name:arg,arg": simplex-boundary:d, simplex:d, nevo:s,h,
// prism:d, cycle:m, cross-polytope:m, octahedron,
// random:n,dim_cap,density,seed. Throws Error(BadParameters).
SimplicialComplex generate(const std::string& spec);

}  // namespace regconn
