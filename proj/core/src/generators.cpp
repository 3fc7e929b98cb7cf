#include "regconn/generators.hpp"

#include <charconv>
#include <random>
#include <sstream>
#include <vector>

#include "regconn/error.hpp"

namespace regconn {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw Error(ErrorKind::BadParameters, message);
}

SimplicialComplex tagged(SimplicialComplex complex, std::string tag) {
  complex.set_provenance(std::move(tag));
  return complex;
}

}  // namespace

NevoParameters nevo_parameters(int s, int h) {
  require(s >= 2, "nevo family needs s >= 2");
  require(h >= s - 1, "nevo family needs h >= s - 1");
  NevoParameters p;
  p.s = s;
  p.h = h;
  const int product = s * h;
  p.q_prime = product / (s - 1);
  p.r_prime = product % (s - 1);
  const int vertices_beyond_pair = p.q_prime + (p.r_prime > 0 ? 1 : 0);
  p.q = vertices_beyond_pair / s;
  p.r = vertices_beyond_pair % s;
  if (p.r == 1 || ((p.r_prime == 0) != (p.r == 0))) {
    throw Error(ErrorKind::Internal, "nevo parameters violate r != 1 or r' = 0 <=> r = 0");
  }
  return p;
}

SimplicialComplex simplex_boundary(int d) {
  require(d >= 1, "simplex boundary needs d >= 1");
  require(d + 1 <= kMaxVertices, "simplex boundary too large");
  const VertexSet all = VertexSet::range(d + 1);
  std::vector<VertexSet> facets;
  for (int v : all) facets.push_back(all.without(v));
  return tagged(SimplicialComplex::from_facets(d + 1, facets),
                "simplex-boundary:" + std::to_string(d));
}

SimplicialComplex simplex(int d) {
  require(d >= 0 && d + 1 <= kMaxVertices, "simplex needs 0 <= d < 64");
  const std::vector<VertexSet> facets{VertexSet::range(d + 1)};
  return tagged(SimplicialComplex::from_facets(d + 1, facets),
                "simplex:" + std::to_string(d));
}

std::pair<SimplicialComplex, NevoParameters> nevo_complex(int s, int h) {
  const NevoParameters p = nevo_parameters(s, h);
  SimplicialComplex out = simplex_boundary(1);
  for (int i = 0; i < p.q; ++i) out = join(out, simplex_boundary(s - 1));
  if (p.r >= 2) out = join(out, simplex_boundary(p.r - 1));
  out.set_provenance("nevo:" + std::to_string(s) + "," + std::to_string(h));
  return {std::move(out), p};
}

SimplicialComplex prism_complex(int d) {
  require(d >= 2, "prism complex needs d >= 2");
  const int ring = d + 1;
  auto a = [&](int i) { return i % ring; };
  auto b = [&](int i) { return ring + i % ring; };
  std::vector<VertexSet> faces;
  faces.push_back(VertexSet::range(ring));
  faces.push_back(VertexSet::range(ring).shifted(ring));
  for (int i = 0; i < ring; ++i) {
    faces.push_back(VertexSet().with(a(i)).with(a(i + 1)).with(b(i)).with(b(i + 1)));
  }
  return tagged(SimplicialComplex::from_facets(2 * ring, faces),
                "prism:" + std::to_string(d));
}

SimplicialComplex cycle_complex(int m) {
  require(m >= 3, "cycle complex needs m >= 3");
  require(m <= kMaxVertices, "cycle complex too large");
  std::vector<VertexSet> edges;
  for (int i = 0; i < m; ++i) edges.push_back(VertexSet().with(i).with((i + 1) % m));
  return tagged(SimplicialComplex::from_facets(m, edges), "cycle:" + std::to_string(m));
}

SimplicialComplex cross_polytope(int m) {
  require(m >= 1, "cross polytope needs m >= 1");
  require(2 * m <= kMaxVertices, "cross polytope too large");
  SimplicialComplex out = simplex_boundary(1);
  for (int i = 1; i < m; ++i) out = join(out, simplex_boundary(1));
  out.set_provenance("cross-polytope:" + std::to_string(m));
  return out;
}

SimplicialComplex random_complex(int n, int dim_cap, double density, std::uint64_t seed) {
  require(n >= 1 && n <= kRandomComplexMaxVertices, "random complex needs 1 <= n <= 12");
  require(dim_cap >= 0, "random complex needs dim_cap >= 0");
  require(density >= 0.0 && density <= 1.0, "density must lie in [0, 1]");
  // Uniforms are derived from raw engine output, which the standard fixes;
  // distribution objects are implementation-defined.
  std::mt19937_64 engine(seed);
  auto uniform = [&engine] {
    return static_cast<double>(engine() >> 11) * (1.0 / 9007199254740992.0);
  };
  std::vector<VertexSet> faces;
  for (int v = 0; v < n; ++v) faces.push_back(VertexSet().with(v));
  const int max_size = std::min(n, dim_cap + 1);
  const std::uint64_t count = std::uint64_t{1} << n;
  for (int size = 2; size <= max_size; ++size) {
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      if (std::popcount(mask) != size) continue;
      if (uniform() < density) faces.emplace_back(mask);
    }
  }
  std::ostringstream tag;
  tag << "random:" << n << ',' << dim_cap << ',' << density << ',' << seed;
  return tagged(SimplicialComplex::from_facets(n, faces), tag.str());
}

namespace {

int parse_int(const std::string& text) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  require(ec == std::errc() && ptr == end, "expected an integer, got '" + text + "'");
  return value;
}

double parse_double(const std::string& text) {
  double value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  require(ec == std::errc() && ptr == end, "expected a number, got '" + text + "'");
  return value;
}

}  // namespace

SimplicialComplex generate(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  std::vector<std::string> args;
  if (colon != std::string::npos) {
    std::stringstream rest(spec.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) args.push_back(item);
  }
  auto arity = [&](std::size_t expected) {
    require(args.size() == expected, "generator '" + name + "' takes " +
                                         std::to_string(expected) + " argument(s)");
  };

  if (name == "simplex-boundary") {
    arity(1);
    return simplex_boundary(parse_int(args[0]));
  }
  if (name == "simplex") {
    arity(1);
    return simplex(parse_int(args[0]));
  }
  if (name == "nevo") {
    arity(2);
    return nevo_complex(parse_int(args[0]), parse_int(args[1])).first;
  }
  if (name == "prism") {
    arity(1);
    return prism_complex(parse_int(args[0]));
  }
  if (name == "cycle") {
    arity(1);
    return cycle_complex(parse_int(args[0]));
  }
  if (name == "cross-polytope") {
    arity(1);
    return cross_polytope(parse_int(args[0]));
  }
  if (name == "octahedron") {
    arity(0);
    return octahedron();
  }
  if (name == "random") {
    arity(4);
    const int seed = parse_int(args[3]);
    require(seed >= 0, "seed must be non-negative");
    return random_complex(parse_int(args[0]), parse_int(args[1]), parse_double(args[2]),
                          static_cast<std::uint64_t>(seed));
  }
  throw Error(ErrorKind::BadParameters, "unknown generator '" + name + "'");
}

}  // namespace regconn
