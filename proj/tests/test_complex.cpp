#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "corpus.hpp"
#include "oracle.hpp"
#include "regconn/complex.hpp"
#include "regconn/error.hpp"
#include "regconn/facet_io.hpp"
#include "regconn/generators.hpp"

namespace regconn {
namespace {

using testing::to_mask;
using testing::to_oracle;

std::vector<VertexSet> labels(std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<VertexSet> out;
  for (auto s : sets) out.push_back(VertexSet::from_labels(s));
  return out;
}

// Every face of `c` by brute force, compared through the oracle.
void expect_same_faces(const SimplicialComplex& c, const oracle::Complex& ref, oracle::Mask within) {
  const auto faces = oracle::faces_within(ref, within);
  for (std::size_t size = 1; size < faces.size(); ++size) {
    std::vector<oracle::Mask> ours;
    for (VertexSet f : c.faces_of_size(static_cast<int>(size))) ours.push_back(to_mask(f));
    std::sort(ours.begin(), ours.end());
    EXPECT_EQ(ours, faces[size]) << "size " << size;
  }
}

TEST(VertexSetTest, LabelsAreOneBased) {
  const VertexSet s = VertexSet::from_labels({1, 3});
  EXPECT_EQ(s.bits(), 0b101U);
  EXPECT_EQ(s.labels(), (std::vector<int>{1, 3}));
  EXPECT_EQ(s.indices(), (std::vector<int>{0, 2}));
  EXPECT_EQ(s.to_string(), "{1,3}");
  EXPECT_EQ(VertexSet().to_string(), "{}");
}

TEST(VertexSetTest, IterationIsAscending) {
  const VertexSet s = VertexSet::of({5, 1, 9, 3});
  std::vector<int> seen(s.begin(), s.end());
  EXPECT_EQ(seen, (std::vector<int>{1, 3, 5, 9}));
  EXPECT_EQ(s.min(), 1);
  EXPECT_EQ(s.max(), 9);
}

TEST(SubsetIndexerTest, RoundTripsOnSparseUniverse) {
  const SubsetIndexer idx(VertexSet::of({1, 4, 6}));
  EXPECT_EQ(idx.width(), 3);
  EXPECT_EQ(idx.count(), 8U);
  for (std::uint64_t k = 0; k < idx.count(); ++k) {
    const VertexSet e = idx.expand(k);
    EXPECT_TRUE(e.is_subset_of(VertexSet::of({1, 4, 6})));
    EXPECT_EQ(idx.compress(e), k);
  }
}

TEST(FromFacetsTest, DropsDuplicatesAndNonMaximal) {
  const auto a = SimplicialComplex::from_facets(3, labels({{1, 2}, {2, 3}, {1, 2}}));
  EXPECT_EQ(a.facets(), labels({{1, 2}, {2, 3}}));
  const auto b = SimplicialComplex::from_facets(4, labels({{1, 2, 3}, {1, 2}, {4}}));
  EXPECT_EQ(b.facets(), labels({{1, 2, 3}, {4}}));
}

TEST(FromFacetsTest, GhostVertexIsReported) {
  try {
    SimplicialComplex::from_facets(4, labels({{1, 2, 3}}));
    FAIL() << "expected GhostVertexError";
  } catch (const GhostVertexError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GhostVertex);
    EXPECT_EQ(e.vertices(), (std::vector<int>{4}));
  }
}

TEST(FromFacetsTest, GhostVertexCanBeRenumbered) {
  const auto c = SimplicialComplex::from_facets(5, labels({{1, 2}, {2, 5}}), GhostPolicy::Renumber);
  EXPECT_EQ(c.vertex_count(), 3);
  EXPECT_EQ(c.ambient_size(), 3);
  EXPECT_EQ(c.facets(), labels({{1, 2}, {2, 3}}));
}

TEST(FromFacetsTest, EmptyInputRejected) {
  try {
    SimplicialComplex::from_facets(3, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyInput);
  }
}

TEST(FromFacetsTest, FaceOutsideRangeRejected) {
  EXPECT_THROW(SimplicialComplex::from_facets(2, labels({{1, 3}})), Error);
}

TEST(RestrictionTest, TriangleBoundaryToEdge) {
  const auto r = restriction(simplex_boundary(2), VertexSet::from_labels({1, 2}));
  EXPECT_EQ(r.facets(), labels({{1, 2}}));
  EXPECT_EQ(r.vertices(), VertexSet::from_labels({1, 2}));
}

TEST(RestrictionTest, OctahedronEquatorIsFourCycle) {
  const auto oct = octahedron();
  // Antipodal pairs are {1,2}, {3,4}, {5,6}; dropping one leaves a square.
  const VertexSet t = VertexSet::from_labels({3, 4, 5, 6});
  const auto r = restriction(oct, t);
  expect_same_faces(r, to_oracle(oct), to_mask(t));
  EXPECT_EQ(r.dim(), 1);
  EXPECT_EQ(r.facets().size(), 4U);
  EXPECT_EQ(one_skeleton(r).min_degree(), 2);
}

TEST(RestrictionTest, FullSetIsIdentity) {
  for (const auto& [name, c] : testing::fixed_corpus()) {
    EXPECT_EQ(restriction(c, c.vertices()), c) << name;
  }
}

TEST(RestrictionTest, EmptySubsetIsVoidComplex) {
  const auto r = restriction(octahedron(), VertexSet());
  EXPECT_TRUE(r.has_no_vertices());
  EXPECT_TRUE(r.facets().empty());
  EXPECT_EQ(r.dim(), -1);
}

TEST(RestrictionProperty, IdempotentOnNestedSubsets) {
  for (const auto& [name, c] : testing::random_corpus(10, 7, 300)) {
    const std::uint64_t full = c.vertices().bits();
    for (std::uint64_t t = full;; t = (t - 1) & full) {
      const auto rt = restriction(c, VertexSet(t));
      for (std::uint64_t u = t;; u = (u - 1) & t) {
        ASSERT_EQ(restriction(rt, VertexSet(u)), restriction(c, VertexSet(u))) << name;
        if (u == 0) break;
      }
      if (t == 0) break;
    }
  }
}

TEST(RestrictionProperty, FacesMatchBruteForce) {
  for (const auto& [name, c] : testing::random_corpus(20, 8, 500)) {
    const auto ref = to_oracle(c);
    for (std::uint64_t t : {0xFFULL, 0x0FULL, 0xA5ULL, 0x3CULL}) {
      expect_same_faces(restriction(c, VertexSet(t)), ref, static_cast<oracle::Mask>(t));
    }
  }
}

TEST(JoinTest, TwoPointsSquared) {
  const auto c4 = join(simplex_boundary(1), simplex_boundary(1));
  EXPECT_EQ(c4.vertex_count(), 4);
  EXPECT_EQ(c4.facets().size(), 4U);
  EXPECT_EQ(c4.dim(), 1);
  EXPECT_EQ(one_skeleton(c4).edge_count(), 4U);
  EXPECT_EQ(one_skeleton(c4).min_degree(), 2);
}

TEST(JoinTest, ThreePointPairsIsOctahedron) {
  const auto j = join(join(simplex_boundary(1), simplex_boundary(1)), simplex_boundary(1));
  EXPECT_EQ(j.vertex_count(), 6);
  EXPECT_EQ(j.facets().size(), 8U);
  for (VertexSet f : j.facets()) EXPECT_EQ(f.size(), 3);
  // Known octahedron facets: one vertex from each antipodal pair.
  std::vector<VertexSet> expected;
  for (int a : {0, 1}) {
    for (int b : {2, 3}) {
      for (int c : {4, 5}) expected.push_back(VertexSet::of({a, b, c}));
    }
  }
  std::sort(expected.begin(), expected.end());
  auto got = j.facets();
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, expected);
}

TEST(JoinTest, SuspendedTriangle) {
  const auto j = join(simplex_boundary(1), simplex_boundary(2));
  EXPECT_EQ(j.vertex_count(), 5);
  EXPECT_EQ(j.dim(), 2);
  EXPECT_EQ(j.facets().size(), 6U);
  for (VertexSet f : j.facets()) EXPECT_EQ(f.size(), 3);
}

TEST(JoinProperty, DimensionAdds) {
  std::vector<SimplicialComplex> parts{simplex_boundary(1), simplex_boundary(2), simplex(2),
                                       cycle_complex(5), prism_complex(2),
                                       random_complex(5, 2, 0.5, 7)};
  for (const auto& a : parts) {
    for (const auto& b : parts) {
      EXPECT_EQ(join(a, b).dim(), a.dim() + b.dim() + 1) << a.provenance() << " * " << b.provenance();
    }
  }
}

TEST(MinimalNonfacesTest, FourCycle) {
  const auto m = minimal_nonfaces(cycle_complex(4));
  EXPECT_EQ(m.sets, labels({{1, 3}, {2, 4}}));
  EXPECT_EQ(m.max_degree, 2);
}

TEST(MinimalNonfacesTest, TriangleBoundary) {
  const auto m = minimal_nonfaces(simplex_boundary(2));
  EXPECT_EQ(m.sets, labels({{1, 2, 3}}));
  EXPECT_EQ(m.max_degree, 3);
}

TEST(MinimalNonfacesTest, OctahedronAntipodalPairs) {
  const auto m = minimal_nonfaces(octahedron());
  EXPECT_EQ(m.sets, labels({{1, 2}, {3, 4}, {5, 6}}));
  EXPECT_EQ(m.max_degree, 2);
}

TEST(MinimalNonfacesTest, FullSimplexThrows) {
  try {
    minimal_nonfaces(simplex(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FullSimplex);
  }
  EXPECT_TRUE(minimal_nonface_sets(simplex(3)).empty());
}

TEST(MinimalNonfacesProperty, MatchesBruteForce) {
  auto corpus = testing::random_corpus(30, 8, 900);
  for (auto& item : testing::fixed_corpus()) corpus.push_back(item);
  for (const auto& [name, c] : corpus) {
    std::vector<oracle::Mask> ours;
    for (VertexSet s : minimal_nonface_sets(c)) ours.push_back(to_mask(s));
    std::sort(ours.begin(), ours.end());
    EXPECT_EQ(ours, oracle::minimal_nonfaces(to_oracle(c), to_mask(c.vertices()))) << name;
  }
}

TEST(MinimalNonfacesProperty, MaxDegreeNeverGrowsUnderRestriction) {
  auto corpus = testing::random_corpus(20, 8, 1200);
  for (auto& item : testing::fixed_corpus()) {
    if (item.complex.vertex_count() <= 8) corpus.push_back(item);
  }
  for (const auto& [name, c] : corpus) {
    const auto whole = minimal_nonface_sets(c);
    const int s = whole.empty() ? 0 : whole.back().size();
    const std::uint64_t full = c.vertices().bits();
    for (std::uint64_t t = full; t != 0; t = (t - 1) & full) {
      for (VertexSet m : minimal_nonface_sets(restriction(c, VertexSet(t)))) {
        ASSERT_GE(m.size(), 2) << name;
        ASSERT_LE(m.size(), s) << name;
        const bool contains_original = std::any_of(whole.begin(), whole.end(), [&](VertexSet w) {
          return w.is_subset_of(m);
        });
        ASSERT_TRUE(contains_original) << name << " T=" << VertexSet(t).to_string();
      }
    }
  }
}

TEST(PredicatesTest, Octahedron) {
  const Predicates p = predicates(octahedron());
  EXPECT_EQ(p.dim, 2);
  EXPECT_TRUE(p.is_pure);
  EXPECT_TRUE(p.is_flag);
  EXPECT_TRUE(p.is_strongly_connected);
  ASSERT_TRUE(p.ridge_degrees.has_value());
  EXPECT_EQ(p.ridge_degrees->size(), 1U);
  EXPECT_EQ(p.ridge_degrees->begin()->first, 2);
  EXPECT_EQ(p.ridge_degrees->begin()->second, 12U);
  EXPECT_TRUE(p.is_pseudomanifold);
}

TEST(PredicatesTest, CubePrism) {
  const Predicates p = predicates(prism_complex(3));
  EXPECT_EQ(p.dim, 3);
  EXPECT_TRUE(p.is_pure);
  EXPECT_FALSE(p.is_strongly_connected);
  ASSERT_TRUE(p.ridge_degrees.has_value());
  EXPECT_EQ(p.ridge_degrees->size(), 1U);
  EXPECT_EQ(p.ridge_degrees->begin()->first, 1);
  EXPECT_FALSE(p.is_pseudomanifold);
}

TEST(PredicatesTest, PrismFourNotPure) {
  const Predicates p = predicates(prism_complex(4));
  EXPECT_FALSE(p.is_pure);
  EXPECT_FALSE(p.ridge_degrees.has_value());
  EXPECT_FALSE(p.is_pseudomanifold);
}

TEST(PredicatesTest, SimplexBoundaryIsNotFlag) {
  EXPECT_FALSE(predicates(simplex_boundary(2)).is_flag);
  EXPECT_TRUE(predicates(cycle_complex(4)).is_flag);
}

TEST(FlagProperty, FlagIffCliqueComplexOfSkeleton) {
  auto corpus = testing::random_corpus(60, 9, 77);
  for (auto& item : testing::fixed_corpus()) corpus.push_back(item);
  corpus.push_back({"cross-polytope:4", cross_polytope(4)});
  for (const auto& [name, c] : corpus) {
    const bool flag = predicates(c).is_flag;
    EXPECT_EQ(flag, clique_complex(one_skeleton(c)) == c) << name;
    bool only_pairs = true;
    for (VertexSet m : minimal_nonface_sets(c)) only_pairs = only_pairs && m.size() == 2;
    EXPECT_EQ(flag, only_pairs) << name;
  }
}

TEST(SkeletonTest, SimplexBoundaryIsComplete) {
  const Graph g = one_skeleton(simplex_boundary(3));
  EXPECT_EQ(g.vertex_count(), 4);
  EXPECT_EQ(g.edge_count(), 6U);
  EXPECT_TRUE(g.is_complete());
}

TEST(SkeletonTest, OctahedronMissesPerfectMatching) {
  const Graph g = one_skeleton(octahedron());
  EXPECT_EQ(g.edge_count(), 12U);
  EXPECT_FALSE(g.adjacent(0, 1));
  EXPECT_FALSE(g.adjacent(2, 3));
  EXPECT_FALSE(g.adjacent(4, 5));
  EXPECT_EQ(g.min_degree(), 4);
}

TEST(SkeletonTest, SingleVertex) {
  const Graph g = one_skeleton(simplex(0));
  EXPECT_EQ(g.vertex_count(), 1);
  EXPECT_EQ(g.edge_count(), 0U);
}

TEST(InducedCycleTest, FiveCycleIsItsOwnWitness) {
  const auto r = induced_cycle_free_up_to(one_skeleton(cycle_complex(5)), 5);
  EXPECT_FALSE(r.free);
  EXPECT_EQ(r.witness.size(), 5U);
  EXPECT_TRUE(induced_cycle_free_up_to(one_skeleton(cycle_complex(5)), 4).free);
}

TEST(InducedCycleTest, OctahedronHasInducedSquares) {
  const Graph g = one_skeleton(octahedron());
  const auto r = induced_cycle_free_up_to(g, 4);
  EXPECT_FALSE(r.free);
  ASSERT_EQ(r.witness.size(), 4U);
  // The witness is chordless in g.
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_TRUE(g.adjacent(r.witness[i], r.witness[(i + 1) % 4]));
  }
  EXPECT_FALSE(g.adjacent(r.witness[0], r.witness[2]));
  EXPECT_FALSE(g.adjacent(r.witness[1], r.witness[3]));
}

TEST(InducedCycleTest, TreeIsFree) {
  const std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {1, 3}, {3, 4}, {4, 5}};
  const Graph tree = Graph::from_edges(6, edges);
  for (int l = 4; l <= 8; ++l) EXPECT_TRUE(induced_cycle_free_up_to(tree, l).free);
  EXPECT_FALSE(shortest_long_induced_cycle(tree).has_value());
}

TEST(InducedCycleTest, LengthBelowFourRejected) {
  EXPECT_THROW(induced_cycle_free_up_to(one_skeleton(cycle_complex(5)), 3), Error);
}

TEST(FacetIoTest, ParsesCommentsAndHeader) {
  std::istringstream in("# a square\nn 4\n1 2\n2 3 # edge\n3 4\n\n4 1\n");
  const auto c = read_facets(in);
  EXPECT_EQ(c, cycle_complex(4));
}

TEST(FacetIoTest, RoundTrip) {
  for (const auto& [name, c] : testing::fixed_corpus()) {
    std::istringstream in(to_facet_text(c));
    EXPECT_EQ(read_facets(in), c) << name;
  }
}

TEST(FacetIoTest, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      read_facets(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("1 2\n2 x\n"), 2U);
  EXPECT_EQ(line_of("1 2\n0 1\n"), 2U);
  EXPECT_EQ(line_of("n 3\n1 2\n2 4\n"), 3U);
  EXPECT_EQ(line_of("1 2\nn 3\n"), 2U);
  EXPECT_EQ(line_of("# nothing\n"), 1U);
}

TEST(FacetIoTest, GhostVertexFromHeader) {
  std::istringstream in("n 5\n1 2 3\n3 4\n");
  EXPECT_THROW(read_facets(in), GhostVertexError);
  std::istringstream again("n 5\n1 2 3\n3 4\n");
  EXPECT_EQ(read_facets(again, GhostPolicy::Renumber).vertex_count(), 4);
}

}  // namespace
}  // namespace regconn
