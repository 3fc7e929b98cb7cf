#include <gtest/gtest.h>

#include <cmath>

#include "corpus.hpp"
#include "oracle.hpp"
#include "regconn/connectivity.hpp"
#include "regconn/cycle_theorems.hpp"
#include "regconn/error.hpp"
#include "regconn/family_checks.hpp"
#include "regconn/generators.hpp"
#include "regconn/regularity.hpp"

namespace regconn {
namespace {

using testing::to_mask;
using testing::to_oracle;

const std::vector<FieldSpec> kFields = default_fields();

// Vertex minimal h-cycle straight from the definition, over GF(p).
bool oracle_certifies(const SimplicialComplex& c, int h, std::int64_t p) {
  const auto ref = to_oracle(c);
  const oracle::Mask full = to_mask(c.vertices());
  auto betti_h = [&](oracle::Mask t) {
    const auto b = oracle::reduced_betti(ref, t, p);
    const std::size_t k = static_cast<std::size_t>(h + 1);
    return k < b.size() ? b[k] : 0;
  };
  if (betti_h(full) == 0) return false;
  for (oracle::Mask t = 0; t < full; ++t) {
    if ((t & ~full) == 0 && betti_h(t) != 0) return false;
  }
  return true;
}

TEST(CertificateTest, FourCycle) {
  const auto cert = is_vertex_minimal_cycle(cycle_complex(4), 1, kFields);
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->h, 1);
  EXPECT_EQ(cert->field, FieldSpec(2));
  EXPECT_EQ(cert->full_set_betti, 1U);
  EXPECT_EQ(cert->checked_subsets, 15U);
}

TEST(CertificateTest, Octahedron) {
  const auto cert = is_vertex_minimal_cycle(octahedron(), 2, kFields);
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->checked_subsets, 63U);
  EXPECT_FALSE(is_vertex_minimal_cycle(octahedron(), 1, kFields).has_value());
}

TEST(CertificateTest, TwoDisjointCyclesAreNotMinimal) {
  const auto two = SimplicialComplex::from_labels(
      8, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {5, 6}, {6, 7}, {7, 8}, {8, 5}});
  EXPECT_FALSE(is_vertex_minimal_cycle(two, 1, kFields).has_value());
  EXPECT_FALSE(oracle_certifies(two, 1, 2));
}

TEST(CertificateProperty, MatchesDefinitionOnRandomCorpus) {
  for (const auto& [name, c] : testing::random_corpus(40, 7, 123)) {
    for (int h = 0; h <= 2; ++h) {
      const auto cert = is_vertex_minimal_cycle(c, h, kFields);
      const bool expected = oracle_certifies(c, h, 2) || oracle_certifies(c, h, 3);
      EXPECT_EQ(cert.has_value(), expected) << name << " h=" << h;
    }
  }
}

TEST(CertificateProperty, PseudomanifoldsAreCertified) {
  for (const auto& [name, c] : testing::sphere_corpus()) {
    const Predicates p = predicates(c);
    ASSERT_TRUE(p.is_pseudomanifold) << name;
    const std::vector<FieldSpec> gf2{FieldSpec(2)};
    EXPECT_TRUE(is_vertex_minimal_cycle(c, p.dim, gf2).has_value()) << name;
  }
}

TEST(TheoremMainTest, OctahedronSeparatorsAreSquares) {
  const auto oct = octahedron();
  const auto cert = find_cycle_certificate(oct, kFields);
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->h, 2);
  const VerificationReport report = verify_theorem_main(oct, *cert);
  EXPECT_EQ(report.status, Status::Pass);
  const Witness* summary = report.find("summary");
  ASSERT_NE(summary, nullptr);
  EXPECT_EQ(summary->value("disconnecting_subsets"), 3);
  EXPECT_EQ(summary->value("failures"), 0);
  // Complement of an antipodal pair is a 4-cycle: reg 2, H_1 nonzero.
  const RestrictionStore store(oct, FieldSpec(2));
  const VertexSet square = VertexSet::from_labels({3, 4, 5, 6});
  EXPECT_EQ(store.regularity_of(square), 2);
  EXPECT_EQ(store.betti_in_degree(square, 1), 1U);
}

TEST(TheoremMainTest, FiveCycle) {
  const auto c5 = cycle_complex(5);
  const auto cert = find_cycle_certificate(c5, kFields);
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->h, 1);
  const VerificationReport report = verify_theorem_main(c5, *cert);
  EXPECT_EQ(report.status, Status::Pass);
  EXPECT_GT(report.find("summary")->value("disconnecting_subsets").value_or(0), 0);
}

TEST(TheoremMainTest, VacuousWithoutDisconnectingSubsets) {
  const auto c = simplex_boundary(3);
  const auto cert = find_cycle_certificate(c, kFields);
  ASSERT_TRUE(cert.has_value());
  const VerificationReport report = verify_theorem_main(c, *cert);
  EXPECT_EQ(report.status, Status::Pass);
  EXPECT_FALSE(report.notes.empty());
}

TEST(TheoremMainProperty, HoldsForEveryCertifiedSmallComplex) {
  auto corpus = testing::random_corpus(40, 9, 555);
  for (auto& item : testing::sphere_corpus()) corpus.push_back(item);
  for (int d = 2; d <= 5; ++d) corpus.push_back({"prism", prism_complex(d)});
  int certified = 0;
  for (const auto& [name, c] : corpus) {
    if (c.vertex_count() > 12) continue;
    const auto cert = find_cycle_certificate(c, kFields);
    if (!cert) continue;
    ++certified;
    const VerificationReport report = verify_theorem_main(c, *cert);
    EXPECT_EQ(report.status, Status::Pass) << name << "\n" << report.to_json(2);
  }
  EXPECT_GE(certified, 15);
}

TEST(BalbarathBoundTest, SpotValues) {
  EXPECT_EQ(balbarath_bound(2, 2), 4);
  EXPECT_EQ(balbarath_bound(3, 4), 6);
  EXPECT_EQ(balbarath_bound(100, 3), 4);
  EXPECT_EQ(balbarath_bound(3, 3), 5);
  EXPECT_EQ(balbarath_bound(5, 3), 4);
  EXPECT_THROW(balbarath_bound(1, 3), Error);
  EXPECT_THROW(balbarath_bound(3, 0), Error);
}

TEST(BalbarathBoundTest, MatchesCeilingDefinition) {
  for (int s = 2; s <= 50; ++s) {
    for (int h = 1; h <= 20; ++h) {
      EXPECT_EQ(balbarath_bound(s, h),
                static_cast<std::int64_t>(std::ceil(static_cast<double>(s * h) / (s - 1))));
    }
  }
}

TEST(BalbarathBoundTest, MonotoneAndLimit) {
  for (int h = 1; h <= 10; ++h) {
    for (int s = 2; s < 1000; ++s) {
      EXPECT_GE(balbarath_bound(s, h), balbarath_bound(s + 1, h));
      EXPECT_GE(balbarath_bound(s, h), h + 1);
    }
    EXPECT_EQ(balbarath_bound(1000, h), h + 1);
  }
}

TEST(CorollaryTest, Octahedron) {
  const VerificationReport r = verify_corollary_connectivity(octahedron(), kFields);
  EXPECT_EQ(r.status, Status::Pass);
  const Witness* w = r.find("connectivity");
  ASSERT_NE(w, nullptr);
  EXPECT_EQ(w->value("kappa"), 4);
  EXPECT_EQ(w->value("bound"), 4);
  EXPECT_EQ(w->value("tight"), 1);
}

TEST(CorollaryTest, TetrahedronBoundaryOfFourSimplex) {
  const VerificationReport r = verify_corollary_connectivity(simplex_boundary(4), kFields);
  EXPECT_EQ(r.status, Status::Pass);
  const Witness* p = r.find("parameters");
  EXPECT_EQ(p->value("s"), 5);
  EXPECT_EQ(p->value("h"), 3);
  EXPECT_EQ(r.find("connectivity")->value("kappa"), 4);
  EXPECT_EQ(r.find("connectivity")->value("bound"), 4);
}

TEST(CorollaryTest, NevoThreeThree) {
  const VerificationReport r = verify_corollary_connectivity(nevo_complex(3, 3).first, kFields);
  EXPECT_EQ(r.status, Status::Pass);
  EXPECT_EQ(r.find("connectivity")->value("kappa"), 5);
  EXPECT_EQ(r.find("connectivity")->value("bound"), 5);
}

TEST(CorollaryTest, HypothesisUnmet) {
  EXPECT_EQ(verify_corollary_connectivity(simplex(3), kFields).status, Status::HypothesisUnmet);
  const auto path = SimplicialComplex::from_labels(3, {{1, 2}, {2, 3}});
  EXPECT_EQ(verify_corollary_connectivity(path, kFields).status, Status::HypothesisUnmet);
}

TEST(CorollaryProperty, HoldsOnCertifiedCorpus) {
  auto corpus = testing::random_corpus(60, 8, 4242);
  for (auto& item : testing::sphere_corpus()) corpus.push_back(item);
  for (const auto& [name, c] : corpus) {
    const VerificationReport r = verify_corollary_connectivity(c, kFields);
    EXPECT_NE(r.status, Status::Fail) << name << "\n" << r.to_json(2);
  }
}

TEST(DhsMTest, SpotValues) {
  EXPECT_EQ(dhs_connectivity_M(2, 2).first, 4);
  const DhsConnectivity m23 = dhs_connectivity_M(2, 3);
  EXPECT_EQ(m23.first, 10);
  EXPECT_EQ(m23.simplified, 1);
  EXPECT_GE(m23.m, 10);
  const DhsConnectivity m44 = dhs_connectivity_M(4, 4);
  EXPECT_EQ(m44.first, 81);
  EXPECT_EQ(m44.m, std::max(m44.first, m44.second));
}

TEST(DhsMTest, AtLeastSimplifiedOnGrid) {
  for (int k = 1; k <= 6; ++k) {
    for (int h = 2; h <= 6; ++h) {
      const DhsConnectivity m = dhs_connectivity_M(k, h);
      const auto simple = static_cast<std::int64_t>(
          std::ceil(std::pow(static_cast<long double>(k) / 2.0L, h - 1) - kRealBoundEpsilon));
      EXPECT_GE(m.m, simple) << "k=" << k << " h=" << h;
      EXPECT_EQ(m.simplified, simple);
    }
  }
}

TEST(DhsMTest, DomainErrors) {
  EXPECT_THROW(dhs_connectivity_M(0, 3), Error);
  EXPECT_THROW(dhs_connectivity_M(2, 1), Error);
}

TEST(DhsCorollaryTest, HypothesesChecked) {
  EXPECT_EQ(verify_dhs_corollary(octahedron(), kFields).status, Status::HypothesisUnmet);
  EXPECT_EQ(verify_dhs_corollary(simplex_boundary(3), kFields).status, Status::HypothesisUnmet);
  EXPECT_EQ(verify_dhs_corollary(cycle_complex(6), kFields).status, Status::HypothesisUnmet);
}

TEST(Example6Test, DefaultGrid) {
  std::vector<std::pair<int, int>> grid;
  for (int s = 2; s <= 5; ++s) {
    for (int h = s - 1; h <= 7; ++h) grid.emplace_back(s, h);
  }
  const VerificationReport r = verify_example6(grid, kFields, {});
  EXPECT_EQ(r.status, Status::Pass) << r.to_json(2);
  EXPECT_EQ(r.find("summary")->value("points"), static_cast<std::int64_t>(grid.size()));
  EXPECT_EQ(verify_example6({}, kFields, {}).status, Status::HypothesisUnmet);
}

TEST(Example2Test, PrismFamily) {
  const std::vector<int> dims{2, 3, 4, 5};
  const VerificationReport r = verify_example2(dims, kFields, {});
  EXPECT_EQ(r.status, Status::Pass) << r.to_json(2);
  // d = 2 is reported with its actual dimension.
  EXPECT_FALSE(r.witnesses.front().note.empty());
}

TEST(TaylorSuitabilityReportTest, OctahedronPasses) {
  const VerificationReport r = verify_taylor_suitability(octahedron(), FieldSpec(2), {});
  EXPECT_EQ(r.status, Status::Pass);
  EXPECT_EQ(r.find("suitability")->value("min_slack"), 0);
  EXPECT_EQ(r.find("suitability")->subset, VertexSet::range(6));
}

TEST(ReportTest, JsonCarriesOneBasedSubsets) {
  VerificationReport r;
  r.statement = "theorem3";
  r.instance = "x";
  r.add("tightest", VertexSet::of({0, 2})).with("k", 7).note = "n";
  const std::string json = r.to_json();
  EXPECT_NE(json.find("\"subset\":[1,3]"), std::string::npos) << json;
  EXPECT_NE(json.find("\"status\":\"pass\""), std::string::npos) << json;
}

}  // namespace
}  // namespace regconn
