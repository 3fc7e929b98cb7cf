#include "regconn/family_checks.hpp"

#include <string>

#include "regconn/connectivity.hpp"
#include "regconn/cycle_theorems.hpp"
#include "regconn/error.hpp"
#include "regconn/generators.hpp"
#include "regconn/homology.hpp"
#include "regconn/regularity.hpp"

namespace regconn {

namespace {

// H̃ concentrated in degree h with rank one.
bool is_homology_sphere(const BettiVector& b, int h) {
  for (int d = -1; d <= b.max_degree(); ++d) {
    if (b[d] != (d == h ? 1U : 0U)) return false;
  }
  return b[h] == 1;
}

}  // namespace

bool check_nevo_point(int s, int h, std::span<const FieldSpec> fields,
                      const EnumerationLimits& limits, VerificationReport& report) {
  const auto [complex, p] = nevo_complex(s, h);
  const std::int64_t bound = balbarath_bound(s, h);
  const int n = complex.vertex_count();
  const bool count_ok = n == bound + 2;
  const bool sphere = is_homology_sphere(reduced_betti(complex, FieldSpec(2)), h);
  const int max_nonface = minimal_nonfaces(complex).max_degree;
  const auto cert = is_vertex_minimal_cycle(complex, h, fields, limits);
  const ConnectivityResult conn = vertex_connectivity(one_skeleton(complex), limits.jobs);
  // ∂σ¹ sits on vertices 0 and 1.
  const VertexSet pair = VertexSet::of({0, 1});
  const bool pair_split = one_skeleton(complex).component_count(pair) == 2;
  const bool params_ok = p.r != 1 && ((p.r_prime == 0) == (p.r == 0)) &&
                         p.s * p.h == (p.s - 1) * p.q_prime + p.r_prime &&
                         bound == static_cast<std::int64_t>(p.s) * p.q + p.r;

  const bool pass = count_ok && sphere && max_nonface <= s && cert.has_value() &&
                    conn.kappa == bound && pair_split && params_ok;
  Witness& w = report.add("point", conn.min_separator);
  w.with("s", s)
      .with("h", h)
      .with("q_prime", p.q_prime)
      .with("r_prime", p.r_prime)
      .with("q", p.q)
      .with("r", p.r)
      .with("n", n)
      .with("bound", bound)
      .with("kappa", conn.kappa)
      .with("max_nonface", max_nonface)
      .with("sphere", sphere ? 1 : 0)
      .with("certified", cert ? 1 : 0)
      .with("pair_disconnected", pair_split ? 1 : 0)
      .with("pass", pass ? 1 : 0);
  w.note = complex.provenance();
  return pass;
}

VerificationReport verify_example6(std::span<const std::pair<int, int>> grid,
                                   std::span<const FieldSpec> fields,
                                   const EnumerationLimits& limits) {
  VerificationReport report;
  report.statement = "example6";
  report.instance = "nevo grid";
  if (grid.empty()) {
    report.status = Status::HypothesisUnmet;
    report.notes.push_back("empty grid");
    return report;
  }
  std::int64_t failures = 0;
  for (auto [s, h] : grid) {
    if (!check_nevo_point(s, h, fields, limits, report)) ++failures;
  }
  report.add("summary")
      .with("points", static_cast<std::int64_t>(grid.size()))
      .with("failures", failures);
  report.status = failures == 0 ? Status::Pass : Status::Fail;
  return report;
}

VerificationReport verify_example2(std::span<const int> dims,
                                   std::span<const FieldSpec> fields,
                                   const EnumerationLimits& limits) {
  VerificationReport report;
  report.statement = "example2";
  report.instance = "prism complexes";
  std::int64_t failures = 0;
  for (int d : dims) {
    const SimplicialComplex complex = prism_complex(d);
    const Predicates pred = predicates(complex);
    const auto cert = is_vertex_minimal_cycle(complex, 2, fields, limits);
    bool pass = cert.has_value();
    bool ridges_one = false;
    if (pred.ridge_degrees) {
      ridges_one = pred.ridge_degrees->size() == 1 && pred.ridge_degrees->begin()->first == 1;
    }
    if (d == 3) pass = pass && pred.is_pure && !pred.is_strongly_connected && ridges_one;
    if (d >= 4) pass = pass && !pred.is_pure;
    if (!pass) ++failures;

    Witness& w = report.add("prism");
    w.with("d", d)
        .with("n", complex.vertex_count())
        .with("dim", pred.dim)
        .with("certified", cert ? 1 : 0)
        .with("pure", pred.is_pure ? 1 : 0)
        .with("strongly_connected", pred.is_strongly_connected ? 1 : 0)
        .with("ridge_degrees_all_one", ridges_one ? 1 : 0)
        .with("pass", pass ? 1 : 0);
    if (pred.dim != d) {
      w.note = "constructed complex has dimension " + std::to_string(pred.dim) +
               ", not " + std::to_string(d);
    }
  }
  report.status = failures == 0 ? Status::Pass : Status::Fail;
  return report;
}

VerificationReport verify_taylor_suitability(const SimplicialComplex& complex,
                                             FieldSpec field,
                                             const EnumerationLimits& limits) {
  VerificationReport report;
  report.statement = "taylor-suitability";
  report.instance = complex.provenance().empty() ? "input" : complex.provenance();
  const auto nonfaces = minimal_nonface_sets(complex);
  if (nonfaces.empty()) {
    report.status = Status::HypothesisUnmet;
    report.notes.push_back("full simplex: the Stanley-Reisner ideal is zero");
    return report;
  }
  const int s = nonfaces.back().size();
  const RestrictionStore store(complex, field, limits);
  const GradedBettiTable table = hochster_table(store);
  const TaylorSupportCheck support = taylor_support_check(table, s);
  const SuitabilityResult suitable = check_suitable(store, BoundSpec{BoundKind::Taylor, 0});

  report.add("support")
      .with("s", s)
      .with("violations", static_cast<std::int64_t>(support.violations.size()));
  for (auto [i, j] : support.violations) report.add("support-violation").with("i", i).with("j", j);
  report.add("suitability", suitable.tightest)
      .with("checked", static_cast<std::int64_t>(suitable.checked))
      .with("vacuous", static_cast<std::int64_t>(suitable.vacuous))
      .with("min_slack", suitable.min_slack)
      .with("violations", static_cast<std::int64_t>(suitable.violations.size()));
  for (VertexSet t : suitable.violations) {
    report.add("suitability-violation", t).with("regularity", store.regularity_of(t));
  }
  report.status = support.holds && suitable.holds ? Status::Pass : Status::Fail;
  return report;
}

}  // namespace regconn
