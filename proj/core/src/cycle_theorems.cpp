#include "regconn/cycle_theorems.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>

#include "regconn/connectivity.hpp"
#include "regconn/error.hpp"
#include "regconn/homology.hpp"

namespace regconn {

namespace {

std::string instance_name(const SimplicialComplex& complex) {
  return complex.provenance().empty() ? "input" : complex.provenance();
}

std::string field_list(std::span<const FieldSpec> fields) {
  std::string out;
  for (const FieldSpec& f : fields) {
    if (!out.empty()) out += ", ";
    out += f.name();
  }
  return out;
}

}  // namespace

std::optional<CycleCertificate> is_vertex_minimal_cycle(const SimplicialComplex& complex,
                                                        int h,
                                                        std::span<const FieldSpec> fields,
                                                        const EnumerationLimits& limits) {
  const SubsetIndexer indexer(complex.vertices());
  check_cap(indexer.width(), limits);
  const FaceLattice lattice(complex);
  const std::uint64_t full = indexer.count() - 1;

  for (const FieldSpec& field : fields) {
    const std::uint32_t top = reduced_betti_in_degree(lattice, complex.vertices(), h, field);
    if (top == 0) continue;
    std::atomic<bool> failed{false};
    parallel_blocks(
        full, kSubsetBlock, limits.jobs,
        [&](std::uint64_t begin, std::uint64_t end) {
          for (std::uint64_t k = begin; k < end; ++k) {
            if (failed.load(std::memory_order_relaxed)) return;
            if (reduced_betti_in_degree(lattice, indexer.expand(k), h, field) != 0) {
              failed.store(true);
              return;
            }
          }
        },
        &failed);
    if (!failed.load()) return CycleCertificate{h, field, top, full};
  }
  return std::nullopt;
}

std::optional<CycleCertificate> find_cycle_certificate(const SimplicialComplex& complex,
                                                       std::span<const FieldSpec> fields,
                                                       const EnumerationLimits& limits) {
  check_cap(complex.vertex_count(), limits);
  std::set<int, std::greater<>> degrees;
  for (const FieldSpec& field : fields) {
    const BettiVector b = reduced_betti(complex, field);
    for (int d = -1; d <= b.max_degree(); ++d) {
      if (b[d] != 0) degrees.insert(d);
    }
  }
  for (int h : degrees) {
    if (auto cert = is_vertex_minimal_cycle(complex, h, fields, limits)) return cert;
  }
  return std::nullopt;
}

VerificationReport verify_theorem_main(const RestrictionStore& store,
                                       const CycleCertificate& cert,
                                       const EnumerationLimits& limits) {
  const SimplicialComplex& complex = store.complex();
  if (!(store.field() == cert.field)) {
    throw Error(ErrorKind::BadParameters, "store and certificate use different fields");
  }
  VerificationReport report;
  report.statement = "theorem3";
  report.instance = instance_name(complex);

  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::optional<std::int64_t> min_slack;
  VertexSet tightest;
  for_each_disconnecting_subset(complex, limits, [&](VertexSet t) {
    ++checked;
    const VertexSet separator = complex.vertices() - t;
    const int reg = store.regularity_of(separator);
    const std::uint32_t betti = store.betti_in_degree(separator, cert.h - 1);
    const std::int64_t slack = reg - cert.h;
    if (!min_slack || slack < *min_slack) {
      min_slack = slack;
      tightest = t;
    }
    if (reg < cert.h || betti == 0) {
      ++failures;
      report.add("failure", t)
          .with("separator_regularity", reg)
          .with("separator_betti_h_minus_1", betti);
    }
  });

  report.add("certificate")
      .with("h", cert.h)
      .with("field", cert.field.prime())
      .with("full_set_betti", cert.full_set_betti)
      .with("checked_subsets", static_cast<std::int64_t>(cert.checked_subsets));
  auto& summary = report.add("summary")
                      .with("disconnecting_subsets", static_cast<std::int64_t>(checked))
                      .with("failures", static_cast<std::int64_t>(failures));
  if (min_slack) {
    summary.with("min_slack", *min_slack);
    const VertexSet separator = complex.vertices() - tightest;
    report.add("tightest", tightest)
        .with("separator_regularity", store.regularity_of(separator))
        .with("separator_betti_h_minus_1", store.betti_in_degree(separator, cert.h - 1))
        .note = "separator " + separator.to_string();
  } else {
    report.notes.push_back("no disconnected restriction exists; holds vacuously");
  }
  report.status = failures == 0 ? Status::Pass : Status::Fail;
  return report;
}

VerificationReport verify_theorem_main(const SimplicialComplex& complex,
                                       const CycleCertificate& cert,
                                       const EnumerationLimits& limits) {
  return verify_theorem_main(RestrictionStore(complex, cert.field, limits), cert, limits);
}

std::int64_t balbarath_bound(int s, int h) {
  if (s < 2) throw Error(ErrorKind::DegenerateS, "connectivity bound needs s >= 2");
  if (h < 1) throw Error(ErrorKind::BadParameters, "connectivity bound needs h >= 1");
  const std::int64_t num = static_cast<std::int64_t>(s) * h;
  const std::int64_t den = s - 1;
  return (num + den - 1) / den;
}

VerificationReport verify_corollary_connectivity(const SimplicialComplex& complex,
                                                 std::span<const FieldSpec> fields,
                                                 const EnumerationLimits& limits) {
  VerificationReport report;
  report.statement = "corollary5";
  report.instance = instance_name(complex);

  const auto nonfaces = minimal_nonface_sets(complex);
  if (nonfaces.empty()) {
    report.status = Status::HypothesisUnmet;
    report.notes.push_back("full simplex: the Stanley-Reisner ideal is zero");
    return report;
  }
  const int s = nonfaces.back().size();
  const auto cert = find_cycle_certificate(complex, fields, limits);
  if (!cert) {
    report.status = Status::HypothesisUnmet;
    report.notes.push_back("no vertex minimal cycle certificate over " + field_list(fields));
    return report;
  }
  if (cert->h < 1) {
    report.status = Status::HypothesisUnmet;
    report.notes.push_back("certified only in degree " + std::to_string(cert->h) +
                           "; the bound needs h >= 1");
    return report;
  }
  const std::int64_t bound = balbarath_bound(s, cert->h);
  const ConnectivityResult conn = vertex_connectivity(one_skeleton(complex), limits.jobs);

  report.add("parameters")
      .with("n", complex.vertex_count())
      .with("s", s)
      .with("h", cert->h)
      .with("field", cert->field.prime());
  report.add("connectivity", conn.min_separator)
      .with("kappa", conn.kappa)
      .with("bound", bound)
      .with("tight", conn.kappa == bound ? 1 : 0);
  report.status = conn.kappa >= bound ? Status::Pass : Status::Fail;
  return report;
}

DhsConnectivity dhs_connectivity_M(int k, int h) {
  if (k < 1) throw Error(ErrorKind::DomainError, "M(k, h) needs k >= 1");
  if (h < 2) throw Error(ErrorKind::DomainError, "M(k, h) needs h >= 2");
  const long double base = static_cast<long double>(k + 4) / 2.0L;
  const long double power = std::pow(base, static_cast<long double>(h - 2));
  const long double kp1 = static_cast<long double>(k + 1);
  const long double t1 = kp1 * power + 1.0L;
  const long double t2 =
      kp1 / std::log(base) * (power - 2.0L / static_cast<long double>(k + 4)) + 1.0L;
  const long double simple =
      std::pow(static_cast<long double>(k) / 2.0L, static_cast<long double>(h - 1));

  // Exact integers must not round up to the next one.
  auto guarded_ceil = [](long double x) {
    return static_cast<std::int64_t>(std::ceil(x - kRealBoundEpsilon));
  };
  DhsConnectivity out;
  out.first = guarded_ceil(t1);
  out.second = guarded_ceil(t2);
  out.simplified = guarded_ceil(simple);
  out.m = std::max(out.first, out.second);
  if (out.m < out.simplified) {
    throw Error(ErrorKind::Internal, "M(k, h) below the simplified guarantee");
  }
  return out;
}

VerificationReport verify_dhs_corollary(const SimplicialComplex& complex,
                                        std::span<const FieldSpec> fields,
                                        const EnumerationLimits& limits) {
  VerificationReport report;
  report.statement = "dhs-corollary";
  report.instance = instance_name(complex);

  const Predicates preds = predicates(complex);
  if (!preds.is_flag) {
    report.status = Status::HypothesisUnmet;
    report.notes.push_back("complex is not flag");
    return report;
  }
  const auto k = max_dhs_parameter(complex);
  if (!k) {
    report.status = Status::HypothesisUnmet;
    report.notes.push_back("1-skeleton has an induced 4-cycle; no k >= 1 applies");
    return report;
  }
  const auto cert = find_cycle_certificate(complex, fields, limits);
  if (!cert) {
    report.status = Status::HypothesisUnmet;
    report.notes.push_back("no vertex minimal cycle certificate over " + field_list(fields));
    return report;
  }
  if (cert->h < 2) {
    report.status = Status::HypothesisUnmet;
    report.notes.push_back("certified in degree " + std::to_string(cert->h) +
                           "; M(k, h) is only evaluated for h >= 2");
    return report;
  }
  const DhsConnectivity bound = dhs_connectivity_M(*k, cert->h);
  const ConnectivityResult conn = vertex_connectivity(one_skeleton(complex), limits.jobs);
  report.add("parameters")
      .with("n", complex.vertex_count())
      .with("k", *k)
      .with("h", cert->h)
      .with("field", cert->field.prime());
  report.add("connectivity", conn.min_separator)
      .with("kappa", conn.kappa)
      .with("M", bound.m)
      .with("first", bound.first)
      .with("second", bound.second)
      .with("simplified", bound.simplified);
  report.status = conn.kappa >= bound.m ? Status::Pass : Status::Fail;
  return report;
}

}  // namespace regconn
