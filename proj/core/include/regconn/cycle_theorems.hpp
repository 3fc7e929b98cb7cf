#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "regconn/complex.hpp"
#include "regconn/field.hpp"
#include "regconn/parallel.hpp"
#include "regconn/regularity.hpp"
#include "regconn/report.hpp"

namespace regconn {

// Evidence that H̃_h(Δ|_T; field) is nonzero for T = V(Δ) and zero for every
// proper T.
struct CycleCertificate {
  int h = 0;
  FieldSpec field;
  std::uint32_t full_set_betti = 0;
  std::uint64_t checked_subsets = 0;  // proper subsets, 2^n - 1
};

// Fields are tried in order; the first certifying one wins. A none result is
// a verdict over the listed fields only.
std::optional<CycleCertificate> is_vertex_minimal_cycle(
    const SimplicialComplex& complex, int h, std::span<const FieldSpec> fields,
    const EnumerationLimits& limits = {});

// Tries every degree in which Δ has nonzero homology over some listed field,
// highest first.
std::optional<CycleCertificate> find_cycle_certificate(
    const SimplicialComplex& complex, std::span<const FieldSpec> fields,
    const EnumerationLimits& limits = {});

// For every T with Δ|_T disconnected: reg(𝕜[Δ|_{V∖T}]) ≥ h and, from the
// Mayer-Vietoris sequence, H̃_{h-1}(Δ|_{V∖T}) ≠ 0.
VerificationReport verify_theorem_main(const RestrictionStore& store,
                                       const CycleCertificate& cert,
                                       const EnumerationLimits& limits = {});
VerificationReport verify_theorem_main(const SimplicialComplex& complex,
                                       const CycleCertificate& cert,
                                       const EnumerationLimits& limits = {});

// ⌈sh/(s-1)⌉. Throws Error(DegenerateS) for s < 2, BadParameters for h < 1.
std::int64_t balbarath_bound(int s, int h);

// kappa(Γ(Δ)) ≥ ⌈sh/(s-1)⌉ for a vertex minimal h-cycle Δ.
VerificationReport verify_corollary_connectivity(const SimplicialComplex& complex,
                                                 std::span<const FieldSpec> fields,
                                                 const EnumerationLimits& limits = {});

struct DhsConnectivity {
  std::int64_t m = 0;       // max of the two terms
  std::int64_t first = 0;   // ⌈(k+1)b^{h-2} + 1⌉, b = (k+4)/2
  std::int64_t second = 0;  // ⌈(k+1)/ln b · (b^{h-2} - 2/(k+4)) + 1⌉
  std::int64_t simplified = 0;  // ⌈(k/2)^{h-1}⌉
};

// Throws Error(DomainError) unless k ≥ 1 and h ≥ 2.
DhsConnectivity dhs_connectivity_M(int k, int h);

// kappa ≥ M(k, h) for flag vertex minimal h-cycles whose skeleton has no
// induced m-cycles, 4 ≤ m ≤ k + 3; k is taken as large as Δ admits.
VerificationReport verify_dhs_corollary(const SimplicialComplex& complex,
                                        std::span<const FieldSpec> fields,
                                        const EnumerationLimits& limits = {});

}  // namespace regconn
