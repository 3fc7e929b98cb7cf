#pragma once

#include <span>
#include <utility>
#include <vector>

#include "regconn/complex.hpp"
#include "regconn/field.hpp"
#include "regconn/parallel.hpp"
#include "regconn/report.hpp"

namespace regconn {

// Claims about the tightness family at one (s, h): vertex count
// ⌈sh/(s-1)⌉ + 2, homology of an h-sphere, minimal nonfaces of size ≤ s,
// vertex minimal h-cycle, kappa equal to ⌈sh/(s-1)⌉, the two ∂σ¹ vertices
// left disconnected, and the parameter identities.
// Appends one witness per point to `report` and returns whether it passed.
bool check_nevo_point(int s, int h, std::span<const FieldSpec> fields,
                      const EnumerationLimits& limits, VerificationReport& report);

// One report over a grid of (s, h) points.
VerificationReport verify_example6(std::span<const std::pair<int, int>> grid,
                                   std::span<const FieldSpec> fields,
                                   const EnumerationLimits& limits = {});

// prism_complex(d): vertex minimal 2-cycle; for d = 3 pure, not strongly
// connected, every ridge in one facet; for d ≥ 4 not pure.
VerificationReport verify_example2(std::span<const int> dims,
                                   std::span<const FieldSpec> fields,
                                   const EnumerationLimits& limits = {});

// The Taylor support j ≤ s·i on the Betti table and the suitable bound on
// every restriction.
VerificationReport verify_taylor_suitability(const SimplicialComplex& complex,
                                             FieldSpec field,
                                             const EnumerationLimits& limits = {});

}  // namespace regconn
