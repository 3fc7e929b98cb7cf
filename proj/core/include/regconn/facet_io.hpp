#pragma once

#include <iosfwd>
#include <string>

#include "regconn/complex.hpp"

namespace regconn {

// One facet per line as whitespace-separated positive labels; '#' starts a
// comment. An optional "n <count>" header before the first facet fixes the
// vertex count, otherwise the largest label seen is used.
// Throws ParseError with the offending line, or GhostVertexError under
// GhostPolicy::Reject.
SimplicialComplex read_facets(std::istream& in, GhostPolicy policy = GhostPolicy::Reject);
SimplicialComplex read_facet_file(const std::string& path,
                                  GhostPolicy policy = GhostPolicy::Reject);

// Writes the header and facets with labels relative to the ambient [n].
void write_facets(std::ostream& out, const SimplicialComplex& complex);
std::string to_facet_text(const SimplicialComplex& complex);

}  // namespace regconn
