#include "regconn/homology.hpp"

#include <algorithm>

#include "regconn/error.hpp"

namespace regconn {

BettiVector::BettiVector(std::vector<std::uint32_t> values) : values_(std::move(values)) {}

std::optional<int> BettiVector::top_nonzero_degree() const noexcept {
  for (std::size_t k = values_.size(); k-- > 0;) {
    if (values_[k] != 0) return static_cast<int>(k) - 1;
  }
  return std::nullopt;
}

std::string BettiVector::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (k) out += ", ";
    out += std::to_string(values_[k]);
  }
  out += ']';
  return out;
}

bool BettiVector::operator==(const BettiVector& other) const noexcept {
  const int top = std::max(max_degree(), other.max_degree());
  for (int d = -1; d <= top; ++d) {
    if ((*this)[d] != other[d]) return false;
  }
  return true;
}

FaceLattice::FaceLattice(const SimplicialComplex& complex) {
  std::vector<VertexSet> all;
  all.emplace_back();
  for (VertexSet f : complex.facets()) {
    const auto mask = f.bits();
    for (auto sub = mask;; sub = (sub - 1) & mask) {
      all.emplace_back(sub);
      if (sub == 0) break;
    }
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  by_size_.resize(static_cast<std::size_t>(complex.dim() + 2));
  for (VertexSet f : all) by_size_[static_cast<std::size_t>(f.size())].push_back(f);
}

namespace {

// Boundary from `cols` (cardinality k) onto `rows` (cardinality k-1); both
// sorted ascending.
GfMatrix build_boundary(std::span<const VertexSet> rows, std::span<const VertexSet> cols,
                        FieldSpec field) {
  GfMatrix m(rows.size(), cols.size(), field);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    int position = 0;
    for (int v : cols[c]) {
      const VertexSet facet = cols[c].without(v);
      auto it = std::lower_bound(rows.begin(), rows.end(), facet);
      if (it == rows.end() || *it != facet) {
        throw Error(ErrorKind::Internal, "boundary face missing from row set");
      }
      m.set(static_cast<std::size_t>(it - rows.begin()), c, position % 2 == 0 ? 1 : -1);
      ++position;
    }
  }
  return m;
}

// Restricted faces of every cardinality, trimmed to the restriction's dim.
std::vector<std::vector<VertexSet>> restrict_lattice(const FaceLattice& lattice,
                                                     VertexSet subset) {
  std::vector<std::vector<VertexSet>> out;
  for (int k = 0; k <= lattice.max_size(); ++k) {
    std::vector<VertexSet> level;
    for (VertexSet f : lattice.faces_of_size(k)) {
      if (f.is_subset_of(subset)) level.push_back(f);
    }
    if (level.empty()) break;
    out.push_back(std::move(level));
  }
  return out;
}

std::size_t boundary_rank(const std::vector<std::vector<VertexSet>>& levels, int degree,
                          FieldSpec field) {
  // ∂_degree maps cardinality degree+1 onto cardinality degree.
  const int k = degree + 1;
  if (degree < 0 || k >= static_cast<int>(levels.size())) return 0;
  return build_boundary(levels[static_cast<std::size_t>(k - 1)],
                        levels[static_cast<std::size_t>(k)], field)
      .rank();
}

BettiVector betti_from_levels(const std::vector<std::vector<VertexSet>>& levels,
                              FieldSpec field) {
  const int top = static_cast<int>(levels.size()) - 2;  // dimension
  std::vector<std::size_t> ranks(levels.size() + 1, 0);  // ranks[d] = rank ∂_d
  for (int d = 0; d <= top; ++d) ranks[static_cast<std::size_t>(d)] = boundary_rank(levels, d, field);
  std::vector<std::uint32_t> values(static_cast<std::size_t>(top + 2), 0);
  for (int d = -1; d <= top; ++d) {
    const std::size_t chains = levels[static_cast<std::size_t>(d + 1)].size();
    const std::size_t in = d >= 0 ? ranks[static_cast<std::size_t>(d)] : 0;
    const std::size_t out = ranks[static_cast<std::size_t>(d + 1)];
    values[static_cast<std::size_t>(d + 1)] = static_cast<std::uint32_t>(chains - in - out);
  }
  return BettiVector(std::move(values));
}

}  // namespace

GfMatrix boundary_matrix(const SimplicialComplex& complex, int degree, FieldSpec field) {
  if (degree < 0 || degree > complex.dim() + 1) {
    throw Error(ErrorKind::BadParameters,
                "boundary degree must lie in [0, dim + 1]");
  }
  const auto rows = complex.faces_of_size(degree);
  const auto cols = complex.faces_of_size(degree + 1);
  return build_boundary(rows, cols, field);
}

BettiVector reduced_betti(const SimplicialComplex& complex, FieldSpec field) {
  return reduced_betti_of_restriction(FaceLattice(complex), complex.vertices(), field);
}

BettiVector reduced_betti_of_restriction(const FaceLattice& lattice, VertexSet subset,
                                         FieldSpec field) {
  return betti_from_levels(restrict_lattice(lattice, subset), field);
}

std::uint32_t reduced_betti_in_degree(const FaceLattice& lattice, VertexSet subset,
                                      int degree, FieldSpec field) {
  // A nonzero class in degree h needs at least h + 2 vertices.
  if (degree >= 0 && subset.size() < degree + 2) return 0;
  std::vector<std::vector<VertexSet>> levels;
  for (int k = 0; k <= std::min(degree + 2, lattice.max_size()); ++k) {
    std::vector<VertexSet> level;
    for (VertexSet f : lattice.faces_of_size(k)) {
      if (f.is_subset_of(subset)) level.push_back(f);
    }
    if (level.empty()) break;
    levels.push_back(std::move(level));
  }
  const int k = degree + 1;
  if (k < 0 || k >= static_cast<int>(levels.size())) return 0;
  const std::size_t chains = levels[static_cast<std::size_t>(k)].size();
  const std::size_t in = boundary_rank(levels, degree, field);
  const std::size_t out = boundary_rank(levels, degree + 1, field);
  return static_cast<std::uint32_t>(chains - in - out);
}

}  // namespace regconn
