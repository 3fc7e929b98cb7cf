#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "regconn/complex.hpp"
#include "regconn/field.hpp"
#include "regconn/gf_matrix.hpp"

namespace regconn {

// dim H̃_i for i = -1 .. top. Degrees outside the stored range read as zero.
class BettiVector {
 public:
  BettiVector() = default;
  // values[0] is degree -1.
  explicit BettiVector(std::vector<std::uint32_t> values);

  std::uint32_t operator[](int degree) const noexcept {
    const int k = degree + 1;
    if (k < 0 || k >= static_cast<int>(values_.size())) return 0;
    return values_[static_cast<std::size_t>(k)];
  }
  // Highest stored degree (dim of the complex); -2 when nothing is stored.
  int max_degree() const noexcept { return static_cast<int>(values_.size()) - 2; }
  std::optional<int> top_nonzero_degree() const noexcept;
  bool is_zero() const noexcept { return !top_nonzero_degree().has_value(); }
  const std::vector<std::uint32_t>& values() const noexcept { return values_; }

  // "[b_-1, b_0, ...]"
  std::string to_string() const;

  bool operator==(const BettiVector& other) const noexcept;

 private:
  std::vector<std::uint32_t> values_;
};

// All faces of a complex grouped by cardinality and sorted by mask. Shared
// across the restrictions of the complex, which are obtained by filtering.
class FaceLattice {
 public:
  explicit FaceLattice(const SimplicialComplex& complex);

  // Cardinalities 0 .. max_size().
  int max_size() const noexcept { return static_cast<int>(by_size_.size()) - 1; }
  std::span<const VertexSet> faces_of_size(int size) const noexcept {
    if (size < 0 || size > max_size()) return {};
    return by_size_[static_cast<std::size_t>(size)];
  }

 private:
  std::vector<std::vector<VertexSet>> by_size_;
};

// Rows: faces of dimension degree-1 (∅ for degree 0); columns: faces of
// dimension `degree`. Both in ascending mask order; the face obtained by
// deleting the k-th smallest vertex carries sign (-1)^k.
GfMatrix boundary_matrix(const SimplicialComplex& complex, int degree,
                         FieldSpec field);

BettiVector reduced_betti(const SimplicialComplex& complex,
                          FieldSpec field = FieldSpec());

// Homology of complex|_subset computed on the shared lattice.
BettiVector reduced_betti_of_restriction(const FaceLattice& lattice, VertexSet subset,
                                         FieldSpec field);
// Only dim H̃_degree of complex|_subset (two ranks instead of all).
std::uint32_t reduced_betti_in_degree(const FaceLattice& lattice, VertexSet subset,
                                      int degree, FieldSpec field);

}  // namespace regconn
