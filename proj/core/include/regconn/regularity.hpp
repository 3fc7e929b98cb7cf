#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regconn/complex.hpp"
#include "regconn/field.hpp"
#include "regconn/homology.hpp"
#include "regconn/parallel.hpp"

namespace regconn {

// Reduced homology of every restriction Δ|_T, T ⊆ V(Δ), computed once and
// shared by the Betti table, regularity, suitability and theorem checks.
// Slots are indexed by the compact subset index of SubsetIndexer.
class RestrictionStore {
 public:
  RestrictionStore(const SimplicialComplex& complex, FieldSpec field,
                   const EnumerationLimits& limits = {});

  const SimplicialComplex& complex() const noexcept { return complex_; }
  FieldSpec field() const noexcept { return field_; }
  const SubsetIndexer& indexer() const noexcept { return indexer_; }
  std::uint64_t subset_count() const noexcept { return indexer_.count(); }

  BettiVector betti(VertexSet subset) const { return betti_at(indexer_.compress(subset)); }
  BettiVector betti_at(std::uint64_t compact) const;
  std::uint32_t betti_in_degree(VertexSet subset, int degree) const;

  // Highest degree with nonzero H̃ of Δ|_T; kAcyclic when there is none.
  static constexpr int kAcyclic = -2;
  int top_degree_at(std::uint64_t compact) const noexcept { return top_[compact]; }

  // reg(𝕜[Δ|_T]) = 1 + max{h : H̃_h(Δ|_U) ≠ 0, U ⊆ T}.
  int regularity_of(VertexSet subset) const noexcept {
    return regularity_at(indexer_.compress(subset));
  }
  int regularity_at(std::uint64_t compact) const noexcept { return reg_[compact]; }

 private:
  struct Entry {
    std::int16_t degree;
    std::uint32_t value;
  };

  SimplicialComplex complex_;
  FieldSpec field_;
  SubsetIndexer indexer_;
  std::vector<std::uint64_t> offsets_;
  std::vector<Entry> entries_;
  std::vector<std::int8_t> top_;
  std::vector<std::int8_t> reg_;
};

// β_{i,j}(𝕜[Δ]) as a sparse table.
class GradedBettiTable {
 public:
  GradedBettiTable(int n, FieldSpec field) : n_(n), field_(field) {}

  int n() const noexcept { return n_; }
  FieldSpec field() const noexcept { return field_; }
  std::uint64_t at(int i, int j) const noexcept;
  void add(int i, int j, std::uint64_t value);
  const std::map<std::pair<int, int>, std::uint64_t>& entries() const noexcept {
    return entries_;
  }
  // max{j - i : β_{i,j} ≠ 0}
  int regularity() const noexcept;
  int projective_dimension() const noexcept;

  // Macaulay2-style tally: columns i, rows j - i, '.' for zero.
  std::string to_text() const;
  // {"field": p, "n": n, "entries": [{"i":..,"j":..,"beta":..}]}
  std::string to_json() const;

  bool operator==(const GradedBettiTable& other) const noexcept {
    return n_ == other.n_ && field_ == other.field_ && entries_ == other.entries_;
  }

 private:
  int n_;
  FieldSpec field_;
  std::map<std::pair<int, int>, std::uint64_t> entries_;
};

// β_{i,j} = Σ_{|T|=j} dim H̃_{j-i-1}(Δ|_T).
GradedBettiTable hochster_table(const RestrictionStore& store);
GradedBettiTable hochster_table(const SimplicialComplex& complex, FieldSpec field,
                                const EnumerationLimits& limits = {});

struct RegularityResult {
  int reg = 0;
  // H̃_degree(Δ|_subset) ≠ 0 and degree + 1 = reg.
  VertexSet witness_subset;
  int witness_degree = -1;
};

// Computes reg both from the Betti table and from restriction homology and
// throws Error(Internal) if they disagree.
RegularityResult regularity(const RestrictionStore& store);
RegularityResult regularity(const SimplicialComplex& complex, FieldSpec field,
                            const EnumerationLimits& limits = {});

struct TaylorSupportCheck {
  bool holds = true;
  std::vector<std::pair<int, int>> violations;  // (i, j) with j > s·i
};

// Every nonzero β_{i,j} with i ≥ 1 must satisfy j ≤ s·i.
TaylorSupportCheck taylor_support_check(const GradedBettiTable& table, int s);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  std::int64_t floor() const noexcept;
  std::string to_string() const;
  bool operator==(const Rational&) const noexcept = default;
};

// n(s-1)/s, reduced. Throws Error(DegenerateS) for s < 2.
Rational taylor_bound(int n, int s);

struct DhsBound {
  long double value = 0;
  int branch = 1;  // which term attained the minimum
  std::optional<long double> first;
  std::optional<long double> second;
};

inline constexpr long double kRealBoundEpsilon = 1.0L / (1ULL << 40);

// min of the two logarithmic terms; a term whose log argument is ≤ 0 is
// inapplicable, and Error(DomainError) is thrown when neither applies.
DhsBound dhs_bound(int n, int k);

// reg ≤ floor(bound + ε)
std::int64_t dhs_integer_bound(const DhsBound& bound) noexcept;

// Largest k such that Δ is flag and its 1-skeleton has no induced m-cycle for
// 4 ≤ m ≤ k + 3; nullopt when not even k = 1 is admissible.
std::optional<int> max_dhs_parameter(const SimplicialComplex& complex);

enum class BoundKind { Taylor, Dhs };

struct BoundSpec {
  BoundKind kind = BoundKind::Taylor;
  int k = 1;  // Dhs only
};

struct SuitabilityResult {
  bool holds = true;
  std::uint64_t checked = 0;
  // Restrictions that are full simplices (zero ideal); there the only claim is
  // reg = 0 and no bound parameter exists.
  std::uint64_t vacuous = 0;
  VertexSet tightest;
  std::int64_t min_slack = 0;  // integer bound minus reg at `tightest`
  std::vector<VertexSet> violations;
};

// For every nonempty T ⊆ V(Δ), reg(𝕜[Δ|_T]) ≤ bound(|T|, parameter of Δ|_T).
// Dhs throws Error(HypothesisUnmet) unless Δ satisfies the hypotheses for k.
SuitabilityResult check_suitable(const RestrictionStore& store, BoundSpec bound);

}  // namespace regconn
