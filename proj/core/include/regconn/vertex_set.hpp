#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace regconn {

inline constexpr int kMaxVertices = 64;

// A set of vertices stored as a bitmask. Bit k is the vertex with internal
// index k; every external surface (files, reports, JSON) prints k + 1.
class VertexSet {
 public:
  using mask_type = std::uint64_t;

  constexpr VertexSet() noexcept = default;
  constexpr explicit VertexSet(mask_type bits) noexcept : bits_(bits) {}

  // 0-based indices.
  static VertexSet of(std::initializer_list<int> indices);
  // 1-based labels, as written in facet files.
  static VertexSet from_labels(std::initializer_list<int> labels);
  static VertexSet from_labels(std::span<const int> labels);
  // {0, ..., n-1}
  static constexpr VertexSet range(int n) noexcept {
    return VertexSet(n >= kMaxVertices ? ~mask_type{0}
                                       : ((mask_type{1} << n) - 1));
  }

  constexpr mask_type bits() const noexcept { return bits_; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool contains(int index) const noexcept {
    return (bits_ >> index) & 1U;
  }
  constexpr bool is_subset_of(VertexSet other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  // Lowest / highest index; undefined on the empty set.
  constexpr int min() const noexcept { return std::countr_zero(bits_); }
  constexpr int max() const noexcept { return 63 - std::countl_zero(bits_); }

  constexpr VertexSet with(int index) const noexcept {
    return VertexSet(bits_ | (mask_type{1} << index));
  }
  constexpr VertexSet without(int index) const noexcept {
    return VertexSet(bits_ & ~(mask_type{1} << index));
  }

  constexpr VertexSet operator|(VertexSet o) const noexcept {
    return VertexSet(bits_ | o.bits_);
  }
  constexpr VertexSet operator&(VertexSet o) const noexcept {
    return VertexSet(bits_ & o.bits_);
  }
  // Set difference.
  constexpr VertexSet operator-(VertexSet o) const noexcept {
    return VertexSet(bits_ & ~o.bits_);
  }
  constexpr VertexSet shifted(int offset) const noexcept {
    return VertexSet(bits_ << offset);
  }

  constexpr auto operator<=>(const VertexSet&) const noexcept = default;

  // Ascending-index iteration.
  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;

    constexpr iterator() noexcept = default;
    constexpr explicit iterator(mask_type rest) noexcept : rest_(rest) {}
    constexpr int operator*() const noexcept { return std::countr_zero(rest_); }
    constexpr iterator& operator++() noexcept {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) noexcept {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    constexpr bool operator==(const iterator&) const noexcept = default;

   private:
    mask_type rest_ = 0;
  };

  constexpr iterator begin() const noexcept { return iterator(bits_); }
  constexpr iterator end() const noexcept { return iterator(0); }

  std::vector<int> indices() const;
  std::vector<int> labels() const;
  // "{1,2,3}" with 1-based labels.
  std::string to_string() const;

 private:
  mask_type bits_ = 0;
};

// Maps the k-th subset (k in [0, 2^|universe|)) of `universe` onto a mask,
// bit i of k selecting the i-th smallest element of the universe.
class SubsetIndexer {
 public:
  explicit SubsetIndexer(VertexSet universe);

  int width() const noexcept { return static_cast<int>(positions_.size()); }
  std::uint64_t count() const noexcept { return std::uint64_t{1} << width(); }
  bool is_identity() const noexcept { return identity_; }

  VertexSet expand(std::uint64_t compact) const noexcept {
    if (identity_) return VertexSet(compact);
    VertexSet::mask_type out = 0;
    for (int i = 0; compact != 0; ++i, compact >>= 1) {
      if (compact & 1U) out |= VertexSet::mask_type{1} << positions_[i];
    }
    return VertexSet(out);
  }
  std::uint64_t compress(VertexSet set) const noexcept {
    if (identity_) return set.bits();
    std::uint64_t out = 0;
    for (int i = 0; i < width(); ++i) {
      if (set.contains(positions_[i])) out |= std::uint64_t{1} << i;
    }
    return out;
  }

 private:
  std::vector<int> positions_;
  bool identity_ = false;
};

}  // namespace regconn
