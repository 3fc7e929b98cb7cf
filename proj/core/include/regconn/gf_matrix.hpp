#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "regconn/field.hpp"

namespace regconn {

// Dense matrix over GF(p). Rows are bit-packed for p = 2 and byte-per-entry
// otherwise.
class GfMatrix {
 public:
  GfMatrix() = default;
  GfMatrix(std::size_t rows, std::size_t cols, FieldSpec field);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  FieldSpec field() const noexcept { return field_; }

  std::uint32_t at(std::size_t r, std::size_t c) const noexcept;
  // `value` is reduced mod p.
  void set(std::size_t r, std::size_t c, std::int64_t value) noexcept;

  std::size_t rank() const;
  bool is_zero() const noexcept;
  GfMatrix multiply(const GfMatrix& rhs) const;

 private:
  bool binary() const noexcept { return field_.prime() == 2; }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_per_row_ = 0;
  FieldSpec field_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint8_t> bytes_;
};

}  // namespace regconn
