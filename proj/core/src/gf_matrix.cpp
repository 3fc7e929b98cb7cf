#include "regconn/gf_matrix.hpp"

#include <algorithm>
#include <bit>

#include "regconn/error.hpp"

namespace regconn {

GfMatrix::GfMatrix(std::size_t rows, std::size_t cols, FieldSpec field)
    : rows_(rows), cols_(cols), field_(field) {
  if (binary()) {
    words_per_row_ = (cols + 63) / 64;
    bits_.assign(rows * words_per_row_, 0);
  } else {
    bytes_.assign(rows * cols, 0);
  }
}

std::uint32_t GfMatrix::at(std::size_t r, std::size_t c) const noexcept {
  if (binary()) {
    return static_cast<std::uint32_t>(
        (bits_[r * words_per_row_ + c / 64] >> (c % 64)) & 1U);
  }
  return bytes_[r * cols_ + c];
}

void GfMatrix::set(std::size_t r, std::size_t c, std::int64_t value) noexcept {
  const std::uint32_t v = field_.reduce(value);
  if (binary()) {
    std::uint64_t& word = bits_[r * words_per_row_ + c / 64];
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    word = v ? (word | bit) : (word & ~bit);
  } else {
    bytes_[r * cols_ + c] = static_cast<std::uint8_t>(v);
  }
}

bool GfMatrix::is_zero() const noexcept {
  if (binary()) {
    return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
  }
  return std::all_of(bytes_.begin(), bytes_.end(), [](std::uint8_t b) { return b == 0; });
}

GfMatrix GfMatrix::multiply(const GfMatrix& rhs) const {
  if (cols_ != rhs.rows_ || !(field_ == rhs.field_)) {
    throw Error(ErrorKind::BadParameters, "matrix shapes or fields do not match");
  }
  GfMatrix out(rows_, rhs.cols_, field_);
  const std::uint32_t p = field_.prime();
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint32_t a = at(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        const std::uint32_t b = rhs.at(k, c);
        if (b == 0) continue;
        out.set(r, c, static_cast<std::int64_t>((out.at(r, c) + a * b) % p));
      }
    }
  }
  return out;
}

namespace {

// Row space basis built incrementally: each basis row is keyed by its leading
// column, and an incoming row is reduced left to right until it either
// vanishes or has a fresh leading column.
std::size_t rank_binary(std::vector<std::uint64_t> rows, std::size_t row_count,
                        std::size_t words) {
  if (words == 0) return 0;
  std::vector<std::int64_t> pivot_row(words * 64, -1);
  std::size_t rank = 0;
  for (std::size_t r = 0; r < row_count; ++r) {
    std::uint64_t* row = rows.data() + r * words;
    std::size_t w = 0;
    while (true) {
      while (w < words && row[w] == 0) ++w;
      if (w == words) break;
      const std::size_t lead = w * 64 + static_cast<std::size_t>(std::countr_zero(row[w]));
      const std::int64_t pivot = pivot_row[lead];
      if (pivot < 0) {
        pivot_row[lead] = static_cast<std::int64_t>(r);
        ++rank;
        break;
      }
      const std::uint64_t* basis = rows.data() + static_cast<std::size_t>(pivot) * words;
      for (std::size_t k = w; k < words; ++k) row[k] ^= basis[k];
    }
  }
  return rank;
}

std::size_t rank_bytes(std::vector<std::uint8_t> rows, std::size_t row_count,
                       std::size_t cols, FieldSpec field) {
  const std::uint32_t p = field.prime();
  std::vector<std::int64_t> pivot_row(cols, -1);
  std::size_t rank = 0;
  for (std::size_t r = 0; r < row_count; ++r) {
    std::uint8_t* row = rows.data() + r * cols;
    for (std::size_t c = 0; c < cols; ++c) {
      if (row[c] == 0) continue;
      const std::int64_t pivot = pivot_row[c];
      if (pivot < 0) {
        // Normalize so the leading entry is 1.
        const std::uint32_t inv = field.inverse(row[c]);
        for (std::size_t k = c; k < cols; ++k) {
          row[k] = static_cast<std::uint8_t>(row[k] * inv % p);
        }
        pivot_row[c] = static_cast<std::int64_t>(r);
        ++rank;
        break;
      }
      const std::uint8_t* basis = rows.data() + static_cast<std::size_t>(pivot) * cols;
      const std::uint32_t factor = row[c];
      for (std::size_t k = c; k < cols; ++k) {
        if (basis[k] == 0) continue;
        row[k] = static_cast<std::uint8_t>((row[k] + (p - factor) * basis[k]) % p);
      }
    }
  }
  return rank;
}

}  // namespace

std::size_t GfMatrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  if (binary()) return rank_binary(bits_, rows_, words_per_row_);
  return rank_bytes(bytes_, rows_, cols_, field_);
}

}  // namespace regconn
