#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace regconn {

// Prime field GF(p). Element storage is one byte, so p < 256.
class FieldSpec {
 public:
  constexpr FieldSpec() noexcept = default;
  // Throws Error(InvalidField) unless p is a prime below 256.
  explicit FieldSpec(std::uint32_t p);

  constexpr std::uint32_t prime() const noexcept { return p_; }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

  std::uint32_t reduce(std::int64_t value) const noexcept {
    const auto p = static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(((value % p) + p) % p);
  }
  std::uint32_t inverse(std::uint32_t a) const;

  constexpr bool operator==(const FieldSpec&) const noexcept = default;

 private:
  std::uint32_t p_ = 2;
};

bool is_prime(std::uint32_t p) noexcept;

// The certification default: GF(2), GF(3).
std::vector<FieldSpec> default_fields();

}  // namespace regconn
