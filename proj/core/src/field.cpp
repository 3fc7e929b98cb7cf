#include "regconn/field.hpp"

#include "regconn/error.hpp"

namespace regconn {

bool is_prime(std::uint32_t p) noexcept {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(std::uint32_t p) : p_(p) {
  if (!is_prime(p) || p >= 256) {
    throw Error(ErrorKind::InvalidField,
                "field characteristic must be a prime below 256, got " +
                    std::to_string(p));
  }
}

std::uint32_t FieldSpec::inverse(std::uint32_t a) const {
  a %= p_;
  if (a == 0) throw Error(ErrorKind::Internal, "inverse of zero");
  // Fermat: a^(p-2).
  std::uint64_t result = 1;
  std::uint64_t base = a;
  for (std::uint32_t e = p_ - 2; e != 0; e >>= 1) {
    if (e & 1U) result = result * base % p_;
    base = base * base % p_;
  }
  return static_cast<std::uint32_t>(result);
}

std::vector<FieldSpec> default_fields() { return {FieldSpec(2), FieldSpec(3)}; }

}  // namespace regconn
