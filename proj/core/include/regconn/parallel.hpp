#pragma once

#include <atomic>
#include <cstdint>
#include <functional>

namespace regconn {

inline constexpr int kDefaultEnumerationCap = 22;
inline constexpr int kHardEnumerationCap = 26;
inline constexpr std::uint64_t kSubsetBlock = std::uint64_t{1} << 14;

// Limits shared by every exhaustive 2^n enumeration.
struct EnumerationLimits {
  int cap = kDefaultEnumerationCap;
  // 0 selects default_job_count().
  unsigned jobs = 0;
};

// Throws CapExceededError when n > limits.cap.
void check_cap(int n, const EnumerationLimits& limits);

// REGCONN_JOBS when set to a positive integer, else hardware concurrency.
unsigned default_job_count();
unsigned resolve_jobs(unsigned requested);

// Runs body(begin, end) over [0, total) split into blocks of `block` items.
// Blocks are handed out dynamically; body must only write state owned by its
// block. When `stop` is set, remaining blocks are skipped.
void parallel_blocks(std::uint64_t total, std::uint64_t block, unsigned jobs,
                     const std::function<void(std::uint64_t, std::uint64_t)>& body,
                     const std::atomic<bool>* stop = nullptr);

}  // namespace regconn
