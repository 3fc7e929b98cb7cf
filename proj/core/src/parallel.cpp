#include "regconn/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "regconn/error.hpp"

namespace regconn {

void check_cap(int n, const EnumerationLimits& limits) {
  const int cap = std::min(limits.cap, kHardEnumerationCap);
  if (n > cap) throw CapExceededError(n, cap);
}

unsigned default_job_count() {
  if (const char* env = std::getenv("REGCONN_JOBS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<unsigned>(value);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

unsigned resolve_jobs(unsigned requested) {
  return requested == 0 ? default_job_count() : requested;
}

void parallel_blocks(std::uint64_t total, std::uint64_t block, unsigned jobs,
                     const std::function<void(std::uint64_t, std::uint64_t)>& body,
                     const std::atomic<bool>* stop) {
  if (total == 0) return;
  if (block == 0) block = 1;
  const std::uint64_t blocks = (total + block - 1) / block;
  jobs = resolve_jobs(jobs);
  if (jobs > blocks) jobs = static_cast<unsigned>(blocks);

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::atomic<bool> failed{false};

  auto worker = [&] {
    while (true) {
      if (failed.load(std::memory_order_relaxed)) return;
      if (stop && stop->load(std::memory_order_relaxed)) return;
      const std::uint64_t b = next.fetch_add(1, std::memory_order_relaxed);
      if (b >= blocks) return;
      const std::uint64_t begin = b * block;
      const std::uint64_t end = begin + block < total ? begin + block : total;
      try {
        body(begin, end);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };

  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace regconn
