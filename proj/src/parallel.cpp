#include "permpoly/parallel.hpp"

#include <cstdlib>
#include <thread>
#include <vector>

namespace permpoly {

unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("PERMPOLY_WORKERS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return (unsigned)v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

void run_chunked(uint64_t n, unsigned workers,
                 const std::function<void(unsigned, uint64_t, uint64_t)>& fn) {
  if (workers < 1) workers = 1;
  if ((uint64_t)workers > n && n > 0) workers = (unsigned)n;
  if (workers <= 1 || n == 0) {
    fn(0, 0, n);
    return;
  }
  const uint64_t base = n / workers, extra = n % workers;
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  uint64_t lo = base + (extra > 0 ? 1 : 0);  // chunk 0 stays on this thread
  for (unsigned w = 1; w < workers; ++w) {
    uint64_t len = base + (w < extra ? 1 : 0);
    pool.emplace_back(fn, w, lo, lo + len);
    lo += len;
  }
  fn(0, 0, base + (extra > 0 ? 1 : 0));
  for (auto& th : pool) th.join();
}

}  // namespace permpoly
