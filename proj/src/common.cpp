#include "specmono/common.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace specmono {

std::pair<std::uint32_t, std::uint32_t> pair_from_index(std::size_t n, std::size_t idx) {
  std::size_t i = 0;
  std::size_t row = n - 1;  // pairs in row i
  while (idx >= row) {
    idx -= row;
    --row;
    ++i;
  }
  return {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i + 1 + idx)};
}

unsigned worker_count() {
  if (const char* env = std::getenv("SPECMONO_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

void for_each_chunk(std::size_t total, std::size_t chunk_size,
                    const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
  if (total == 0) return;
  if (chunk_size == 0) chunk_size = 1;
  const std::size_t chunks = (total + chunk_size - 1) / chunk_size;
  const unsigned workers = std::min<std::size_t>(worker_count(), chunks);

  auto run = [&](std::size_t c) {
    const std::size_t begin = c * chunk_size;
    fn(c, begin, std::min(begin + chunk_size, total));
  };

  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) run(c);
    return;
  }

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t c = w; c < chunks; c += workers) run(c);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace specmono
