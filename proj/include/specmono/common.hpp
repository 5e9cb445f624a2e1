#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

namespace specmono {

/// Violated mathematical precondition or theorem hypothesis.
struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input. `line` is 1-based, 0 when the error is not tied to a line.
struct parse_error : std::runtime_error {
  std::size_t line = 0;
  explicit parse_error(const std::string& msg, std::size_t line_no = 0)
      : std::runtime_error(line_no ? "line " + std::to_string(line_no) + ": " + msg : msg),
        line(line_no) {}
};

constexpr std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

/// Lexicographic index of the unordered pair (i,j), i<j, among all pairs of [n].
constexpr std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

/// Inverse of pair_index.
std::pair<std::uint32_t, std::uint32_t> pair_from_index(std::size_t n, std::size_t idx);

/// Worker count for parallel scans: SPECMONO_THREADS when set, else all cores.
unsigned worker_count();

/// Runs fn(chunk, begin, end) over fixed-size chunks of [0, total), distributing
/// chunks across worker_count() threads. Chunk boundaries depend only on
/// chunk_size, so callers that store per-chunk results and fold them in chunk
/// order get output independent of the thread count.
void for_each_chunk(std::size_t total, std::size_t chunk_size,
                    const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

}  // namespace specmono
