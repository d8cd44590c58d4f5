#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace orpoly {

/// Runs body(begin, end) over contiguous chunks of [0, count) on up to `jobs`
/// threads and returns the per-chunk results in chunk order. Callers that
/// combine the results with an exact, associative operation get answers that
/// do not depend on `jobs`.
template <class Result, class Body>
std::vector<Result> parallel_chunks(std::uint64_t count, unsigned jobs, Body body) {
  jobs = std::max(1u, jobs);
  const std::uint64_t chunks = std::min<std::uint64_t>(jobs, std::max<std::uint64_t>(count, 1));
  std::vector<Result> results(chunks);
  if (chunks == 1) {
    results[0] = body(std::uint64_t{0}, count);
    return results;
  }
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> threads;
  threads.reserve(chunks);
  for (std::uint64_t c = 0; c < chunks; ++c) {
    const std::uint64_t begin = count * c / chunks;
    const std::uint64_t end = count * (c + 1) / chunks;
    threads.emplace_back([&, c, begin, end] {
      try {
        results[c] = body(begin, end);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace orpoly
