#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace gdh {

inline constexpr std::string_view kVersion = "0.1.0";

std::uint64_t fnv1a64(std::string_view data);
std::string hex64(std::uint64_t v);

// C(n, k); throws std::overflow_error when the result does not fit in 64 bits.
std::uint64_t binomial(int n, int k);

// n!; requires n <= 20.
std::uint64_t factorial(int n);

// requested <= 0 means "use the machine's concurrency".
int resolve_threads(int requested);

// Runs fn(i) for every i in [0, count). Work is split into contiguous index
// chunks, so which thread runs an index depends only on (threads, count).
void parallel_for(int threads, std::size_t count,
                  const std::function<void(std::size_t)>& fn);

}  // namespace gdh
