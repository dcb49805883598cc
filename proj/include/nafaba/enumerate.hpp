#pragma once

#include "nafaba/error.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <thread>
#include <vector>

namespace nafaba {

inline constexpr std::size_t kDefaultEnumerationBound = 24;

/// Controls brute-force enumeration over subsets of a symbol universe.
struct EnumerationOptions {
  /// Largest universe for which all 2^n subsets may be visited.
  std::size_t bound = kDefaultEnumerationBound;
  /// Worker threads; results are merged in mask order so the output does not
  /// depend on this value.
  unsigned jobs = 1;
};

inline void check_enumeration_bound(std::size_t n, const EnumerationOptions& opts) {
  // Masks are 64-bit, so the hard ceiling applies even if the bound is raised.
  if (n > opts.bound || n >= 63)
    throw EnumerationLimitError(n, std::min<std::size_t>(opts.bound, 62));
}

/// Returns every mask in [0, 2^n) for which `pred(mask)` holds, ascending.
/// `pred` must be safe to call concurrently when `opts.jobs > 1`.
template <class Pred>
std::vector<std::uint64_t> enumerate_subsets(std::size_t n, const EnumerationOptions& opts, Pred&& pred) {
  check_enumeration_bound(n, opts);
  const std::uint64_t total = std::uint64_t{1} << n;
  const std::uint64_t jobs = std::clamp<std::uint64_t>(opts.jobs, 1, std::max<std::uint64_t>(total / 64, 1));

  if (jobs == 1) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 0; m < total; ++m)
      if (pred(m))
        out.push_back(m);
    return out;
  }

  std::vector<std::vector<std::uint64_t>> parts(jobs);
  {
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    const std::uint64_t chunk = (total + jobs - 1) / jobs;
    for (std::uint64_t j = 0; j < jobs; ++j) {
      workers.emplace_back([&, j] {
        const std::uint64_t lo = j * chunk;
        const std::uint64_t hi = std::min(total, lo + chunk);
        for (std::uint64_t m = lo; m < hi; ++m)
          if (pred(m))
            parts[j].push_back(m);
      });
    }
  }
  std::vector<std::uint64_t> out;
  for (auto& p : parts)
    out.insert(out.end(), p.begin(), p.end());
  return out;
}

} // namespace nafaba
