#pragma once

#include <cstdint>

namespace jeth {

/// Resource guards for the enumeration-backed operations. Sweeps must fail
/// loudly, not hang; every guard refusal reports the estimated workload.
struct Guards {
  std::uint64_t max_paths = 1'000'000;     // paths per endpoint pair
  std::uint64_t max_facets = 10'000'000;   // facets per complex
  std::uint64_t max_faces = 100'000'000;   // encoded faces in the f-vector
  std::uint64_t max_tuples = 10'000'000;   // path tuples in brute counting
};

}  // namespace jeth
