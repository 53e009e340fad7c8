#pragma once

// Independent brute-force verifiers. These deliberately re-derive their
// combinatorics (turn counting, vertex encodings, face subsets) from first
// definitions instead of calling the implementations they are used to check.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "jeth/exactmath.hpp"
#include "jeth/guards.hpp"
#include "jeth/hilbert.hpp"
#include "jeth/jetcomplex.hpp"
#include "jeth/latticepath.hpp"

namespace jeth::oracle {

/// Literal shelling check: for every i and every j < i there must be some
/// v in F_i \ F_j and some s < i with F_i \ F_s = {v}. Exhaustive scan;
/// false is a result, not an error. Requires all facets to have the same
/// vertex count.
bool verify_shelling(const std::vector<Facet>& order);

/// Face counts (f_{-1}, f_0, ..., f_{d-1}) where d is the facet vertex
/// count: f_i is the number of distinct i-dimensional faces, i.e. distinct
/// (i+1)-subsets of facets, deduplicated across facets. Throws GuardError
/// when the subset workload exceeds max_faces.
std::vector<BigInt> f_vector(const std::vector<Facet>& facets,
                             std::uint64_t max_faces = Guards{}.max_faces);

/// h-vector from a face-count vector of length d+1 via the exact polynomial
/// identity sum_i f_{i-1} z^i (1-z)^(d-i) = sum_k h_k z^k.
HVector h_from_f(std::span<const BigInt> f, int d);

/// Number of pairwise-disjoint path tuples from starts to ends by exhaustive
/// enumeration, optionally restricted to tuples whose total turn count is k
/// (nullopt counts all). Turn counting is re-derived from step sequences.
BigInt brute_nonintersecting(std::span<const GridPoint> starts,
                             std::span<const GridPoint> ends,
                             std::optional<long long> k,
                             std::uint64_t max_tuples = Guards{}.max_tuples);

}  // namespace jeth::oracle
