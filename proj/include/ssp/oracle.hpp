#pragma once

#include <vector>

#include "ssp/core.hpp"

namespace ssp {

/// Ground truth from one pass over all 2^n masks.
struct OracleResult {
    int n = 0;
    std::vector<SolutionSet> by_sum;  // indexed by sum, 0..maxSum(n)
    std::uint64_t masks_visited = 0;
};

/// How far the oracle goes before demanding an explicit override.
/// It exists for verification, not production, so the guard is soft.
inline constexpr int kOracleScaleGuard = 25;

/// Exactly the subsets of {1..n} with sum S, by exhaustive iteration in
/// mask-increment order. Throws ScaleError for n > 25 unless
/// allow_large is set.
SolutionSet oracle_enumerate(int n, long long s, bool allow_large = false);

/// All 2^n subsets partitioned by their sum, one pass.
OracleResult oracle_all(int n, bool allow_large = false);

}  // namespace ssp
