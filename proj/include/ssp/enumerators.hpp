#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ssp/core.hpp"

namespace ssp {

/// The eight enumeration strategies, by their CLI ids.
enum class Algorithm { naive, sdg, ldg, bucket, maxfd, minfd, lsmax, lsmin };

const std::vector<Algorithm>& all_algorithms();
std::string to_string(Algorithm a);
std::optional<Algorithm> parse_algorithm(const std::string& name);

enum class RunOutcome {
    complete,  // the full solution set was emitted
    capped,    // the wall-clock budget expired first
    stalled,   // the algorithm could make no further progress
};

std::string to_string(RunOutcome o);

/// Optional wall-clock budget shared by all enumerators. Expiry turns a
/// run into a capped partial result rather than an error.
class RunLimits {
public:
    RunLimits() = default;

    static RunLimits none() { return RunLimits{}; }
    static RunLimits wall_clock(double seconds);

    bool expired() const {
        return has_deadline_ && std::chrono::steady_clock::now() >= deadline_;
    }

private:
    bool has_deadline_ = false;
    std::chrono::steady_clock::time_point deadline_{};
};

/// Invoked once per emitted subset, in emission order.
using MaskSink = std::function<void(Mask)>;

/// One enumeration run: the emitted solutions plus instrumentation.
/// `explored` counts candidate subsets materialized along the way (search
/// nodes, bucket states at round boundaries, dequeued search states), so
/// explored/emitted is the excess-exploration ratio and is at least 1 for
/// complete runs.
struct EnumerationResult {
    SolutionSet solutions;
    std::uint64_t explored = 0;
    std::uint64_t rounds = 0;
    RunOutcome outcome = RunOutcome::complete;
    std::string diagnostic;

    std::uint64_t emitted() const { return solutions.size(); }
    bool complete() const { return outcome == RunOutcome::complete; }
};

/// Ordered include/exclude search over elements 1..n with the running
/// sum pruned at S. Explored counts the partial subsets materialized at
/// decision nodes.
EnumerationResult backtracking(int n, long long s, const RunLimits& limits = {},
                               const MaskSink& sink = {});

/// Solution sets for every sum at once, built level by level: level i
/// merges level i-1 rows with element-i extensions on the lower half of
/// the sum range and takes complements against {1..i} for the upper
/// half. Level i-1 storage is released as level i completes.
struct SumIndexedSolutions {
    int n = 0;
    std::vector<SolutionSet> by_sum;
    std::uint64_t explored = 0;
    RunOutcome outcome = RunOutcome::complete;
};

SumIndexedSolutions sdg(int n, const RunLimits& limits = {});

/// Per-(sum, length) solution sets, same level scheme with the extra
/// length coordinate; complements fill lengths above floor(i/2).
struct LengthSumIndexedSolutions {
    int n = 0;
    std::vector<std::vector<SolutionSet>> by_sum_length;  // [sum][length]
    std::uint64_t explored = 0;
    RunOutcome outcome = RunOutcome::complete;

    const SolutionSet& at(long long s, int l) const { return by_sum_length[s][l]; }
};

LengthSumIndexedSolutions ldg(int n, const RunLimits& limits = {});

/// Single-sum projections of the generators: only DP rows on the
/// dependency cone of (n, S) are materialized, and explored counts every
/// subset written into those rows.
EnumerationResult sdg_for_sum(int n, long long s, const RunLimits& limits = {},
                              const MaskSink& sink = {});
EnumerationResult ldg_for_sum(int n, long long s, const RunLimits& limits = {},
                              const MaskSink& sink = {});

/// Greedy bucket filling: SD[n][S] buckets, elements placed in
/// descending order by first-fit against the uniqueness and sum-cap
/// properties, leftovers recycled into the next round with their element
/// counts restored. Explored counts completions plus leftover bucket
/// snapshots per round.
EnumerationResult basic_bucket(int n, long long s, const RunLimits& limits = {},
                               const MaskSink& sink = {});

/// Frequency-driven rounds: each round pivots on the largest element of
/// extreme remaining frequency, enumerates the pivot's residual
/// subproblem over the uncovered elements, and retires the pivot.
EnumerationResult max_fd(int n, long long s, const RunLimits& limits = {},
                         const MaskSink& sink = {});
EnumerationResult min_fd(int n, long long s, const RunLimits& limits = {},
                         const MaskSink& sink = {});

/// Lexicographically extreme sorted subsets with the given sum and
/// length, built right to left. Throws InfeasibleError when no subset
/// of length l sums to S.
ElementSubset maximal_subset(int n, long long s, int l);
ElementSubset minimal_subset(int n, long long s, int l);

enum class SeedKind { maximal, minimal };

/// Breadth-first walk of the unit-transfer neighborhood (move one unit
/// between two positions, keeping the sequence strictly increasing and
/// inside [1, n]) from the chosen seed, deduplicated by registry, until
/// LD[n][S][l] subsets are collected. A drained frontier before that
/// count is reported as a stalled partial result.
EnumerationResult local_search(int n, long long s, int l, SeedKind seed,
                               const RunLimits& limits = {}, const MaskSink& sink = {});

/// Union of local_search over every feasible length for the sum.
EnumerationResult local_search_full(int n, long long s, SeedKind seed,
                                    const RunLimits& limits = {}, const MaskSink& sink = {});

/// Runs one algorithm against one (n, S) target.
EnumerationResult run_algorithm(Algorithm a, int n, long long s, const RunLimits& limits = {},
                                const MaskSink& sink = {});

}  // namespace ssp
