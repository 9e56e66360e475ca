#include "ssp/enumerators.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "ssp/distributions.hpp"
#include "internal.hpp"

namespace ssp {

const std::vector<Algorithm>& all_algorithms() {
    static const std::vector<Algorithm> all = {
        Algorithm::naive,  Algorithm::sdg,   Algorithm::ldg,   Algorithm::bucket,
        Algorithm::maxfd,  Algorithm::minfd, Algorithm::lsmax, Algorithm::lsmin,
    };
    return all;
}

std::string to_string(Algorithm a) {
    switch (a) {
        case Algorithm::naive: return "naive";
        case Algorithm::sdg: return "sdg";
        case Algorithm::ldg: return "ldg";
        case Algorithm::bucket: return "bucket";
        case Algorithm::maxfd: return "maxfd";
        case Algorithm::minfd: return "minfd";
        case Algorithm::lsmax: return "lsmax";
        case Algorithm::lsmin: return "lsmin";
    }
    return "unknown";
}

std::optional<Algorithm> parse_algorithm(const std::string& name) {
    for (Algorithm a : all_algorithms()) {
        if (to_string(a) == name) return a;
    }
    return std::nullopt;
}

std::string to_string(RunOutcome o) {
    switch (o) {
        case RunOutcome::complete: return "complete";
        case RunOutcome::capped: return "capped";
        case RunOutcome::stalled: return "stalled";
    }
    return "unknown";
}

RunLimits RunLimits::wall_clock(double seconds) {
    RunLimits limits;
    limits.has_deadline_ = true;
    limits.deadline_ = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(seconds));
    return limits;
}

namespace detail {

std::uint64_t to_count(const BigNat& value, const std::string& what) {
    static const BigNat cap = BigNat(std::numeric_limits<std::int64_t>::max());
    if (value > cap) {
        throw ResourceError(what + " of " + value.str() + " is too large to enumerate");
    }
    return value.convert_to<std::uint64_t>();
}

void emit(EnumerationResult& result, const MaskSink& sink, Mask m) {
    result.solutions.add(m);
    if (sink) sink(m);
}

// Ordered DFS over ascending candidate elements; a branch dies as soon
// as the running sum would pass the target. Explored counts every
// partial subset materialized, the empty root included.
void ordered_dfs(const std::vector<int>& elements, std::size_t first, long long remaining,
                 Mask prefix, DfsStats& stats, const std::function<void(Mask)>& emit_subset,
                 const RunLimits& limits) {
    if (stats.capped) return;
    if (remaining == 0) {
        emit_subset(prefix);
        return;
    }
    for (std::size_t idx = first; idx < elements.size(); ++idx) {
        const int e = elements[idx];
        if (e > remaining) break;
        ++stats.explored;
        if ((stats.explored & 0x3ff) == 0 && limits.expired()) {
            stats.capped = true;
            return;
        }
        ordered_dfs(elements, idx + 1, remaining - e, prefix | element_bit(e), stats,
                    emit_subset, limits);
        if (stats.capped) return;
    }
}

}  // namespace detail

EnumerationResult backtracking(int n, long long s, const RunLimits& limits,
                               const MaskSink& sink) {
    require_enumerable(n);
    EnumerationResult result;
    result.solutions = SolutionSet(n, s);
    if (s < 0 || s > max_sum(n)) return result;

    std::vector<int> elements(n);
    for (int e = 1; e <= n; ++e) elements[e - 1] = e;

    detail::DfsStats stats;
    stats.explored = 1;  // the empty root
    detail::ordered_dfs(elements, 0, s, 0, stats,
                        [&](Mask m) { detail::emit(result, sink, m); }, limits);
    result.explored = stats.explored;
    if (stats.capped) {
        result.outcome = RunOutcome::capped;
        result.diagnostic = "wall-clock budget expired";
    }
    return result;
}

ElementSubset maximal_subset(int n, long long s, int l) {
    return detail::extreme_subset(n, s, l, /*maximal=*/true);
}

ElementSubset minimal_subset(int n, long long s, int l) {
    return detail::extreme_subset(n, s, l, /*maximal=*/false);
}

namespace detail {

ElementSubset extreme_subset(int n, long long s, int l, bool maximal) {
    require_universe(n);
    const long long lo = min_sum_for_length(n, l);
    const long long hi = max_sum_for_length(n, l);
    if (s < lo || s > hi) {
        throw InfeasibleError("no subset of {1.." + std::to_string(n) + "} with length " +
                              std::to_string(l) + " sums to " + std::to_string(s));
    }

    // Right-to-left greedy: position k gets the smallest (maximal seed)
    // or largest (minimal seed) value that still leaves k-1 distinct
    // smaller values able to make up the rest.
    std::vector<int> elements(l);
    int upper = n;
    long long remaining = s;
    for (int k = l; k >= 1; --k) {
        auto feasible = [&](int v) {
            const long long rest = remaining - v;
            const long long rest_min = static_cast<long long>(k - 1) * k / 2;
            const long long rest_max = static_cast<long long>(k - 1) * (2LL * v - k) / 2;
            return rest >= rest_min && rest <= rest_max;
        };
        int chosen = 0;
        if (maximal) {
            for (int v = k; v <= upper; ++v) {
                if (feasible(v)) {
                    chosen = v;
                    break;
                }
            }
        } else {
            for (int v = upper; v >= k; --v) {
                if (feasible(v)) {
                    chosen = v;
                    break;
                }
            }
        }
        elements[k - 1] = chosen;
        upper = chosen - 1;
        remaining -= chosen;
    }
    return ElementSubset(std::move(elements));
}

// One unit moves from position src to position dst; the result must stay
// strictly increasing inside [1, n].
std::optional<std::vector<int>> unit_transfer(const std::vector<int>& subset, int src, int dst,
                                              int n) {
    std::vector<int> out = subset;
    out[src] -= 1;
    out[dst] += 1;
    if (out[src] < 1 || out[dst] > n) return std::nullopt;
    for (std::size_t i = 1; i < out.size(); ++i) {
        if (out[i - 1] >= out[i]) return std::nullopt;
    }
    return out;
}

EnumerationResult local_search_stratum(int n, long long s, int l, SeedKind seed_kind,
                                       const LengthSumDistribution& ld, const RunLimits& limits,
                                       const MaskSink& sink) {
    EnumerationResult result;
    result.solutions = SolutionSet(n, s);
    const std::uint64_t target =
        to_count(ld.count(s, l), "solution stratum LD[" + std::to_string(n) + "]");
    if (target == 0) {
        throw InfeasibleError("no subset of length " + std::to_string(l) + " sums to " +
                              std::to_string(s));
    }

    const ElementSubset seed = seed_kind == SeedKind::maximal ? maximal_subset(n, s, l)
                                                              : minimal_subset(n, s, l);
    VisitedRegistry registry(n);
    std::deque<std::vector<int>> frontier;
    frontier.push_back(seed.elements());
    registry.insert(seed.to_mask());

    while (!frontier.empty()) {
        if (limits.expired()) {
            result.outcome = RunOutcome::capped;
            result.diagnostic = "wall-clock budget expired at length " + std::to_string(l);
            return result;
        }
        const std::vector<int> current = std::move(frontier.front());
        frontier.pop_front();
        ++result.explored;
        emit(result, sink, ElementSubset(current).to_mask());
        if (result.solutions.size() == target) return result;

        for (int src = 0; src < l; ++src) {
            for (int dst = 0; dst < l; ++dst) {
                if (src == dst) continue;
                auto neighbor = unit_transfer(current, src, dst, n);
                if (!neighbor) continue;
                const Mask m = ElementSubset(*neighbor).to_mask();
                if (registry.insert(m)) frontier.push_back(std::move(*neighbor));
            }
        }
    }

    result.outcome = RunOutcome::stalled;
    result.diagnostic = "transfer frontier exhausted at length " + std::to_string(l) +
                        ": emitted " + std::to_string(result.solutions.size()) + " of " +
                        std::to_string(target);
    return result;
}

}  // namespace detail

EnumerationResult local_search(int n, long long s, int l, SeedKind seed, const RunLimits& limits,
                               const MaskSink& sink) {
    require_enumerable(n);
    if (l < 0 || l > n) {
        throw ValidationError("subset length " + std::to_string(l) + " outside [0, " +
                              std::to_string(n) + "]");
    }
    const LengthSumDistribution ld = LengthSumDistribution::build(n);
    return detail::local_search_stratum(n, s, l, seed, ld, limits, sink);
}

EnumerationResult local_search_full(int n, long long s, SeedKind seed, const RunLimits& limits,
                                    const MaskSink& sink) {
    require_enumerable(n);
    EnumerationResult result;
    result.solutions = SolutionSet(n, s);
    if (s < 0 || s > max_sum(n)) return result;

    const LengthSumDistribution ld = LengthSumDistribution::build(n);
    for (int l = 0; l <= n; ++l) {
        if (ld.count(s, l) == 0) continue;
        EnumerationResult stratum = detail::local_search_stratum(n, s, l, seed, ld, limits, sink);
        for (Mask m : stratum.solutions.masks()) result.solutions.add(m);
        result.explored += stratum.explored;
        ++result.rounds;
        if (stratum.outcome != RunOutcome::complete) {
            result.outcome = stratum.outcome;
            result.diagnostic = stratum.diagnostic;
            return result;
        }
    }
    return result;
}

EnumerationResult run_algorithm(Algorithm a, int n, long long s, const RunLimits& limits,
                                const MaskSink& sink) {
    switch (a) {
        case Algorithm::naive: return backtracking(n, s, limits, sink);
        case Algorithm::sdg: return sdg_for_sum(n, s, limits, sink);
        case Algorithm::ldg: return ldg_for_sum(n, s, limits, sink);
        case Algorithm::bucket: return basic_bucket(n, s, limits, sink);
        case Algorithm::maxfd: return max_fd(n, s, limits, sink);
        case Algorithm::minfd: return min_fd(n, s, limits, sink);
        case Algorithm::lsmax: return local_search_full(n, s, SeedKind::maximal, limits, sink);
        case Algorithm::lsmin: return local_search_full(n, s, SeedKind::minimal, limits, sink);
    }
    throw ValidationError("unknown algorithm");
}

}  // namespace ssp
