#include <algorithm>
#include <cassert>

#include "ssp/distributions.hpp"
#include "ssp/enumerators.hpp"
#include "internal.hpp"

namespace ssp {

namespace {

struct Bucket {
    Mask mask = 0;
    long long sum = 0;
};

std::vector<long long> frequency_log(const ElementDistribution& ed, long long s) {
    std::vector<long long> freq(ed.universe() + 1, 0);
    for (int e = 1; e <= ed.universe(); ++e) {
        freq[e] = static_cast<long long>(
            detail::to_count(ed.count(s, e), "element frequency"));
    }
    return freq;
}

/// Trivial zero-sum target: the empty subset is the whole solution set.
bool emit_phi_if_zero_target(long long s, EnumerationResult& result, const MaskSink& sink) {
    if (s != 0) return false;
    detail::emit(result, sink, 0);
    result.explored = 1;
    return true;
}

}  // namespace

EnumerationResult basic_bucket(int n, long long s, const RunLimits& limits,
                               const MaskSink& sink) {
    require_enumerable(n);
    EnumerationResult result;
    result.solutions = SolutionSet(n, s);
    if (s < 0 || s > max_sum(n)) return result;
    if (emit_phi_if_zero_target(s, result, sink)) return result;

    const std::uint64_t sd_total = detail::to_count(sd_count(n, s), "solution count SD");
    if (sd_total == 0) return result;
    if (sd_total > (std::uint64_t{1} << 26)) {
        throw ResourceError("bucket run needs " + std::to_string(sd_total) +
                            " live buckets, beyond the memory budget");
    }

    const ElementDistribution ed = ElementDistribution::build(n);
    std::vector<long long> freq = frequency_log(ed, s);

    // Completed subsets may never reappear; end-of-round leftovers are
    // remembered separately so later fill passes cannot rebuild an
    // undesired set that an earlier round already walked into. Fresh
    // seeds are exempt: a lone starting element is a position to retry,
    // not a generated subset.
    VisitedRegistry emitted_states(n);
    VisitedRegistry wrong_states(n);
    std::vector<Mask> wrong;

    std::uint64_t emitted = 0;
    while (emitted < sd_total) {
        ++result.rounds;

        // GetED: leftovers dissolve and their elements return to the log.
        for (Mask m : wrong) {
            Mask rest = m;
            while (rest != 0) {
                ++freq[std::countr_zero(rest) + 1];
                rest &= rest - 1;
            }
        }
        wrong.clear();

        const std::uint64_t p = sd_total - emitted;
        std::vector<Bucket> buckets;
        buckets.reserve(p);
        std::uint64_t emitted_this_round = 0;
        std::uint64_t new_wrong_states = 0;

        auto complete_bucket = [&](std::size_t index) {
            emitted_states.insert(buckets[index].mask);
            detail::emit(result, sink, buckets[index].mask);
            ++emitted;
            ++emitted_this_round;
            buckets.erase(buckets.begin() + static_cast<std::ptrdiff_t>(index));
        };

        // Counts the interrupted round as if it ended here, so capped
        // partial reports keep explored >= emitted.
        auto capped_result = [&]() -> EnumerationResult& {
            std::uint64_t live = 0;
            for (const Bucket& b : buckets) live += b.mask != 0;
            result.explored += emitted_this_round + live;
            result.outcome = RunOutcome::capped;
            result.diagnostic = "wall-clock budget expired";
            return result;
        };
        if (limits.expired()) return capped_result();

        // InitializeBuckets: seed min(p, q) buckets with the largest
        // available elements, largest first.
        {
            std::uint64_t q = 0;
            for (int e = 1; e <= n; ++e) q += freq[e] > 0;
            const std::uint64_t x = std::min<std::uint64_t>(p, q);
            std::uint64_t seeded = 0;
            for (int e = n; e >= 1 && seeded < x; --e) {
                if (freq[e] == 0 || e > s) continue;
                const Mask seed = detail::element_bit(e);
                if (emitted_states.contains(seed)) continue;
                --freq[e];
                ++seeded;
                buckets.push_back({seed, e});
                if (e == s) complete_bucket(buckets.size() - 1);
            }
        }
        while (buckets.size() < p) buckets.push_back({});

        // Fill passes: every element with a positive count, descending,
        // first-fit subject to the three bucket properties (no repeated
        // element, sum cap, no duplicate of a live bucket or any
        // remembered state).
        bool fill_buckets = true;
        while (fill_buckets && !buckets.empty()) {
            if (limits.expired()) return capped_result();
            fill_buckets = false;
            for (int e = n; e >= 1; --e) {
                if (freq[e] == 0) continue;
                // FindBucket: first bucket in creation order that accepts e.
                for (std::size_t i = 0; i < buckets.size(); ++i) {
                    Bucket& b = buckets[i];
                    if (b.mask & detail::element_bit(e)) continue;
                    if (b.sum + e > s) continue;
                    const Mask candidate = b.mask | detail::element_bit(e);
                    if (emitted_states.contains(candidate)) continue;
                    if (wrong_states.contains(candidate)) continue;
                    const auto clash = std::find_if(
                        buckets.begin(), buckets.end(),
                        [&](const Bucket& other) { return other.mask == candidate; });
                    if (clash != buckets.end()) continue;

                    b.mask = candidate;
                    b.sum += e;
                    assert(b.sum == mask_sum(b.mask) && b.sum <= s);
                    --freq[e];
                    fill_buckets = true;
                    if (b.sum == s) complete_bucket(i);
                    break;
                }
            }
        }

        // Leftovers become the wrong set recycled into the next round.
        for (const Bucket& b : buckets) {
            if (b.mask == 0) continue;
            new_wrong_states += wrong_states.insert(b.mask);
            wrong.push_back(b.mask);
        }
        result.explored += emitted_this_round + wrong.size();

        if (emitted_this_round == 0 && new_wrong_states == 0) {
            result.outcome = RunOutcome::stalled;
            result.diagnostic = "no new bucket state reachable after " +
                                std::to_string(result.rounds) + " rounds: emitted " +
                                std::to_string(emitted) + " of " + std::to_string(sd_total);
            return result;
        }
    }
    return result;
}

namespace {

EnumerationResult frequency_driven(int n, long long s, bool pick_max, const RunLimits& limits,
                                   const MaskSink& sink) {
    require_enumerable(n);
    EnumerationResult result;
    result.solutions = SolutionSet(n, s);
    if (s < 0 || s > max_sum(n)) return result;
    if (emit_phi_if_zero_target(s, result, sink)) return result;

    const std::uint64_t sd_total = detail::to_count(sd_count(n, s), "solution count SD");
    if (sd_total == 0) return result;

    const ElementDistribution ed = ElementDistribution::build(n);
    std::vector<long long> freq = frequency_log(ed, s);

    VisitedRegistry registry(n);
    std::vector<char> covered(n + 1, 0);

    while (result.solutions.size() < sd_total) {
        if (limits.expired()) {
            result.outcome = RunOutcome::capped;
            result.diagnostic = "wall-clock budget expired";
            return result;
        }

        // Pivot: the largest element whose remaining frequency is the
        // extreme positive one.
        int pivot = 0;
        long long pivot_freq = 0;
        for (int e = n; e >= 1; --e) {
            if (covered[e] || freq[e] <= 0) continue;
            if (pivot == 0 || (pick_max ? freq[e] > pivot_freq : freq[e] < pivot_freq)) {
                pivot = e;
                pivot_freq = freq[e];
            }
        }
        if (pivot == 0) {
            result.outcome = RunOutcome::stalled;
            result.diagnostic = "no element with positive frequency left: emitted " +
                                std::to_string(result.solutions.size()) + " of " +
                                std::to_string(sd_total);
            return result;
        }
        ++result.rounds;
        ++result.explored;  // the pivot singleton

        // Solve the residual subproblem over the uncovered elements, then
        // extend every answer by the pivot. Everything containing an
        // earlier pivot was already emitted, so each extension is new.
        std::vector<int> available;
        available.reserve(n);
        for (int e = 1; e <= n; ++e) {
            if (e != pivot && !covered[e]) available.push_back(e);
        }
        detail::DfsStats stats;
        detail::ordered_dfs(available, 0, s - pivot, detail::element_bit(pivot), stats,
                            [&](Mask m) {
                                if (!registry.insert(m)) return;
                                detail::emit(result, sink, m);
                                Mask rest = m;
                                while (rest != 0) {
                                    --freq[std::countr_zero(rest) + 1];
                                    rest &= rest - 1;
                                }
                            },
                            limits);
        result.explored += stats.explored;
        if (stats.capped) {
            result.outcome = RunOutcome::capped;
            result.diagnostic = "wall-clock budget expired";
            return result;
        }
        covered[pivot] = 1;
    }
    return result;
}

}  // namespace

EnumerationResult max_fd(int n, long long s, const RunLimits& limits, const MaskSink& sink) {
    return frequency_driven(n, s, /*pick_max=*/true, limits, sink);
}

EnumerationResult min_fd(int n, long long s, const RunLimits& limits, const MaskSink& sink) {
    return frequency_driven(n, s, /*pick_max=*/false, limits, sink);
}

}  // namespace ssp
