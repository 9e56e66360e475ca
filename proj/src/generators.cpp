#include <algorithm>
#include <utility>

#include "ssp/enumerators.hpp"
#include "internal.hpp"

namespace ssp {

namespace {

using MaskRow = std::vector<Mask>;

long long level_max_sum(int i) { return static_cast<long long>(i) * (i + 1) / 2; }

}  // namespace

SumIndexedSolutions sdg(int n, const RunLimits& limits) {
    require_enumerable(n);
    SumIndexedSolutions result;
    result.n = n;

    std::vector<MaskRow> prev(1);
    prev[0].push_back(0);  // the empty subset
    result.explored = 1;

    for (int i = 1; i <= n; ++i) {
        const long long b = level_max_sum(i);
        const long long mid = b / 2;
        const Mask universe = full_mask(i);
        std::vector<MaskRow> cur(b + 1);

        for (long long j = 0; j <= mid; ++j) {
            if (limits.expired()) {
                result.outcome = RunOutcome::capped;
                return result;
            }
            MaskRow row;
            if (j < static_cast<long long>(prev.size())) row = prev[j];
            if (j >= i && j - i < static_cast<long long>(prev.size())) {
                for (Mask m : prev[j - i]) row.push_back(m | detail::element_bit(i));
            }
            result.explored += row.size();
            if (j != b - j) {
                // Symmetric row: each subset pairs with its complement in {1..i}.
                MaskRow& mirror = cur[b - j];
                mirror.reserve(row.size());
                for (Mask m : row) mirror.push_back(universe ^ m);
                result.explored += mirror.size();
            }
            cur[j] = std::move(row);
        }
        prev = std::move(cur);
    }

    result.by_sum.reserve(prev.size());
    for (long long s = 0; s < static_cast<long long>(prev.size()); ++s) {
        SolutionSet set(n, s);
        for (Mask m : prev[s]) set.add(m);
        result.by_sum.push_back(std::move(set));
    }
    return result;
}

LengthSumIndexedSolutions ldg(int n, const RunLimits& limits) {
    require_enumerable(n);
    LengthSumIndexedSolutions result;
    result.n = n;

    // levels[l][s] for the universe {1..i}
    std::vector<std::vector<MaskRow>> prev(1, std::vector<MaskRow>(1));
    prev[0][0].push_back(0);
    result.explored = 1;

    for (int i = 1; i <= n; ++i) {
        const long long b = level_max_sum(i);
        const int half = i / 2;
        const Mask universe = full_mask(i);
        std::vector<std::vector<MaskRow>> cur(i + 1, std::vector<MaskRow>(b + 1));

        cur[0][0].push_back(0);
        result.explored += 1;

        auto prev_row = [&](int l, long long s) -> const MaskRow* {
            if (l < 0 || l >= static_cast<int>(prev.size())) return nullptr;
            if (s < 0 || s >= static_cast<long long>(prev[l].size())) return nullptr;
            return &prev[l][s];
        };

        for (int l = 1; l <= half; ++l) {
            const long long lo = static_cast<long long>(l) * (l + 1) / 2;
            const long long hi = static_cast<long long>(l) * (2LL * i - l + 1) / 2;
            for (long long s = lo; s <= hi; ++s) {
                if (limits.expired()) {
                    result.outcome = RunOutcome::capped;
                    return result;
                }
                MaskRow row;
                if (const MaskRow* r = prev_row(l, s)) row = *r;
                if (s >= i) {
                    if (const MaskRow* r = prev_row(l - 1, s - i)) {
                        for (Mask m : *r) row.push_back(m | detail::element_bit(i));
                    }
                }
                result.explored += row.size();
                cur[l][s] = std::move(row);
            }
        }
        // Complements: length l, sum s pairs with length i-l, sum b-s.
        for (int l = half + 1; l <= i; ++l) {
            const long long lo = static_cast<long long>(l) * (l + 1) / 2;
            const long long hi = static_cast<long long>(l) * (2LL * i - l + 1) / 2;
            for (long long s = lo; s <= hi; ++s) {
                const MaskRow& source = cur[i - l][b - s];
                MaskRow& row = cur[l][s];
                row.reserve(source.size());
                for (Mask m : source) row.push_back(universe ^ m);
                result.explored += row.size();
            }
        }
        prev = std::move(cur);
    }

    const long long b = level_max_sum(n);
    result.by_sum_length.assign(b + 1, {});
    for (long long s = 0; s <= b; ++s) {
        result.by_sum_length[s].reserve(n + 1);
        for (int l = 0; l <= n; ++l) {
            SolutionSet set(n, s);
            if (l < static_cast<int>(prev.size()) &&
                s < static_cast<long long>(prev[l].size())) {
                for (Mask m : prev[l][s]) set.add(m);
            }
            result.by_sum_length[s].push_back(std::move(set));
        }
    }
    return result;
}

EnumerationResult sdg_for_sum(int n, long long s, const RunLimits& limits,
                              const MaskSink& sink) {
    require_enumerable(n);
    EnumerationResult result;
    result.solutions = SolutionSet(n, s);
    if (s < 0 || s > max_sum(n)) return result;

    // Backward pass: which (level, sum) rows feed (n, s).
    std::vector<std::vector<char>> needed(n + 1);
    for (int i = 0; i <= n; ++i) needed[i].assign(level_max_sum(i) + 1, 0);
    needed[n][s] = 1;
    for (int i = n; i >= 1; --i) {
        const long long prev_b = level_max_sum(i - 1);
        for (long long j = 0; j < static_cast<long long>(needed[i].size()); ++j) {
            if (!needed[i][j]) continue;
            if (j <= prev_b) needed[i - 1][j] = 1;
            if (j >= i && j - i <= prev_b) needed[i - 1][j - i] = 1;
        }
    }

    // Forward pass materializes only the needed rows.
    std::vector<MaskRow> prev(1);
    if (needed[0][0]) {
        prev[0].push_back(0);
        result.explored += 1;
    }
    for (int i = 1; i <= n; ++i) {
        std::vector<MaskRow> cur(level_max_sum(i) + 1);
        for (long long j = 0; j < static_cast<long long>(cur.size()); ++j) {
            if (!needed[i][j]) continue;
            if (limits.expired()) {
                result.outcome = RunOutcome::capped;
                result.diagnostic = "wall-clock budget expired";
                return result;
            }
            MaskRow row;
            if (j < static_cast<long long>(prev.size())) row = prev[j];
            if (j >= i && j - i < static_cast<long long>(prev.size())) {
                for (Mask m : prev[j - i]) row.push_back(m | detail::element_bit(i));
            }
            result.explored += row.size();
            cur[j] = std::move(row);
        }
        prev = std::move(cur);
    }

    for (Mask m : prev[s]) detail::emit(result, sink, m);
    return result;
}

EnumerationResult ldg_for_sum(int n, long long s, const RunLimits& limits,
                              const MaskSink& sink) {
    require_enumerable(n);
    EnumerationResult result;
    result.solutions = SolutionSet(n, s);
    if (s < 0 || s > max_sum(n)) return result;

    // needed[i][l][j]
    std::vector<std::vector<std::vector<char>>> needed(n + 1);
    for (int i = 0; i <= n; ++i) {
        needed[i].assign(i + 1, std::vector<char>(level_max_sum(i) + 1, 0));
    }
    for (int l = 0; l <= n; ++l) {
        if (s >= min_sum_for_length(n, l) && s <= max_sum_for_length(n, l)) {
            needed[n][l][s] = 1;
        }
    }
    for (int i = n; i >= 1; --i) {
        const long long prev_b = level_max_sum(i - 1);
        for (int l = 0; l <= i; ++l) {
            for (long long j = 0; j < static_cast<long long>(needed[i][l].size()); ++j) {
                if (!needed[i][l][j]) continue;
                if (l <= i - 1 && j <= prev_b) needed[i - 1][l][j] = 1;
                if (l >= 1 && j >= i && j - i <= prev_b) needed[i - 1][l - 1][j - i] = 1;
            }
        }
    }

    std::vector<std::vector<MaskRow>> prev(1, std::vector<MaskRow>(1));
    if (needed[0][0][0]) {
        prev[0][0].push_back(0);
        result.explored += 1;
    }
    for (int i = 1; i <= n; ++i) {
        std::vector<std::vector<MaskRow>> cur(i + 1,
                                              std::vector<MaskRow>(level_max_sum(i) + 1));
        for (int l = 0; l <= i; ++l) {
            for (long long j = 0; j < static_cast<long long>(cur[l].size()); ++j) {
                if (!needed[i][l][j]) continue;
                if (limits.expired()) {
                    result.outcome = RunOutcome::capped;
                    result.diagnostic = "wall-clock budget expired";
                    return result;
                }
                MaskRow row;
                if (l < static_cast<int>(prev.size()) &&
                    j < static_cast<long long>(prev[l].size())) {
                    row = prev[l][j];
                }
                if (l >= 1 && j >= i && l - 1 < static_cast<int>(prev.size()) &&
                    j - i < static_cast<long long>(prev[l - 1].size())) {
                    for (Mask m : prev[l - 1][j - i]) row.push_back(m | detail::element_bit(i));
                }
                result.explored += row.size();
                cur[l][j] = std::move(row);
            }
        }
        prev = std::move(cur);
    }

    for (int l = 0; l <= n; ++l) {
        for (Mask m : prev[l][s]) detail::emit(result, sink, m);
    }
    return result;
}

}  // namespace ssp
