#include "ssp/distributions.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace ssp {

namespace {

const BigNat kZero = 0;

long long level_max_sum(int i) { return static_cast<long long>(i) * (i + 1) / 2; }

/// Extends an SD row for {1..i-1} into the row for {1..i}, in place.
/// Only the lower half is touched by the recurrence; the upper half is
/// rewritten from the finished lower half via symmetry.
void sd_advance(std::vector<BigNat>& counts, int i) {
    const long long b = level_max_sum(i);
    const long long mid = b / 2;
    counts.resize(b + 1);
    for (long long s = mid; s >= i; --s) {
        counts[s] += counts[s - i];
    }
    for (long long s = mid + 1; s <= b; ++s) {
        counts[s] = counts[b - s];
    }
}

}  // namespace

SumDistribution SumDistribution::build(int n) {
    require_universe(n);
    SumDistribution table;
    table.n_ = n;
    try {
        table.counts_.assign(1, BigNat(1));
        for (int i = 1; i <= n; ++i) {
            sd_advance(table.counts_, i);
        }
    } catch (const std::bad_alloc&) {
        throw ResourceError("sum distribution for n = " + std::to_string(n) +
                            " exceeds the memory budget");
    }
    return table;
}

const BigNat& SumDistribution::count(long long s) const {
    if (s < 0 || s > max_sum()) return kZero;
    return counts_[s];
}

BigNat sd_count(int n, long long s) {
    require_universe(n);
    if (s < 0 || s > max_sum(n)) return 0;
    return SumDistribution::build(n).count(s);
}

LengthSumDistribution LengthSumDistribution::build(int n) {
    require_universe(n);
    LengthSumDistribution table;
    table.n_ = n;
    table.max_sum_ = ssp::max_sum(n);

    // prev holds the full (sum, length) grid for {1..i-1}.
    std::vector<BigNat> prev(1, BigNat(1));  // level 0: only (0,0)
    long long prev_b = 0;
    int prev_n = 0;

    try {
        for (int i = 1; i <= n; ++i) {
            const long long b = level_max_sum(i);
            const int width = i + 1;
            std::vector<BigNat> cur((b + 1) * width);
            cur[0] = 1;  // the empty subset at (0, 0)

            auto at = [&](long long s, int l) -> BigNat& { return cur[s * width + l]; };
            auto prev_at = [&](long long s, int l) -> const BigNat& {
                static const BigNat zero = 0;
                if (s < 0 || s > prev_b || l < 0 || l > prev_n) return zero;
                return prev[s * (prev_n + 1) + l];
            };

            const int half = i / 2;
            for (int l = 1; l <= half; ++l) {
                const long long lo = static_cast<long long>(l) * (l + 1) / 2;
                const long long hi = static_cast<long long>(l) * (2LL * i - l + 1) / 2;
                for (long long s = lo; s <= hi; ++s) {
                    BigNat v = prev_at(s, l);
                    if (s >= i) v += prev_at(s - i, l - 1);
                    at(s, l) = std::move(v);
                }
            }
            // Complement symmetry: a subset of length l and sum s pairs
            // with its complement of length i-l and sum b-s.
            for (int l = half + 1; l <= i; ++l) {
                const long long lo = static_cast<long long>(l) * (l + 1) / 2;
                const long long hi = static_cast<long long>(l) * (2LL * i - l + 1) / 2;
                for (long long s = lo; s <= hi; ++s) {
                    at(s, l) = at(b - s, i - l);
                }
            }

            prev = std::move(cur);
            prev_b = b;
            prev_n = i;
        }
    } catch (const std::bad_alloc&) {
        throw ResourceError("length-sum distribution for n = " + std::to_string(n) +
                            " exceeds the memory budget");
    }

    table.counts_ = std::move(prev);
    return table;
}

const BigNat& LengthSumDistribution::count(long long s, int l) const {
    if (s < 0 || s > max_sum_ || l < 0 || l > n_) return kZero;
    return counts_[s * (n_ + 1) + l];
}

std::pair<int, int> LengthSumDistribution::feasible_lengths(long long s) const {
    int lo = 1, hi = 0;
    for (int l = 0; l <= n_; ++l) {
        if (count(s, l) != 0) {
            if (lo > hi) lo = l;
            hi = l;
        }
    }
    return {lo, hi};
}

ElementDistribution ElementDistribution::build(int n) {
    require_universe(n);
    ElementDistribution table;
    table.n_ = n;
    table.max_sum_ = ssp::max_sum(n);

    std::vector<BigNat> sd_prev(1, BigNat(1));  // SD row of level i-1
    std::vector<BigNat> prev;                   // ED grid of level i-1
    long long prev_b = 0;
    int prev_n = 0;

    try {
        for (int i = 1; i <= n; ++i) {
            const long long b = level_max_sum(i);
            std::vector<BigNat> sd_cur = sd_prev;
            sd_advance(sd_cur, i);

            std::vector<BigNat> cur((b + 1) * i);
            auto at = [&](long long s, int e) -> BigNat& { return cur[s * i + (e - 1)]; };
            auto prev_at = [&](long long s, int e) -> const BigNat& {
                static const BigNat zero = 0;
                if (s < 0 || s > prev_b || e < 1 || e > prev_n) return zero;
                return prev[s * prev_n + (e - 1)];
            };

            const long long sum_case_hi = static_cast<long long>(i) * (i - 1) / 2;
            for (long long s = 1; s <= b; ++s) {
                // e == i: zero below s = i, then exactly the subsets of
                // {1..i-1} summing to s-i, each extended by i.
                if (s >= i) at(s, i) = sd_prev[s - i];
                for (int e = 1; e < i; ++e) {
                    if (s < i) {
                        at(s, e) = prev_at(s, e);
                    } else if (s <= sum_case_hi) {
                        at(s, e) = prev_at(s, e) + prev_at(s - i, e);
                    } else {
                        // Complement half: the mirrored row b-s < i is
                        // already final at this level.
                        at(s, e) = sd_cur[s] - at(b - s, e);
                    }
                }
            }

            prev = std::move(cur);
            sd_prev = std::move(sd_cur);
            prev_b = b;
            prev_n = i;
        }
    } catch (const std::bad_alloc&) {
        throw ResourceError("element distribution for n = " + std::to_string(n) +
                            " exceeds the memory budget");
    }

    table.counts_ = std::move(prev);
    return table;
}

const BigNat& ElementDistribution::count(long long s, int e) const {
    if (s < 0 || s > max_sum_ || e < 1 || e > n_) return kZero;
    return counts_[s * n_ + (e - 1)];
}

std::vector<BigNat> ElementDistribution::row(long long s) const {
    std::vector<BigNat> out(n_);
    for (int e = 1; e <= n_; ++e) out[e - 1] = count(s, e);
    return out;
}

std::vector<BigNat> element_distribution_row(int n, long long s) {
    require_target(n, s);
    return ElementDistribution::build(n).row(s);
}

double peak_estimate(int n) {
    require_universe(n);
    return std::sqrt(6.0 / std::acos(-1.0)) * std::ldexp(1.0, n) * std::pow(n, -1.5);
}

double log10_bignat(const BigNat& value) {
    if (value <= 0) return -std::numeric_limits<double>::infinity();
    const long bits = static_cast<long>(boost::multiprecision::msb(value));
    if (bits <= 960) return std::log10(value.convert_to<double>());
    const BigNat top = value >> (bits - 52);
    return std::log10(top.convert_to<double>()) + (bits - 52) * std::log10(2.0);
}

}  // namespace ssp
