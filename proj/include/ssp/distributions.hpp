#pragma once

#include <vector>

#include "ssp/core.hpp"

namespace ssp {

/// SD[n][S]: how many subsets of {1..n} sum to S, for S in [0, n(n+1)/2].
/// Built level by level with the add-one-element recurrence on the lower
/// half of the sum range and the complement symmetry SD[n][S] =
/// SD[n][maxSum-S] on the upper half.
class SumDistribution {
public:
    static SumDistribution build(int n);

    int universe() const { return n_; }
    long long max_sum() const { return static_cast<long long>(counts_.size()) - 1; }

    /// Out-of-range sums count zero subsets.
    const BigNat& count(long long s) const;
    const std::vector<BigNat>& counts() const { return counts_; }

private:
    int n_ = 0;
    std::vector<BigNat> counts_;
};

/// SD[n][S] without keeping the table around.
BigNat sd_count(int n, long long s);

/// LD[n][S][l]: how many subsets of {1..n} of length l sum to S.
/// The empty subset sits at (S,l) = (0,0); every other length-0 count
/// is zero, which is what makes the lengths marginalize back to SD.
class LengthSumDistribution {
public:
    static LengthSumDistribution build(int n);

    int universe() const { return n_; }
    long long max_sum() const { return max_sum_; }

    const BigNat& count(long long s, int l) const;

    /// Smallest and largest l with a nonzero count for this sum, as a
    /// closed range; returns {1, 0} (empty) when no subset reaches S.
    std::pair<int, int> feasible_lengths(long long s) const;

private:
    int n_ = 0;
    long long max_sum_ = 0;
    std::vector<BigNat> counts_;  // (max_sum_+1) x (n_+1), row-major by sum
};

/// ED[n][S][e]: total occurrences of element e across the subsets of
/// {1..n} with sum S. Rows follow the level recurrence; the upper half
/// of the sum range uses the complement identity
/// ED[n][S][e] + ED[n][maxSum-S][e] = SD[n][S].
class ElementDistribution {
public:
    static ElementDistribution build(int n);

    int universe() const { return n_; }
    long long max_sum() const { return max_sum_; }

    const BigNat& count(long long s, int e) const;
    std::vector<BigNat> row(long long s) const;  // indexed e-1, e in [1, n]

private:
    int n_ = 0;
    long long max_sum_ = 0;
    std::vector<BigNat> counts_;  // (max_sum_+1) x n_, row-major by sum
};

/// One ED row. Builds the full table internally; prefer
/// ElementDistribution::build when several sums are needed.
std::vector<BigNat> element_distribution_row(int n, long long s);

/// sqrt(6/pi) * 2^n * n^(-3/2): the asymptotic size of the distribution
/// peak SD[n][midSum(n)]. The exact peak approaches this from below.
double peak_estimate(int n);

/// log10 of an exact count, usable far beyond double range.
double log10_bignat(const BigNat& value);

}  // namespace ssp
