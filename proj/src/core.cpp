#include "ssp/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ssp {

void require_universe(int n) {
    if (n < 1) {
        throw ValidationError("universe size must be at least 1, got " + std::to_string(n));
    }
}

void require_enumerable(int n) {
    require_universe(n);
    if (n > kMaxEnumerableUniverse) {
        throw ValidationError("enumeration is mask-bound to n <= 64, got " + std::to_string(n));
    }
}

void require_target(int n, long long target) {
    require_universe(n);
    if (target < 0 || target > max_sum(n)) {
        throw ValidationError("target sum " + std::to_string(target) + " outside [0, " +
                              std::to_string(max_sum(n)) + "] for n = " + std::to_string(n));
    }
}

long long max_sum(int n) {
    require_universe(n);
    return static_cast<long long>(n) * (n + 1) / 2;
}

long long mid_sum(int n) {
    require_universe(n);
    return static_cast<long long>(n) * (n + 1) / 4;
}

namespace {

void require_length(int n, int l) {
    require_universe(n);
    if (l < 0 || l > n) {
        throw ValidationError("subset length " + std::to_string(l) + " outside [0, " +
                              std::to_string(n) + "]");
    }
}

}  // namespace

long long min_sum_for_length(int n, int l) {
    require_length(n, l);
    return static_cast<long long>(l) * (l + 1) / 2;
}

long long max_sum_for_length(int n, int l) {
    require_length(n, l);
    return static_cast<long long>(l) * (2LL * n - l + 1) / 2;
}

ElementSubset::ElementSubset(std::vector<int> elements) : elements_(std::move(elements)) {
    int prev = 0;
    for (int e : elements_) {
        if (e <= prev) {
            throw ValidationError("subset elements must be strictly increasing and >= 1");
        }
        prev = e;
    }
}

ElementSubset ElementSubset::from_mask(Mask m) {
    ElementSubset s;
    while (m != 0) {
        s.elements_.push_back(std::countr_zero(m) + 1);
        m &= m - 1;
    }
    return s;
}

long long ElementSubset::sum() const {
    return std::accumulate(elements_.begin(), elements_.end(), 0LL);
}

Mask ElementSubset::to_mask() const {
    Mask m = 0;
    for (int e : elements_) {
        if (e > kMaxEnumerableUniverse) {
            throw ValidationError("element " + std::to_string(e) + " exceeds the 64-bit mask width");
        }
        m |= Mask{1} << (e - 1);
    }
    return m;
}

std::string ElementSubset::to_string() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i != 0) out << ',';
        out << elements_[i];
    }
    out << '}';
    return out.str();
}

Mask encode(const ElementSubset& subset) { return subset.to_mask(); }

ElementSubset decode(Mask m) { return ElementSubset::from_mask(m); }

std::string mask_to_string(Mask m) { return ElementSubset::from_mask(m).to_string(); }

VisitedRegistry::VisitedRegistry(int n) : n_(n) {
    require_enumerable(n);
    if (n > kMaxRegistryUniverse) {
        throw ResourceError("registry of 2^" + std::to_string(n) + " bits exceeds the memory budget");
    }
    const std::uint64_t slots = std::uint64_t{1} << n;
    try {
        bits_.assign((slots + 63) / 64, 0);
    } catch (const std::bad_alloc&) {
        throw ResourceError("failed to allocate registry of 2^" + std::to_string(n) + " bits");
    }
}

bool VisitedRegistry::insert(Mask m) {
    std::uint64_t& word = bits_[m >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (m & 63);
    if (word & bit) return false;
    word |= bit;
    ++count_;
    return true;
}

bool VisitedRegistry::contains(Mask m) const {
    return (bits_[m >> 6] >> (m & 63)) & 1;
}

std::vector<Mask> SolutionSet::sorted_masks() const {
    std::vector<Mask> out = masks_;
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ElementSubset> SolutionSet::subsets() const {
    std::vector<ElementSubset> out;
    out.reserve(masks_.size());
    for (Mask m : masks_) out.push_back(ElementSubset::from_mask(m));
    return out;
}

bool SolutionSet::same_subsets(const SolutionSet& other) const {
    return sorted_masks() == other.sorted_masks();
}

bool SolutionSet::well_formed() const {
    std::vector<Mask> sorted = sorted_masks();
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (Mask m : sorted) {
        if (mask_sum(m) != target_) return false;
        if (n_ < 64 && (m & ~full_mask(n_)) != 0) return false;
    }
    return true;
}

}  // namespace ssp
