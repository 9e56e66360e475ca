#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ssp {

/// Exact count type. Subset counts pass 2^63 well before n reaches
/// interesting sizes (the midSum peak overflows 64 bits near n = 70),
/// so every table stores arbitrary-precision naturals.
using BigNat = boost::multiprecision::cpp_int;

/// An n-bit subset encoding of {1..n}: element e present iff bit (e-1)
/// is set, so the mask value is sum(2^(e-1)) over the elements.
using Mask = std::uint64_t;

/// Enumeration APIs are mask-bound; counting APIs are not.
inline constexpr int kMaxEnumerableUniverse = 64;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid n / S / l combinations, malformed subsets, mask-width overflow.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Exhaustive 2^n work refused without an explicit override.
class ScaleError : public Error {
public:
    using Error::Error;
};

/// Memory budget exceeded while building a table or registry.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// No subset with the requested (sum, length) exists.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

void require_universe(int n);
void require_enumerable(int n);
void require_target(int n, long long target);

/// n(n+1)/2: the largest sum any subset of {1..n} can reach.
long long max_sum(int n);

/// floor(n(n+1)/4): the symmetry midpoint of the sum range.
long long mid_sum(int n);

/// l(l+1)/2: sum of the l smallest elements. Throws ValidationError
/// unless 0 <= l <= n.
long long min_sum_for_length(int n, int l);

/// l(2n-l+1)/2: sum of the l largest elements. Throws ValidationError
/// unless 0 <= l <= n.
long long max_sum_for_length(int n, int l);

inline Mask full_mask(int n) {
    return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline long long mask_sum(Mask m) {
    long long s = 0;
    while (m != 0) {
        s += std::countr_zero(m) + 1;
        m &= m - 1;
    }
    return s;
}

inline int mask_length(Mask m) { return std::popcount(m); }

/// A subset stored canonically as a strictly increasing element sequence.
/// Sum and length are always derived from the elements, never cached.
class ElementSubset {
public:
    ElementSubset() = default;

    /// Validates that `elements` is strictly increasing with all values >= 1.
    explicit ElementSubset(std::vector<int> elements);

    static ElementSubset from_mask(Mask m);

    const std::vector<int>& elements() const { return elements_; }
    int length() const { return static_cast<int>(elements_.size()); }
    bool empty() const { return elements_.empty(); }
    long long sum() const;

    /// Sum(2^(e-1)); throws ValidationError if any element exceeds 64.
    Mask to_mask() const;

    /// Canonical textual form: "{2,9,10}"; the empty subset prints as "{}".
    std::string to_string() const;

    friend bool operator==(const ElementSubset&, const ElementSubset&) = default;

private:
    std::vector<int> elements_;
};

Mask encode(const ElementSubset& subset);
ElementSubset decode(Mask m);
std::string mask_to_string(Mask m);

/// Dense lookup bitmap with one slot per possible mask of {1..n},
/// i.e. 2^n bits. Insert is idempotent; contains() answers exactly
/// "was this mask inserted". Instances are cheap for test-scale n and
/// are created per enumeration run; allocation is refused above
/// kMaxRegistryUniverse since the table doubles per element.
class VisitedRegistry {
public:
    static constexpr int kMaxRegistryUniverse = 34;  // 2 GiB of bits

    explicit VisitedRegistry(int n);

    /// Returns true iff the mask was not already present.
    bool insert(Mask m);
    bool contains(Mask m) const;

    /// Number of distinct masks inserted so far; never exceeds 2^n.
    std::uint64_t size() const { return count_; }
    int universe() const { return n_; }

private:
    int n_ = 0;
    std::uint64_t count_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// The emitted solutions of one (n, S) run: duplicate-free, every member
/// summing to the target. Masks keep emission order; comparisons are
/// order-insensitive.
class SolutionSet {
public:
    SolutionSet() = default;
    SolutionSet(int n, long long target) : n_(n), target_(target) {}

    void add(Mask m) { masks_.push_back(m); }

    int universe() const { return n_; }
    long long target() const { return target_; }
    std::size_t size() const { return masks_.size(); }
    bool empty() const { return masks_.empty(); }

    const std::vector<Mask>& masks() const { return masks_; }
    std::vector<Mask> sorted_masks() const;
    std::vector<ElementSubset> subsets() const;

    bool same_subsets(const SolutionSet& other) const;

    /// True when every member sums to the target and no mask repeats.
    bool well_formed() const;

private:
    int n_ = 0;
    long long target_ = 0;
    std::vector<Mask> masks_;
};

}  // namespace ssp
