#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "ssp/core.hpp"

using namespace ssp;

TEST_CASE("closed-form bounds") {
    CHECK(max_sum(5) == 15);
    CHECK(max_sum(1) == 1);
    CHECK(max_sum(10) == 55);

    CHECK(mid_sum(10) == 27);
    CHECK(mid_sum(1) == 0);
    CHECK(mid_sum(15) == 60);

    CHECK(min_sum_for_length(10, 3) == 6);
    CHECK(min_sum_for_length(5, 5) == 15);
    CHECK(min_sum_for_length(4, 0) == 0);

    CHECK(max_sum_for_length(10, 3) == 27);
    CHECK(max_sum_for_length(5, 2) == 9);
    CHECK(max_sum_for_length(6, 0) == 0);

    CHECK_THROWS_AS(max_sum(0), ValidationError);
    CHECK_THROWS_AS(min_sum_for_length(4, 5), ValidationError);
    CHECK_THROWS_AS(max_sum_for_length(4, -1), ValidationError);
}

TEST_CASE("length bound identities") {
    for (int n = 1; n <= 20; ++n) {
        for (int l = 0; l <= n; ++l) {
            const long long lo = min_sum_for_length(n, l);
            const long long hi = max_sum_for_length(n, l);
            CHECK(lo <= hi);
            if (l == 0 || l == n) {
                CHECK(lo == hi);
            } else {
                CHECK(lo < hi);
            }
            // A length-l subset and its complement split maxSum(n).
            CHECK(hi + min_sum_for_length(n, n - l) == max_sum(n));
        }
    }
}

TEST_CASE("encode examples") {
    CHECK(encode(ElementSubset({1, 2})) == 3);
    CHECK(encode(ElementSubset({2, 9, 10})) == 770);
    CHECK(encode(ElementSubset{}) == 0);

    CHECK(decode(3).elements() == std::vector<int>{1, 2});
    CHECK(decode(0).elements().empty());
    CHECK(decode(770).elements() == std::vector<int>{2, 9, 10});
}

TEST_CASE("subset validation and formatting") {
    CHECK_THROWS_AS(ElementSubset({2, 2}), ValidationError);
    CHECK_THROWS_AS(ElementSubset({3, 1}), ValidationError);
    CHECK_THROWS_AS(ElementSubset({0, 1}), ValidationError);
    CHECK_THROWS_AS(ElementSubset({65}).to_mask(), ValidationError);

    CHECK(ElementSubset({2, 9, 10}).to_string() == "{2,9,10}");
    CHECK(ElementSubset{}.to_string() == "{}");
    CHECK(ElementSubset({2, 9, 10}).sum() == 21);
    CHECK(ElementSubset({2, 9, 10}).length() == 3);
}

TEST_CASE("encode/decode round-trip is exhaustive for n <= 16") {
    for (int n : {1, 8, 16}) {
        std::set<Mask> seen;
        for (Mask m = 0; m < (Mask{1} << n); ++m) {
            const ElementSubset subset = decode(m);
            CHECK(subset.to_mask() == m);
            seen.insert(subset.to_mask());
        }
        CHECK(seen.size() == (std::uint64_t{1} << n));  // injective
    }
}

TEST_CASE("encode/decode round-trip holds for random 64-bit masks") {
    std::mt19937_64 rng(20240517);
    for (int trial = 0; trial < 2000; ++trial) {
        const Mask m = rng();
        CHECK(decode(m).to_mask() == m);
    }
}

TEST_CASE("registry answers contains exactly for inserted masks") {
    const int n = 12;
    std::mt19937_64 rng(7);
    VisitedRegistry registry(n);
    std::set<Mask> reference;

    for (int step = 0; step < 4000; ++step) {
        const Mask m = rng() & full_mask(n);
        const bool fresh = registry.insert(m);
        CHECK(fresh == !reference.count(m));  // idempotent
        reference.insert(m);
    }
    CHECK(registry.size() == reference.size());
    CHECK(registry.size() <= (std::uint64_t{1} << n));

    for (Mask m = 0; m <= full_mask(n); ++m) {
        CHECK(registry.contains(m) == (reference.count(m) > 0));
    }
}

TEST_CASE("registry refuses absurd widths") {
    CHECK_THROWS_AS(VisitedRegistry(60), ResourceError);
}

TEST_CASE("solution set well-formedness") {
    SolutionSet set(10, 15);
    set.add(encode(ElementSubset({5, 10})));
    set.add(encode(ElementSubset({1, 4, 10})));
    CHECK(set.well_formed());
    CHECK(set.size() == 2);

    SolutionSet dupes(10, 15);
    dupes.add(encode(ElementSubset({5, 10})));
    dupes.add(encode(ElementSubset({5, 10})));
    CHECK_FALSE(dupes.well_formed());

    SolutionSet wrong_sum(10, 15);
    wrong_sum.add(encode(ElementSubset({5, 9})));
    CHECK_FALSE(wrong_sum.well_formed());
}
