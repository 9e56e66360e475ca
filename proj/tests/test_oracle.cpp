#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ssp/distributions.hpp"
#include "ssp/oracle.hpp"

using namespace ssp;

namespace {

std::vector<std::vector<int>> as_elements(const SolutionSet& set) {
    std::vector<std::vector<int>> out;
    for (Mask m : set.sorted_masks()) out.push_back(decode(m).elements());
    return out;
}

}  // namespace

TEST_CASE("oracle_enumerate worked examples") {
    CHECK(as_elements(oracle_enumerate(4, 5)) ==
          std::vector<std::vector<int>>{{2, 3}, {1, 4}});  // mask order

    const SolutionSet phi = oracle_enumerate(5, 0);
    REQUIRE(phi.size() == 1);
    CHECK(phi.masks()[0] == 0);

    CHECK(oracle_enumerate(10, 15).size() == 20);
    CHECK(oracle_enumerate(16, 32).size() == 253);
    CHECK(oracle_enumerate(3, 99).empty());
}

TEST_CASE("oracle_all partitions the power set") {
    const OracleResult tiny = oracle_all(2);
    CHECK(tiny.masks_visited == 4);
    REQUIRE(tiny.by_sum.size() == 4);
    for (long long s = 0; s <= 3; ++s) CHECK(tiny.by_sum[s].size() == 1);
    CHECK(tiny.by_sum[2].masks()[0] == encode(ElementSubset({2})));

    const OracleResult one = oracle_all(1);
    CHECK(one.masks_visited == 2);
    CHECK(one.by_sum[0].size() == 1);
    CHECK(one.by_sum[1].size() == 1);

    for (int n = 1; n <= 12; ++n) {
        const OracleResult all = oracle_all(n);
        CHECK(all.masks_visited == (std::uint64_t{1} << n));
        std::uint64_t total = 0;
        for (const SolutionSet& set : all.by_sum) {
            CHECK(set.well_formed());
            total += set.size();
        }
        CHECK(total == (std::uint64_t{1} << n));
    }
}

TEST_CASE("oracle counts equal the sum distribution") {
    for (int n = 1; n <= 14; ++n) {
        const OracleResult all = oracle_all(n);
        const SumDistribution sd = SumDistribution::build(n);
        for (long long s = 0; s <= max_sum(n); ++s) {
            CHECK(BigNat(all.by_sum[s].size()) == sd.count(s));
        }
    }
}

TEST_CASE("scale guard") {
    CHECK_THROWS_AS(oracle_enumerate(26, 10), ScaleError);
    CHECK_THROWS_AS(oracle_all(26), ScaleError);
    // The override flag exists; n = 25 itself is within the guard.
    CHECK_NOTHROW(oracle_enumerate(20, 1));
}

TEST_CASE("the twenty subsets of (10, 15)") {
    const std::vector<std::vector<int>> expected = {
        {5, 10},      {1, 4, 10},      {2, 3, 10},   {6, 9},       {1, 5, 9},
        {2, 4, 9},    {1, 2, 3, 9},    {7, 8},       {1, 6, 8},    {2, 5, 8},
        {3, 4, 8},    {1, 2, 4, 8},    {2, 6, 7},    {3, 5, 7},    {1, 2, 5, 7},
        {1, 3, 4, 7}, {2, 3, 4, 6},    {1, 3, 5, 6}, {4, 5, 6},    {1, 2, 3, 4, 5},
    };
    SolutionSet reference(10, 15);
    for (const auto& subset : expected) reference.add(encode(ElementSubset(subset)));
    REQUIRE(reference.well_formed());
    CHECK(oracle_enumerate(10, 15).same_subsets(reference));
}
