#pragma once

// Shared helpers for the enumerator translation units. Not installed.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ssp/core.hpp"
#include "ssp/enumerators.hpp"

namespace ssp::detail {

inline Mask element_bit(int e) { return Mask{1} << (e - 1); }

struct DfsStats {
    std::uint64_t explored = 0;
    bool capped = false;
};

std::uint64_t to_count(const BigNat& value, const std::string& what);

void emit(EnumerationResult& result, const MaskSink& sink, Mask m);

void ordered_dfs(const std::vector<int>& elements, std::size_t first, long long remaining,
                 Mask prefix, DfsStats& stats, const std::function<void(Mask)>& emit_subset,
                 const RunLimits& limits);

ElementSubset extreme_subset(int n, long long s, int l, bool maximal);

}  // namespace ssp::detail
