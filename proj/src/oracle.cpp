#include "ssp/oracle.hpp"

namespace ssp {

namespace {

void check_scale(int n, bool allow_large) {
    require_enumerable(n);
    if (n > kOracleScaleGuard && !allow_large) {
        throw ScaleError("exhaustive pass over 2^" + std::to_string(n) +
                         " masks refused; pass the scale override to force it");
    }
}

}  // namespace

SolutionSet oracle_enumerate(int n, long long s, bool allow_large) {
    check_scale(n, allow_large);
    SolutionSet out(n, s);
    if (s < 0 || s > max_sum(n)) return out;
    const Mask end = full_mask(n);
    for (Mask m = 0;; ++m) {
        if (mask_sum(m) == s) out.add(m);
        if (m == end) break;
    }
    return out;
}

OracleResult oracle_all(int n, bool allow_large) {
    check_scale(n, allow_large);
    OracleResult result;
    result.n = n;
    const long long b = max_sum(n);
    result.by_sum.reserve(b + 1);
    for (long long s = 0; s <= b; ++s) result.by_sum.emplace_back(n, s);
    const Mask end = full_mask(n);
    for (Mask m = 0;; ++m) {
        result.by_sum[mask_sum(m)].add(m);
        ++result.masks_visited;
        if (m == end) break;
    }
    return result;
}

}  // namespace ssp
