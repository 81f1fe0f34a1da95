#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>

#include "runcorr/error.hpp"

namespace runcorr {

/// A subset of the positive integers that is finite below `t` and either
/// empty or everything from `t` upward. Members below t live in `below_mask`
/// (bit j-1 set <=> j is a member).
struct DualSet {
    static constexpr int max_order = 64;

    int t = 1;
    std::uint64_t below_mask = 0;
    bool has_tail = false;
    int sign = 1;

    bool contains(long long j) const noexcept {
        if (j < 1) return false;
        if (j >= t) return has_tail;
        return ((below_mask >> (j - 1)) & 1u) != 0;
    }

    /// Cofinite set {from, from+1, ...} expressed at order `order`.
    static DualSet at_least(int from, int order) {
        if (order < 1 || order > max_order || from < 1) {
            throw error(errc::invalid_input, "DualSet::at_least: bad bounds");
        }
        DualSet d;
        d.t = order;
        d.has_tail = true;
        for (int j = from; j < order; ++j) d.below_mask |= std::uint64_t{1} << (j - 1);
        return d;
    }

    /// Finite set of members, all required to be below `order`.
    static DualSet exactly(std::initializer_list<int> members, int order) {
        if (order < 1 || order > max_order) {
            throw error(errc::invalid_input, "DualSet::exactly: bad order");
        }
        DualSet d;
        d.t = order;
        for (int j : members) {
            if (j < 1 || j >= order) throw error(errc::invalid_input, "DualSet::exactly: member out of range");
            d.below_mask |= std::uint64_t{1} << (j - 1);
        }
        return d;
    }

    friend bool operator==(const DualSet& a, const DualSet& b) {
        return a.t == b.t && a.below_mask == b.below_mask && a.has_tail == b.has_tail && a.sign == b.sign;
    }
};

/// "{1,2} ∪ [4,∞)", "{2,3}", "[3,∞)" or "∅".
inline std::string to_string(const DualSet& d) {
    std::string finite;
    for (int j = 1; j < d.t; ++j) {
        if (!d.contains(j)) continue;
        if (!finite.empty()) finite += ',';
        finite += std::to_string(j);
    }
    std::string tail = d.has_tail ? "[" + std::to_string(d.t) + ",∞)" : "";
    if (!finite.empty() && !tail.empty()) return "{" + finite + "} ∪ " + tail;
    if (!finite.empty()) return "{" + finite + "}";
    if (!tail.empty()) return tail;
    return "∅";
}

}  // namespace runcorr
