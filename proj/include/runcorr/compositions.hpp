#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "runcorr/dual_set.hpp"
#include "runcorr/error.hpp"

namespace runcorr {

/// An ordered partition of n, tagged with its position in the doubling order:
/// p_{2i}(n) bumps the first part of p_i(n-1), p_{2i+1}(n) prepends a 1.
struct Composition {
    std::vector<int> parts;
    int n = 0;
    std::uint64_t index = 0;

    std::size_t length() const noexcept { return parts.size(); }

    friend bool operator==(const Composition&, const Composition&) = default;
};

inline constexpr int max_materialized_order = 24;
inline constexpr int max_indexed_order = 63;

inline std::string to_string(const Composition& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.parts[i]);
    }
    return out + ")";
}

/// Number of compositions of n, 2^(n-1).
inline std::uint64_t composition_count(int n) {
    if (n < 1 || n > max_indexed_order) throw error(errc::invalid_input, "order out of range");
    return std::uint64_t{1} << (n - 1);
}

/// p_i(n) built straight from the bits of i: bit b drives the step from
/// order n-1-b to n-b (1 = prepend, 0 = bump).
inline Composition composition_at(int n, std::uint64_t i) {
    if (n < 1 || n > max_indexed_order) throw error(errc::invalid_input, "order out of range");
    if (i >= composition_count(n)) {
        throw error(errc::invalid_index, "index " + std::to_string(i) + " outside P(" + std::to_string(n) + ")");
    }
    // Built back to front so prepending is a push_back.
    std::vector<int> rev{1};
    for (int b = n - 2; b >= 0; --b) {
        if ((i >> b) & 1u) {
            rev.push_back(1);
        } else {
            ++rev.back();
        }
    }
    return Composition{std::vector<int>(rev.rbegin(), rev.rend()), n, i};
}

/// Position of `parts` in the doubling order of P(sum(parts)).
inline std::uint64_t index_of(const std::vector<int>& parts) {
    if (parts.empty()) throw error(errc::invalid_input, "empty composition");
    long long total = 0;
    for (int a : parts) {
        if (a < 1) throw error(errc::invalid_input, "composition parts must be positive");
        total += a;
    }
    if (total > max_indexed_order) throw error(errc::too_large, "composition total exceeds 63");
    std::vector<int> rest(parts.rbegin(), parts.rend());
    std::uint64_t index = 0;
    int bit = 0;
    while (!(rest.size() == 1 && rest.back() == 1)) {
        if (rest.back() == 1) {
            rest.pop_back();
            index |= std::uint64_t{1} << bit;
        } else {
            --rest.back();
        }
        ++bit;
    }
    return index;
}

inline std::uint64_t index_of(const Composition& p) { return index_of(p.parts); }

inline Composition make_composition(std::vector<int> parts) {
    const auto idx = index_of(parts);
    const int n = std::accumulate(parts.begin(), parts.end(), 0);
    return Composition{std::move(parts), n, idx};
}

/// P(n) in doubling order, generated inductively.
inline std::vector<Composition> compositions(int n) {
    if (n < 1) throw error(errc::invalid_input, "n must be positive");
    if (n > max_materialized_order) throw error(errc::too_large, "P(n) is only materialized for n <= 24");
    std::vector<Composition> layer{Composition{{1}, 1, 0}};
    for (int m = 2; m <= n; ++m) {
        std::vector<Composition> next;
        next.reserve(layer.size() * 2);
        for (const auto& p : layer) {
            Composition bumped = p;
            ++bumped.parts.front();
            bumped.n = m;
            bumped.index = 2 * p.index;
            next.push_back(std::move(bumped));

            Composition prepended{{1}, m, 2 * p.index + 1};
            prepended.parts.insert(prepended.parts.end(), p.parts.begin(), p.parts.end());
            next.push_back(std::move(prepended));
        }
        layer = std::move(next);
    }
    return layer;
}

inline Composition phi_I(const Composition& p) {
    if (p.n + 1 > max_indexed_order) throw error(errc::too_large, "order exceeds 63");
    Composition out = p;
    ++out.parts.front();
    out.n = p.n + 1;
    out.index = 2 * p.index;
    return out;
}

inline Composition phi_II(const Composition& p) {
    if (p.n + 1 > max_indexed_order) throw error(errc::too_large, "order exceeds 63");
    Composition out{{1}, p.n + 1, 2 * p.index + 1};
    out.parts.insert(out.parts.end(), p.parts.begin(), p.parts.end());
    return out;
}

inline Composition phi_I_inv(const Composition& p) {
    if (p.parts.empty() || p.parts.front() < 2) {
        throw error(errc::not_in_image, to_string(p) + " is not a bumped composition");
    }
    Composition out = p;
    --out.parts.front();
    out.n = p.n - 1;
    out.index = p.index / 2;
    return out;
}

inline Composition phi_II_inv(const Composition& p) {
    if (p.parts.size() < 2 || p.parts.front() != 1) {
        throw error(errc::not_in_image, to_string(p) + " does not start with a prepended 1");
    }
    Composition out{std::vector<int>(p.parts.begin() + 1, p.parts.end()), p.n - 1, p.index / 2};
    return out;
}

namespace detail {

inline void require_composition_of(const std::vector<int>& parts, long long t) {
    if (t < 1) throw error(errc::invalid_input, "order t must be positive");
    if (parts.empty()) throw error(errc::invalid_input, "empty composition");
    long long total = 0;
    for (int a : parts) {
        if (a < 1) throw error(errc::invalid_input, "composition parts must be positive");
        total += a;
    }
    if (total != t) throw error(errc::invalid_input, "composition does not sum to t");
}

/// Contribution sign of a composition with `length` parts.
inline int contribution_sign(std::size_t length) noexcept { return length % 2 == 1 ? 1 : -1; }

inline int c_value_unchecked(const std::vector<int>& parts, long long t, long long j) noexcept {
    std::size_t ell = parts.size() + 1;
    if (j < t) {
        long long prefix = 0;
        for (std::size_t k = 0; k < parts.size(); ++k) {
            prefix += parts[k];
            if (prefix >= j + 1) {
                ell = k + 1;
                break;
            }
        }
    }
    return ell % 2 == 0 ? contribution_sign(parts.size()) : 0;
}

}  // namespace detail

/// C_p(j): the contribution of a run of length j sitting behind an
/// occurrence of p+ to the weight difference at shift t.
inline int c_value(const std::vector<int>& parts, long long t, long long j) {
    detail::require_composition_of(parts, t);
    if (j < 1) throw error(errc::invalid_input, "j must be positive");
    return detail::c_value_unchecked(parts, t, j);
}

inline int c_value(const Composition& p, long long t, long long j) { return c_value(p.parts, t, j); }

/// Q(t) = {j : C_p(j) != 0} as a finite part below t plus an optional tail.
inline DualSet dual_set(const std::vector<int>& parts, int t) {
    detail::require_composition_of(parts, t);
    if (t > DualSet::max_order) throw error(errc::too_large, "dual sets are limited to t <= 64");
    DualSet d;
    d.t = t;
    d.sign = detail::contribution_sign(parts.size());
    for (int j = 1; j < t; ++j) {
        if (detail::c_value_unchecked(parts, t, j) != 0) d.below_mask |= std::uint64_t{1} << (j - 1);
    }
    d.has_tail = detail::c_value_unchecked(parts, t, t) != 0;
    return d;
}

inline DualSet dual_set(const Composition& p, int t) { return dual_set(p.parts, t); }

}  // namespace runcorr
