#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "runcorr/compositions.hpp"
#include "runcorr/error.hpp"
#include "runcorr/sequence.hpp"

// Autocorrelation from run structure.
//
// Every quantity here is a signed sum of run-string counts N_s(R_{i1}...R_{il})
// over compositions of t. Instead of visiting all 2^(t-1) compositions, the
// sums walk the run substrings that actually occur: from each of the gamma
// cyclic start runs, extend forward until the accumulated length reaches t.
// Each occurrence of a composition p is visited exactly once, so the result is
// the composition sum rearranged.

namespace runcorr {

namespace detail {

inline int parity_sign(std::size_t ell) noexcept { return ell % 2 == 0 ? 1 : -1; }

}  // namespace detail

/// gamma_P(t) = sum over p in P(t) of (-1)^|p| N_s(R^p).
inline std::int64_t gamma_P(const RunWord& rw, long long t) {
    if (t < 1) throw error(errc::invalid_input, "t must be positive");
    std::int64_t total = 0;
    for (std::size_t q = 0; q < rw.gamma(); ++q) {
        long long len = 0;
        for (std::size_t ell = 1;; ++ell) {
            len += rw.at(q + ell - 1);
            if (len == t) total += detail::parity_sign(ell);
            if (len >= t) break;
        }
    }
    return total;
}

/// gamma_{P(t),k} = sum over p in P(t) of (-1)^(|p|+1) N_s(R^(p,k)).
inline std::int64_t gamma_P_append(const RunWord& rw, long long t, long long k) {
    if (t < 1 || k < 1) throw error(errc::invalid_input, "t and k must be positive");
    std::int64_t total = 0;
    for (std::size_t q = 0; q < rw.gamma(); ++q) {
        long long len = 0;
        for (std::size_t ell = 1;; ++ell) {
            len += rw.at(q + ell - 1);
            if (len == t && rw.at(q + ell) == k) total += detail::parity_sign(ell + 1);
            if (len >= t) break;
        }
    }
    return total;
}

/// One summand of gamma^k_P(t): sign * N_s(R_{>=first_min} R^middle x R_last_in).
struct GammaKTerm {
    int sign = 1;
    int first_min = 1;
    std::vector<int> middle;
    DualSet last_in;
};

/// The terms of gamma^k_P(t). They depend only on (t, k), so callers that
/// evaluate many sequences can build them once.
inline std::vector<GammaKTerm> gamma_P_k_terms(int t, int k) {
    if (t < 2 || k < 0 || k > t - 1) throw error(errc::invalid_input, "gamma_P_k needs t >= 2 and 0 <= k <= t-1");
    if (t > max_indexed_order) throw error(errc::too_large, "gamma_P_k is limited to t <= 63");
    const int base = t - k;
    const std::uint64_t count = composition_count(base);
    std::vector<GammaKTerm> terms;
    terms.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        const Composition p = composition_at(base, i);
        GammaKTerm term;
        term.sign = detail::parity_sign(p.length() + 1);
        term.first_min = p.parts.front();
        term.middle.assign(p.parts.begin() + 1, p.parts.end());
        term.last_in = dual_set(composition_at(t, i << k), t);
        terms.push_back(std::move(term));
    }
    return terms;
}

inline std::int64_t gamma_P_k(const RunWord& rw, std::span<const GammaKTerm> terms) {
    std::int64_t total = 0;
    for (const auto& term : terms) {
        total += term.sign * count_pattern_extended(rw, term.first_min, term.middle, term.last_in);
    }
    return total;
}

/// gamma^k_P(t) = sum_i (-1)^(|p_i(t-k)|+1) N_s(R^{p_i^+(t-k)} x R_{Q_{2^k i}(t)}),
/// i ranging over the 2^(t-k-1) compositions of t-k. Exponential in t - k;
/// meant for proof-level checks on small t.
inline std::int64_t gamma_P_k(const RunWord& rw, int t, int k) { return gamma_P_k(rw, gamma_P_k_terms(t, k)); }

/// gamma_P(1..T), computed in one sweep over the run word.
struct GammaTable {
    std::int64_t gamma = 0;
    std::size_t period = 0;
    std::vector<std::int64_t> values;  // values[t-1] == gamma_P(t)

    std::int64_t at(std::size_t t) const { return values.at(t - 1); }
    std::size_t max_order() const noexcept { return values.size(); }
};

inline GammaTable gamma_table(const RunWord& rw, std::size_t max_t) {
    GammaTable table;
    table.gamma = static_cast<std::int64_t>(rw.gamma());
    table.period = rw.period();
    table.values.assign(max_t, 0);
    const auto limit = static_cast<long long>(max_t);
    for (std::size_t q = 0; q < rw.gamma(); ++q) {
        long long len = 0;
        for (std::size_t ell = 1;; ++ell) {
            len += rw.at(q + ell - 1);
            if (len > limit) break;
            table.values[static_cast<std::size_t>(len - 1)] += detail::parity_sign(ell);
        }
    }
    return table;
}

/// wt(s + T^t s) - wt(s + T^{t-1} s) = gamma + 2 sum_{t'<t} gamma_P(t').
inline std::int64_t wt_diff_via_runs(const RunWord& rw, long long t) {
    if (t < 1) throw error(errc::invalid_input, "t must be positive");
    const GammaTable table = gamma_table(rw, static_cast<std::size_t>(t - 1));
    std::int64_t diff = table.gamma;
    for (auto v : table.values) diff += 2 * v;
    return diff;
}

/// C_s(t) = N - 2 (gamma t + 2 sum_{t'<t} (t - t') gamma_P(t')), for 1 <= t <= N.
inline std::int64_t autocorr_via_runs(const RunWord& rw, std::size_t period, long long t) {
    const auto n = static_cast<long long>(period);
    if (t < 1 || t > n) {
        throw error(errc::invalid_shift, "shift " + std::to_string(t) + " outside [1, " + std::to_string(n) + "]");
    }
    const GammaTable table = gamma_table(rw, static_cast<std::size_t>(t - 1));
    std::int64_t wt = table.gamma * t;
    for (long long tp = 1; tp < t; ++tp) wt += 2 * (t - tp) * table.at(static_cast<std::size_t>(tp));
    return n - 2 * wt;
}

/// C_s(0..N-1) from a single gamma table; constant sequences fall back to the
/// definition (C_s(w) == N everywhere).
inline std::vector<std::int64_t> autocorr_profile(const BinarySequence& s) {
    const std::size_t n = s.period();
    const auto nn = static_cast<std::int64_t>(n);
    if (is_constant(s)) return std::vector<std::int64_t>(n, nn);
    const RunWord rw = decompose_runs(s);
    const GammaTable table = gamma_table(rw, n - 1);
    std::vector<std::int64_t> profile(n);
    profile[0] = nn;
    std::int64_t prefix = 0;  // sum_{t'<t} gamma_P(t')
    std::int64_t wt = 0;
    for (std::size_t t = 1; t < n; ++t) {
        if (t > 1) prefix += table.at(t - 1);
        wt += table.gamma + 2 * prefix;
        profile[t] = nn - 2 * wt;
    }
    return profile;
}

/// Explicit small-shift weight differences (t = 2, 3, 4).
inline std::int64_t closed_form_wt_diff(const RunWord& rw, int t) {
    const auto g = static_cast<std::int64_t>(rw.gamma());
    const auto n = [&rw](std::initializer_list<int> p) { return count_pattern(rw, std::span<const int>(p.begin(), p.size())); };
    switch (t) {
        case 2:
            return g - 2 * n({1});
        case 3:
            return g - 2 * n({1}) - 2 * n({2}) + 2 * n({1, 1});
        case 4:
            return g - 2 * (n({1}) + n({2}) + n({3})) + 2 * (n({1, 1}) + n({1, 2}) + n({2, 1})) - 2 * n({1, 1, 1});
        default:
            throw error(errc::invalid_input, "closed forms exist for t = 2, 3, 4 only");
    }
}

}  // namespace runcorr
