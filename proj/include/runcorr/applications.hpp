#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "runcorr/error.hpp"
#include "runcorr/parallel.hpp"
#include "runcorr/run_formula.hpp"
#include "runcorr/sequence.hpp"

namespace runcorr {

// ---------------------------------------------------------------------------
// Blocks of equal runs

/// Maximal cyclic groups of consecutive runs of length exactly `run_length`.
struct BlockStructure {
    int run_length = 0;
    std::vector<int> blocks;
    bool covers_whole_cycle = false;

    std::int64_t count() const noexcept { return static_cast<std::int64_t>(blocks.size()); }
    std::int64_t singletons() const noexcept {
        return std::count(blocks.begin(), blocks.end(), 1);
    }
};

inline BlockStructure blocks(const RunWord& rw, int run_length) {
    BlockStructure out;
    out.run_length = run_length;
    const std::size_t g = rw.gamma();
    std::size_t anchor = g;
    for (std::size_t q = 0; q < g; ++q) {
        if (rw.lengths[q] != run_length) {
            anchor = q;
            break;
        }
    }
    if (anchor == g) {
        out.covers_whole_cycle = g > 0;
        if (g > 0) out.blocks.push_back(static_cast<int>(g));
        return out;
    }
    int current = 0;
    for (std::size_t step = 1; step <= g; ++step) {
        if (rw.at(anchor + step) == run_length) {
            ++current;
        } else if (current > 0) {
            out.blocks.push_back(current);
            current = 0;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Zero correlation zone

/// Largest T with C_s(w) == 0 for 1 <= w <= T (at most N-1).
inline int zcz_zone(const BinarySequence& s) {
    const auto profile = autocorr_profile(s);
    int zone = 0;
    while (static_cast<std::size_t>(zone + 1) < profile.size() && profile[static_cast<std::size_t>(zone + 1)] == 0) ++zone;
    return zone;
}

/// Run-structure criterion for C_s(1..D) == 0: gamma = N/2, N_s(R_1) = gamma/2
/// and gamma_P(t) = 0 for 2 <= t <= D-1. Items that do not constrain the
/// requested zone (item 2 for D = 1, item 3 for D <= 2) report true.
struct ZczCharacterization {
    bool gamma_is_half_period = false;
    bool singles_are_half_runs = false;
    bool gamma_p_vanishes = false;
    std::optional<int> first_nonzero_t;  // first t in [2, D-1] with gamma_P(t) != 0

    bool all() const noexcept { return gamma_is_half_period && singles_are_half_runs && gamma_p_vanishes; }
};

inline ZczCharacterization check_zcz_characterization(const BinarySequence& s, int zone) {
    const auto n = static_cast<long long>(s.period());
    if (zone < 1 || zone >= n) {
        throw error(errc::invalid_input, "zone must satisfy 1 <= D < N");
    }
    ZczCharacterization out;
    if (is_constant(s)) return out;
    const RunWord rw = decompose_runs(s);
    const auto g = static_cast<std::int64_t>(rw.gamma());
    out.gamma_is_half_period = 2 * g == n;
    out.singles_are_half_runs = zone < 2 || 2 * count_pattern(rw, RunPattern{1}) == g;
    out.gamma_p_vanishes = true;
    if (zone > 2) {
        const GammaTable table = gamma_table(rw, static_cast<std::size_t>(zone - 1));
        for (int t = 2; t <= zone - 1; ++t) {
            if (table.at(static_cast<std::size_t>(t)) != 0) {
                out.gamma_p_vanishes = false;
                out.first_nonzero_t = t;
                break;
            }
        }
    }
    return out;
}

enum class Verdict { holds, fails, not_applicable };

inline const char* to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::not_applicable: return "not_applicable";
    }
    return "?";
}

inline Verdict verdict(bool b) noexcept { return b ? Verdict::holds : Verdict::fails; }

/// The four run-count conditions deciding C_s(1) = ... = C_s(4) = 0, each
/// encoding one step C_s(k-1) = C_s(k), together with the counts behind them.
struct ZczReport {
    struct Counts {
        std::int64_t period = 0;
        std::int64_t gamma = 0;
        std::int64_t r1 = 0;
        std::int64_t r2 = 0;
        std::int64_t runs_at_least_3 = 0;
        std::int64_t runs_at_least_4 = 0;
        std::int64_t p1_blocks = 0;
        std::int64_t p1_singleton_blocks = 0;
        std::int64_t r1r2 = 0;
        std::int64_t r2r1 = 0;
    };

    int zone = 0;
    Counts counts;
    std::array<Verdict, 4> items{Verdict::fails, Verdict::fails, Verdict::fails, Verdict::fails};
    // sum_{j>=3} N_s(R_j) == N_s(P_1), the run-side of C_s(1) == C_s(3).
    Verdict runs_balance_blocks = Verdict::not_applicable;
    bool c1_equals_c3 = false;
    bool characterization_consistent = false;

    bool all_items_hold() const noexcept {
        for (auto v : items) {
            if (v != Verdict::holds) return false;
        }
        return true;
    }
};

inline ZczReport check_prop_5_3(const BinarySequence& s) {
    ZczReport r;
    const auto profile = autocorr_profile(s);
    r.zone = zcz_zone(s);
    r.counts.period = static_cast<std::int64_t>(s.period());
    auto c_at = [&](std::size_t w) { return profile[w % profile.size()]; };
    r.c1_equals_c3 = c_at(1) == c_at(3);

    if (is_constant(s)) {
        r.items = {Verdict::fails, Verdict::not_applicable, Verdict::not_applicable, Verdict::not_applicable};
        r.characterization_consistent = r.zone < 4;
        return r;
    }

    const RunWord rw = decompose_runs(s);
    auto& c = r.counts;
    c.gamma = static_cast<std::int64_t>(rw.gamma());
    for (int len : rw.lengths) {
        c.r1 += len == 1;
        c.r2 += len == 2;
        c.runs_at_least_3 += len >= 3;
        c.runs_at_least_4 += len >= 4;
    }
    c.r1r2 = count_pattern(rw, RunPattern{1, 2});
    c.r2r1 = count_pattern(rw, RunPattern{2, 1});
    const BlockStructure p1 = blocks(rw, 1);
    c.p1_blocks = p1.count();
    c.p1_singleton_blocks = p1.singletons();

    r.items[0] = verdict(2 * c.gamma == c.period);
    r.items[1] = verdict(2 * c.r1 == c.gamma);
    if (p1.covers_whole_cycle) {
        r.items[2] = Verdict::not_applicable;
        r.items[3] = Verdict::not_applicable;
        r.runs_balance_blocks = Verdict::not_applicable;
    } else {
        r.items[2] = verdict(2 * (c.r2 + c.p1_blocks) == c.gamma);
        r.items[3] = verdict(2 * (c.runs_at_least_4 + c.p1_blocks - c.p1_singleton_blocks + c.r2r1 + c.r1r2) == c.gamma);
        r.runs_balance_blocks = verdict(c.runs_at_least_3 == c.p1_blocks);
    }

    bool consistent = r.all_items_hold() == (r.zone >= 4);
    if (r.runs_balance_blocks != Verdict::not_applicable) {
        consistent = consistent && ((r.runs_balance_blocks == Verdict::holds) == r.c1_equals_c3);
    }
    r.characterization_consistent = consistent;
    return r;
}

// ---------------------------------------------------------------------------
// Exhaustive search over packed sequences (N <= 28)

inline constexpr int max_search_period = 28;

namespace detail {

// Packed form: bit (N-1-i) holds s_i, so integer order is string order and a
// left rotation of the integer is the shift T.
inline std::uint64_t rotate_left(std::uint64_t v, unsigned w, unsigned n) noexcept {
    w %= n;
    if (w == 0) return v;
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    return ((v << w) | (v >> (n - w))) & mask;
}

inline bool is_rotation_minimal(std::uint64_t v, unsigned n) noexcept {
    for (unsigned w = 1; w < n; ++w) {
        if (rotate_left(v, w, n) < v) return false;
    }
    return true;
}

/// C_s(w) == 0 for 1 <= w <= zone.
inline bool has_zero_zone(std::uint64_t v, unsigned n, unsigned zone) noexcept {
    for (unsigned w = 1; w <= zone; ++w) {
        if (2 * static_cast<unsigned>(std::popcount(v ^ rotate_left(v, w, n))) != n) return false;
    }
    return true;
}

inline BinarySequence unpack(std::uint64_t v, unsigned n) {
    std::vector<std::uint8_t> bits(n);
    for (unsigned i = 0; i < n; ++i) bits[i] = static_cast<std::uint8_t>((v >> (n - 1 - i)) & 1u);
    return BinarySequence(std::move(bits));
}

inline void check_search_period(int n) {
    if (n < 1) throw error(errc::invalid_input, "period must be positive");
    if (n > max_search_period) {
        throw error(errc::too_large, "exhaustive search is limited to N <= " + std::to_string(max_search_period));
    }
}

}  // namespace detail

/// All period-N sequences with C_s(1..D) == 0, one per rotation class (the
/// lexicographically least rotation), sorted. Complements are kept apart.
inline std::vector<BinarySequence> enumerate_zcz(int period, int zone, unsigned workers = 0) {
    detail::check_search_period(period);
    if (zone < 1) throw error(errc::invalid_input, "zone must be at least 1");
    const auto n = static_cast<unsigned>(period);
    const auto d = static_cast<unsigned>(zone);
    const auto packed = detail::chunked_collect<std::uint64_t>(
        std::uint64_t{1} << n, workers, detail::default_chunk, [&](std::uint64_t begin, std::uint64_t end, std::vector<std::uint64_t>& out) {
            for (std::uint64_t v = begin; v < end; ++v) {
                if (detail::has_zero_zone(v, n, d) && detail::is_rotation_minimal(v, n)) out.push_back(v);
            }
        });
    std::vector<BinarySequence> result;
    result.reserve(packed.size());
    for (auto v : packed) result.push_back(detail::unpack(v, n));
    return result;
}

struct HadamardSearch {
    int order = 0;
    std::vector<BinarySequence> sequences;  // exhaustive answer
    // Canonical sequences meeting gamma = N/2, N_s(R_1) = gamma/2 and
    // gamma_P(t) = 0 for 2 <= t <= N-2, found by a separate pass.
    std::vector<BinarySequence> run_condition_matches;
    bool run_conditions_applicable = true;
    bool skipped_by_divisibility = false;
    // N_s(R_2) != 0 for every found sequence when N != 4.
    bool r2_present = true;

    bool agrees() const { return !run_conditions_applicable || sequences == run_condition_matches; }
};

/// Canonical sequences meeting the run conditions for a circulant Hadamard
/// matrix, decided from run counts alone.
inline std::vector<BinarySequence> hadamard_run_candidates(int order, unsigned workers = 0) {
    detail::check_search_period(order);
    if (order < 2) throw error(errc::invalid_input, "run conditions need N >= 2");
    const auto n = static_cast<unsigned>(order);
    const auto packed = detail::chunked_collect<std::uint64_t>(
        std::uint64_t{1} << n, workers, detail::default_chunk, [&](std::uint64_t begin, std::uint64_t end, std::vector<std::uint64_t>& out) {
            for (std::uint64_t v = begin; v < end; ++v) {
                // Run boundaries: positions where s_i != s_{i+1}.
                const auto runs = static_cast<unsigned>(std::popcount(v ^ detail::rotate_left(v, 1, n)));
                if (2 * runs != n || !detail::is_rotation_minimal(v, n)) continue;
                if (check_zcz_characterization(detail::unpack(v, n), order - 1).all()) out.push_back(v);
            }
        });
    std::vector<BinarySequence> result;
    for (auto v : packed) result.push_back(detail::unpack(v, n));
    return result;
}

inline HadamardSearch hadamard_search(int order, unsigned workers = 0) {
    detail::check_search_period(order);
    HadamardSearch out;
    out.order = order;
    if (order > 1 && order % 4 != 0) {
        out.skipped_by_divisibility = true;
        return out;
    }
    if (order == 1) {
        // No out-of-phase shifts: both symbols qualify, and there are no runs.
        out.sequences = {parse_sequence("0"), parse_sequence("1")};
        out.run_conditions_applicable = false;
        return out;
    }
    out.sequences = enumerate_zcz(order, order - 1, workers);
    out.run_condition_matches = hadamard_run_candidates(order, workers);
    if (order != 4) {
        for (const auto& s : out.sequences) {
            if (count_pattern(decompose_runs(s), RunPattern{2}) == 0) out.r2_present = false;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cyclic difference sets

struct DiffSetSpec {
    int v = 0;
    std::vector<int> elements;
    int k = 0;
    int lambda = 0;
};

inline void validate(const DiffSetSpec& d) {
    if (d.v < 1) throw error(errc::invalid_input, "group order v must be positive");
    if (d.v > 1'000'000) throw error(errc::too_large, "group order too large");
    if (d.k != static_cast<int>(d.elements.size())) throw error(errc::invalid_input, "k must equal the number of elements");
    if (d.lambda < 0) throw error(errc::invalid_input, "lambda must be non-negative");
    std::set<int> seen;
    for (int e : d.elements) {
        if (e < 0 || e >= d.v) throw error(errc::invalid_input, "element " + std::to_string(e) + " outside Z_v");
        if (!seen.insert(e).second) throw error(errc::invalid_input, "duplicate element " + std::to_string(e));
    }
}

/// Characteristic sequence: s_i = 1 iff i is in the set.
inline BinarySequence sequence_from_difference_set(const DiffSetSpec& d) {
    validate(d);
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(d.v), 0);
    for (int e : d.elements) bits[static_cast<std::size_t>(e)] = 1;
    return BinarySequence(std::move(bits));
}

struct DiffSetVerdict {
    bool valid = false;
    bool degenerate = false;  // characteristic sequence is constant (k = 0 or k = v)
    std::int64_t expected_out_of_phase = 0;  // v - 4(k - lambda)
    std::vector<int> representations;  // representations[g] for g in Z_v
};

inline DiffSetVerdict analyze_difference_set(const DiffSetSpec& d) {
    validate(d);
    DiffSetVerdict out;
    out.degenerate = d.k == 0 || d.k == d.v;
    out.expected_out_of_phase = static_cast<std::int64_t>(d.v) - 4 * (static_cast<std::int64_t>(d.k) - d.lambda);
    out.representations.assign(static_cast<std::size_t>(d.v), 0);
    for (int a : d.elements) {
        for (int b : d.elements) {
            if (a != b) ++out.representations[static_cast<std::size_t>(((a - b) % d.v + d.v) % d.v)];
        }
    }
    out.valid = std::all_of(out.representations.begin() + 1, out.representations.end(),
                            [&](int c) { return c == d.lambda; });
    return out;
}

inline bool verify_difference_set(const DiffSetSpec& d) { return analyze_difference_set(d).valid; }

}  // namespace runcorr
