#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "runcorr/applications.hpp"
#include "runcorr/parallel.hpp"
#include "runcorr/run_formula.hpp"
#include "runcorr/sequence.hpp"

// Oracle-equivalence harness: checks the run-series expansion against the
// definition, plus the recurrences between gamma_P, gamma_{P,k} and gamma^k_P.

namespace runcorr {

struct VerifyOptions {
    int identity_max_t = 10;  // recurrence identities are exponential in t
};

struct VerifyOutcome {
    std::int64_t assertions = 0;
    std::optional<std::string> failure;

    bool ok() const noexcept { return !failure.has_value(); }
};

/// gamma^k_P(t) term lists for 2 <= t <= max_t, 0 <= k <= t-1, built once.
class GammaKPlan {
public:
    explicit GammaKPlan(int max_t) : max_t_(max_t) {
        for (int t = 2; t <= max_t; ++t) {
            for (int k = 0; k <= t - 1; ++k) terms_[{t, k}] = gamma_P_k_terms(t, k);
        }
    }

    int max_t() const noexcept { return max_t_; }
    std::int64_t evaluate(const RunWord& rw, int t, int k) const { return gamma_P_k(rw, terms_.at({t, k})); }

private:
    int max_t_;
    std::map<std::pair<int, int>, std::vector<GammaKTerm>> terms_;
};

namespace detail {

class Checker {
public:
    explicit Checker(VerifyOutcome& out) : out_(out) {}

    template <class A, class B>
    bool equal(const A& lhs, const B& rhs, const std::string& what) {
        ++out_.assertions;
        if (lhs == rhs) return true;
        using std::to_string;
        if (!out_.failure) out_.failure = what + ": " + to_string(lhs) + " != " + to_string(rhs);
        return false;
    }

    bool failed() const noexcept { return out_.failure.has_value(); }

private:
    VerifyOutcome& out_;
};

}  // namespace detail

/// Runs every formula-vs-oracle and recurrence check for one sequence.
inline VerifyOutcome verify_sequence(const BinarySequence& s, const GammaKPlan& plan) {
    VerifyOutcome out;
    detail::Checker check(out);
    const auto n = static_cast<long long>(s.period());
    if (is_constant(s)) {
        const auto profile = autocorr_profile(s);
        for (long long w = 0; w < n; ++w) {
            check.equal(profile[static_cast<std::size_t>(w)], autocorr_bruteforce(s, w), "C_s(" + std::to_string(w) + ")");
        }
        return out;
    }

    const RunWord rw = decompose_runs(s);
    const auto g = static_cast<std::int64_t>(rw.gamma());
    check.equal(shifted_distance(s, 1), g, "wt(s+Ts) vs gamma");
    check.equal(expand_runs(rw), s, "run word expansion");

    // Expansion vs definition for every shift.
    const auto profile = autocorr_profile(s);
    for (long long t = 1; t <= n && !check.failed(); ++t) {
        const std::int64_t oracle_c = n - 2 * shifted_distance(s, t);
        const std::int64_t oracle_diff = shifted_distance(s, t) - shifted_distance(s, t - 1);
        const std::string at = "(" + std::to_string(t) + ")";
        check.equal(autocorr_via_runs(rw, s.period(), t), oracle_c, "C_s" + at);
        check.equal(wt_diff_via_runs(rw, t), oracle_diff, "wt difference" + at);
        if (t < n) check.equal(profile[static_cast<std::size_t>(t)], oracle_c, "profile" + at);
        if (t >= 2 && t <= 4) check.equal(closed_form_wt_diff(rw, static_cast<int>(t)), oracle_diff, "closed form" + at);
    }

    const int max_t = std::min<long long>(plan.max_t(), n);
    for (int t = 2; t <= max_t && !check.failed(); ++t) {
        const std::string at = "(t=" + std::to_string(t);
        std::vector<std::int64_t> upper(static_cast<std::size_t>(t));  // gamma^k_P(t), k = 0..t-1
        for (int k = 0; k < t; ++k) upper[static_cast<std::size_t>(k)] = plan.evaluate(rw, t, k);

        check.equal(upper[0], wt_diff_via_runs(rw, t), "gamma^0_P vs weight difference " + at + ")");
        check.equal(upper[0], upper[1] + gamma_P(rw, t - 1), "gamma^0 = gamma^1 + gamma_P(t-1) " + at + ")");

        for (int k = 1; k <= t - 2; ++k) {
            std::int64_t rhs = upper[static_cast<std::size_t>(k + 1)] + gamma_P(rw, t - k - 1);
            for (int j = 1; j <= k; ++j) rhs += gamma_P_append(rw, t - k - 1, j);
            check.equal(upper[static_cast<std::size_t>(k)], rhs, "gamma^k recurrence " + at + ",k=" + std::to_string(k) + ")");
        }

        // Unrolled recurrence for every depth k.
        for (int k = 0; k <= t - 1; ++k) {
            std::int64_t rhs = upper[static_cast<std::size_t>(k)];
            for (int j = t - k; j <= t - 1; ++j) rhs += gamma_P(rw, j);
            for (int j = t - k; j <= t - 2; ++j) {
                for (int l = 1; l <= t - j - 1; ++l) rhs += gamma_P_append(rw, j, l);
            }
            check.equal(upper[0], rhs, "unrolled recurrence " + at + ",k=" + std::to_string(k) + ")");
        }

        std::int64_t split = -count_pattern(rw, RunPattern{t});
        for (int i = 1; i < t; ++i) split += gamma_P_append(rw, i, t - i);
        check.equal(gamma_P(rw, t), split, "gamma_P split by last run " + at + ")");

        std::int64_t long_runs = g;
        for (int i = 1; i < t; ++i) long_runs -= count_pattern(rw, RunPattern{i});
        check.equal(upper[static_cast<std::size_t>(t - 1)], long_runs, "gamma^{t-1}_P " + at + ")");
    }
    return out;
}

inline VerifyOutcome verify_sequence(const BinarySequence& s, const VerifyOptions& options = {}) {
    return verify_sequence(s, GammaKPlan(std::min<int>(options.identity_max_t, static_cast<int>(s.period()))));
}

struct VerifySummary {
    std::int64_t sequences = 0;
    std::int64_t assertions = 0;
    std::optional<std::pair<BinarySequence, std::string>> first_failure;
};

inline constexpr int max_exhaustive_verify_period = 32;
inline constexpr std::uint64_t verify_chunk = 64;

/// Every non-constant sequence of the given period, in packed order.
inline VerifySummary verify_exhaustive(int period, const VerifyOptions& options = {}, unsigned workers = 0) {
    if (period < 2) throw error(errc::invalid_input, "period must be at least 2");
    if (period > max_exhaustive_verify_period) {
        throw error(errc::too_large, "exhaustive verification is limited to N <= " + std::to_string(max_exhaustive_verify_period));
    }
    const GammaKPlan plan(std::min(options.identity_max_t, period));
    const auto n = static_cast<unsigned>(period);
    struct Chunk {
        std::int64_t sequences = 0;
        std::int64_t assertions = 0;
        std::optional<std::pair<BinarySequence, std::string>> failure;
    };
    const std::uint64_t total = (std::uint64_t{1} << n) - 2;
    const auto chunks = detail::chunked_collect<Chunk>(total, workers, verify_chunk, [&](std::uint64_t begin, std::uint64_t end, std::vector<Chunk>& out) {
        Chunk c;
        for (std::uint64_t i = begin; i < end; ++i) {
            const BinarySequence s = detail::unpack(i + 1, n);
            const VerifyOutcome r = verify_sequence(s, plan);
            ++c.sequences;
            c.assertions += r.assertions;
            if (r.failure && !c.failure) c.failure.emplace(s, *r.failure);
        }
        out.push_back(std::move(c));
    });
    VerifySummary summary;
    for (const auto& c : chunks) {
        summary.sequences += c.sequences;
        summary.assertions += c.assertions;
        if (c.failure && !summary.first_failure) summary.first_failure = c.failure;
    }
    return summary;
}

/// Non-constant random sequences drawn from mt19937_64(seed); the draw order
/// is fixed before any work is split across threads.
inline std::vector<BinarySequence> random_sequences(int period, std::int64_t samples, std::uint64_t seed) {
    if (period < 2) throw error(errc::invalid_input, "period must be at least 2");
    std::mt19937_64 rng(seed);
    std::vector<BinarySequence> out;
    out.reserve(static_cast<std::size_t>(samples));
    while (static_cast<std::int64_t>(out.size()) < samples) {
        std::vector<std::uint8_t> bits(static_cast<std::size_t>(period));
        std::uint64_t word = 0;
        for (int i = 0; i < period; ++i) {
            if (i % 64 == 0) word = rng();
            bits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((word >> (i % 64)) & 1u);
        }
        BinarySequence s(std::move(bits));
        if (!is_constant(s)) out.push_back(std::move(s));
    }
    return out;
}

inline VerifySummary verify_batch(const std::vector<BinarySequence>& batch, const VerifyOptions& options = {},
                                  unsigned workers = 0) {
    int max_period = 0;
    for (const auto& s : batch) max_period = std::max(max_period, static_cast<int>(s.period()));
    const GammaKPlan plan(std::min(options.identity_max_t, max_period));
    struct Chunk {
        std::int64_t assertions = 0;
        std::optional<std::pair<BinarySequence, std::string>> failure;
    };
    const auto chunks = detail::chunked_collect<Chunk>(batch.size(), workers, verify_chunk, [&](std::uint64_t begin, std::uint64_t end, std::vector<Chunk>& out) {
        Chunk c;
        for (std::uint64_t i = begin; i < end; ++i) {
            const VerifyOutcome r = verify_sequence(batch[i], plan);
            c.assertions += r.assertions;
            if (r.failure && !c.failure) c.failure.emplace(batch[i], *r.failure);
        }
        out.push_back(std::move(c));
    });
    VerifySummary summary;
    summary.sequences = static_cast<std::int64_t>(batch.size());
    for (const auto& c : chunks) {
        summary.assertions += c.assertions;
        if (c.failure && !summary.first_failure) summary.first_failure = c.failure;
    }
    return summary;
}

}  // namespace runcorr
