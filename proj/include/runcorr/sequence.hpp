#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "runcorr/dual_set.hpp"
#include "runcorr/error.hpp"

namespace runcorr {

/// One period of a cyclic binary sequence. Indexing through bit() is cyclic.
class BinarySequence {
public:
    explicit BinarySequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        if (bits_.empty()) throw error(errc::invalid_input, "sequence period must be at least 1");
        for (auto b : bits_) {
            if (b > 1) throw error(errc::invalid_input, "sequence symbols must be 0 or 1");
        }
    }

    std::size_t period() const noexcept { return bits_.size(); }

    int bit(long long i) const noexcept {
        const auto n = static_cast<long long>(bits_.size());
        long long r = i % n;
        if (r < 0) r += n;
        return bits_[static_cast<std::size_t>(r)];
    }

    std::span<const std::uint8_t> bits() const noexcept { return bits_; }

    friend bool operator==(const BinarySequence&, const BinarySequence&) = default;
    friend auto operator<=>(const BinarySequence&, const BinarySequence&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

inline std::string to_string(const BinarySequence& s) {
    std::string out;
    out.reserve(s.period());
    for (auto b : s.bits()) out += static_cast<char>('0' + b);
    return out;
}

/// Cyclic word of run lengths. lengths[0] is the run holding position 0 of
/// the originating sequence, start_symbol is that run's symbol, and position 0
/// sits start_offset symbols into it.
struct RunWord {
    std::vector<int> lengths;
    int start_symbol = 0;
    int start_offset = 0;

    std::size_t gamma() const noexcept { return lengths.size(); }
    std::size_t period() const noexcept {
        return static_cast<std::size_t>(std::accumulate(lengths.begin(), lengths.end(), 0LL));
    }
    int at(std::size_t q) const noexcept { return lengths[q % lengths.size()]; }

    friend bool operator==(const RunWord&, const RunWord&) = default;
};

/// A run-string type R_{i1}...R_{il} used as a count query.
struct RunPattern {
    std::vector<int> lengths;

    RunPattern() = default;
    explicit RunPattern(std::vector<int> l) : lengths(std::move(l)) {
        if (lengths.empty()) throw error(errc::invalid_input, "run pattern must have at least one run");
        for (int v : lengths) {
            if (v < 1) throw error(errc::invalid_input, "run lengths must be positive");
        }
    }
    RunPattern(std::initializer_list<int> l) : RunPattern(std::vector<int>(l)) {}
};

inline BinarySequence parse_sequence(std::string_view text) {
    if (text.empty()) throw error(errc::invalid_input, "empty sequence", 0);
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c != '0' && c != '1') {
            throw error(errc::invalid_input,
                        "unexpected character '" + std::string(1, c) + "' at position " + std::to_string(i), i);
        }
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BinarySequence(std::move(bits));
}

inline std::size_t weight(const BinarySequence& s) noexcept {
    return static_cast<std::size_t>(std::count(s.bits().begin(), s.bits().end(), std::uint8_t{1}));
}

inline bool is_constant(const BinarySequence& s) noexcept {
    const auto w = weight(s);
    return w == 0 || w == s.period();
}

/// T^w: result.bit(i) == s.bit(i + w). Negative w shifts right.
inline BinarySequence shift(const BinarySequence& s, long long w) {
    std::vector<std::uint8_t> out(s.period());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::uint8_t>(s.bit(static_cast<long long>(i) + w));
    return BinarySequence(std::move(out));
}

inline BinarySequence bitwise_xor(const BinarySequence& s, const BinarySequence& u) {
    if (s.period() != u.period()) {
        throw error(errc::period_mismatch,
                    "periods " + std::to_string(s.period()) + " and " + std::to_string(u.period()) + " differ");
    }
    std::vector<std::uint8_t> out(s.period());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = s.bits()[i] ^ u.bits()[i];
    return BinarySequence(std::move(out));
}

/// wt(s XOR T^w s) for any integer w.
inline std::int64_t shifted_distance(const BinarySequence& s, long long w) noexcept {
    std::int64_t d = 0;
    const auto n = static_cast<long long>(s.period());
    for (long long i = 0; i < n; ++i) d += s.bit(i) != s.bit(i + w);
    return d;
}

/// C_s(w) = N - 2 wt(s XOR T^w s), straight from the definition.
inline std::int64_t autocorr_bruteforce(const BinarySequence& s, long long w) {
    const auto n = static_cast<long long>(s.period());
    if (w < 0 || w >= n) {
        throw error(errc::invalid_shift, "shift " + std::to_string(w) + " outside [0, " + std::to_string(n - 1) + "]");
    }
    return n - 2 * shifted_distance(s, w);
}

/// Cyclic run decomposition. A prefix and suffix carrying the same symbol
/// form a single run.
inline RunWord decompose_runs(const BinarySequence& s) {
    if (is_constant(s)) throw error(errc::degenerate_sequence, "constant sequence has no run boundaries");
    const auto n = static_cast<long long>(s.period());

    // Walk back from position 0 to the start of its run.
    long long start = 0;
    while (s.bit(start - 1) == s.bit(start)) --start;

    RunWord rw;
    rw.start_symbol = s.bit(0);
    rw.start_offset = static_cast<int>(-start);
    int current = 1;
    for (long long i = start + 1; i < start + n; ++i) {
        if (s.bit(i) == s.bit(i - 1)) {
            ++current;
        } else {
            rw.lengths.push_back(current);
            current = 1;
        }
    }
    rw.lengths.push_back(current);
    return rw;
}

/// Inverse of decompose_runs.
inline BinarySequence expand_runs(const RunWord& rw) {
    if (rw.lengths.size() < 2 || rw.lengths.size() % 2 != 0) {
        throw error(errc::invalid_input, "run word needs an even number (>= 2) of runs");
    }
    if (rw.start_symbol != 0 && rw.start_symbol != 1) throw error(errc::invalid_input, "start symbol must be 0 or 1");
    std::vector<std::uint8_t> linear;
    int sym = rw.start_symbol;
    for (int len : rw.lengths) {
        if (len < 1) throw error(errc::invalid_input, "run lengths must be positive");
        linear.insert(linear.end(), static_cast<std::size_t>(len), static_cast<std::uint8_t>(sym));
        sym ^= 1;
    }
    if (rw.start_offset < 0 || rw.start_offset >= rw.lengths.front()) {
        throw error(errc::invalid_input, "start offset must lie inside the first run");
    }
    return shift(BinarySequence(std::move(linear)), rw.start_offset);
}

/// Run-word literal: "<start symbol>:<len>,<len>,...".
inline RunWord parse_run_word(std::string_view text) {
    const auto colon = text.find(':');
    if (colon != 1 || (text[0] != '0' && text[0] != '1')) {
        throw error(errc::invalid_input, "run word must look like '1:2,1,1'", 0);
    }
    RunWord rw;
    rw.start_symbol = text[0] - '0';
    std::size_t pos = 2;
    while (true) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        if (end == pos) throw error(errc::invalid_input, "empty run length at position " + std::to_string(pos), pos);
        long long value = 0;
        for (std::size_t i = pos; i < end; ++i) {
            if (text[i] < '0' || text[i] > '9') {
                throw error(errc::invalid_input, "unexpected character at position " + std::to_string(i), i);
            }
            value = value * 10 + (text[i] - '0');
            if (value > 1'000'000'000) throw error(errc::invalid_input, "run length too large", i);
        }
        if (value < 1) throw error(errc::invalid_input, "run lengths must be positive", pos);
        rw.lengths.push_back(static_cast<int>(value));
        if (end == text.size()) break;
        pos = end + 1;
    }
    if (rw.lengths.size() % 2 != 0) {
        throw error(errc::invalid_input, "run word needs an even number of runs", text.size());
    }
    return rw;
}

inline std::string to_string(const RunWord& rw) {
    std::string out = std::to_string(rw.start_symbol) + ":";
    for (std::size_t i = 0; i < rw.lengths.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(rw.lengths[i]);
    }
    return out;
}

/// N_s(R_{i1}...R_{il}): start positions q in [0, gamma) whose following runs
/// match the pattern. Matching wraps the cyclic word as often as needed.
inline std::int64_t count_pattern(const RunWord& rw, std::span<const int> pattern) {
    const std::size_t g = rw.gamma();
    if (g == 0 || pattern.empty()) return 0;
    std::int64_t count = 0;
    for (std::size_t q = 0; q < g; ++q) {
        bool match = true;
        for (std::size_t k = 0; k < pattern.size() && match; ++k) match = rw.at(q + k) == pattern[k];
        count += match;
    }
    return count;
}

inline std::int64_t count_pattern(const RunWord& rw, const RunPattern& p) {
    return count_pattern(rw, std::span<const int>(p.lengths));
}

/// N_s(R^{B+} x R_A): first run at least `first_min`, then `middle` exactly,
/// then a run whose length lies in `last_in`.
inline std::int64_t count_pattern_extended(const RunWord& rw, int first_min, std::span<const int> middle,
                                           const DualSet& last_in) {
    const std::size_t g = rw.gamma();
    std::int64_t count = 0;
    for (std::size_t q = 0; q < g; ++q) {
        if (rw.at(q) < first_min) continue;
        bool match = true;
        for (std::size_t k = 0; k < middle.size() && match; ++k) match = rw.at(q + 1 + k) == middle[k];
        if (match && last_in.contains(rw.at(q + 1 + middle.size()))) ++count;
    }
    return count;
}

/// Lexicographically least rotation (two-pointer minimal rotation, O(N)).
inline BinarySequence canonical_rotation(const BinarySequence& s) {
    const auto bits = s.bits();
    const std::size_t n = bits.size();
    std::size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
        const auto a = bits[(i + k) % n];
        const auto b = bits[(j + k) % n];
        if (a == b) {
            ++k;
            continue;
        }
        if (a > b) {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if (i == j) ++j;
        k = 0;
    }
    return shift(s, static_cast<long long>(std::min(i, j)));
}

}  // namespace runcorr
