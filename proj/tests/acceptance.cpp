// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "runcorr/runcorr.hpp"

using namespace runcorr;

namespace {

const char* const kTableOne = "110100000011001010111100";
const char* const kPeriod36 = "000101001000111110011010110111000001";
const char* const kPeriod76 = "0011000001000010010111100010111010110001001111101111011010000111010001010011";

// Collects the first few mismatches of a criterion.
class Check {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (ok) return;
        ++failures_;
        if (notes_.size() < 3) notes_.push_back(what);
    }
    template <class A, class B>
    void equal(const A& a, const B& b, const std::string& what) {
        std::ostringstream os;
        os << what << ": got " << a << ", want " << b;
        expect(a == b, os.str());
    }

    std::int64_t checks() const { return checks_; }
    std::int64_t failures() const { return failures_; }
    const std::vector<std::string>& notes() const { return notes_; }

private:
    std::int64_t checks_ = 0;
    std::int64_t failures_ = 0;
    std::vector<std::string> notes_;
};

int failed_criteria = 0;

void criterion(int id, const std::string& title, const std::function<void(Check&)>& body) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(check);
    } catch (const std::exception& e) {
        check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = check.failures() == 0 && check.checks() > 0;
    if (!ok) ++failed_criteria;
    std::printf("%s  AC%-2d %-58s checks=%lld failures=%lld (%.2fs)\n", ok ? "PASS" : "FAIL", id, title.c_str(),
                static_cast<long long>(check.checks()), static_cast<long long>(check.failures()), secs);
    for (const auto& note : check.notes()) std::printf("        %s\n", note.c_str());
    std::fflush(stdout);
}

template <class F>
void for_each_sequence(int n, F&& fn) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) fn(oracle::bits_of(v, n));
}

std::vector<int> least_cyclic_rotation(const std::vector<int>& v) {
    std::vector<int> best = v;
    for (std::size_t r = 1; r < v.size(); ++r) {
        std::vector<int> rot(v.begin() + static_cast<long>(r), v.end());
        rot.insert(rot.end(), v.begin(), v.begin() + static_cast<long>(r));
        best = std::min(best, rot);
    }
    return best;
}

std::string run_cli(const std::string& env, const std::string& args, int& code) {
    const std::string cmd = env + " '" RUNCORR_CLI "' " + args + " 2>&1";
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        code = -1;
        return out;
    }
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

// Occurrence counts of every run string of up to `max_runs` runs, read from
// the bit string alone.
std::map<std::vector<int>, std::int64_t> oracle_pattern_counts(const std::string& bits, std::size_t max_runs) {
    const auto runs = oracle::cyclic_runs(bits);
    std::map<std::vector<int>, std::int64_t> counts;
    for (std::size_t q = 0; q < runs.size(); ++q) {
        std::vector<int> p;
        for (std::size_t k = 0; k < max_runs; ++k) {
            p.push_back(runs[(q + k) % runs.size()]);
            ++counts[p];
        }
    }
    return counts;
}

}  // namespace

int main() {
    std::printf("runcorr acceptance suite\n");

    criterion(1, "run formula equals the definition (N<=14 all, 10^4 random)", [](Check& c) {
        for (int n = 2; n <= 14; ++n) {
            for_each_sequence(n, [&](const std::string& bits) {
                if (oracle::is_constant(bits)) return;
                const auto rw = decompose_runs(parse_sequence(bits));
                for (int t = 1; t <= n; ++t) {
                    const auto direct = oracle::autocorr(bits, t % n);
                    const auto via = autocorr_via_runs(rw, static_cast<std::size_t>(n), t);
                    if (via != direct) c.equal(via, direct, bits + " t=" + std::to_string(t));
                    else c.expect(true, "");
                    const auto diff = oracle::distance(bits, t) - oracle::distance(bits, t - 1);
                    if (wt_diff_via_runs(rw, t) != diff) c.equal(wt_diff_via_runs(rw, t), diff, bits + " wt diff");
                }
            });
        }
        std::mt19937_64 rng(20240501);
        for (int trial = 0; trial < 10000; ++trial) {
            const int n = 15 + static_cast<int>(rng() % 50);
            const std::string bits = oracle::random_bits(rng, n);
            const auto profile = autocorr_profile(parse_sequence(bits));
            const auto rw = decompose_runs(parse_sequence(bits));
            for (int t = 1; t <= n; ++t) {
                const auto direct = oracle::autocorr(bits, t % n);
                const auto via = autocorr_via_runs(rw, static_cast<std::size_t>(n), t);
                c.expect(via == direct && profile[static_cast<std::size_t>(t % n)] == direct, bits + " t=" + std::to_string(t));
            }
        }
    });

    criterion(2, "period-24 example rows (gamma_P, wt, C_s)", [](Check& c) {
        const std::vector<std::int64_t> gamma_p = {0, -6, 0, 0, 0, 0, 0, 0, 0, 0, 0, 5, -10, 5, 0, 0, 0, 0, 0, 0, 0, 0, 0, -6};
        const std::vector<std::int64_t> wt_diff = {12, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 10, -10, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -12};
        const std::vector<std::int64_t> wt = {12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 22, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 0};
        const std::vector<std::int64_t> corr = {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -20, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 24};
        const auto s = parse_sequence(kTableOne);
        const auto rw = decompose_runs(s);
        const auto rows = table_rows(analyze(s));
        c.equal(rw.gamma(), 12u, "gamma");
        for (std::size_t i = 0; i < 24; ++i) {
            const std::string at = " i=" + std::to_string(i);
            c.equal(i == 0 ? 0 : gamma_P(rw, static_cast<long long>(i)), gamma_p[i], "gamma_P" + at);
            c.equal(rows.gamma_p[i].value_or(-999), gamma_p[i], "row gamma_P" + at);
            c.equal(wt_diff_via_runs(rw, static_cast<long long>(i + 1)), wt_diff[i], "wt diff" + at);
            c.equal(rows.wt_diff[i], wt_diff[i], "row wt diff" + at);
            c.equal(rows.wt[i], wt[i], "row wt" + at);
            c.equal(autocorr_via_runs(rw, 24, static_cast<long long>(i + 1)), corr[i], "C_s" + at);
            c.equal(rows.correlation[i], corr[i], "row C_s" + at);
            c.equal(oracle::autocorr(kTableOne, static_cast<long long>((i + 1) % 24)), corr[i], "definition C_s" + at);
        }
    });

    criterion(3, "run counts and C_s(1..4)=0 for the period-36 and 76 examples", [](Check& c) {
        struct Expect {
            const char* bits;
            std::size_t gamma;
            std::vector<std::pair<std::vector<int>, std::int64_t>> counts;
        };
        const std::vector<Expect> cases = {
            {kPeriod36, 18, {{{1}, 9}, {{2}, 4}, {{3}, 3}, {{5}, 2}, {{1, 1}, 4}, {{1, 2}, 2}, {{1, 1, 1}, 2}, {{2, 1}, 3}}},
            {kPeriod76, 38, {{{1}, 19}, {{2}, 8}, {{3}, 5}, {{4}, 4}, {{5}, 2}, {{1, 1}, 8}, {{1, 1, 1}, 2}, {{2, 1}, 2}, {{1, 2}, 5}}},
        };
        for (const auto& e : cases) {
            const auto s = parse_sequence(e.bits);
            const auto rw = decompose_runs(s);
            c.equal(rw.gamma(), e.gamma, std::string("gamma of ") + e.bits);
            for (const auto& [pattern, want] : e.counts) {
                c.equal(count_pattern(rw, pattern), want, "N_s(" + pattern_label(pattern) + ")");
                c.equal(oracle::count(e.bits, pattern), want, "definition N_s(" + pattern_label(pattern) + ")");
            }
            for (long long t = 1; t <= 4; ++t) c.equal(autocorr_via_runs(rw, s.period(), t), 0, "C_s(" + std::to_string(t) + ")");
            c.expect(check_prop_5_3(s).all_items_hold(), "zero-zone conditions");
        }
    });

    criterion(4, "Tables II and III of dual sets", [](Check& c) {
        const std::vector<std::string> three = {"[3,∞)", "{1,2}", "{2}", "{1} ∪ [3,∞)"};
        const std::vector<std::string> four = {"[4,∞)", "{1,2,3}", "{2,3}", "{1} ∪ [4,∞)", "{3}", "{1,2} ∪ [4,∞)", "{2} ∪ [4,∞)", "{1,3}"};
        const std::vector<std::string> three_parts = {"(3)", "(1,2)", "(2,1)", "(1,1,1)"};
        const std::vector<std::string> four_parts = {"(4)", "(1,3)", "(2,2)", "(1,1,2)", "(3,1)", "(1,2,1)", "(2,1,1)", "(1,1,1,1)"};
        const auto p3 = compositions(3);
        const auto p4 = compositions(4);
        c.equal(p3.size(), three.size(), "|P(3)|");
        c.equal(p4.size(), four.size(), "|P(4)|");
        for (std::size_t i = 0; i < p3.size(); ++i) {
            c.equal(to_string(p3[i]), three_parts[i], "p_" + std::to_string(i) + "(3)");
            c.equal(to_string(dual_set(p3[i], 3)), three[i], "Q_" + std::to_string(i) + "(3)");
        }
        for (std::size_t i = 0; i < p4.size(); ++i) {
            c.equal(to_string(p4[i]), four_parts[i], "p_" + std::to_string(i) + "(4)");
            c.equal(to_string(dual_set(p4[i], 4)), four[i], "Q_" + std::to_string(i) + "(4)");
        }
    });

    criterion(5, "paired dual sets cover {k+1,k+2,...} for t<=12", [](Check& c) {
        for (int t = 1; t <= 12; ++t) {
            c.expect(dual_set(composition_at(t, 0), t) == DualSet::at_least(t, t), "Q_0(" + std::to_string(t) + ")");
            for (int k = 0; k <= t - 2; ++k) {
                const DualSet target = DualSet::at_least(k + 1, t);
                for (std::uint64_t j = 0; j < (std::uint64_t{1} << (t - k - 2)); ++j) {
                    const auto a = dual_set(composition_at(t, j << (k + 1)), t);
                    const auto b = dual_set(composition_at(t, (j << (k + 1)) + (std::uint64_t{1} << k)), t);
                    // Membership is checked point by point past the tail start.
                    bool ok = true;
                    for (int m = 1; m <= t + 2; ++m) ok = ok && ((a.contains(m) || b.contains(m)) == target.contains(m));
                    c.expect(ok, "t=" + std::to_string(t) + " k=" + std::to_string(k) + " j=" + std::to_string(j));
                    if (k == 0) {
                        bool all = true;
                        for (int m = 1; m <= t + 2; ++m) all = all && (a.contains(m) || b.contains(m));
                        c.expect(all, "pair covers N at t=" + std::to_string(t));
                    }
                }
            }
        }
    });

    criterion(6, "gamma^k recurrences for N<=10, 2<=t<=10", [](Check& c) {
        const GammaKPlan plan(10);
        for (int n = 2; n <= 10; ++n) {
            const auto summary = verify_exhaustive(n, VerifyOptions{10}, 0);
            c.equal(summary.sequences, (std::int64_t{1} << n) - 2, "sequences at N=" + std::to_string(n));
            c.expect(!summary.first_failure.has_value(),
                     summary.first_failure ? to_string(summary.first_failure->first) + ": " + summary.first_failure->second : "");
            for_each_sequence(n, [&](const std::string& bits) {
                if (oracle::is_constant(bits)) return;
                const auto rw = decompose_runs(parse_sequence(bits));
                for (int t = 2; t <= std::min(n, 10); ++t) {
                    const auto g0 = plan.evaluate(rw, t, 0);
                    c.expect(g0 == oracle::distance(bits, t) - oracle::distance(bits, t - 1), bits + " gamma^0");
                    c.expect(g0 == plan.evaluate(rw, t, 1) + oracle::gamma_p(bits, t - 1), bits + " corollary");
                    std::int64_t deepest = static_cast<std::int64_t>(rw.gamma());
                    for (int i = 1; i < t; ++i) deepest -= oracle::count(bits, {i});
                    c.expect(plan.evaluate(rw, t, t - 1) == deepest, bits + " deepest level");
                }
            });
        }
    });

    criterion(7, "closed forms for t=2,3,4 on all N<=12", [](Check& c) {
        for (int n = 2; n <= 12; ++n) {
            for_each_sequence(n, [&](const std::string& bits) {
                if (oracle::is_constant(bits)) return;
                const auto rw = decompose_runs(parse_sequence(bits));
                for (int t = 2; t <= 4; ++t) {
                    const auto closed = closed_form_wt_diff(rw, t);
                    c.expect(closed == wt_diff_via_runs(rw, t), bits + " formula t=" + std::to_string(t));
                    c.expect(closed == oracle::distance(bits, t) - oracle::distance(bits, t - 1), bits + " definition t=" + std::to_string(t));
                }
                const auto g = static_cast<std::int64_t>(rw.gamma());
                c.expect(oracle::autocorr(bits, 2 % n) == n - 4 * g + 4 * oracle::count(bits, {1}), bits + " C_s(2)");
            });
        }
    });

    criterion(8, "20 period-12 sequences with C_s(1..4)=0 in ten run forms", [](Check& c) {
        const auto found = enumerate_zcz(12, 4);
        c.equal(found.size(), 20u, "enumerate_zcz(12,4)");
        std::set<std::string> classes;
        for_each_sequence(12, [&](const std::string& bits) {
            bool zero = true;
            for (int w = 1; w <= 4; ++w) zero = zero && oracle::autocorr(bits, w) == 0;
            if (zero) classes.insert(oracle::least_rotation(bits));
        });
        c.equal(classes.size(), 20u, "rotation classes by brute force");
        std::vector<std::string> listed;
        for (const auto& s : found) listed.push_back(to_string(s));
        c.expect(listed == std::vector<std::string>(classes.begin(), classes.end()), "same sequences");

        const std::vector<std::vector<int>> forms = {
            {1, 1, 1, 2, 2, 5}, {1, 1, 1, 5, 2, 2}, {1, 3, 1, 1, 2, 4}, {1, 3, 1, 1, 4, 2}, {1, 4, 1, 1, 2, 3},
            {1, 4, 1, 1, 3, 2}, {1, 3, 2, 1, 1, 4}, {1, 2, 3, 1, 1, 4}, {1, 4, 2, 1, 1, 3}, {1, 2, 4, 1, 1, 3},
        };
        std::map<std::vector<int>, int> expected;
        for (const auto& f : forms) expected[least_cyclic_rotation(f)] += 2;
        c.equal(expected.size(), 10u, "distinct forms");
        std::map<std::vector<int>, int> seen;
        for (const auto& bits : listed) ++seen[least_cyclic_rotation(oracle::cyclic_runs(bits))];
        c.expect(seen == expected, "each form gives exactly two sequences");
    });

    criterion(9, "circulant Hadamard search for N=4,8,12,16,20", [](Check& c) {
        for (int n : {4, 8, 12, 16, 20}) {
            const auto h = hadamard_search(n);
            const std::string at = " N=" + std::to_string(n);
            if (n == 4) {
                std::vector<std::string> got;
                for (const auto& s : h.sequences) got.push_back(to_string(s));
                c.expect(got == std::vector<std::string>{"0001", "0111"}, "order 4 sequences");
            } else {
                c.expect(h.sequences.empty(), "empty" + at);
            }
            c.expect(h.run_conditions_applicable && h.agrees(), "run conditions agree" + at);
            c.expect(h.r2_present, "runs of length 2" + at);
            for (const auto& s : h.sequences) {
                c.expect(check_zcz_characterization(s, n - 1).all(), "conditions hold for " + to_string(s));
                for (int w = 1; w < n; ++w) c.expect(oracle::autocorr(to_string(s), w) == 0, "definition" + at);
            }
        }
    });

    criterion(10, "block identities and C_s(1)=C_s(3) balance for N<=12", [](Check& c) {
        std::int64_t balanced = 0, unbalanced = 0;
        for (int n = 2; n <= 12; ++n) {
            for_each_sequence(n, [&](const std::string& bits) {
                if (oracle::is_constant(bits)) return;
                const auto rw = decompose_runs(parse_sequence(bits));
                const auto counts = oracle_pattern_counts(bits, 3);
                auto n_of = [&](const std::vector<int>& p) {
                    const auto it = counts.find(p);
                    return it == counts.end() ? std::int64_t{0} : it->second;
                };
                for (int i = 1; i <= n; ++i) {
                    const auto b = blocks(rw, i);
                    if (b.covers_whole_cycle) continue;
                    c.expect(n_of({i, i}) == n_of({i}) - b.count(), bits + " N(RiRi) i=" + std::to_string(i));
                    c.expect(n_of({i, i, i}) == n_of({i}) - 2 * b.count() + b.singletons(), bits + " N(RiRiRi) i=" + std::to_string(i));
                }
                const auto ones = blocks(rw, 1);
                if (ones.covers_whole_cycle) return;
                std::int64_t long_runs = 0;
                for (int j = 3; j <= n; ++j) long_runs += n_of({j});
                const bool equal_corr = oracle::autocorr(bits, 1) == oracle::autocorr(bits, 3 % n);
                const bool balance = long_runs == ones.count();
                c.expect(equal_corr == balance, bits + " balance");
                (balance ? balanced : unbalanced) += 1;
            });
        }
        c.expect(balanced > 0 && unbalanced > 0, "both directions exercised");
    });

    criterion(11, "absorptive laws for patterns of up to 3 runs", [](Check& c) {
        std::mt19937_64 rng(77);
        for (int trial = 0; trial < 1000; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 63);
            const std::string bits = oracle::random_bits(rng, n);
            const auto rw = decompose_runs(parse_sequence(bits));
            const auto counts = oracle_pattern_counts(bits, 4);
            std::map<std::vector<int>, std::int64_t> left, right;
            for (const auto& [p, count] : counts) {
                if (p.size() < 2) continue;
                left[std::vector<int>(p.begin() + 1, p.end())] += count;
                right[std::vector<int>(p.begin(), p.end() - 1)] += count;
            }
            for (const auto& [p, count] : counts) {
                if (p.size() > 3) continue;
                c.expect(left[p] == count && right[p] == count, bits + " pattern " + pattern_label(p));
                c.expect(count_pattern(rw, p) == count, bits + " count " + pattern_label(p));
                // The same sums through the library, one term per run length.
                std::int64_t l = 0, r = 0;
                for (int i = 1; i <= n; ++i) {
                    std::vector<int> a{i};
                    a.insert(a.end(), p.begin(), p.end());
                    std::vector<int> b = p;
                    b.push_back(i);
                    l += count_pattern(rw, a);
                    r += count_pattern(rw, b);
                }
                c.expect(l == count && r == count, bits + " library sums " + pattern_label(p));
            }
            // Patterns that never occur sum to zero on both sides.
            std::vector<int> absent{n + 1};
            c.expect(count_pattern(rw, absent) == 0, "absent pattern");
        }
    });

    criterion(12, "CLI output identical with RUNCORR_THREADS=1 and 4", [](Check& c) {
        for (const char* args : {"verify --period 14 --exhaustive", "verify --period 48 --samples 500 --seed 11",
                                 "enumerate-zcz --period 12 --zone 4", "enumerate-zcz --period 18 --zone 3 --json",
                                 "search-hadamard --order 16 --json"}) {
            int code1 = 0, code4 = 0;
            const auto one = run_cli("RUNCORR_THREADS=1", args, code1);
            const auto four = run_cli("RUNCORR_THREADS=4", args, code4);
            c.expect(code1 == 0 && code4 == 0, std::string(args) + " exit codes");
            c.expect(!one.empty() && one == four, std::string(args) + " output bytes");
        }
    });

    std::printf("%s: %d of 12 criteria failed\n", failed_criteria == 0 ? "ALL PASS" : "FAILURES", failed_criteria);
    return failed_criteria == 0 ? 0 : 1;
}
