// runcorr: autocorrelation of binary sequences from their run structure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "runcorr/runcorr.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_counterexample = 1;
constexpr int exit_usage = 2;

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

/// Bitstring or run-word literal ("1:2,1,1,6,...").
runcorr::BinarySequence parse_input(const std::string& text) {
    if (text.find(':') != std::string::npos) return runcorr::expand_runs(runcorr::parse_run_word(text));
    return runcorr::parse_sequence(text);
}

std::vector<std::string> read_input_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw runcorr::error(runcorr::errc::invalid_input, "cannot open " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw runcorr::error(runcorr::errc::invalid_input, "cannot write " + out_path);
    out << text;
}

nlohmann::json catalog_entry(const runcorr::BinarySequence& s) {
    nlohmann::json entry = {{"sequence", runcorr::to_string(s)}, {"zone", runcorr::zcz_zone(s)}};
    if (runcorr::is_constant(s)) {
        entry["run_word"] = nullptr;
    } else {
        entry["run_word"] = runcorr::to_string(runcorr::decompose_runs(s));
    }
    if (s.period() >= 2) {
        const auto items = runcorr::check_zcz_characterization(s, static_cast<int>(s.period()) - 1);
        entry["hadamard_conditions"] = {
            {"gamma_is_half_period", items.gamma_is_half_period},
            {"singles_are_half_runs", items.singles_are_half_runs},
            {"gamma_p_vanishes", items.gamma_p_vanishes},
        };
    } else {
        entry["hadamard_conditions"] = nullptr;
    }
    return entry;
}

std::string render_catalog(const std::vector<runcorr::BinarySequence>& seqs, bool json) {
    if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& s : seqs) arr.push_back(catalog_entry(s));
        return arr.dump(2) + "\n";
    }
    std::string out;
    for (const auto& s : seqs) out += runcorr::to_string(s) + "\n";
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size()) throw runcorr::error(runcorr::errc::invalid_input, "not an integer: '" + item + "'");
        out.push_back(v);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Autocorrelation of periodic binary sequences from their run structure"};
    app.require_subcommand(1);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Run counts, gamma_P table and autocorrelation profile");
    std::vector<std::string> analyze_inputs;
    std::string analyze_file;
    bool analyze_json = false;
    int max_pattern_runs = 3;
    analyze->add_option("sequence", analyze_inputs, "Bitstring or run-word literal (e.g. 1:2,1,1,6)");
    analyze->add_option("--file", analyze_file, "File with one sequence per line ('#' comments)");
    analyze->add_flag("--json", analyze_json, "Emit JSON");
    analyze->add_option("--max-pattern-runs", max_pattern_runs, "Longest run string listed in run counts")
        ->check(CLI::PositiveNumber);

    // verify
    auto* verify = app.add_subcommand("verify", "Check the run expansion against the definition");
    int verify_period = 0;
    bool verify_exhaustive = false;
    std::int64_t verify_samples = 0;
    std::uint64_t verify_seed = 1;
    int identity_max_t = 10;
    verify->add_option("--period", verify_period, "Sequence period")->required();
    verify->add_flag("--exhaustive", verify_exhaustive, "All non-constant sequences of the period");
    verify->add_option("--samples", verify_samples, "Random sequences to test")->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", verify_seed, "Random seed");
    verify->add_option("--identity-max-t", identity_max_t, "Largest t for the recurrence identities")
        ->check(CLI::NonNegativeNumber);

    // compositions
    auto* comps = app.add_subcommand("compositions", "List compositions of n in doubling order");
    int comp_n = 0;
    int comp_duals = 0;
    comps->add_option("n", comp_n, "Composed total")->required();
    comps->add_option("--duals", comp_duals, "Append dual sets Q_i(t); t must equal n");

    // enumerate-zcz
    auto* zcz = app.add_subcommand("enumerate-zcz", "Sequences with C_s(1..D) = 0, one per rotation class");
    int zcz_period = 0;
    int zcz_zone = 0;
    std::string zcz_out;
    bool zcz_json = false;
    zcz->add_option("--period", zcz_period, "Period N")->required();
    zcz->add_option("--zone", zcz_zone, "Zone D")->required();
    zcz->add_option("--out", zcz_out, "Write the catalog to a file");
    zcz->add_flag("--json", zcz_json, "Emit JSON");

    // search-hadamard
    auto* had = app.add_subcommand("search-hadamard", "Exhaustive circulant Hadamard search");
    int had_order = 0;
    std::string had_out;
    bool had_json = false;
    had->add_option("--order", had_order, "Order N")->required();
    had->add_option("--out", had_out, "Write the catalog to a file");
    had->add_flag("--json", had_json, "Emit JSON");

    // diffset
    auto* diff = app.add_subcommand("diffset", "Verify a cyclic difference set");
    int diff_v = 0;
    std::string diff_set;
    int diff_lambda = -1;
    diff->add_option("--order", diff_v, "Group order v")->required();
    diff->add_option("--set", diff_set, "Comma-separated elements")->required();
    diff->add_option("--lambda", diff_lambda, "Lambda (inferred from v, k when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    const unsigned workers = runcorr::workers_from_env();

    try {
        if (*analyze) {
            std::vector<std::string> inputs = analyze_inputs;
            if (!analyze_file.empty()) {
                const auto lines = read_input_file(analyze_file);
                inputs.insert(inputs.end(), lines.begin(), lines.end());
            }
            if (inputs.empty()) {
                std::cerr << "analyze: no sequence given\n" << analyze->help();
                return exit_usage;
            }
            std::vector<std::pair<std::string, runcorr::AnalysisReport>> reports;
            for (const auto& text : inputs) {
                const auto s = parse_input(text);
                reports.emplace_back(runcorr::to_string(s), runcorr::analyze(s, max_pattern_runs));
            }
            if (analyze_json) {
                if (reports.size() == 1) {
                    std::cout << runcorr::render_json(reports.front().second) << '\n';
                } else {
                    nlohmann::json arr = nlohmann::json::array();
                    for (const auto& [label, r] : reports) arr.push_back(runcorr::to_json(r));
                    std::cout << arr.dump(2) << '\n';
                }
            } else {
                for (std::size_t i = 0; i < reports.size(); ++i) {
                    if (i) std::cout << '\n';
                    std::cout << runcorr::render_text(reports[i].second, reports[i].first);
                }
            }
            return exit_ok;
        }

        if (*verify) {
            if (verify_exhaustive == (verify_samples > 0)) {
                std::cerr << "verify: give exactly one of --exhaustive or --samples\n";
                return exit_usage;
            }
            runcorr::VerifyOptions options;
            options.identity_max_t = identity_max_t;
            runcorr::VerifySummary summary;
            if (verify_exhaustive) {
                summary = runcorr::verify_exhaustive(verify_period, options, workers);
            } else {
                const auto batch = runcorr::random_sequences(verify_period, verify_samples, verify_seed);
                summary = runcorr::verify_batch(batch, options, workers);
            }
            std::cout << "mode        " << (verify_exhaustive ? "exhaustive" : "random") << '\n';
            std::cout << "period      " << verify_period << '\n';
            if (!verify_exhaustive) std::cout << "seed        " << verify_seed << '\n';
            std::cout << "sequences   " << summary.sequences << '\n';
            std::cout << "assertions  " << summary.assertions << '\n';
            if (summary.first_failure) {
                std::cout << "failures    1+\n";
                std::cout << "counterexample " << runcorr::to_string(summary.first_failure->first) << ": "
                          << summary.first_failure->second << '\n';
                return exit_counterexample;
            }
            std::cout << "failures    0\n";
            return exit_ok;
        }

        if (*comps) {
            if (comp_n < 1) {
                std::cerr << "compositions: n must be positive\n";
                return exit_usage;
            }
            if (comps->count("--duals") && comp_duals != comp_n) {
                std::cerr << "compositions: --duals t requires t == n\n";
                return exit_usage;
            }
            const bool with_duals = comps->count("--duals") > 0;
            std::string out;
            for (const auto& p : runcorr::compositions(comp_n)) {
                out += runcorr::to_string(p);
                if (with_duals) out += "\t" + runcorr::to_string(runcorr::dual_set(p, comp_n));
                out += '\n';
            }
            std::cout << out;
            return exit_ok;
        }

        if (*zcz) {
            const auto seqs = runcorr::enumerate_zcz(zcz_period, zcz_zone, workers);
            write_output(render_catalog(seqs, zcz_json), zcz_out);
            return exit_ok;
        }

        if (*had) {
            const auto result = runcorr::hadamard_search(had_order, workers);
            write_output(render_catalog(result.sequences, had_json), had_out);
            if (result.sequences.empty()) {
                if (result.skipped_by_divisibility) {
                    std::cerr << "note: no circulant Hadamard matrix of order " << had_order
                              << " (order is not a multiple of 4)\n";
                } else {
                    std::cerr << "note: exhaustive search found no circulant Hadamard matrix of order " << had_order
                              << '\n';
                }
            }
            if (!result.agrees()) {
                std::cerr << "counterexample: run-structure conditions select " << result.run_condition_matches.size()
                          << " sequences, exhaustive search found " << result.sequences.size() << '\n';
                return exit_counterexample;
            }
            if (!result.r2_present) {
                std::cerr << "counterexample: a sequence of order " << had_order << " has no run of length 2\n";
                return exit_counterexample;
            }
            return exit_ok;
        }

        if (*diff) {
            runcorr::DiffSetSpec spec;
            spec.v = diff_v;
            spec.elements = parse_int_list(diff_set);
            spec.k = static_cast<int>(spec.elements.size());
            runcorr::validate(spec);
            if (diff_lambda >= 0) {
                spec.lambda = diff_lambda;
            } else if (diff_v > 1) {
                const long long num = static_cast<long long>(spec.k) * (spec.k - 1);
                if (num % (diff_v - 1) != 0) {
                    std::cout << "not a difference set: k(k-1) = " << num << " is not divisible by v-1 = " << diff_v - 1
                              << '\n';
                    return exit_ok;
                }
                spec.lambda = static_cast<int>(num / (diff_v - 1));
            }
            const auto s = runcorr::sequence_from_difference_set(spec);
            const auto verdict = runcorr::analyze_difference_set(spec);
            const std::string params =
                "(" + std::to_string(spec.v) + "," + std::to_string(spec.k) + "," + std::to_string(spec.lambda) + ")";
            std::cout << "sequence " << runcorr::to_string(s) << '\n';
            if (verdict.valid) {
                std::cout << "valid " << params << " difference set; constant C = " << verdict.expected_out_of_phase;
                if (verdict.degenerate) std::cout << " (degenerate)";
                std::cout << '\n';
            } else {
                std::cout << "not a " << params << " difference set\n";
            }
            return exit_ok;
        }
    } catch (const runcorr::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
