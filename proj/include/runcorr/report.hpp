#pragma once

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "runcorr/applications.hpp"
#include "runcorr/run_formula.hpp"
#include "runcorr/sequence.hpp"

namespace runcorr {

struct PatternCount {
    std::vector<int> pattern;
    std::int64_t count = 0;

    friend bool operator==(const PatternCount&, const PatternCount&) = default;
};

/// Everything `analyze` prints about one sequence. Constant sequences carry
/// no run word, gamma table or run-count conditions.
struct AnalysisReport {
    std::int64_t period = 0;
    std::int64_t weight = 0;
    std::int64_t gamma = 0;
    std::optional<std::string> run_word;
    std::vector<PatternCount> run_counts;
    std::vector<std::int64_t> gamma_table;  // gamma_P(1..N-1)
    std::vector<std::int64_t> profile;      // C_s(0..N-1)
    int zcz_zone = 0;
    std::optional<ZczReport> prop_5_3;

    bool degenerate() const noexcept { return !run_word.has_value(); }
};

/// Occurring run strings of 1..max_runs runs with their counts, ordered by
/// number of runs and then lexicographically.
inline std::vector<PatternCount> occurring_patterns(const RunWord& rw, int max_runs) {
    std::map<std::vector<int>, std::int64_t> counts;
    for (std::size_t q = 0; q < rw.gamma(); ++q) {
        std::vector<int> pattern;
        for (int ell = 1; ell <= max_runs; ++ell) {
            pattern.push_back(rw.at(q + static_cast<std::size_t>(ell) - 1));
            ++counts[pattern];
        }
    }
    std::vector<PatternCount> out;
    for (auto& [p, c] : counts) out.push_back({p, c});
    std::stable_sort(out.begin(), out.end(),
                     [](const PatternCount& a, const PatternCount& b) { return a.pattern.size() < b.pattern.size(); });
    return out;
}

inline AnalysisReport analyze(const BinarySequence& s, int max_pattern_runs = 3) {
    if (max_pattern_runs < 1) throw error(errc::invalid_input, "max pattern runs must be at least 1");
    AnalysisReport r;
    r.period = static_cast<std::int64_t>(s.period());
    r.weight = static_cast<std::int64_t>(weight(s));
    r.profile = autocorr_profile(s);
    r.zcz_zone = zcz_zone(s);
    if (is_constant(s)) return r;
    const RunWord rw = decompose_runs(s);
    r.gamma = static_cast<std::int64_t>(rw.gamma());
    r.run_word = to_string(rw);
    r.run_counts = occurring_patterns(rw, max_pattern_runs);
    r.gamma_table = gamma_table(rw, s.period() - 1).values;
    r.prop_5_3 = check_prop_5_3(s);
    return r;
}

// ---------------------------------------------------------------------------
// JSON

inline Verdict verdict_from_string(const std::string& text) {
    if (text == "holds") return Verdict::holds;
    if (text == "fails") return Verdict::fails;
    if (text == "not_applicable") return Verdict::not_applicable;
    throw error(errc::invalid_input, "unknown verdict '" + text + "'");
}

inline nlohmann::json to_json(const ZczReport& z) {
    nlohmann::json items = nlohmann::json::array();
    for (auto v : z.items) items.push_back(to_string(v));
    const auto& c = z.counts;
    return {
        {"zone", z.zone},
        {"items", items},
        {"runs_balance_blocks", to_string(z.runs_balance_blocks)},
        {"c1_equals_c3", z.c1_equals_c3},
        {"characterization_consistent", z.characterization_consistent},
        {"counts",
         {{"period", c.period},
          {"gamma", c.gamma},
          {"r1", c.r1},
          {"r2", c.r2},
          {"runs_at_least_3", c.runs_at_least_3},
          {"runs_at_least_4", c.runs_at_least_4},
          {"p1_blocks", c.p1_blocks},
          {"p1_singleton_blocks", c.p1_singleton_blocks},
          {"r1r2", c.r1r2},
          {"r2r1", c.r2r1}}},
    };
}

inline ZczReport zcz_report_from_json(const nlohmann::json& j) {
    ZczReport z;
    z.zone = j.at("zone").get<int>();
    const auto& items = j.at("items");
    if (!items.is_array() || items.size() != 4) throw error(errc::invalid_input, "prop_5_3.items must have 4 entries");
    for (std::size_t i = 0; i < 4; ++i) z.items[i] = verdict_from_string(items[i].get<std::string>());
    z.runs_balance_blocks = verdict_from_string(j.at("runs_balance_blocks").get<std::string>());
    z.c1_equals_c3 = j.at("c1_equals_c3").get<bool>();
    z.characterization_consistent = j.at("characterization_consistent").get<bool>();
    const auto& c = j.at("counts");
    auto& out = z.counts;
    out.period = c.at("period").get<std::int64_t>();
    out.gamma = c.at("gamma").get<std::int64_t>();
    out.r1 = c.at("r1").get<std::int64_t>();
    out.r2 = c.at("r2").get<std::int64_t>();
    out.runs_at_least_3 = c.at("runs_at_least_3").get<std::int64_t>();
    out.runs_at_least_4 = c.at("runs_at_least_4").get<std::int64_t>();
    out.p1_blocks = c.at("p1_blocks").get<std::int64_t>();
    out.p1_singleton_blocks = c.at("p1_singleton_blocks").get<std::int64_t>();
    out.r1r2 = c.at("r1r2").get<std::int64_t>();
    out.r2r1 = c.at("r2r1").get<std::int64_t>();
    return z;
}

inline nlohmann::json to_json(const AnalysisReport& r) {
    nlohmann::json counts = nlohmann::json::array();
    for (const auto& pc : r.run_counts) counts.push_back({{"pattern", pc.pattern}, {"count", pc.count}});
    nlohmann::json j = {
        {"period", r.period},
        {"weight", r.weight},
        {"gamma", r.gamma},
        {"run_word", r.run_word ? nlohmann::json(*r.run_word) : nlohmann::json(nullptr)},
        {"run_counts", counts},
        {"gamma_table", r.gamma_table},
        {"profile", r.profile},
        {"zcz_zone", r.zcz_zone},
        {"prop_5_3", r.prop_5_3 ? to_json(*r.prop_5_3) : nlohmann::json(nullptr)},
    };
    return j;
}

inline AnalysisReport report_from_json(const nlohmann::json& j) {
    try {
        AnalysisReport r;
        r.period = j.at("period").get<std::int64_t>();
        r.weight = j.at("weight").get<std::int64_t>();
        r.gamma = j.at("gamma").get<std::int64_t>();
        if (!j.at("run_word").is_null()) r.run_word = j.at("run_word").get<std::string>();
        for (const auto& pc : j.at("run_counts")) {
            r.run_counts.push_back({pc.at("pattern").get<std::vector<int>>(), pc.at("count").get<std::int64_t>()});
        }
        r.gamma_table = j.at("gamma_table").get<std::vector<std::int64_t>>();
        r.profile = j.at("profile").get<std::vector<std::int64_t>>();
        r.zcz_zone = j.at("zcz_zone").get<int>();
        if (!j.at("prop_5_3").is_null()) r.prop_5_3 = zcz_report_from_json(j.at("prop_5_3"));
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw error(errc::invalid_input, std::string("malformed report JSON: ") + e.what());
    }
}

inline std::string render_json(const AnalysisReport& r) { return to_json(r).dump(2); }

// ---------------------------------------------------------------------------
// Text

inline std::string pattern_label(const std::vector<int>& pattern) {
    std::string out;
    for (int len : pattern) out += "R" + std::to_string(len);
    return out;
}

/// The four weight/correlation rows indexed by i = 0..N-1. A constant
/// sequence has no gamma_P row.
struct TableRows {
    std::vector<std::optional<std::int64_t>> gamma_p;  // gamma_P(i), gamma_P(0) = 0
    std::vector<std::int64_t> wt_diff;                  // wt(s+T^{i+1}s) - wt(s+T^i s)
    std::vector<std::int64_t> wt;                       // wt(s+T^{i+1}s)
    std::vector<std::int64_t> correlation;              // C_s(i+1)
};

inline TableRows table_rows(const AnalysisReport& r) {
    TableRows rows;
    const auto n = static_cast<std::size_t>(r.period);
    std::int64_t previous = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (r.degenerate()) {
            rows.gamma_p.push_back(std::nullopt);
        } else {
            rows.gamma_p.push_back(i == 0 ? 0 : r.gamma_table.at(i - 1));
        }
        const std::int64_t c = r.profile.at((i + 1) % n);
        const std::int64_t wt = (r.period - c) / 2;
        rows.correlation.push_back(c);
        rows.wt.push_back(wt);
        rows.wt_diff.push_back(wt - previous);
        previous = wt;
    }
    return rows;
}

inline std::string render_text(const AnalysisReport& r, const std::string& label = {}) {
    std::ostringstream os;
    if (!label.empty()) os << "sequence  " << label << '\n';
    os << "period    " << r.period << '\n';
    os << "weight    " << r.weight << '\n';
    os << "gamma     " << r.gamma << '\n';
    os << "run word  " << (r.run_word ? *r.run_word : std::string("-")) << '\n';
    os << "zcz zone  " << r.zcz_zone << '\n';
    if (r.degenerate()) {
        os << "note      constant sequence: no run boundaries, profile taken from the definition\n";
    }

    if (!r.run_counts.empty()) {
        os << "\nrun counts\n";
        std::size_t width = 0;
        for (const auto& pc : r.run_counts) width = std::max(width, pattern_label(pc.pattern).size() + 5);
        for (const auto& pc : r.run_counts) {
            os << "  " << std::left << std::setw(static_cast<int>(width)) << "N_s(" + pattern_label(pc.pattern) + ")"
               << std::right << " = " << pc.count << '\n';
        }
    }

    const TableRows rows = table_rows(r);
    const std::vector<std::string> labels = {
        "i", "gamma_P(i)", "wt(s+T^{i+1}s)-wt(s+T^i s)", "wt(s+T^{i+1}s)", "C_s(i+1)",
    };
    std::vector<std::vector<std::string>> cells(labels.size());
    for (std::size_t i = 0; i < rows.wt.size(); ++i) {
        cells[0].push_back(std::to_string(i));
        cells[1].push_back(rows.gamma_p[i] ? std::to_string(*rows.gamma_p[i]) : "-");
        cells[2].push_back(std::to_string(rows.wt_diff[i]));
        cells[3].push_back(std::to_string(rows.wt[i]));
        cells[4].push_back(std::to_string(rows.correlation[i]));
    }
    std::size_t label_width = 0;
    for (const auto& l : labels) label_width = std::max(label_width, l.size());
    std::vector<std::size_t> col(rows.wt.size(), 1);
    for (const auto& row : cells) {
        for (std::size_t i = 0; i < row.size(); ++i) col[i] = std::max(col[i], row[i].size());
    }
    os << '\n';
    for (std::size_t k = 0; k < labels.size(); ++k) {
        os << std::left << std::setw(static_cast<int>(label_width)) << labels[k] << std::right;
        for (std::size_t i = 0; i < cells[k].size(); ++i) os << ' ' << std::setw(static_cast<int>(col[i])) << cells[k][i];
        os << '\n';
    }

    if (r.prop_5_3) {
        const auto& z = *r.prop_5_3;
        static const char* names[] = {
            "gamma = N/2                           (C_s(1) = 0)",
            "N_s(R1) = gamma/2                     (C_s(1) = C_s(2))",
            "N_s(R2) + N_s(P1) = gamma/2           (C_s(2) = C_s(3))",
            "long runs + blocks + R2R1 + R1R2 = gamma/2 (C_s(3) = C_s(4))",
        };
        os << "\nzero-zone conditions (shifts 1..4)\n";
        for (std::size_t i = 0; i < 4; ++i) os << "  " << (i + 1) << ". " << names[i] << "  " << to_string(z.items[i]) << '\n';
        os << "  sum_{j>=3} N_s(Rj) = N_s(P1)  " << to_string(z.runs_balance_blocks) << "  (C_s(1) = C_s(3): "
           << (z.c1_equals_c3 ? "yes" : "no") << ")\n";
        os << "  consistent with zone: " << (z.characterization_consistent ? "yes" : "no") << '\n';
    }
    return os.str();
}

}  // namespace runcorr
