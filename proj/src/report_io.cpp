#include "romdom/report_io.hpp"

#include <sstream>

#include "romdom/labeling.hpp"

namespace romdom {

namespace {

std::string labels_digits(const Labels& labels) {
    std::string s;
    s.reserve(labels.size());
    for (auto x : labels) s += char('0' + x);
    return s;
}

nlohmann::json counts_json(const CheckReport& report) {
    int expected = 0;
    for (const auto& r : report.records)
        expected += r.status == CheckStatus::discrepancy && r.expected;
    return {
        {"pass", count_status(report, CheckStatus::pass)},
        {"pass_on_sample", count_status(report, CheckStatus::pass_on_sample)},
        {"skipped", count_status(report, CheckStatus::skipped)},
        {"discrepancy", count_status(report, CheckStatus::discrepancy)},
        {"expected_discrepancy", expected},
        {"fail", count_status(report, CheckStatus::fail)},
    };
}

}  // namespace

nlohmann::json to_json(const CheckRecord& record) {
    return {
        {"check", record.check},
        {"instance", record.instance},
        {"status", check_status_name(record.status)},
        {"detail", record.detail},
        {"expected", record.expected},
    };
}

nlohmann::json to_json(const CheckReport& report) {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& r : report.records) records.push_back(to_json(r));
    return {
        {"area", report.area},
        {"counts", counts_json(report)},
        {"records", std::move(records)},
    };
}

nlohmann::json to_json(const std::vector<CheckReport>& reports) {
    nlohmann::json areas = nlohmann::json::array();
    int discrepancies = 0, fails = 0, unexpected = 0;
    for (const auto& rep : reports) {
        areas.push_back(to_json(rep));
        discrepancies += count_status(rep, CheckStatus::discrepancy);
        fails += count_status(rep, CheckStatus::fail);
        unexpected += (int)offending(rep).size();
    }
    return {
        {"areas", std::move(areas)},
        {"clean", clean(reports)},
        {"totals",
         {{"discrepancy", discrepancies}, {"fail", fails}, {"offending", unexpected}}},
    };
}

nlohmann::json to_json(const SolveResult& result) {
    nlohmann::json j = {
        {"problem", problem_name(result.variant.problem)},
        {"k", result.variant.k},
        {"value", result.value},
        {"stats",
         {{"nodes", result.stats.nodes},
          {"engine", result.stats.engine},
          {"elapsed_ms", result.stats.elapsed_ms}}},
    };
    if (is_roman(result.variant.problem))
        j["labels"] = labels_digits(result.labels);
    else
        j["set"] = result.set;
    return j;
}

nlohmann::json to_json(const FormulaResult& result) {
    return {
        {"value", result.value},
        {"case", result.case_label},
        {"source", formula_source_name(result.source)},
    };
}

nlohmann::json graph_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    return {{"order", g.order()}, {"size", g.size()}, {"edges", std::move(edges)}};
}

std::string render_text(const CheckReport& report) {
    std::ostringstream out;
    int expected = 0;
    for (const auto& r : report.records)
        expected += r.status == CheckStatus::discrepancy && r.expected;
    out << "[" << report.area << "] pass=" << count_status(report, CheckStatus::pass)
        << " pass-on-sample=" << count_status(report, CheckStatus::pass_on_sample)
        << " skipped=" << count_status(report, CheckStatus::skipped)
        << " discrepancy=" << count_status(report, CheckStatus::discrepancy) << " (expected="
        << expected << ") fail=" << count_status(report, CheckStatus::fail) << "\n";
    for (const auto& r : report.records) {
        if (r.status == CheckStatus::pass || r.status == CheckStatus::pass_on_sample) continue;
        out << "  " << check_status_name(r.status) << " " << r.check << " | " << r.instance
            << " | " << r.detail << (r.expected ? " [expected]" : "") << "\n";
    }
    return out.str();
}

std::string render_text(const std::vector<CheckReport>& reports) {
    std::ostringstream out;
    std::size_t bad = 0;
    for (const auto& rep : reports) {
        out << render_text(rep);
        bad += offending(rep).size();
    }
    if (bad == 0)
        out << "overall: clean (all discrepancies are adjudicated)\n";
    else
        out << "overall: " << bad << " offending record(s)\n";
    return out.str();
}

}  // namespace romdom
