#include "romdom/cli.hpp"

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "romdom/errors.hpp"
#include "romdom/families.hpp"
#include "romdom/formulas.hpp"
#include "romdom/graph_io.hpp"
#include "romdom/harness.hpp"
#include "romdom/labeling.hpp"
#include "romdom/report_io.hpp"
#include "romdom/solver.hpp"

namespace romdom {

namespace {

using nlohmann::json;

json envelope(const char* command, json input, json result, json stats, json discrepancies) {
    return {{"command", command},
            {"input", std::move(input)},
            {"result", std::move(result)},
            {"stats", std::move(stats)},
            {"discrepancies", std::move(discrepancies)}};
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

struct GraphSource {
    std::string spec;
    std::string file;

    std::string display() const { return spec.empty() ? "file:" + file : spec; }

    Graph load() const {
        if (spec.empty() && file.empty()) throw InputError("need --spec or --file");
        if (!spec.empty()) return generate(parse_spec(spec));
        FamilySpec fs;
        fs.kind = FamilySpec::Kind::file;
        fs.path = file;
        return generate(fs);
    }
};

struct CommonOpts {
    GraphSource src;
    std::string problem = "roman-ktuple";
    int k = 1;
    std::string engine = "auto";
    std::uint64_t node_budget = 4'000'000'000ULL;
    double time_budget_ms = 0;
    std::string format = "text";
};

SolveOptions make_solve_opts(const CommonOpts& o) {
    SolveOptions so;
    so.engine = parse_engine(o.engine);
    so.node_budget = o.node_budget;
    so.time_budget_ms = o.time_budget_ms;
    return so;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InputError("cannot read " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

std::vector<int> parse_members(const std::string& text) {
    std::string norm = text;
    for (char& c : norm)
        if (c == ',' || c == ';') c = ' ';
    std::istringstream in(norm);
    std::vector<int> out;
    int v;
    while (in >> v) out.push_back(v);
    in.clear();
    std::string rest;
    if (in >> rest) throw InputError("bad set entry: " + rest);
    return out;
}

json collect_discrepancies(const std::vector<CheckReport>& reports) {
    json arr = json::array();
    for (const auto& rep : reports)
        for (const auto& r : rep.records)
            if (r.status == CheckStatus::discrepancy || r.status == CheckStatus::fail)
                arr.push_back(to_json(r));
    return arr;
}

void output_reports(std::ostream& out, const char* command, json input,
                    const std::vector<CheckReport>& reports, const std::string& format) {
    if (format == "json") {
        std::size_t records = 0;
        for (const auto& rep : reports) records += rep.records.size();
        print_json(out, envelope(command, std::move(input), to_json(reports),
                                 {{"records", records}}, collect_discrepancies(reports)));
    } else {
        out << render_text(reports);
    }
}

int do_gen(std::ostream& out, const CommonOpts& o, const std::string& out_path) {
    Graph g = generate(parse_spec(o.src.spec));
    std::string payload;
    if (o.format == "json")
        payload = envelope("gen", {{"spec", o.src.spec}}, graph_json(g), json::object(),
                           json::array())
                      .dump(2) +
                  "\n";
    else
        payload = serialize_graph(g);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw InputError("cannot write " + out_path);
        f << payload;
    } else {
        out << payload;
    }
    return 0;
}

int do_solve(std::ostream& out, std::ostream& err, const CommonOpts& o) {
    Graph g = o.src.load();
    Variant variant{parse_problem(o.problem), o.k};
    SolveOptions so = make_solve_opts(o);
    SolveResult res = solve(g, variant, so);
    bool witness_ok = is_roman(variant.problem)
                          ? verify_labeling(g, variant, res.labels).empty()
                          : verify_set(g, variant, res.set).empty();
    if (o.format == "json") {
        json r = to_json(res);
        json stats = r["stats"];
        r.erase("stats");
        r["witness_verified"] = witness_ok;
        print_json(out, envelope("solve",
                                 {{"graph", o.src.display()},
                                  {"problem", problem_name(variant.problem)},
                                  {"k", o.k},
                                  {"engine", engine_name(so.engine)}},
                                 std::move(r), std::move(stats), json::array()));
    } else {
        out << "problem " << problem_name(variant.problem) << " k=" << o.k << "\n";
        out << "value " << res.value << "\n";
        if (is_roman(variant.problem)) {
            out << "labels " << format_labeling(res.labels) << "\n";
        } else {
            out << "set";
            for (int v : res.set) out << ' ' << v;
            out << "\n";
        }
        out << "engine " << res.stats.engine << "\n";
        out << "nodes " << res.stats.nodes << "\n";
    }
    if (!witness_ok) {
        err << "internal error: witness failed verification\n";
        return 1;
    }
    return 0;
}

int do_verify(std::ostream& out, const CommonOpts& o, const std::string& labeling,
              const std::string& set_text) {
    Graph g = o.src.load();
    Variant variant{parse_problem(o.problem), o.k};
    json input = {{"graph", o.src.display()},
                  {"problem", problem_name(variant.problem)},
                  {"k", o.k}};
    std::vector<Violation> violations;
    int weight = 0;
    if (is_roman(variant.problem)) {
        if (labeling.empty()) throw InputError("roman variants verify a --labeling");
        if (!set_text.empty()) throw InputError("--set only applies to set variants");
        Labels labels = parse_labeling(labeling, g.order(), 2);
        weight = weight_of(labels);
        violations = verify_labeling(g, variant, labels);
        input["labeling"] = labeling;
    } else {
        if (set_text.empty()) throw InputError("set variants verify a --set");
        if (!labeling.empty()) throw InputError("--labeling only applies to roman variants");
        std::vector<int> members = parse_members(set_text);
        weight = static_cast<int>(members.size());
        violations = verify_set(g, variant, members);
        input["set"] = set_text;
    }
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& v : violations)
            arr.push_back({{"vertex", v.vertex},
                           {"label", v.label},
                           {"required", v.required},
                           {"achieved", v.achieved},
                           {"text", describe(v, variant)}});
        print_json(out, envelope("verify", std::move(input),
                                 {{"valid", violations.empty()},
                                  {"weight", weight},
                                  {"violations", std::move(arr)}},
                                 json::object(), json::array()));
    } else if (violations.empty()) {
        out << "valid\n";
        out << "weight " << weight << "\n";
    } else {
        for (const auto& v : violations) out << describe(v, variant) << "\n";
    }
    return violations.empty() ? 0 : 1;
}

int do_formula(std::ostream& out, const CommonOpts& o, bool compare) {
    FamilySpec spec = parse_spec(o.src.spec);
    Variant variant{parse_problem(o.problem), o.k};
    FormulaResult fr = formula_for(spec, variant);
    std::optional<long long> exact;
    if (compare) exact = solve(generate(spec), variant, make_solve_opts(o)).value;
    if (o.format == "json") {
        json r = to_json(fr);
        if (exact) {
            r["exact"] = *exact;
            r["agrees"] = *exact == fr.value;
        }
        print_json(out, envelope("formula",
                                 {{"spec", o.src.spec},
                                  {"problem", problem_name(variant.problem)},
                                  {"k", o.k}},
                                 std::move(r), json::object(), json::array()));
    } else {
        out << "value " << fr.value << "\n";
        out << "case " << fr.case_label << "\n";
        out << "source " << formula_source_name(fr.source) << "\n";
        if (exact) {
            out << "exact " << *exact << "\n";
            out << "agrees " << (*exact == fr.value ? "yes" : "no") << "\n";
        }
    }
    return 0;
}

int do_check(std::ostream& out, const CommonOpts& o, std::vector<std::string> areas,
             const HarnessOptions& ho) {
    if (areas.empty())
        areas = {"inequalities", "characterizations", "properties",
                 "corona",       "facts",             "conformance"};
    std::optional<std::vector<Instance>> values, props;
    auto value_pool = [&]() -> const std::vector<Instance>& {
        if (!values) values = curated_pool();
        return *values;
    };
    auto prop_pool = [&]() -> const std::vector<Instance>& {
        if (!props) props = property_pool();
        return *props;
    };
    std::vector<CheckReport> reports;
    for (const auto& area : areas) {
        if (area == "inequalities")
            reports.push_back(check_inequalities(value_pool(), ho));
        else if (area == "characterizations")
            reports.push_back(check_characterizations(value_pool(), ho));
        else if (area == "properties")
            reports.push_back(check_optimal_properties(prop_pool(), ho));
        else if (area == "corona")
            reports.push_back(check_corona(ho));
        else if (area == "facts")
            reports.push_back(check_facts(ho));
        else if (area == "conformance")
            reports.push_back(conformance_sweep(ho));
        else
            throw InputError("unknown area: " + area);
    }
    output_reports(out, "check", {{"areas", areas}, {"max_k", ho.max_k}}, reports, o.format);
    return clean(reports) ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Roman k-tuple domination: solver, formulas, verification"};
    app.name("romdom");
    app.require_subcommand(1);

    CommonOpts o;
    std::string out_path, labeling, set_text, labeling_path, set_path;
    bool compare = false;
    std::vector<std::string> areas;
    HarnessOptions ho;
    std::uint64_t seed = 1;
    int count = 50, min_order = 4, max_order = 10;
    int exit_code = 0;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };
    auto add_source = [&](CLI::App* sub) {
        auto* s = sub->add_option("--spec", o.src.spec, "family spec, e.g. cycle:6");
        auto* f = sub->add_option("--file", o.src.file, "graph file ('n m' header, edge lines)");
        s->excludes(f);
        f->excludes(s);
    };
    auto add_variant = [&](CLI::App* sub) {
        sub->add_option("--variant", o.problem, "problem variant")
            ->check(CLI::IsMember({"roman-ktuple", "roman-k", "ktuple", "ktuple-total"}));
        sub->add_option("-k,--k", o.k, "neighborhood demand")->check(CLI::PositiveNumber);
    };
    auto add_engine = [&](CLI::App* sub) {
        sub->add_option("--engine", o.engine, "search engine")
            ->check(CLI::IsMember({"auto", "exhaustive", "bb"}));
        sub->add_option("--node-budget", o.node_budget, "max search nodes");
        sub->add_option("--time-budget-ms", o.time_budget_ms, "max search milliseconds");
    };
    auto add_harness = [&](CLI::App* sub) {
        sub->add_option("--max-k", ho.max_k, "check k = 1..max-k")->check(CLI::PositiveNumber);
        sub->add_option("--enum-cap", ho.enum_cap, "optima examined per instance")
            ->check(CLI::PositiveNumber);
        sub->add_option("--threads", ho.threads, "worker threads (0 = ROMDOM_THREADS or auto)");
    };

    auto* gen = app.add_subcommand("gen", "generate a family graph");
    gen->add_option("--spec", o.src.spec, "family spec")->required();
    gen->add_option("--out", out_path, "write to a file instead of stdout");
    add_format(gen);
    gen->callback([&] { exit_code = do_gen(out, o, out_path); });

    auto* solve_cmd = app.add_subcommand("solve", "compute an invariant with a witness");
    add_source(solve_cmd);
    add_variant(solve_cmd);
    add_engine(solve_cmd);
    add_format(solve_cmd);
    solve_cmd->callback([&] { exit_code = do_solve(out, err, o); });

    auto* verify = app.add_subcommand("verify", "check a labeling or set against the demands");
    add_source(verify);
    add_variant(verify);
    add_format(verify);
    auto* lab_opt =
        verify->add_option("--labeling", labeling, "labeling like '0 2;1 0;2 1' (roman variants)");
    auto* set_opt = verify->add_option("--set", set_text, "member list like '0,2,5' (set variants)");
    verify->add_option("--labeling-file", labeling_path, "read the labeling from a file")
        ->excludes(lab_opt);
    verify->add_option("--set-file", set_path, "read the member list from a file")
        ->excludes(set_opt);
    verify->callback([&] {
        if (!labeling_path.empty()) labeling = slurp(labeling_path);
        if (!set_path.empty()) set_text = slurp(set_path);
        exit_code = do_verify(out, o, labeling, set_text);
    });

    auto* formula = app.add_subcommand("formula", "evaluate a published closed form");
    formula->add_option("--spec", o.src.spec, "family spec")->required();
    add_variant(formula);
    add_engine(formula);
    add_format(formula);
    formula->add_flag("--compare", compare, "also solve exactly and compare");
    formula->callback([&] { exit_code = do_formula(out, o, compare); });

    auto* check = app.add_subcommand("check", "run the verification harness");
    check
        ->add_option("--area", areas, "areas to run (default: all)")
        ->check(CLI::IsMember({"inequalities", "characterizations", "properties", "corona",
                               "facts", "conformance"}))
        ->delimiter(',');
    add_harness(check);
    add_engine(check);
    add_format(check);
    check->callback([&] {
        ho.solve = make_solve_opts(o);
        exit_code = do_check(out, o, areas, ho);
    });

    auto* sweep = app.add_subcommand("sweep", "run checks over seeded random graphs");
    sweep->add_option("--seed", seed, "random seed");
    sweep->add_option("--count", count, "number of instances")->check(CLI::PositiveNumber);
    sweep->add_option("--min-order", min_order, "smallest order")->check(CLI::PositiveNumber);
    sweep->add_option("--max-order", max_order, "largest order")->check(CLI::PositiveNumber);
    add_harness(sweep);
    add_engine(sweep);
    add_format(sweep);
    sweep->callback([&] {
        ho.solve = make_solve_opts(o);
        std::vector<CheckReport> reports{sweep_random(seed, count, min_order, max_order, ho)};
        output_reports(out, "sweep",
                       {{"seed", seed},
                        {"count", count},
                        {"min_order", min_order},
                        {"max_order", max_order}},
                       reports, o.format);
        exit_code = clean(reports) ? 0 : 1;
    });

    auto* facts = app.add_subcommand("facts", "compare the family pairs claimed comparable");
    add_harness(facts);
    add_engine(facts);
    add_format(facts);
    facts->callback([&] {
        ho.solve = make_solve_opts(o);
        std::vector<CheckReport> reports{check_facts(ho)};
        output_reports(out, "facts", json::object(), reports, o.format);
        exit_code = clean(reports) ? 0 : 1;
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

}  // namespace romdom
