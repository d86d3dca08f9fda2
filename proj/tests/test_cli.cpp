#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "romdom/cli.hpp"
#include "romdom/graph_io.hpp"
#include "romdom/report_io.hpp"

using namespace romdom;
using nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("gen prints an edge list") {
    auto r = run({"gen", "--spec", "cycle:4"});
    CHECK(r.code == 0);
    Graph g = parse_graph(r.out);
    CHECK(g.order() == 4);
    CHECK(g.size() == 4);

    auto j = run({"gen", "--spec", "path:3", "--format", "json"});
    CHECK(j.code == 0);
    json doc = json::parse(j.out);
    CHECK(doc["command"] == "gen");
    CHECK(doc["result"]["order"] == 3);
    CHECK(doc["result"]["size"] == 2);
    CHECK(doc["result"]["edges"][0] == json::array({0, 1}));
    CHECK(doc["discrepancies"].empty());
}

TEST_CASE("gen writes a file usable as solver input") {
    std::string path = "/tmp/romdom_cli_gen_test.txt";
    auto r = run({"gen", "--spec", "wheel:6", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    auto s = run({"solve", "--file", path, "-k", "2"});
    CHECK(s.code == 0);
    CHECK(s.out.find("value 6") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("solve text output carries the lexicographically least witness") {
    auto r = run({"solve", "--spec", "cycle:6", "-k", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("problem roman-ktuple k=2") != std::string::npos);
    CHECK(r.out.find("value 8") != std::string::npos);
    CHECK(r.out.find("labels 0 0;1 2;2 2;3 0;4 2;5 2") != std::string::npos);
    CHECK(r.out.find("nodes ") != std::string::npos);
}

TEST_CASE("solve json output") {
    auto r = run({"solve", "--spec", "cycle:6", "-k", "2", "--format", "json", "--engine", "bb"});
    CHECK(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["command"] == "solve");
    CHECK(doc["input"]["graph"] == "cycle:6");
    CHECK(doc["input"]["engine"] == "bb");
    CHECK(doc["result"]["value"] == 8);
    CHECK(doc["result"]["labels"] == "022022");
    CHECK(doc["result"]["witness_verified"] == true);
    CHECK(doc["stats"]["engine"] == "bb");
    CHECK(doc["stats"]["nodes"].get<std::uint64_t>() > 0);
}

TEST_CASE("solve set variants") {
    auto r = run({"solve", "--spec", "cycle:4", "--variant", "ktuple", "-k", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("set 2 3") != std::string::npos);
    auto j = run({"solve", "--spec", "cycle:4", "--variant", "ktuple-total", "-k", "1",
                  "--format", "json"});
    json doc = json::parse(j.out);
    CHECK(doc["result"]["set"].size() == 2);
}

TEST_CASE("solve maps errors to exit codes") {
    auto infeasible = run({"solve", "--spec", "cycle:3", "-k", "4"});
    CHECK(infeasible.code == 2);
    CHECK(infeasible.err.find("error") != std::string::npos);
    auto budget = run({"solve", "--spec", "cycle:20", "-k", "2", "--engine", "bb",
                       "--node-budget", "50"});
    CHECK(budget.code == 3);
    CHECK(budget.err.find("resource limit") != std::string::npos);
    auto nosource = run({"solve", "-k", "2"});
    CHECK(nosource.code == 2);
    auto badspec = run({"solve", "--spec", "heptagon:9"});
    CHECK(badspec.code == 2);
}

TEST_CASE("verify judges labelings") {
    auto good = run({"verify", "--spec", "path:3", "-k", "2", "--labeling", "0 1;1 2;2 2"});
    CHECK(good.code == 0);
    CHECK(good.out.find("valid") != std::string::npos);
    CHECK(good.out.find("weight 5") != std::string::npos);
    auto bad = run({"verify", "--spec", "path:3", "-k", "2", "--labeling", "0 0;1 2;2 0",
                    "--format", "json"});
    CHECK(bad.code == 1);
    json doc = json::parse(bad.out);
    CHECK(doc["result"]["valid"] == false);
    CHECK(doc["result"]["violations"].size() == 3);
    CHECK(doc["result"]["violations"][0]["vertex"] == 0);
}

TEST_CASE("solve witnesses round-trip through verify") {
    auto solved = run({"solve", "--spec", "cycle:6", "-k", "2", "--format", "json"});
    json doc = json::parse(solved.out);
    std::string labels = doc["result"]["labels"];
    std::string text;
    for (std::size_t v = 0; v < labels.size(); ++v) {
        if (v) text += ';';
        text += std::to_string(v) + " " + labels[v];
    }
    auto verified = run({"verify", "--spec", "cycle:6", "-k", "2", "--labeling", text,
                         "--format", "json"});
    CHECK(verified.code == 0);
    json vdoc = json::parse(verified.out);
    CHECK(vdoc["result"]["valid"] == true);
    CHECK(vdoc["result"]["weight"] == doc["result"]["value"]);
}

TEST_CASE("verify reads labelings from files") {
    std::string path = "/tmp/romdom_cli_labeling.txt";
    {
        std::ofstream f(path);
        f << "0 1\n1 2\n2 2\n";
    }
    auto good = run({"verify", "--spec", "path:3", "-k", "2", "--labeling-file", path});
    CHECK(good.code == 0);
    CHECK(good.out.find("valid") != std::string::npos);
    auto both = run({"verify", "--spec", "path:3", "-k", "2", "--labeling-file", path,
                     "--labeling", "0 1;1 2;2 2"});
    CHECK(both.code == 2);
    auto missing = run({"verify", "--spec", "path:3", "-k", "2", "--labeling-file",
                        "/tmp/does_not_exist_romdom.txt"});
    CHECK(missing.code == 2);
    std::remove(path.c_str());
}

TEST_CASE("verify judges sets") {
    auto good = run({"verify", "--spec", "cycle:4", "--variant", "ktuple-total", "-k", "1",
                     "--set", "0,1"});
    CHECK(good.code == 0);
    auto bad = run({"verify", "--spec", "cycle:4", "--variant", "ktuple", "-k", "2",
                    "--set", "0 1"});
    CHECK(bad.code == 1);
    auto wrongflag = run({"verify", "--spec", "cycle:4", "-k", "1", "--set", "0,1"});
    CHECK(wrongflag.code == 2);
    auto junk = run({"verify", "--spec", "cycle:4", "--variant", "ktuple", "-k", "1",
                     "--set", "0,x"});
    CHECK(junk.code == 2);
}

TEST_CASE("formula evaluates and optionally compares") {
    auto r = run({"formula", "--spec", "path:6", "-k", "2", "--compare"});
    CHECK(r.code == 0);
    CHECK(r.out.find("value 10") != std::string::npos);
    CHECK(r.out.find("case 2*ceil(2n/3)+2") != std::string::npos);
    CHECK(r.out.find("exact 9") != std::string::npos);
    CHECK(r.out.find("agrees no") != std::string::npos);

    auto j = run({"formula", "--spec", "cycle:6", "-k", "2", "--compare", "--format", "json"});
    json doc = json::parse(j.out);
    CHECK(doc["result"]["value"] == 8);
    CHECK(doc["result"]["agrees"] == true);
    CHECK(doc["result"]["source"] == "published");

    auto none = run({"formula", "--spec", "cycle:6", "-k", "5"});
    CHECK(none.code == 2);
    CHECK(none.err.find("no closed-form") != std::string::npos);
}

TEST_CASE("check subcommand reports adjudicated discrepancies and stays clean") {
    auto r = run({"check", "--area", "facts", "--format", "json"});
    CHECK(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["command"] == "check");
    CHECK(doc["result"]["clean"] == true);
    CHECK(doc["result"]["areas"].size() == 1);
    CHECK(doc["result"]["areas"][0]["area"] == "facts");
    CHECK(doc["result"]["areas"][0]["counts"]["discrepancy"] == 31);
    CHECK(doc["result"]["areas"][0]["counts"]["expected_discrepancy"] == 31);
    CHECK(doc["discrepancies"].size() == 31);
    CHECK(doc["stats"]["records"] == 94);

    auto text = run({"check", "--area", "corona,conformance"});
    CHECK(text.code == 0);
    CHECK(text.out.find("[corona]") != std::string::npos);
    CHECK(text.out.find("[conformance]") != std::string::npos);
    CHECK(text.out.find("overall: clean") != std::string::npos);

    auto badarea = run({"check", "--area", "astrology"});
    CHECK(badarea.code == 2);
}

TEST_CASE("sweep is reproducible byte for byte") {
    std::vector<std::string> args = {"sweep", "--seed", "7", "--count", "5", "--min-order", "4",
                                     "--max-order", "8", "--format", "json"};
    auto a = run(args);
    auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    json doc = json::parse(a.out);
    CHECK(doc["command"] == "sweep");
    CHECK(doc["input"]["seed"] == 7);
    CHECK(doc["result"]["clean"] == true);
}

TEST_CASE("facts subcommand") {
    auto a = run({"facts"});
    auto b = run({"facts"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("[facts]") != std::string::npos);
    CHECK(a.out.find("fact5.printed-direction") != std::string::npos);
    CHECK(a.out.find("[expected]") != std::string::npos);
}

TEST_CASE("usage errors and help") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"solve", "--spec", "cycle:4", "--file", "x"}).code == 2);
    auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("solve") != std::string::npos);
    CHECK(help.out.find("check") != std::string::npos);
}

TEST_CASE("report serialization") {
    CheckReport rep{"demo",
                    {{"ineq.sandwich", "cycle:6 k=2", CheckStatus::pass, "ktuple=4 value=8", false},
                     {"formula.path", "path:6 k=2", CheckStatus::discrepancy,
                      "formula=10 exact=9", true}}};
    json j = to_json(rep);
    CHECK(j["area"] == "demo");
    CHECK(j["counts"]["pass"] == 1);
    CHECK(j["counts"]["discrepancy"] == 1);
    CHECK(j["counts"]["expected_discrepancy"] == 1);
    CHECK(j["records"][1]["status"] == "discrepancy");
    CHECK(j["records"][1]["expected"] == true);

    std::string text = render_text(rep);
    CHECK(text.find("[demo] pass=1") != std::string::npos);
    CHECK(text.find("discrepancy formula.path | path:6 k=2 | formula=10 exact=9 [expected]") !=
          std::string::npos);
    CHECK(text.find("ineq.sandwich") == std::string::npos);  // passes are not listed

    json g = graph_json(generate(parse_spec("path:3")));
    CHECK(g["order"] == 3);
    CHECK(g["edges"].size() == 2);
}
