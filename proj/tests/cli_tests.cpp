// End-to-end tests for the degseq binary: exit codes, JSON shapes, output
// determinism, and re-verification of optimizer envelopes against the library.
// Run as: cli_tests --cli-path=/path/to/degseq

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"

#include "degseq/hypergraph.hpp"
#include "degseq/json_io.hpp"
#include "degseq/objective.hpp"
#include "degseq/rational.hpp"

using Json = nlohmann::ordered_json;

namespace {

int failures = 0;
int checks = 0;

void expect(bool ok, const std::string& what) {
    checks++;
    if (!ok) {
        failures++;
        std::cerr << "FAIL: " << what << "\n";
    }
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& cli, const std::string& args,
                  const std::string& stdin_file = "") {
    std::string cmd = "\"" + cli + "\" " + args;
    if (!stdin_file.empty()) cmd += " < " + stdin_file;
    cmd += " 2>/dev/null";
    RunResult r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), p)) > 0) r.out.append(buf, got);
    int rc = pclose(p);
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::string write_instance(const std::string& name, const std::string& text) {
    std::string path = "cli_case_" + name + ".json";
    std::ofstream out(path);
    out << text;
    return path;
}

Json parse(const RunResult& r, const std::string& what) {
    Json j = Json::parse(r.out, nullptr, false);
    expect(!j.is_discarded(), what + ": stdout is valid JSON");
    if (j.is_discarded()) return Json::object();
    return j;
}

degseq::DegreeSequence degrees_from_witness(const Json& w) {
    std::string type = w.at("type");
    int n = w.at("n");
    degseq::DegreeSequence d(n, 0);
    if (type == "hypergraph") {
        for (const auto& e : w.at("edges")) {
            for (int v : e) d[v - 1]++;
        }
    } else if (type == "multihypergraph") {
        for (const auto& item : w.at("edges")) {
            int c = item.at("count");
            for (int v : item.at("edge")) d[v - 1] += c;
        }
    } else if (type == "threshold") {
        degseq::ThresholdGraph g;
        g.n = n;
        for (const auto& lab : w.at("labels")) {
            g.labels.push_back(lab == "dominating" ? degseq::VertexLabel::dominating
                                                   : degseq::VertexLabel::isolating);
        }
        d = degree_sequence(g);
    } else {
        expect(false, "unknown witness type " + type);
    }
    return d;
}

// status "ok" envelopes must be internally consistent with the instance
void reverify(const Json& env, const std::string& instance_text, const std::string& what) {
    expect(env.at("status") == "ok", what + ": status ok");
    if (env.at("status") != "ok") return;
    degseq::InstanceFile inst = degseq::parse_instance_text(instance_text);
    degseq::Rational value = degseq::parse_rational(env.at("value").get<std::string>());
    degseq::DegreeSequence d = env.at("degrees").get<degseq::DegreeSequence>();
    expect(evaluate(inst.objective, d) == value, what + ": degrees reproduce value");
    degseq::DegreeSequence wd = degrees_from_witness(env.at("witness"));
    std::sort(wd.begin(), wd.end());
    degseq::DegreeSequence ds = d;
    std::sort(ds.begin(), ds.end());
    expect(wd == ds, what + ": witness degrees match up to labeling");
}

std::string strip_elapsed(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) return text;
    j.erase("elapsed_ms");
    return j.dump(2);
}

} // namespace

int main(int argc, char** argv) {
    std::string cli;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg.rfind("--cli-path=", 0) == 0) cli = arg.substr(11);
    }
    if (cli.empty()) {
        std::cerr << "usage: cli_tests --cli-path=/path/to/degseq\n";
        return 1;
    }

    // feasibility checks and their exit codes
    {
        RunResult r = run_cli(cli, "check graph 3,1,1,1");
        expect(r.exit_code == 0, "check graph star exits 0");
        Json j = parse(r, "check graph star");
        expect(j.at("feasible") == true, "check graph star feasible");
        expect(degrees_from_witness(j.at("witness")) == degseq::DegreeSequence{3, 1, 1, 1},
               "check graph star witness degrees");

        r = run_cli(cli, "check graph 3,1,1");
        expect(r.exit_code == 2, "check graph infeasible exits 2");
        expect(parse(r, "check graph infeasible").at("feasible") == false,
               "check graph infeasible flag");

        r = run_cli(cli, "check multi 3,2,1 --k 3 --m 2");
        expect(r.exit_code == 2, "check multi d1>m exits 2");

        r = run_cli(cli, "check multi 2,2,2 --k 3 --m 2");
        expect(r.exit_code == 0, "check multi feasible exits 0");

        r = run_cli(cli, "check hyper 1,1,1 --k 3");
        expect(r.exit_code == 0, "check hyper triple exits 0");
        Json h = parse(r, "check hyper triple");
        expect(h.at("witness").at("edges") == Json::parse("[[1,2,3]]"),
               "check hyper triple witness edge");

        r = run_cli(cli, "check hyper 3,1,1,1 --k 3");
        expect(r.exit_code == 2, "check hyper d1>m exits 2");

        // usage and cap problems exit 1, distinct from infeasibility
        r = run_cli(cli, "check multi 1,1 --k 2");
        expect(r.exit_code == 1, "check multi without --m exits 1");
        r = run_cli(cli, "check graph 3,x,1");
        expect(r.exit_code == 1, "malformed degree list exits 1");
        r = run_cli(cli, "check hyper 1,1,1,1,1,1,1,1,1,1,1,1,1 --k 3");
        expect(r.exit_code == 1, "overlong backtracking input exits 1");
        r = run_cli(cli, "check nonsense 1,1");
        expect(r.exit_code == 1, "unknown check kind exits 1");
    }

    // the optimizer family against pinned instances
    std::string sq43 = write_instance(
        "sq43", R"({"n":4,"k":2,"m":3,"objective":{"kind":"squares"}})");
    {
        RunResult r = run_cli(cli, "optimize --alg graph-dp " + sq43);
        expect(r.exit_code == 0, "graph-dp exits 0");
        Json j = parse(r, "graph-dp");
        expect(j.at("value") == "12", "graph-dp value 12");
        expect(j.at("degrees") == Json::parse("[3,1,1,1]"), "graph-dp degrees");
        expect(j.at("algorithm") == "graph-dp", "graph-dp algorithm field");
        std::vector<std::string> keys;
        for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
        expect(keys == std::vector<std::string>{"status", "value", "degrees", "witness",
                                                "algorithm", "elapsed_ms"},
               "envelope field order");
        reverify(j, R"({"n":4,"k":2,"m":3,"objective":{"kind":"squares"}})", "graph-dp");

        RunResult again = run_cli(cli, "optimize --alg graph-dp " + sq43);
        expect(strip_elapsed(r.out) == strip_elapsed(again.out),
               "identical invocations agree byte for byte modulo elapsed_ms");

        r = run_cli(cli, "optimize --alg threshold-dp " + sq43);
        Json t = parse(r, "threshold-dp");
        expect(r.exit_code == 0, "threshold-dp exits 0");
        expect(t.at("value") == "12", "threshold-dp value 12");
        expect(t.at("witness").at("type") == "threshold", "threshold-dp witness type");
        reverify(t, R"({"n":4,"k":2,"m":3,"objective":{"kind":"squares"}})", "threshold-dp");
    }

    // stdin instances, empty optimizations, shorthand objectives
    {
        std::string pv = write_instance("pv0", R"({"n":2,"k":2,"m":0,)"
            R"("objective":{"kind":"per-vertex","tables":[["5"],["-2"]]}})");
        RunResult r = run_cli(cli, "optimize --alg multi-dp -", pv);
        Json j = parse(r, "multi-dp m=0");
        expect(r.exit_code == 0, "multi-dp m=0 exits 0");
        expect(j.at("value") == "3", "multi-dp m=0 value is sum of f_i(0)");
        expect(j.at("witness").at("edges").empty(), "multi-dp m=0 empty witness");

        std::string frac = write_instance("frac",
            R"({"n":3,"k":2,"m":3,"objective":{"kind":"identical","tables":[["0","1/3","22/7","9"]]}})");
        r = run_cli(cli, "optimize --alg graph-dp " + frac);
        Json f = parse(r, "graph-dp fractional");
        expect(r.exit_code == 0, "graph-dp fractional exits 0");
        reverify(f, R"({"n":3,"k":2,"m":3,)"
                    R"("objective":{"kind":"identical","tables":[["0","1/3","22/7","9"]]}})",
                 "graph-dp fractional");

        std::string negsq = write_instance("negsq",
            R"({"n":3,"k":2,"m":2,"objective":{"kind":"neg-squares-at","centers":[2,2,0]}})");
        r = run_cli(cli, "optimize --alg multi-dp " + negsq);
        Json ns = parse(r, "multi-dp neg-squares");
        expect(r.exit_code == 0, "multi-dp neg-squares exits 0");
        expect(ns.at("value") == "0", "multi-dp neg-squares optimum 0");
        expect(ns.at("degrees") == Json::parse("[2,2,0]"), "multi-dp neg-squares degrees");
    }

    // linear algorithms take their weights from the instance
    {
        std::string lin = write_instance("lin",
            R"({"n":3,"k":2,"m":2,"objective":{"kind":"linear","weights":["3","2","1"]}})");
        RunResult r = run_cli(cli, "optimize --alg linear-hyper " + lin);
        Json j = parse(r, "linear-hyper");
        expect(r.exit_code == 0, "linear-hyper exits 0");
        expect(j.at("value") == "9", "linear-hyper value 9");
        expect(j.at("witness").at("edges") == Json::parse("[[1,2],[1,3]]"),
               "linear-hyper picks the two best edges");

        r = run_cli(cli, "optimize --alg linear-multi " + lin);
        Json m = parse(r, "linear-multi");
        expect(m.at("value") == "10", "linear-multi value 10");
        expect(m.at("witness").at("edges") == Json::parse(R"([{"edge":[1,2],"count":2}])"),
               "linear-multi repeats the best edge");

        r = run_cli(cli, "optimize --alg linear-hyper " + sq43);
        expect(r.exit_code == 1, "linear alg without weights exits 1");
    }

    // convex single-support optimizer, both modes
    {
        std::string conv = write_instance("conv",
            R"({"n":3,"k":2,"m":3,"objective":{"kind":"squares"}})");
        RunResult r = run_cli(cli, "optimize --alg convex-multi " + conv);
        Json j = parse(r, "convex-multi");
        expect(j.at("value") == "18", "convex-multi value 18");
        expect(j.at("degrees") == Json::parse("[3,3,0]"), "convex-multi degrees");

        RunResult e = run_cli(cli, "optimize --alg convex-multi --enumerate " + conv);
        expect(parse(e, "convex-multi enumerate").at("value") == "18",
               "enumerate mode agrees");

        std::string nonconv = write_instance("nonconv",
            R"({"n":3,"k":2,"m":2,"objective":{"kind":"neg-squares-at","centers":[1,1,1]}})");
        r = run_cli(cli, "optimize --alg convex-multi " + nonconv);
        expect(r.exit_code == 1, "convex-multi rejects non-convex input");
        expect(parse(r, "convex-multi non-convex").at("code") == "NotConvex",
               "convex-multi non-convex code");
        e = run_cli(cli, "optimize --alg convex-multi --enumerate " + nonconv);
        expect(e.exit_code == 0, "enumerate mode accepts non-convex input");
    }

    // error statuses: precondition, non-convexity, infeasible shape, bad input
    {
        std::string nonconv_id = write_instance("nonconv_id",
            R"({"n":4,"k":2,"m":3,"objective":{"kind":"identical","tables":[["0","1","0","0"]]}})");
        RunResult r = run_cli(cli, "optimize --alg threshold-dp " + nonconv_id);
        expect(r.exit_code == 1, "threshold-dp non-convex exits 1");
        Json j = parse(r, "threshold-dp non-convex");
        expect(j.at("status") == "error", "threshold-dp non-convex status");
        expect(j.at("code") == "NotConvex", "threshold-dp non-convex code");

        std::string k3 = write_instance("k3",
            R"({"n":4,"k":3,"m":2,"objective":{"kind":"squares"}})");
        r = run_cli(cli, "optimize --alg graph-dp " + k3);
        expect(r.exit_code == 1, "graph-dp with k=3 exits 1");

        std::string toomany = write_instance("toomany",
            R"({"n":3,"k":2,"m":4,"objective":{"kind":"squares"}})");
        r = run_cli(cli, "optimize --alg graph-dp " + toomany);
        expect(r.exit_code == 2, "impossible edge count exits 2");
        expect(parse(r, "impossible edge count").at("status") == "infeasible",
               "impossible edge count status");

        std::string bad = write_instance("bad", "{not json");
        r = run_cli(cli, "optimize --alg graph-dp " + bad);
        expect(r.exit_code == 1, "malformed instance exits 1");

        r = run_cli(cli, "optimize --alg warp-drive " + sq43);
        expect(r.exit_code == 1, "unknown algorithm exits 1");

        r = run_cli(cli, "frobnicate");
        expect(r.exit_code == 1, "unknown subcommand exits 1");
    }

    // reduction and polytope reports
    {
        RunResult r = run_cli(cli, "reduce --a 1,1,1 --b 3");
        Json j = parse(r, "reduce");
        expect(r.exit_code == 0, "reduce exits 0");
        expect(j.at("d") == Json::parse("[1,1,1]"), "reduce d");
        expect(j.at("degenerate") == false, "reduce non-degenerate");
        expect(j.at("w") == Json::parse("[0,0,0]"), "reduce w");

        r = run_cli(cli, "reduce --a 1,1,2 --b 3");
        expect(parse(r, "reduce degenerate").at("degenerate") == true, "reduce degenerate");

        r = run_cli(cli, "polytope --n 3 --m 3");
        Json p = parse(r, "polytope vertices");
        expect(p.at("points") == Json::parse("[[2,2,2]]"), "triangle polytope vertex");
        RunResult again = run_cli(cli, "polytope --n 3 --m 3");
        expect(r.out == again.out, "polytope output is byte-stable");

        r = run_cli(cli, "polytope --n 4 --m 3 --verify-threshold");
        Json v = parse(r, "verify threshold");
        expect(v.at("equal") == true, "threshold vertices verified equal");
        expect(v.at("only_vertices").empty() && v.at("only_threshold").empty(),
               "no one-sided threshold examples");
        r = run_cli(cli, "polytope --n 4 --m 3 --k 3 --verify-threshold");
        expect(r.exit_code == 1, "verify-threshold with k=3 exits 1");
    }

    // oracle subcommand round trip
    {
        RunResult r = run_cli(cli, "oracle --task decide --d 3,1,1,1 --k 3");
        expect(r.exit_code == 2, "oracle decide infeasible exits 2");
        expect(parse(r, "oracle decide").at("feasible") == false, "oracle decide flag");

        r = run_cli(cli, "oracle --task decide --d 2,1,1,1,1 --k 3");
        expect(r.exit_code == 0, "oracle decide feasible exits 0");
        Json j = parse(r, "oracle decide feasible");
        expect(degrees_from_witness(j.at("witness")) == degseq::DegreeSequence{2, 1, 1, 1, 1},
               "oracle decide witness degrees");

        r = run_cli(cli, "oracle --task brute-opt --mode hyper --instance " + sq43);
        Json b = parse(r, "oracle brute-opt");
        expect(b.at("value") == "12", "brute-opt agrees with graph-dp");
        r = run_cli(cli, "--jobs 3 oracle --task brute-opt --mode hyper --instance " + sq43);
        expect(parse(r, "brute-opt sharded").at("value") == "12", "sharded brute-opt agrees");

        r = run_cli(cli, "oracle --task fold --d 1 --k 1");
        expect(r.exit_code == 1, "unknown oracle task exits 1");
    }

    // caps flags reach the library
    {
        RunResult r = run_cli(cli, "--max-enum 2 optimize --alg convex-multi --enumerate " +
                                       write_instance("capped",
            R"({"n":4,"k":2,"m":2,"objective":{"kind":"squares"}})"));
        expect(r.exit_code == 1, "tiny --max-enum trips the cap");
        expect(parse(r, "tiny cap").at("code") == "EnumerationCapExceeded", "cap error code");

        r = run_cli(cli, "--max-n 3 check hyper 1,1,1,1 --k 2");
        expect(r.exit_code == 1, "tiny --max-n trips the cap");
    }

    std::cout << "cli_tests: " << (checks - failures) << "/" << checks << " checks passed\n";
    return failures == 0 ? 0 : 1;
}
