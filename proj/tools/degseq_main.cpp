// degseq: degree-sequence feasibility checks, separable-objective optimizers,
// the 3-partition reduction, and polytope reports. JSON on stdout, logs on
// stderr; exit 0 = ok/feasible, 2 = infeasible, 1 = usage or precondition
// errors.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "degseq/errors.hpp"
#include "degseq/json_io.hpp"
#include "degseq/optimize.hpp"
#include "degseq/oracle.hpp"
#include "degseq/polytope.hpp"
#include "degseq/realize.hpp"
#include "degseq/reduction.hpp"

namespace {

using degseq::Json;

std::vector<int> parse_csv_ints(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw degseq::DomainError("not an integer list: " + text);
        }
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) pos++;
        if (pos != item.size()) throw degseq::DomainError("not an integer list: " + text);
        out.push_back(v);
    }
    return out;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw degseq::DomainError("cannot read instance file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

long long elapsed_ms(std::chrono::steady_clock::time_point t0) {
    auto dt = std::chrono::steady_clock::now() - t0;
    return std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
}

// Runs a solver, wraps the outcome in the result envelope, and maps the error
// taxonomy onto the exit-code contract.
int run_enveloped(const std::string& alg, const std::function<degseq::DpSolution()>& f) {
    auto t0 = std::chrono::steady_clock::now();
    Json out;
    try {
        degseq::DpSolution sol = f();
        out["status"] = "ok";
        out["value"] = degseq::format_rational(sol.value);
        out["degrees"] = sol.degrees;
        out["witness"] = degseq::witness_json(sol.witness);
        out["algorithm"] = alg;
        out["elapsed_ms"] = elapsed_ms(t0);
        emit(out);
        return 0;
    } catch (const degseq::InfeasibleCountError& e) {
        out["status"] = "infeasible";
        out["code"] = e.code();
        out["message"] = e.what();
        out["algorithm"] = alg;
        out["elapsed_ms"] = elapsed_ms(t0);
        emit(out);
        return 2;
    } catch (const degseq::Error& e) {
        out["status"] = "error";
        out["code"] = e.code();
        out["message"] = e.what();
        out["algorithm"] = alg;
        out["elapsed_ms"] = elapsed_ms(t0);
        emit(out);
        return 1;
    } catch (const std::exception& e) {
        out["status"] = "error";
        out["code"] = "Error";
        out["message"] = e.what();
        out["algorithm"] = alg;
        out["elapsed_ms"] = elapsed_ms(t0);
        emit(out);
        return 1;
    }
}

int emit_error(const degseq::Error& e) {
    Json out;
    out["status"] = "error";
    out["code"] = e.code();
    out["message"] = e.what();
    emit(out);
    return 1;
}

struct CheckResult {
    bool feasible = false;
    Json witness;
    bool has_witness = false;
};

int emit_check(const CheckResult& r) {
    Json out;
    out["feasible"] = r.feasible;
    if (r.has_witness) out["witness"] = r.witness;
    emit(out);
    return r.feasible ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree sequence toolkit"};
    app.require_subcommand(1);

    long long max_enum = -1;
    int max_n = -1;
    int jobs = 1;
    bool verbose = false;
    app.add_option("--max-enum", max_enum, "cap on enumerated structures and hull points");
    app.add_option("--max-n", max_n, "cap on dimensions handled by exponential scans");
    app.add_option("--jobs", jobs, "worker threads for oracle scans");
    app.add_flag("-v,--verbose", verbose, "log progress to stderr");

    auto* check = app.add_subcommand("check", "degree sequence feasibility");
    std::string check_kind, check_d;
    int check_k = -1, check_m = -1;
    check->add_option("kind", check_kind, "graph | multi | hyper")->required();
    check->add_option("d", check_d, "comma-separated degrees")->required();
    check->add_option("--k", check_k, "edge size");
    check->add_option("--m", check_m, "edge count (multi)");

    auto* optimize = app.add_subcommand("optimize", "maximize a separable objective");
    std::string opt_alg, opt_instance = "-";
    bool opt_enumerate = false;
    optimize
        ->add_option("--alg", opt_alg,
                     "multi-dp | graph-dp | threshold-dp | linear-multi | linear-hyper | "
                     "convex-multi")
        ->required();
    optimize->add_option("instance", opt_instance, "instance file path, or - for stdin");
    optimize->add_flag("--enumerate", opt_enumerate,
                       "convex-multi: scan all supports instead of requiring convexity");

    auto* reduce = app.add_subcommand("reduce", "3-partition to degree-sequence reduction");
    std::string red_a;
    int red_b = 0;
    reduce->add_option("--a", red_a, "comma-separated item values")->required();
    reduce->add_option("--b", red_b, "triple target")->required();

    auto* polytope = app.add_subcommand("polytope", "degree-sequence polytope reports");
    int poly_n = 0, poly_m = 0, poly_k = 2;
    bool poly_verify = false;
    polytope->add_option("--n", poly_n, "vertex count")->required();
    polytope->add_option("--m", poly_m, "edge count")->required();
    polytope->add_option("--k", poly_k, "edge size (default 2)");
    polytope->add_flag("--verify-threshold", poly_verify,
                       "compare hull vertices against threshold-graph degree sequences");

    auto* oracle = app.add_subcommand("oracle", "brute-force reference computations");
    std::string orc_task, orc_d, orc_mode = "hyper", orc_instance = "-";
    int orc_k = -1;
    oracle->add_option("--task", orc_task, "decide | brute-opt")->required();
    oracle->add_option("--d", orc_d, "degrees for decide");
    oracle->add_option("--k", orc_k, "edge size for decide");
    oracle->add_option("--mode", orc_mode, "brute-opt: hyper | multi");
    oracle->add_option("--instance", orc_instance, "brute-opt instance file, or - for stdin");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    degseq::EnumerationCaps caps;
    if (max_enum >= 0) {
        caps.max_enumerations = max_enum;
        caps.max_hull_points = max_enum;
    }
    if (max_n >= 0) {
        caps.max_dn2_n = max_n;
        caps.max_backtrack_n = max_n;
        caps.max_base_edges = max_n;
    }
    auto log = [&](const std::string& line) {
        if (verbose) std::cerr << "[degseq] " << line << "\n";
    };

    try {
        if (*check) {
            degseq::DegreeSequence d = parse_csv_ints(check_d);
            log("check kind=" + check_kind + " n=" + std::to_string(d.size()));
            CheckResult r;
            if (check_kind == "graph") {
                auto g = degseq::havel_hakimi_realize(d);
                r.feasible = g.has_value();
                if (g) {
                    r.witness = degseq::hypergraph_json(*g);
                    r.has_witness = true;
                }
            } else if (check_kind == "multi") {
                if (check_k < 1 || check_m < 0) {
                    throw degseq::DomainError("check multi needs --k and --m");
                }
                auto g = degseq::multi_realize(d, check_k, check_m);
                r.feasible = g.has_value();
                if (g) {
                    r.witness = degseq::multihypergraph_json(*g);
                    r.has_witness = true;
                }
            } else if (check_kind == "hyper") {
                if (check_k < 1) throw degseq::DomainError("check hyper needs --k");
                auto g = degseq::decide_degree_sequence(d, check_k, caps);
                r.feasible = g.has_value();
                if (g) {
                    r.witness = degseq::hypergraph_json(*g);
                    r.has_witness = true;
                }
            } else {
                throw degseq::DomainError("unknown check kind: " + check_kind);
            }
            return emit_check(r);
        }

        if (*optimize) {
            degseq::InstanceFile inst = degseq::parse_instance_text(read_input(opt_instance));
            log("optimize alg=" + opt_alg + " n=" + std::to_string(inst.n) +
                " k=" + std::to_string(inst.k) + " m=" + std::to_string(inst.m));
            if (opt_alg == "multi-dp") {
                return run_enveloped(opt_alg, [&] {
                    return degseq::opt_multi_dp(inst.objective, inst.k, inst.n, inst.m);
                });
            }
            if (opt_alg == "graph-dp" || opt_alg == "threshold-dp") {
                if (inst.k != 2) throw degseq::DomainError(opt_alg + " needs k=2");
                return run_enveloped(opt_alg, [&] {
                    return opt_alg == "graph-dp"
                               ? degseq::opt_graph_dp(inst.objective, inst.n, inst.m)
                               : degseq::opt_threshold_dp(inst.objective, inst.n, inst.m);
                });
            }
            if (opt_alg == "linear-multi" || opt_alg == "linear-hyper") {
                if (!inst.weights) {
                    throw degseq::DomainError(opt_alg + " needs a linear objective with weights");
                }
                return run_enveloped(opt_alg, [&] {
                    return opt_alg == "linear-multi"
                               ? degseq::linear_opt_multi(*inst.weights, inst.k, inst.m)
                               : degseq::linear_opt_hyper(*inst.weights, inst.k, inst.m, caps);
                });
            }
            if (opt_alg == "convex-multi") {
                auto mode = opt_enumerate ? degseq::ConvexMultiMode::enumerate_supports
                                          : degseq::ConvexMultiMode::separable_convex;
                return run_enveloped(opt_alg, [&] {
                    return degseq::opt_convex_multi(inst.objective, inst.k, inst.n, inst.m, mode,
                                                    caps);
                });
            }
            throw degseq::DomainError("unknown algorithm: " + opt_alg);
        }

        if (*reduce) {
            degseq::ThreePartitionInstance inst;
            inst.a = parse_csv_ints(red_a);
            inst.b = red_b;
            degseq::ReductionOutput out = degseq::reduce_3partition(inst);
            log("reduce n=" + std::to_string(inst.a.size()) +
                " s_plus=" + std::to_string(out.s_plus.edges.size()));
            emit(degseq::reduction_json(out));
            return 0;
        }

        if (*polytope) {
            if (poly_verify) {
                if (poly_k != 2) throw degseq::DomainError("--verify-threshold needs k=2");
                auto rep = degseq::verify_threshold_vertex_theorem(poly_n, poly_m, caps);
                log(std::string("verify-threshold equal=") + (rep.equal ? "true" : "false"));
                emit(degseq::threshold_report_json(rep));
                return 0;
            }
            auto verts = degseq::polytope_vertices(poly_n, poly_k, poly_m, caps);
            log("polytope vertices=" + std::to_string(verts.points.size()));
            emit(degseq::point_set_json(verts));
            return 0;
        }

        if (*oracle) {
            if (orc_task == "decide") {
                if (orc_k < 1) throw degseq::DomainError("oracle decide needs --k");
                degseq::DegreeSequence d = parse_csv_ints(orc_d);
                auto g = degseq::decide_degree_sequence(d, orc_k, caps);
                CheckResult r;
                r.feasible = g.has_value();
                if (g) {
                    r.witness = degseq::hypergraph_json(*g);
                    r.has_witness = true;
                }
                return emit_check(r);
            }
            if (orc_task == "brute-opt") {
                degseq::StructureMode mode;
                if (orc_mode == "hyper") {
                    mode = degseq::StructureMode::hyper;
                } else if (orc_mode == "multi") {
                    mode = degseq::StructureMode::multi;
                } else {
                    throw degseq::DomainError("unknown brute-opt mode: " + orc_mode);
                }
                degseq::InstanceFile inst = degseq::parse_instance_text(read_input(orc_instance));
                log("brute-opt mode=" + orc_mode + " jobs=" + std::to_string(jobs));
                return run_enveloped("brute-opt", [&] {
                    return degseq::brute_opt(inst.objective, inst.n, inst.k, inst.m, mode, caps,
                                             jobs);
                });
            }
            throw degseq::DomainError("unknown oracle task: " + orc_task);
        }
    } catch (const degseq::Error& e) {
        return emit_error(e);
    } catch (const std::exception& e) {
        return emit_error(degseq::DomainError(e.what()));
    }
    return 1;
}
