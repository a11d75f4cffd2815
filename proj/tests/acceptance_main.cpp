// Acceptance gate: twelve end-to-end criteria, each printed as a PASS/FAIL
// line with its runtime. Every numeric claim is checked exactly; the time
// budgets are asserted in code. Exits nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "degseq/combinatorics.hpp"
#include "degseq/errors.hpp"
#include "degseq/optimize.hpp"
#include "degseq/oracle.hpp"
#include "degseq/polytope.hpp"
#include "degseq/realize.hpp"
#include "degseq/reduction.hpp"
#include "degseq/shifted.hpp"

using namespace degseq;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// all nonnegative integer vectors of length n with sum <= cap, visited in place
template <typename Fn>
void for_each_vector(int n, int cap, Fn&& fn) {
    std::vector<int> d(n, 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == n) {
            fn(d);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            d[i] = v;
            self(self, i + 1, left - v);
        }
        d[i] = 0;
    };
    rec(rec, 0, cap);
}

std::vector<Rational> random_integer_row(int len, std::mt19937& rng) {
    std::vector<Rational> row;
    for (int t = 0; t < len; ++t) row.emplace_back((long long)(rng() % 19) - 9);
    return row;
}

std::vector<Rational> random_convex_row(int len, std::mt19937& rng) {
    std::vector<Rational> row;
    long long v = (long long)(rng() % 19) - 9;
    long long inc = (long long)(rng() % 9) - 4;
    row.emplace_back(v);
    for (int t = 1; t < len; ++t) {
        v += inc;
        row.emplace_back(v);
        inc += (long long)(rng() % 4);
    }
    return row;
}

Multihypergraph random_multi(int n, int k, int m, std::mt19937& rng) {
    std::vector<int> verts(n);
    std::iota(verts.begin(), verts.end(), 1);
    std::vector<Edge> edges;
    for (int j = 0; j < m; ++j) {
        std::shuffle(verts.begin(), verts.end(), rng);
        Edge e(verts.begin(), verts.begin() + k);
        std::sort(e.begin(), e.end());
        edges.push_back(e);
    }
    std::sort(edges.begin(), edges.end());
    std::vector<std::pair<Edge, int>> counted;
    for (const auto& e : edges) {
        if (!counted.empty() && counted.back().first == e) {
            counted.back().second++;
        } else {
            counted.emplace_back(e, 1);
        }
    }
    return make_multihypergraph(n, k, counted);
}

bool consistent(const ObjectiveSpec& F, const DpSolution& s) {
    if (evaluate(F, s.degrees) != s.value) return false;
    DegreeSequence a = std::visit([](const auto& g) { return degree_sequence(g); }, s.witness);
    DegreeSequence b = s.degrees;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

// ---- criteria ----

bool criterion1(std::string& note) {
    auto t0 = Clock::now();
    long long tested = 0, disagreements = 0;
    for (int n = 0; n <= 6; ++n) {
        for_each_vector(n, 12, [&](const std::vector<int>& d) {
            tested++;
            bool fast = eg_check(d);
            bool slow = decide_degree_sequence(d, 2).has_value();
            if (fast != slow) disagreements++;
        });
    }
    double secs = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%lld sequences, %lld disagreements, %.1fs", tested,
                  disagreements, secs);
    note = buf;
    return disagreements == 0 && secs < 60.0;
}

bool criterion2(std::string& note) {
    auto t0 = Clock::now();
    std::mt19937 rng(101);
    long long tested = 0, failures = 0;
    for (int n = 1; n <= 4; ++n) {
        for (int k = 1; k <= 3; ++k) {
            for (int m = 0; m <= 4; ++m) {
                for (int rep = 0; rep < 100; ++rep) {
                    std::vector<std::vector<Rational>> rows(n);
                    for (auto& row : rows) row = random_integer_row(m + 1, rng);
                    ObjectiveSpec F = make_per_vertex_objective(rows);
                    tested++;
                    if (k > n && m >= 1) {
                        bool dp_threw = false, brute_threw = false;
                        try {
                            opt_multi_dp(F, k, n, m);
                        } catch (const InfeasibleCountError&) {
                            dp_threw = true;
                        }
                        try {
                            brute_opt(F, n, k, m, StructureMode::multi);
                        } catch (const InfeasibleCountError&) {
                            brute_threw = true;
                        }
                        if (!dp_threw || !brute_threw) failures++;
                        continue;
                    }
                    DpSolution dp = opt_multi_dp(F, k, n, m);
                    DpSolution ref = brute_opt(F, n, k, m, StructureMode::multi);
                    if (dp.value != ref.value || !consistent(F, dp)) failures++;
                }
            }
        }
    }
    double secs = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%lld objectives, %lld failures, %.1fs", tested, failures,
                  secs);
    note = buf;
    return failures == 0 && secs < 120.0;
}

bool criterion3(std::string& note) {
    auto t0 = Clock::now();
    std::mt19937 rng(102);
    long long tested = 0, failures = 0;
    for (int n = 1; n <= 6; ++n) {
        int mcap = std::min(7, n * (n - 1) / 2);
        for (int m = 0; m <= mcap; ++m) {
            for (int rep = 0; rep < 50; ++rep) {
                ObjectiveSpec F = make_identical_objective(random_integer_row(m + 1, rng));
                tested++;
                DpSolution dp = opt_graph_dp(F, n, m);
                DpSolution ref = brute_opt(F, n, 2, m, StructureMode::hyper);
                if (dp.value != ref.value || !consistent(F, dp)) failures++;
            }
            // the circuit family: reward exactly degree 2
            std::vector<Rational> spike(m + 1, Rational(0));
            if (m >= 2) spike[2] = Rational(1);
            ObjectiveSpec F = make_identical_objective(spike);
            tested++;
            DpSolution dp = opt_graph_dp(F, n, m);
            DpSolution ref = brute_opt(F, n, 2, m, StructureMode::hyper);
            if (dp.value != ref.value || !consistent(F, dp)) failures++;
            if (n == m && dp.value != Rational(n)) failures++;
        }
    }
    double secs = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%lld objectives, %lld failures, %.1fs", tested, failures,
                  secs);
    note = buf;
    return failures == 0 && secs < 300.0;
}

bool criterion4(std::string& note) {
    auto t0 = Clock::now();
    std::mt19937 rng(103);
    long long tested = 0, failures = 0;
    for (int n = 1; n <= 6; ++n) {
        int mcap = std::min(7, n * (n - 1) / 2);
        for (int m = 0; m <= mcap; ++m) {
            for (int rep = 0; rep < 50; ++rep) {
                ObjectiveSpec F = make_identical_objective(random_convex_row(m + 1, rng));
                tested++;
                DpSolution thr = opt_threshold_dp(F, n, m);
                DpSolution ref = opt_graph_dp(F, n, m);
                if (thr.value != ref.value || !consistent(F, thr)) failures++;
            }
        }
    }
    auto t1 = Clock::now();
    DpSolution big = opt_threshold_dp(squares_objective(2000), 200, 2000);
    double big_secs = seconds_since(t1);
    bool big_ok = big_secs < 1.0 && evaluate(squares_objective(2000), big.degrees) == big.value;
    double secs = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%lld objectives, %lld failures, n=200 m=2000 in %.2fs",
                  tested, failures, big_secs);
    note = buf;
    return failures == 0 && big_ok;
}

bool criterion5(std::string& note) {
    auto t0 = Clock::now();
    DpSolution s = opt_graph_dp(squares_objective(25), 15, 25);
    double secs = seconds_since(t0);
    bool ok = secs < 60.0 && consistent(squares_objective(25), s) && eg_check(s.degrees) &&
              degree_sum(s.degrees) == 50;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "value %s in %.2fs", format_rational(s.value).c_str(), secs);
    note = buf;
    return ok;
}

bool criterion6(std::string& note) {
    auto t0 = Clock::now();
    std::mt19937 rng(104);
    long long tested = 0, failures = 0;
    for (int n = 1; n <= 4; ++n) {
        for (int k = 1; k <= 3; ++k) {
            for (int m = 0; m <= 4; ++m) {
                for (int rep = 0; rep < 100; ++rep) {
                    std::vector<std::vector<Rational>> rows(n);
                    for (auto& row : rows) row = random_convex_row(m + 1, rng);
                    ObjectiveSpec F = make_per_vertex_objective(rows);
                    tested++;
                    if (k > n && m >= 1) {
                        bool a = false, b = false;
                        try {
                            opt_convex_multi(F, k, n, m, ConvexMultiMode::separable_convex);
                        } catch (const InfeasibleCountError&) {
                            a = true;
                        }
                        try {
                            brute_opt(F, n, k, m, StructureMode::multi);
                        } catch (const InfeasibleCountError&) {
                            b = true;
                        }
                        if (!a || !b) failures++;
                        continue;
                    }
                    DpSolution fast =
                        opt_convex_multi(F, k, n, m, ConvexMultiMode::separable_convex);
                    DpSolution ref = brute_opt(F, n, k, m, StructureMode::multi);
                    if (fast.value != ref.value || !consistent(F, fast)) failures++;
                }
            }
        }
    }
    double secs = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%lld objectives, %lld failures, %.1fs", tested, failures,
                  secs);
    note = buf;
    return failures == 0;
}

bool criterion7(std::string& note) {
    auto t0 = Clock::now();
    std::mt19937 rng(105);
    long long tested = 0, failures = 0;
    for (int n = 1; n <= 8; ++n) {
        for (int k = 1; k <= n; ++k) {
            for (int draw = 0; draw < 3; ++draw) {
                WeightVector w(n);
                if (draw == 0) {
                    std::fill(w.begin(), w.end(), Rational(1)); // maximal ties
                } else {
                    for (auto& wi : w) {
                        wi = Rational((long long)(rng() % 7) - 3, 1 + (long long)(rng() % 2));
                    }
                }
                // exhaustive edge values, sorted descending
                std::vector<Rational> all_values;
                std::vector<int> pick(k);
                std::iota(pick.begin(), pick.end(), 0);
                while (true) {
                    Rational v;
                    for (int idx : pick) v += w[idx];
                    all_values.push_back(v);
                    int i = k - 1;
                    while (i >= 0 && pick[i] == n - k + i) i--;
                    if (i < 0) break;
                    pick[i]++;
                    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
                }
                std::sort(all_values.begin(), all_values.end(), std::greater<Rational>());

                long long total = (long long)all_values.size();
                for (long long m = 0; m <= total; ++m) {
                    tested++;
                    DpSolution s = linear_opt_hyper(w, k, (int)m);
                    const auto& g = std::get<Hypergraph>(s.witness);
                    std::vector<Rational> got;
                    Rational sum;
                    for (const auto& e : g.edges) {
                        Rational v;
                        for (int vert : e) v += w[vert - 1];
                        got.push_back(v);
                        sum += v;
                    }
                    std::sort(got.begin(), got.end(), std::greater<Rational>());
                    std::vector<Rational> want(all_values.begin(), all_values.begin() + m);
                    if (got != want || sum != s.value) failures++;
                }
            }
        }
    }
    double secs = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%lld selections, %lld failures, %.1fs", tested, failures,
                  secs);
    note = buf;
    return failures == 0;
}

bool criterion8(std::string& note) {
    auto t0 = Clock::now();
    std::mt19937 rng(106);
    long long yes_count = 0, no_count = 0, failures = 0;
    for (int trial = 0; trial < 240; ++trial) {
        ThreePartitionInstance inst = (trial % 2 == 0)
                                          ? random_yes_instance(2, 6, 12, rng)
                                          : random_perturbed_instance(2, 6, 12, rng);
        auto truth = solve_3partition_bruteforce(inst);
        (truth ? yes_count : no_count)++;
        ReductionOutput red = reduce_3partition(inst);
        auto realization = decide_degree_sequence(red.d, 3);
        if (realization.has_value() != truth.has_value()) failures++;
        if (truth) {
            std::vector<Edge> edges = red.s_plus.edges;
            edges.insert(edges.end(), truth->edges.begin(), truth->edges.end());
            Hypergraph forward = make_hypergraph((int)inst.a.size(), 3, edges);
            if (degree_sequence(forward) != red.d) failures++;
        }
    }
    double secs = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%lld yes / %lld no, %lld failures, %.1fs", yes_count,
                  no_count, failures, secs);
    note = buf;
    return failures == 0 && yes_count + no_count >= 200 && yes_count > 0 && no_count > 0 &&
           secs < 120.0;
}

bool criterion9(std::string& note) {
    auto t0 = Clock::now();
    long long tested = 0, failures = 0;
    for (int n = 1; n <= 5; ++n) {
        for_each_vector(n, 9, [&](const std::vector<int>& d) {
            long long sum = std::accumulate(d.begin(), d.end(), 0LL);
            if (sum % 3 != 0) return;
            tested++;
            bool base = decide_degree_sequence(d, 3).has_value();
            for (int k = 4; k <= 5; ++k) {
                DegreeSequence lifted = lift_to_k(d, k);
                if (decide_degree_sequence(lifted, k).has_value() != base) failures++;
            }
        });
    }
    double secs = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%lld sequences, %lld failures, %.1fs", tested, failures,
                  secs);
    note = buf;
    return failures == 0;
}

bool criterion10(std::string& note) {
    auto t0 = Clock::now();
    long long tested = 0, failures = 0;
    for (int n = 1; n <= 6; ++n) {
        int mcap = std::min(7, n * (n - 1) / 2);
        for (int m = 0; m <= mcap; ++m) {
            tested++;
            ThresholdVertexReport rep = verify_threshold_vertex_theorem(n, m);
            if (!rep.equal) failures++;
        }
    }
    double secs = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%lld shapes, %lld failures, %.1fs", tested, failures, secs);
    note = buf;
    return failures == 0 && secs < 300.0;
}

bool criterion11(std::string& note) {
    auto t0 = Clock::now();
    std::mt19937 rng(107);
    long long failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + (int)(rng() % 6);
        int k = 1 + (int)(rng() % 3);
        if (k > n) k = n;
        int m = (int)(rng() % 6);
        Multihypergraph x = random_multi(n, k, m, rng);
        std::vector<std::vector<Rational>> rows(n);
        for (auto& row : rows) {
            for (int t = 0; t <= m; ++t) {
                row.emplace_back((long long)(rng() % 41) - 20, 1 + (long long)(rng() % 6));
            }
        }
        ObjectiveSpec F = make_per_vertex_objective(rows);
        ColumnMatrix cm = column_matrix_from(x);
        Rational lhs = shifted_value(cost_matrix(F, n, m), cm);
        Rational offset;
        for (int i = 0; i < n; ++i) offset += F.row(i)[0];
        Rational rhs = evaluate(F, row_sums(cm)) - offset;
        if (lhs != rhs) failures++;
    }
    double secs = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof(buf), "1000 matrices, %lld failures, %.1fs", failures, secs);
    note = buf;
    return failures == 0;
}

bool criterion12(std::string& note) {
    auto t0 = Clock::now();
    std::mt19937 rng(108);
    long long failures = 0;

    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + (int)(rng() % 9);
        std::vector<Edge> pairs;
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});
        }
        std::shuffle(pairs.begin(), pairs.end(), rng);
        int m = pairs.empty() ? 0 : (int)(rng() % (pairs.size() + 1));
        pairs.resize(m);
        Hypergraph g = make_hypergraph(n, 2, pairs);
        DegreeSequence d = degree_sequence(g);
        auto back = havel_hakimi_realize(d);
        if (!back || degree_sequence(*back) != d) failures++;
    }

    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + (int)(rng() % 6);
        int k = 1 + (int)(rng() % 4);
        if (k > n) k = n;
        int m = (int)(rng() % 7);
        Multihypergraph x = random_multi(n, k, m, rng);
        DegreeSequence d = degree_sequence(x);
        auto back = multi_realize(d, k, m);
        if (!back || degree_sequence(*back) != d) failures++;
    }

    double secs = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof(buf), "2000 round trips, %lld failures, %.1fs", failures, secs);
    note = buf;
    return failures == 0;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        bool (*fn)(std::string&);
    };
    const Criterion criteria[] = {
        {1, criterion1},  {2, criterion2},  {3, criterion3},  {4, criterion4},
        {5, criterion5},  {6, criterion6},  {7, criterion7},  {8, criterion8},
        {9, criterion9},  {10, criterion10}, {11, criterion11}, {12, criterion12},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        std::string note;
        bool ok = false;
        try {
            ok = c.fn(note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        if (!ok) failed++;
        std::cout << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << " (" << note
                  << ")\n"
                  << std::flush;
    }
    if (failed) std::cout << failed << " criteria failed\n";
    return failed == 0 ? 0 : 1;
}
