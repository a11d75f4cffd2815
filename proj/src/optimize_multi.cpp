#include <algorithm>
#include <stdexcept>

#include "degseq/errors.hpp"
#include "degseq/optimize.hpp"
#include "degseq/realize.hpp"
#include "scaled.hpp"

namespace degseq {

namespace {

constexpr long long kInt64CellCap = 50'000'000;
constexpr long long kRationalCellCap = 2'000'000;

// Backward tables g[i][s]: best value of assigning degrees to vertices
// i+1..n with sum s, subject to each degree being at most m.
template <typename V>
struct MultiCore {
    int n, m;
    long long total;
    const std::vector<std::vector<V>>* rows;
    bool identical;

    std::vector<std::vector<V>> g;
    std::vector<std::vector<char>> ok;

    const std::vector<V>& row(int i) const { return identical ? (*rows)[0] : (*rows)[i]; }

    void run() {
        g.assign(n + 1, {});
        ok.assign(n + 1, {});
        for (int i = 0; i <= n; ++i) {
            g[i].assign(total + 1, V(0));
            ok[i].assign(total + 1, 0);
        }
        ok[n][0] = 1;
        for (int i = n - 1; i >= 0; --i) {
            const std::vector<V>& f = row(i);
            for (long long s = 0; s <= total; ++s) {
                bool any = false;
                V best{};
                long long tmax = std::min<long long>(m, s);
                for (long long t = 0; t <= tmax; ++t) {
                    if (!ok[i + 1][s - t]) continue;
                    V cand = f[t] + g[i + 1][s - t];
                    if (!any || cand > best) {
                        any = true;
                        best = cand;
                    }
                }
                if (any) {
                    g[i][s] = best;
                    ok[i][s] = 1;
                }
            }
        }
    }

    // Walk forward taking the largest degree that still achieves the optimum,
    // which yields the lexicographically largest optimal assignment.
    DegreeSequence reconstruct() const {
        DegreeSequence d(n);
        long long s = total;
        for (int i = 0; i < n; ++i) {
            const std::vector<V>& f = row(i);
            long long tmax = std::min<long long>(m, s);
            for (long long t = tmax; t >= 0; --t) {
                if (!ok[i + 1][s - t]) continue;
                if (f[t] + g[i + 1][s - t] == g[i][s]) {
                    d[i] = static_cast<int>(t);
                    s -= t;
                    break;
                }
            }
        }
        return d;
    }
};

} // namespace

DpSolution opt_multi_dp(const ObjectiveSpec& F, int k, int n, int m) {
    validate(F);
    if (n < 0) throw DomainError("vertex count must be nonnegative");
    if (k < 1) throw DomainError("edge size must be at least 1");
    if (m < 0) throw DomainError("edge count must be nonnegative");
    if (F.kind == ObjectiveKind::per_vertex && static_cast<int>(F.tables.size()) != n) {
        throw DomainError("per-vertex objective must have one table per vertex");
    }
    if (F.m_max < m) throw DomainError("objective tables must cover degrees up to m");
    if (k > n && m >= 1) {
        throw InfeasibleCountError("no multihypergraph: edge size exceeds vertex count");
    }

    long long total = static_cast<long long>(k) * m;
    long long cells = static_cast<long long>(n + 1) * (total + 1);
    bool identical = F.kind == ObjectiveKind::identical;

    DegreeSequence degrees;
    Rational value;
    auto scaled = detail::try_scale(F, n);
    if (scaled && cells <= kInt64CellCap) {
        MultiCore<long long> core{n, m, total, &scaled->rows, identical, {}, {}};
        core.run();
        degrees = core.reconstruct();
        value = detail::unscale(core.g[0][total], scaled->denom);
    } else if (cells <= kRationalCellCap) {
        MultiCore<Rational> core{n, m, total, &F.tables, identical, {}, {}};
        core.run();
        degrees = core.reconstruct();
        value = core.g[0][total];
    } else {
        throw EnumerationCapError("degree-sum state space too large");
    }

    if (identical) std::sort(degrees.begin(), degrees.end(), std::greater<int>());
    auto witness = multi_realize(degrees, k, m);
    if (!witness) throw std::logic_error("optimal multihypergraph degrees failed to realize");

    DpSolution out;
    out.value = std::move(value);
    out.degrees = std::move(degrees);
    out.witness = std::move(*witness);
    return out;
}

} // namespace degseq
