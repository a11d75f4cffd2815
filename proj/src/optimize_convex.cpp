#include <algorithm>
#include <numeric>

#include "degseq/combinatorics.hpp"
#include "degseq/errors.hpp"
#include "degseq/optimize.hpp"

namespace degseq {

// The best multihypergraph made of m copies of a single edge. For convex F
// this is a global optimum over all m-edge multihypergraphs, and the support
// maximizing the separable gain sum f_i(m) - f_i(0) can be read off by
// sorting; enumerate mode instead scores every support and works for any F.
DpSolution opt_convex_multi(const ObjectiveSpec& F, int k, int n, int m, ConvexMultiMode mode,
                            const EnumerationCaps& caps) {
    validate(F);
    if (n < 0) throw DomainError("vertex count must be nonnegative");
    if (k < 1) throw DomainError("edge size must be at least 1");
    if (m < 0) throw DomainError("edge count must be nonnegative");
    if (F.kind == ObjectiveKind::per_vertex && static_cast<int>(F.tables.size()) != n) {
        throw DomainError("per-vertex objective must have one table per vertex");
    }
    if (F.m_max < m) throw DomainError("objective tables must cover degrees up to m");
    if (k > n) {
        if (m >= 1) {
            throw InfeasibleCountError("no multihypergraph: edge size exceeds vertex count");
        }
        DpSolution out;
        out.degrees.assign(n, 0);
        out.value = evaluate(F, out.degrees);
        out.witness = make_multihypergraph(n, k, {});
        return out;
    }

    std::vector<int> support; // 0-based, sorted
    if (mode == ConvexMultiMode::separable_convex) {
        if (!is_convex(F)) {
            throw NotConvexError("separable-convex mode requires a convex objective");
        }
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return F.row(a)[m] - F.row(a)[0] > F.row(b)[m] - F.row(b)[0];
        });
        support.assign(order.begin(), order.begin() + k);
        std::sort(support.begin(), support.end());
    } else {
        if (binomial_capped(n, k, caps.max_enumerations) > caps.max_enumerations) {
            throw EnumerationCapError("support enumeration exceeds max_enumerations");
        }
        std::vector<int> c(k);
        std::iota(c.begin(), c.end(), 0);
        bool found = false;
        Rational best;
        DegreeSequence deg(n);
        do {
            std::fill(deg.begin(), deg.end(), 0);
            for (int v : c) deg[v] = m;
            Rational val = evaluate(F, deg);
            if (!found || val > best) {
                found = true;
                best = val;
                support = c;
            }
        } while (next_combination(c, n));
    }

    DpSolution out;
    out.degrees.assign(n, 0);
    for (int v : support) out.degrees[v] = m;
    out.value = evaluate(F, out.degrees);
    std::vector<std::pair<Edge, int>> edges;
    if (m > 0) {
        Edge e;
        e.reserve(k);
        for (int v : support) e.push_back(v + 1);
        edges.emplace_back(std::move(e), m);
    }
    out.witness = make_multihypergraph(n, k, std::move(edges));
    return out;
}

} // namespace degseq
