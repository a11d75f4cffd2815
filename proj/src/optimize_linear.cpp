#include <algorithm>
#include <numeric>
#include <queue>

#include "degseq/combinatorics.hpp"
#include "degseq/errors.hpp"
#include "degseq/optimize.hpp"

namespace degseq {

namespace {

// Vertex indices (0-based) ordered by weight descending, index ascending.
std::vector<int> weight_order(const WeightVector& w) {
    std::vector<int> order(w.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return w[a] > w[b]; });
    return order;
}

Rational edge_weight(const WeightVector& w, const Edge& e) {
    Rational s = 0;
    for (int v : e) s += w[v - 1];
    return s;
}

} // namespace

DpSolution linear_opt_multi(const WeightVector& w, int k, int m) {
    int n = static_cast<int>(w.size());
    if (k < 1 || k > n) throw DomainError("edge size must satisfy 1 <= k <= n");
    if (m < 0) throw DomainError("edge count must be nonnegative");

    std::vector<int> order = weight_order(w);
    Edge best(order.begin(), order.begin() + k);
    std::sort(best.begin(), best.end());
    for (int& v : best) v += 1;

    DpSolution out;
    out.degrees.assign(n, 0);
    out.value = 0;
    std::vector<std::pair<Edge, int>> edges;
    if (m > 0) {
        for (int v : best) {
            out.degrees[v - 1] = m;
            out.value += w[v - 1] * m;
        }
        edges.emplace_back(best, m);
    }
    out.witness = make_multihypergraph(n, k, std::move(edges));
    return out;
}

namespace {

// Cell of the best-first ranking: the k-subsets containing `forced` and
// avoiding `excluded`. Its champion is forced plus a greedy top-up in weight
// order, which is also the lexicographically smallest maximizer in the cell.
struct RankCell {
    std::vector<int> forced;   // 0-based vertices, in the order they were forced
    std::vector<char> excluded;
    Edge champion;             // sorted, 1-based
    std::vector<int> free_picks; // greedy picks (0-based), in selection order
    Rational weight;
};

struct CellOrder {
    // priority_queue keeps the LARGEST element by this "less than" relation;
    // better = higher weight, then lexicographically smaller champion.
    bool operator()(const RankCell& a, const RankCell& b) const {
        if (a.weight != b.weight) return a.weight < b.weight;
        return a.champion > b.champion;
    }
};

// Fills champion/free_picks/weight; false when the cell is empty.
bool complete_cell(RankCell& cell, const WeightVector& w, const std::vector<int>& order,
                   int k) {
    std::vector<char> in_forced(w.size(), 0);
    for (int v : cell.forced) in_forced[v] = 1;
    cell.free_picks.clear();
    int need = k - static_cast<int>(cell.forced.size());
    for (int v : order) {
        if (static_cast<int>(cell.free_picks.size()) == need) break;
        if (cell.excluded[v] || in_forced[v]) continue;
        cell.free_picks.push_back(v);
    }
    if (static_cast<int>(cell.free_picks.size()) < need) return false;
    cell.champion.clear();
    for (int v : cell.forced) cell.champion.push_back(v + 1);
    for (int v : cell.free_picks) cell.champion.push_back(v + 1);
    std::sort(cell.champion.begin(), cell.champion.end());
    cell.weight = edge_weight(w, cell.champion);
    return true;
}

DpSolution package_edges(const WeightVector& w, int k, std::vector<Edge> edges) {
    int n = static_cast<int>(w.size());
    DpSolution out;
    out.degrees.assign(n, 0);
    out.value = 0;
    for (const Edge& e : edges) {
        out.value += edge_weight(w, e);
        for (int v : e) out.degrees[v - 1] += 1;
    }
    out.witness = make_hypergraph(n, k, std::move(edges));
    return out;
}

} // namespace

DpSolution linear_opt_hyper(const WeightVector& w, int k, int m, const EnumerationCaps&) {
    int n = static_cast<int>(w.size());
    if (k < 1) throw DomainError("edge size must be at least 1");
    if (m < 0) throw DomainError("edge count must be nonnegative");
    if (binomial_capped(n, k, m) < m) {
        throw InfeasibleCountError("more edges requested than distinct k-subsets exist");
    }

    std::vector<int> order = weight_order(w);
    std::vector<Edge> picked;
    picked.reserve(m);
    if (m > 0) {
        std::priority_queue<RankCell, std::vector<RankCell>, CellOrder> queue;
        RankCell root;
        root.excluded.assign(n, 0);
        complete_cell(root, w, order, k); // nonempty: m >= 1 implies C(n,k) >= 1
        queue.push(std::move(root));
        while (static_cast<int>(picked.size()) < m) {
            RankCell cell = queue.top();
            queue.pop();
            picked.push_back(cell.champion);
            // The champion's cell splits into one child per greedy pick: child
            // i forces picks before i and excludes pick i. Together the
            // children cover the cell minus its champion, pairwise disjointly.
            RankCell child = cell;
            for (int g : cell.free_picks) {
                child.excluded[g] = 1;
                if (complete_cell(child, w, order, k)) queue.push(child);
                child.excluded[g] = 0;
                child.forced.push_back(g);
            }
        }
    }
    return package_edges(w, k, std::move(picked));
}

DpSolution linear_opt_hyper_enumerate(const WeightVector& w, int k, int m,
                                      const EnumerationCaps& caps) {
    int n = static_cast<int>(w.size());
    if (k < 1) throw DomainError("edge size must be at least 1");
    if (m < 0) throw DomainError("edge count must be nonnegative");
    if (binomial_capped(n, k, caps.max_enumerations) > caps.max_enumerations) {
        throw EnumerationCapError("edge universe exceeds max_enumerations");
    }
    std::vector<Edge> all;
    if (k <= n) {
        std::vector<int> c(k);
        std::iota(c.begin(), c.end(), 0);
        do {
            Edge e(k);
            for (int i = 0; i < k; ++i) e[i] = c[i] + 1;
            all.push_back(std::move(e));
        } while (next_combination(c, n));
    }
    if (static_cast<int>(all.size()) < m) {
        throw InfeasibleCountError("more edges requested than distinct k-subsets exist");
    }
    std::stable_sort(all.begin(), all.end(), [&](const Edge& a, const Edge& b) {
        Rational wa = edge_weight(w, a), wb = edge_weight(w, b);
        if (wa != wb) return wa > wb;
        return a < b;
    });
    all.resize(m);
    return package_edges(w, k, std::move(all));
}

} // namespace degseq
