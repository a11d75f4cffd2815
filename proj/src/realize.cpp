#include "degseq/realize.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "degseq/errors.hpp"

namespace degseq {

bool eg_check(const DegreeSequence& d) {
    if (!all_nonnegative(d))
        return false;
    const int n = (int)d.size();
    DegreeSequence s = canonical(d);
    long long total = degree_sum(s);
    if (total % 2 != 0)
        return false;
    // sum_{i<=j} d_i - j(j-1) <= sum_{i>j} min(j, d_i) for every prefix length j
    long long prefix = 0;
    for (int j = 1; j <= n; ++j) {
        prefix += s[j - 1];
        long long tail = 0;
        for (int i = j; i < n; ++i)
            tail += std::min<long long>(j, s[i]);
        if (prefix - (long long)j * (j - 1) > tail)
            return false;
    }
    return true;
}

std::optional<Hypergraph> havel_hakimi_realize(const DegreeSequence& d) {
    if (!all_nonnegative(d))
        return std::nullopt;
    const int n = (int)d.size();
    DegreeSequence residual(d);
    std::vector<int> order(n);
    std::vector<Edge> edges;

    for (int round = 0; round < n; ++round) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return residual[a] > residual[b]; });
        int v = order[0];
        int need = residual[v];
        if (need == 0)
            break;
        if (need >= n)
            return std::nullopt;
        residual[v] = 0;
        // connect v to the `need` next-largest residuals
        for (int t = 1; t <= need; ++t) {
            int u = order[t];
            if (residual[u] == 0)
                return std::nullopt;
            --residual[u];
            edges.push_back({std::min(u, v) + 1, std::max(u, v) + 1});
        }
    }
    if (std::any_of(residual.begin(), residual.end(), [](int r) { return r != 0; }))
        return std::nullopt;
    std::sort(edges.begin(), edges.end());
    return Hypergraph{n, 2, std::move(edges)};
}

bool multi_feasible(const DegreeSequence& d, int k, int m) {
    if (k < 1 || m < 0)
        throw DomainError("multi_feasible needs k >= 1 and m >= 0");
    if (!all_nonnegative(d))
        return false;
    const int n = (int)d.size();
    if (m >= 1 && k > n)
        return false;
    if (degree_sum(d) != (long long)k * m)
        return false;
    return std::all_of(d.begin(), d.end(), [&](int v) { return v <= m; });
}

std::optional<Multihypergraph> multi_realize(const DegreeSequence& d, int k, int m) {
    if (!multi_feasible(d, k, m))
        return std::nullopt;
    const int n = (int)d.size();
    DegreeSequence residual(d);
    std::vector<int> order(n);
    std::vector<std::pair<Edge, int>> edges;

    for (int step = 0; step < m; ++step) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return residual[a] > residual[b]; });
        Edge e;
        e.reserve(k);
        for (int t = 0; t < k; ++t) {
            int v = order[t];
            if (residual[v] == 0)
                return std::nullopt; // cannot happen for feasible input
            --residual[v];
            e.push_back(v + 1);
        }
        std::sort(e.begin(), e.end());
        edges.emplace_back(std::move(e), 1);
    }
    return make_multihypergraph(n, k, std::move(edges));
}

std::optional<ThresholdGraph> threshold_realize(const DegreeSequence& d) {
    if (!all_nonnegative(d))
        return std::nullopt;
    const int n = (int)d.size();
    std::vector<int> residual(d);
    std::vector<char> placed(n, 0);
    std::vector<VertexLabel> labels;
    labels.reserve(n);

    int remaining = n;
    while (remaining > 0) {
        int zero = -1, full = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[v])
                continue;
            if (residual[v] == 0 && zero < 0)
                zero = v;
            if (residual[v] == remaining - 1 && full < 0)
                full = v;
        }
        // Both moves stay valid whenever either does, so preferring the
        // zero-degree peel is just a deterministic choice.
        if (zero >= 0) {
            placed[zero] = 1;
            labels.push_back(VertexLabel::isolating);
        } else if (full >= 0) {
            placed[full] = 1;
            labels.push_back(VertexLabel::dominating);
            for (int v = 0; v < n; ++v)
                if (!placed[v])
                    --residual[v];
        } else {
            return std::nullopt;
        }
        --remaining;
    }
    return ThresholdGraph{n, std::move(labels)};
}

bool is_threshold(const Hypergraph& g) {
    if (g.k != 2)
        throw DomainError("is_threshold needs a simple graph (k == 2)");
    validate(g);
    const int n = g.n;
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    DegreeSequence deg(n, 0);
    for (const Edge& e : g.edges) {
        adj[e[0] - 1][e[1] - 1] = adj[e[1] - 1][e[0] - 1] = 1;
        ++deg[e[0] - 1];
        ++deg[e[1] - 1];
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || deg[i] > deg[j])
                continue;
            // every neighbor of i must be j itself or a neighbor of j
            for (int u = 0; u < n; ++u)
                if (adj[i][u] && u != j && !adj[j][u])
                    return false;
        }
    return true;
}

} // namespace degseq
