#include "degseq/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "degseq/errors.hpp"

namespace degseq {

long long Multihypergraph::edge_count() const {
    long long total = 0;
    for (const auto& [edge, mult] : edges)
        total += mult;
    return total;
}

std::vector<Edge> ThresholdGraph::edge_set() const {
    std::vector<Edge> out;
    for (int i = 1; i <= n; ++i) {
        if (labels[i - 1] != VertexLabel::dominating)
            continue;
        for (int j = i + 1; j <= n; ++j)
            out.push_back({i, j});
    }
    std::sort(out.begin(), out.end());
    return out;
}

void validate_edge(const Edge& e, int n, int k) {
    if ((int)e.size() != k)
        throw DomainError("edge has " + std::to_string(e.size()) + " vertices, expected " +
                          std::to_string(k));
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 1 || e[i] > n)
            throw DomainError("edge vertex " + std::to_string(e[i]) + " outside 1.." +
                              std::to_string(n));
        if (i > 0 && e[i - 1] >= e[i])
            throw DomainError("edge vertices must be strictly increasing");
    }
}

void validate(const Hypergraph& g) {
    if (g.n < 0 || g.k < 0)
        throw DomainError("hypergraph with negative n or k");
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        validate_edge(g.edges[i], g.n, g.k);
        if (i > 0 && !(g.edges[i - 1] < g.edges[i]))
            throw DomainError("hypergraph edges must be sorted and distinct");
    }
}

void validate(const Multihypergraph& g) {
    if (g.n < 0 || g.k < 0)
        throw DomainError("multihypergraph with negative n or k");
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        validate_edge(g.edges[i].first, g.n, g.k);
        if (g.edges[i].second < 1)
            throw DomainError("edge multiplicity must be >= 1");
        if (i > 0 && !(g.edges[i - 1].first < g.edges[i].first))
            throw DomainError("multihypergraph edge keys must be sorted and distinct");
    }
}

void validate(const ThresholdGraph& g) {
    if (g.n < 0)
        throw DomainError("threshold graph with negative n");
    if ((int)g.labels.size() != g.n)
        throw DomainError("threshold graph needs one label per vertex");
}

DegreeSequence degree_sequence(const Hypergraph& g) {
    DegreeSequence d(g.n, 0);
    for (const Edge& e : g.edges)
        for (int v : e)
            ++d[v - 1];
    return d;
}

DegreeSequence degree_sequence(const Multihypergraph& g) {
    DegreeSequence d(g.n, 0);
    for (const auto& [edge, mult] : g.edges)
        for (int v : edge)
            d[v - 1] += mult;
    return d;
}

DegreeSequence degree_sequence(const ThresholdGraph& g) {
    // Degree of vertex i: one edge per dominating vertex before it, plus all
    // later vertices when i itself dominates.
    DegreeSequence d(g.n, 0);
    int doms_before = 0;
    for (int i = 1; i <= g.n; ++i) {
        d[i - 1] = doms_before;
        if (g.labels[i - 1] == VertexLabel::dominating) {
            d[i - 1] += g.n - i;
            ++doms_before;
        }
    }
    return d;
}

Hypergraph make_hypergraph(int n, int k, std::vector<Edge> edges) {
    for (Edge& e : edges)
        std::sort(e.begin(), e.end());
    std::sort(edges.begin(), edges.end());
    Hypergraph g{n, k, std::move(edges)};
    validate(g);
    return g;
}

Multihypergraph make_multihypergraph(int n, int k, std::vector<std::pair<Edge, int>> edges) {
    for (auto& [e, mult] : edges)
        std::sort(e.begin(), e.end());
    std::sort(edges.begin(), edges.end());
    // merge duplicate keys
    std::vector<std::pair<Edge, int>> merged;
    for (auto& entry : edges) {
        if (!merged.empty() && merged.back().first == entry.first)
            merged.back().second += entry.second;
        else
            merged.push_back(std::move(entry));
    }
    Multihypergraph g{n, k, std::move(merged)};
    validate(g);
    return g;
}

} // namespace degseq
