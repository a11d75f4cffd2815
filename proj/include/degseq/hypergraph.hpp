#pragma once

#include <utility>
#include <vector>

#include "degseq/degree_sequence.hpp"

namespace degseq {

// A k-subset of {1,...,n}, stored sorted ascending.
using Edge = std::vector<int>;

// Simple k-uniform hypergraph on vertices 1..n. Edges are distinct and kept
// sorted lexicographically so equal hypergraphs compare equal.
struct Hypergraph {
    int n = 0;
    int k = 0;
    std::vector<Edge> edges;

    bool operator==(const Hypergraph&) const = default;
};

// k-uniform multihypergraph: distinct edge keys with multiplicities >= 1,
// sorted lexicographically by edge.
struct Multihypergraph {
    int n = 0;
    int k = 0;
    std::vector<std::pair<Edge, int>> edges;

    long long edge_count() const; // sum of multiplicities

    bool operator==(const Multihypergraph&) const = default;
};

enum class VertexLabel { dominating, isolating };

// Threshold graph in layered form: vertex i is adjacent to every vertex j > i
// when labels[i-1] is dominating, and to none of them otherwise. The edge set
// is derived from the labels, so the two can never disagree.
struct ThresholdGraph {
    int n = 0;
    std::vector<VertexLabel> labels;

    std::vector<Edge> edge_set() const;

    bool operator==(const ThresholdGraph&) const = default;
};

// Boundary validation; throws DomainError when an invariant is broken.
void validate_edge(const Edge& e, int n, int k);
void validate(const Hypergraph& g);
void validate(const Multihypergraph& g);
void validate(const ThresholdGraph& g);

DegreeSequence degree_sequence(const Hypergraph& g);
DegreeSequence degree_sequence(const Multihypergraph& g);
DegreeSequence degree_sequence(const ThresholdGraph& g);

// Convenience constructors that validate and normalize edge order.
Hypergraph make_hypergraph(int n, int k, std::vector<Edge> edges);
Multihypergraph make_multihypergraph(int n, int k, std::vector<std::pair<Edge, int>> edges);

} // namespace degseq
