#pragma once

#include <optional>

#include "degseq/config.hpp"
#include "degseq/hypergraph.hpp"
#include "degseq/objective.hpp"
#include "degseq/optimize.hpp"

namespace degseq {

// All k-subsets of {1..n} in lexicographic order. Throws EnumerationCapError
// when C(n,k) exceeds caps.max_base_edges.
std::vector<Edge> edge_universe(int n, int k, const EnumerationCaps& caps = {});

// Streams every simple k-uniform hypergraph on 1..n with exactly m edges, one
// per m-subset of the edge universe, in lexicographic order of the index
// combination. The stream length is checked against caps at construction.
class HypergraphEnumerator {
public:
    HypergraphEnumerator(int n, int k, int m, const EnumerationCaps& caps = {});

    std::optional<Hypergraph> next();
    bool skip();             // advance without materializing; false when exhausted
    bool done() const { return done_; }
    long long total() const { return total_; }
    const std::vector<Edge>& universe() const { return universe_; }
    const std::vector<int>& current() const { return combo_; } // valid while !done()

private:
    int n_, k_, m_;
    std::vector<Edge> universe_;
    std::vector<int> combo_;
    bool done_ = false;
    long long total_ = 0;
};

// Same stream over multihypergraphs: every multiset of m edges, i.e. every
// nondecreasing index tuple, in lexicographic order.
class MultihypergraphEnumerator {
public:
    MultihypergraphEnumerator(int n, int k, int m, const EnumerationCaps& caps = {});

    std::optional<Multihypergraph> next();
    bool skip();
    bool done() const { return done_; }
    long long total() const { return total_; }
    const std::vector<Edge>& universe() const { return universe_; }
    const std::vector<int>& current() const { return combo_; }

private:
    int n_, k_, m_;
    std::vector<Edge> universe_;
    std::vector<int> combo_;
    bool done_ = false;
    long long total_ = 0;
};

enum class StructureMode { hyper, multi };

// Exhaustive optimum of evaluate(F, degrees(G)) over all structures with the
// given shape; the ground truth the solver tests compare against.
// Deterministic tie-break: higher value, then lexicographically larger
// canonical degree sequence, then the earliest structure in enumeration
// order. jobs > 1 shards the scan without changing the result.
DpSolution brute_opt(const ObjectiveSpec& F, int n, int k, int m, StructureMode mode,
                     const EnumerationCaps& caps = {}, int jobs = 1);

// Is d the degree sequence of a simple k-uniform hypergraph? Exact
// backtracking: cover the highest-residual vertex first, branch on its
// lexicographically-smallest covering edge, prune with the multihypergraph
// bounds (sum residual == k * residual edge count, max residual <= residual
// edge count) and per-vertex incidence counts.
std::optional<Hypergraph> decide_degree_sequence(const DegreeSequence& d, int k,
                                                 const EnumerationCaps& caps = {});

} // namespace degseq
