#pragma once

#include <variant>

#include "degseq/config.hpp"
#include "degseq/hypergraph.hpp"
#include "degseq/objective.hpp"

namespace degseq {

using Witness = std::variant<Hypergraph, Multihypergraph, ThresholdGraph>;

// Output of every optimizer: the exact optimal value, an optimal degree
// sequence with evaluate(F, degrees) == value, and a structure realizing a
// permutation of those degrees. For identical objectives the degrees are
// canonical (nonincreasing); for per-vertex objectives entry i is the degree
// of vertex i+1.
struct DpSolution {
    Rational value;
    DegreeSequence degrees;
    Witness witness;
};

// Best multihypergraph for a linear objective: m copies of the single edge on
// the k largest weights (ties to the lowest vertex index).
DpSolution linear_opt_multi(const WeightVector& w, int k, int m);

// The m distinct k-edges with the largest total weight, found by best-first
// ranking over forced/excluded subproblems; never materializes the full edge
// universe. Throws InfeasibleCountError when m > C(n,k).
DpSolution linear_opt_hyper(const WeightVector& w, int k, int m,
                            const EnumerationCaps& caps = {});

// Reference implementation of the same selection by sorting all C(n,k) edges;
// subject to caps.max_enumerations.
DpSolution linear_opt_hyper_enumerate(const WeightVector& w, int k, int m,
                                      const EnumerationCaps& caps = {});

// Maximizes sum f_i(d_i) over {d in Z^n, d >= 0, sum d = k*m, d_i <= m}, the
// degree sequences of k-uniform multihypergraphs with m edges. Dynamic
// program over partial degree sums; exact rational value with an int64 fast
// path when the tables scale to a common denominator.
DpSolution opt_multi_dp(const ObjectiveSpec& F, int k, int n, int m);

// Maximizes sum f(d_i) over all graphical sequences with m edges (identical
// objectives only). States track prefix position, prefix sum, last prefix
// degree, suffix boundary and suffix sum; transitions enforce monotonicity,
// the degree-sum budget and the Erdos-Gallai inequality at each prefix index.
// Equal-value ties resolve to the lexicographically largest canonical
// sequence.
DpSolution opt_graph_dp(const ObjectiveSpec& F, int n, int m);

// Maximizes sum f(d_i) for convex identical f over all m-edge graphs; the
// optimum is attained by a threshold graph, found by deciding each vertex
// dominating or isolating in order. O(n^2 m) states.
DpSolution opt_threshold_dp(const ObjectiveSpec& F, int n, int m);

enum class ConvexMultiMode { separable_convex, enumerate_supports };

// Best multihypergraph consisting of m copies of one edge. In
// separable_convex mode (requires is_convex) the edge is the support of the k
// largest gains f_i(m) - f_i(0), which is a global optimum; enumerate mode
// scans all C(n,k) supports and needs no convexity.
DpSolution opt_convex_multi(const ObjectiveSpec& F, int k, int n, int m, ConvexMultiMode mode,
                            const EnumerationCaps& caps = {});

} // namespace degseq
