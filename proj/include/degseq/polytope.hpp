#pragma once

#include <optional>
#include <vector>

#include "degseq/config.hpp"
#include "degseq/hypergraph.hpp"
#include "degseq/rational.hpp"

namespace degseq {

// Labeled integer points (degree sequences), kept as a lexicographically
// sorted duplicate-free list. Points stay labeled throughout: the hulls below
// are taken over labeled sequences, and canonicalizing would change them.
struct PointSet {
    int dimension = 0;
    std::vector<std::vector<int>> points;
};

// All degree sequences of k-uniform simple hypergraphs on n vertices with m
// edges, by direct enumeration of the hypergraphs (subject to caps).
PointSet enumerate_degree_points(int n, int k, int m, const EnumerationCaps& caps = {});

// Is p a convex combination of the given points? A bounding-box prefilter,
// then exact rational feasibility of the convex-multiplier system.
bool hull_membership(const std::vector<Rational>& p, const PointSet& points,
                     const EnumerationCaps& caps = {});

// The subset of enumerate_degree_points(n,k,m) that are vertices of its
// convex hull: p is kept iff it is not in the hull of the other points.
// Vertexhood is invariant under coordinate permutation and the point set is
// permutation-closed, so one representative per sorted pattern is LP-tested
// and its whole orbit is copied into the answer.
PointSet polytope_vertices(int n, int k, int m, const EnumerationCaps& caps = {});

// A weight vector w with w.p > w.q for every point q != p, or nullopt when no
// such w exists. Feasibility of w.p - w.q >= 1 for all q, decided exactly;
// the unit gap is a harmless normalization of strict separation.
std::optional<WeightVector> find_separating_weights(const std::vector<int>& p,
                                                    const PointSet& points);

struct ThresholdVertexReport {
    bool equal = false;
    PointSet vertices;           // hull vertices among the m-edge degree sequences
    PointSet threshold_degrees;  // degree sequences of m-edge threshold graphs
    std::vector<std::vector<int>> only_vertices;    // vertices with no threshold realization
    std::vector<std::vector<int>> only_threshold;   // threshold sequences that are not vertices
};

// Computes both sides independently (hull vertex tests on one side, direct
// creation-sequence enumeration closed under relabeling on the other) and
// reports whether they coincide, with the differences as witnesses.
ThresholdVertexReport verify_threshold_vertex_theorem(int n, int m,
                                                      const EnumerationCaps& caps = {});

// Membership of a rational point in the convex hull of all graph degree
// sequences on n vertices (any edge count), via the inequality system
// sum_{i in S} d_i - sum_{i in T} d_i <= |S| * (n-1-|T|) over every disjoint
// pair S, T. That is 3^n inequalities, so n is capped.
bool dn2_membership(const std::vector<Rational>& d, const EnumerationCaps& caps = {});

} // namespace degseq
