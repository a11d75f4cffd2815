#pragma once

#include <optional>

#include "degseq/degree_sequence.hpp"
#include "degseq/hypergraph.hpp"

namespace degseq {

// Erdos-Gallai test: true iff d (any order, canonicalized internally) is the
// degree sequence of a simple graph.
bool eg_check(const DegreeSequence& d);

// Havel-Hakimi construction of a simple graph whose degree sequence equals d
// exactly, in the caller's vertex labeling. nullopt iff d is not graphical.
std::optional<Hypergraph> havel_hakimi_realize(const DegreeSequence& d);

// True iff d is the degree sequence of some k-uniform multihypergraph with m
// edges: sum(d) == k*m, every d_i <= m, and k <= n whenever m >= 1.
// Requires k >= 1, m >= 0.
bool multi_feasible(const DegreeSequence& d, int k, int m);

// Greedy realization: m times, take an edge on the k largest residual degrees
// (ties by lowest vertex) and decrement them. Succeeds iff multi_feasible.
std::optional<Multihypergraph> multi_realize(const DegreeSequence& d, int k, int m);

// Peels d into a threshold graph: repeatedly place a residual-zero vertex as
// isolating (preferred) or a full-residual vertex as dominating. The layered
// form dictates which position can carry which degree, so the witness lists
// vertices in peel order and matches d as a multiset. nullopt iff the peeling
// gets stuck, i.e. no threshold graph has degree sequence d.
std::optional<ThresholdGraph> threshold_realize(const DegreeSequence& d);

// Neighborhood nesting: N(i) ⊆ N[j] whenever deg(i) <= deg(j). Requires k == 2.
bool is_threshold(const Hypergraph& g);

} // namespace degseq
