#pragma once

#include <optional>
#include <random>
#include <vector>

#include "degseq/config.hpp"
#include "degseq/degree_sequence.hpp"
#include "degseq/hypergraph.hpp"

namespace degseq {

// An instance of 3-partition: split the n items into triples, each summing to b.
struct ThreePartitionInstance {
    std::vector<int> a;
    int b = 0;
};

// Output of the reduction from 3-partition to the 3-hypergraph degree
// sequence decision problem. s_plus collects every triple whose w-sum is
// positive; d is 1 + its degree sequence, or a unit vector in the degenerate
// case (w does not sum to zero, so the instance is a trivial no).
struct ReductionOutput {
    std::vector<int> w; // w_i = 3 a_i - b
    Hypergraph s_plus;
    DegreeSequence d;
    bool degenerate = false;
};

// The reduction itself: d is the degree sequence of some 3-uniform simple
// hypergraph if and only if the instance has a solution.
ReductionOutput reduce_3partition(const ThreePartitionInstance& inst);

// Appends k-3 entries equal to m = (sum d)/3 so that d is a 3-hypergraph
// degree sequence iff the result is a k-hypergraph degree sequence. Throws
// NotDivisibleError when sum d is not a multiple of 3.
DegreeSequence lift_to_k(const DegreeSequence& d, int k);

// Exhaustive backtracking: a perfect cover of the items by triples, every
// triple summing to b, or nullopt when none exists.
std::optional<Hypergraph> solve_3partition_bruteforce(const ThreePartitionInstance& inst,
                                                      const EnumerationCaps& caps = {});

// Test-support generators. The yes-instance is assembled from a hidden valid
// partition; the perturbed one mutates a yes-instance and may land on either
// side, so callers label it with the brute-force solver.
ThreePartitionInstance random_yes_instance(int groups, int amax, int bmax, std::mt19937& rng);
ThreePartitionInstance random_perturbed_instance(int groups, int amax, int bmax,
                                                 std::mt19937& rng);

} // namespace degseq
