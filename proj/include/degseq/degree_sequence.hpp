#pragma once

#include <utility>
#include <vector>

namespace degseq {

// Vertex degrees, one entry per vertex (vertex i has degree d[i-1]).
// Entries are nonnegative integers. The canonical form is sorted
// nonincreasing; functions state explicitly when they require or return it.
using DegreeSequence = std::vector<int>;

bool all_nonnegative(const DegreeSequence& d);

// True if d is sorted nonincreasing.
bool is_canonical(const DegreeSequence& d);

// Stable canonicalization: returns the sorted-nonincreasing copy and the
// permutation `perm` with sorted[i] == d[perm[i]]. Equal entries keep their
// original relative order, so the permutation is deterministic.
std::pair<DegreeSequence, std::vector<int>> canonicalize(const DegreeSequence& d);

// Just the sorted-nonincreasing copy.
DegreeSequence canonical(const DegreeSequence& d);

long long degree_sum(const DegreeSequence& d);

} // namespace degseq
