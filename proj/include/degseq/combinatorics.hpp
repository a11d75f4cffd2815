#pragma once

#include <vector>

namespace degseq {

// C(n, k), except that any value exceeding `cap` is reported as cap + 1 so
// callers can range-check without overflow.
long long binomial_capped(long long n, long long k, long long cap);

// Advances c (strictly increasing indices into 0..n-1) to the next k-subset
// in lexicographic order; false when c was the last one.
bool next_combination(std::vector<int>& c, int n);

// Same for multisets: c is nondecreasing over 0..n-1.
bool next_multicombination(std::vector<int>& c, int n);

} // namespace degseq
