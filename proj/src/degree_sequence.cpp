#include "degseq/degree_sequence.hpp"

#include <algorithm>
#include <numeric>

namespace degseq {

bool all_nonnegative(const DegreeSequence& d) {
    return std::all_of(d.begin(), d.end(), [](int v) { return v >= 0; });
}

bool is_canonical(const DegreeSequence& d) {
    return std::is_sorted(d.begin(), d.end(), std::greater<int>());
}

std::pair<DegreeSequence, std::vector<int>> canonicalize(const DegreeSequence& d) {
    std::vector<int> perm(d.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int a, int b) { return d[a] > d[b]; });
    DegreeSequence sorted(d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        sorted[i] = d[perm[i]];
    return {std::move(sorted), std::move(perm)};
}

DegreeSequence canonical(const DegreeSequence& d) {
    DegreeSequence sorted(d);
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    return sorted;
}

long long degree_sum(const DegreeSequence& d) {
    return std::accumulate(d.begin(), d.end(), 0LL);
}

} // namespace degseq
