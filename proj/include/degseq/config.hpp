#pragma once

namespace degseq {

// Guard rails for the exponential-size helpers. Affected functions check the
// relevant cap up front and throw EnumerationCapError instead of grinding.
struct EnumerationCaps {
    // Largest edge universe C(n,k) an enumeration or backtracking search may use.
    long long max_base_edges = 28;
    // Most structures one enumeration may visit / most nodes one search may expand.
    long long max_enumerations = 2'000'000;
    // dn2_membership walks 3^n (S,T) pairs.
    int max_dn2_n = 12;
    // 3-partition brute force is exponential in n.
    int max_backtrack_n = 12;
    // Most points one hull-membership LP may take as columns.
    long long max_hull_points = 50'000;
};

} // namespace degseq
