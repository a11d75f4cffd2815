#include "degseq/reduction.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "degseq/combinatorics.hpp"
#include "degseq/errors.hpp"

namespace degseq {

namespace {

void check_instance(const ThreePartitionInstance& inst) {
    if (inst.a.empty()) throw DomainError("instance needs at least one item");
    if (inst.b < 0) throw DomainError("target must be nonnegative");
    for (int v : inst.a) {
        if (v < 0) throw DomainError("item values must be nonnegative");
    }
}

} // namespace

ReductionOutput reduce_3partition(const ThreePartitionInstance& inst) {
    check_instance(inst);
    const int n = static_cast<int>(inst.a.size());
    if (n < 3) throw DomainError("reduction needs at least three items");

    ReductionOutput out;
    out.w.resize(n);
    long long wsum = 0;
    for (int i = 0; i < n; ++i) {
        out.w[i] = 3 * inst.a[i] - inst.b;
        wsum += out.w[i];
    }

    std::vector<Edge> plus;
    std::vector<int> c = {0, 1, 2};
    do {
        long long s = 0;
        for (int i : c) s += out.w[i];
        if (s > 0) plus.push_back({c[0] + 1, c[1] + 1, c[2] + 1});
    } while (next_combination(c, n));
    out.s_plus = make_hypergraph(n, 3, plus);

    out.degenerate = wsum != 0;
    if (out.degenerate) {
        out.d.assign(n, 0);
        out.d[0] = 1;
    } else {
        out.d = degree_sequence(out.s_plus);
        for (int& v : out.d) v += 1;
    }
    return out;
}

DegreeSequence lift_to_k(const DegreeSequence& d, int k) {
    if (k < 3) throw DomainError("lift target must be at least 3");
    if (!all_nonnegative(d)) throw DomainError("degrees must be nonnegative");
    long long sum = degree_sum(d);
    if (sum % 3 != 0) throw NotDivisibleError("degree sum is not a multiple of 3");
    long long m = sum / 3;
    if (m > std::numeric_limits<int>::max()) throw DomainError("edge count overflows int");
    DegreeSequence out = d;
    for (int i = 3; i < k; ++i) out.push_back(static_cast<int>(m));
    return out;
}

std::optional<Hypergraph> solve_3partition_bruteforce(const ThreePartitionInstance& inst,
                                                      const EnumerationCaps& caps) {
    check_instance(inst);
    const int n = static_cast<int>(inst.a.size());
    if (n > caps.max_backtrack_n) {
        throw EnumerationCapError("instance too large for backtracking");
    }
    if (n % 3 != 0) return std::nullopt;
    long long total = std::accumulate(inst.a.begin(), inst.a.end(), 0LL);
    if (total != static_cast<long long>(n / 3) * inst.b) return std::nullopt;

    std::vector<char> used(n, 0);
    std::vector<Edge> chosen;
    long long budget = caps.max_enumerations;

    // Always cover the lowest unused item; its triple partners are chosen in
    // increasing index order, so each cover is generated exactly once.
    auto search = [&](auto&& self) -> bool {
        if (budget-- <= 0) throw EnumerationCapError("backtracking node budget exhausted");
        int v = 0;
        while (v < n && used[v]) ++v;
        if (v == n) return true;
        used[v] = 1;
        for (int i = v + 1; i < n; ++i) {
            if (used[i]) continue;
            used[i] = 1;
            for (int j = i + 1; j < n; ++j) {
                if (used[j]) continue;
                if (inst.a[v] + inst.a[i] + inst.a[j] != inst.b) continue;
                used[j] = 1;
                chosen.push_back({v + 1, i + 1, j + 1});
                if (self(self)) return true;
                chosen.pop_back();
                used[j] = 0;
            }
            used[i] = 0;
        }
        used[v] = 0;
        return false;
    };

    if (!search(search)) return std::nullopt;
    return make_hypergraph(n, 3, chosen);
}

ThreePartitionInstance random_yes_instance(int groups, int amax, int bmax, std::mt19937& rng) {
    if (groups < 1 || amax < 0 || bmax < 0) throw DomainError("bad generator parameters");
    ThreePartitionInstance inst;
    int bhi = std::min(bmax, 3 * amax);
    inst.b = std::uniform_int_distribution<int>(0, bhi)(rng);
    for (int g = 0; g < groups; ++g) {
        int x = std::uniform_int_distribution<int>(std::max(0, inst.b - 2 * amax),
                                                   std::min(amax, inst.b))(rng);
        int rest = inst.b - x;
        int y = std::uniform_int_distribution<int>(std::max(0, rest - amax),
                                                   std::min(amax, rest))(rng);
        inst.a.push_back(x);
        inst.a.push_back(y);
        inst.a.push_back(rest - y);
    }
    std::shuffle(inst.a.begin(), inst.a.end(), rng);
    return inst;
}

ThreePartitionInstance random_perturbed_instance(int groups, int amax, int bmax,
                                                 std::mt19937& rng) {
    ThreePartitionInstance inst = random_yes_instance(groups, amax, bmax, rng);
    if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
        inst.b = std::uniform_int_distribution<int>(0, bmax)(rng);
    } else {
        int idx = std::uniform_int_distribution<int>(0, static_cast<int>(inst.a.size()) - 1)(rng);
        inst.a[idx] = std::uniform_int_distribution<int>(0, amax)(rng);
    }
    return inst;
}

} // namespace degseq
