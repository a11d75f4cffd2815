#include "degseq/oracle.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <thread>
#include <unordered_set>

#include "degseq/combinatorics.hpp"
#include "degseq/errors.hpp"

namespace degseq {

namespace {

std::vector<Edge> build_universe(int n, int k) {
    std::vector<Edge> out;
    if (k > n) return out;
    std::vector<int> c(k);
    std::iota(c.begin(), c.end(), 0);
    if (k == 0) {
        return out; // edges have size k >= 1 by validation, unreachable in practice
    }
    do {
        Edge e(k);
        for (int i = 0; i < k; ++i) e[i] = c[i] + 1;
        out.push_back(std::move(e));
    } while (next_combination(c, n));
    return out;
}

void check_shape(int n, int k, int m) {
    if (n < 0) throw DomainError("vertex count must be nonnegative");
    if (k < 1) throw DomainError("edge size must be at least 1");
    if (m < 0) throw DomainError("edge count must be nonnegative");
}

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

} // namespace

std::vector<Edge> edge_universe(int n, int k, const EnumerationCaps& caps) {
    check_shape(n, k, 0);
    long long count = binomial_capped(n, k, caps.max_base_edges);
    if (count > caps.max_base_edges) {
        throw EnumerationCapError("edge universe exceeds max_base_edges");
    }
    return build_universe(n, k);
}

HypergraphEnumerator::HypergraphEnumerator(int n, int k, int m, const EnumerationCaps& caps)
    : n_(n), k_(k), m_(m), universe_(edge_universe(n, k, caps)) {
    long long u = static_cast<long long>(universe_.size());
    total_ = binomial_capped(u, m, caps.max_enumerations);
    if (total_ > caps.max_enumerations) {
        throw EnumerationCapError("hypergraph stream exceeds max_enumerations");
    }
    if (m_ > u) {
        done_ = true;
        return;
    }
    combo_.resize(m_);
    std::iota(combo_.begin(), combo_.end(), 0);
}

std::optional<Hypergraph> HypergraphEnumerator::next() {
    if (done_) return std::nullopt;
    std::vector<Edge> edges;
    edges.reserve(m_);
    for (int idx : combo_) edges.push_back(universe_[idx]);
    Hypergraph g{n_, k_, std::move(edges)};
    skip();
    return g;
}

bool HypergraphEnumerator::skip() {
    if (done_) return false;
    if (m_ == 0 || !next_combination(combo_, static_cast<int>(universe_.size()))) {
        done_ = true;
    }
    return true;
}

MultihypergraphEnumerator::MultihypergraphEnumerator(int n, int k, int m,
                                                     const EnumerationCaps& caps)
    : n_(n), k_(k), m_(m), universe_(edge_universe(n, k, caps)) {
    long long u = static_cast<long long>(universe_.size());
    total_ = binomial_capped(u + m - 1, m, caps.max_enumerations);
    if (total_ > caps.max_enumerations) {
        throw EnumerationCapError("multihypergraph stream exceeds max_enumerations");
    }
    if (u == 0 && m_ > 0) {
        done_ = true;
        total_ = 0;
        return;
    }
    combo_.assign(m_, 0);
}

std::optional<Multihypergraph> MultihypergraphEnumerator::next() {
    if (done_) return std::nullopt;
    std::vector<std::pair<Edge, int>> edges;
    for (std::size_t i = 0; i < combo_.size();) {
        std::size_t j = i;
        while (j < combo_.size() && combo_[j] == combo_[i]) ++j;
        edges.emplace_back(universe_[combo_[i]], static_cast<int>(j - i));
        i = j;
    }
    Multihypergraph g{n_, k_, std::move(edges)};
    skip();
    return g;
}

bool MultihypergraphEnumerator::skip() {
    if (done_) return false;
    if (m_ == 0 || !next_multicombination(combo_, static_cast<int>(universe_.size()))) {
        done_ = true;
    }
    return true;
}

namespace {

struct ShardBest {
    bool found = false;
    Rational value;
    DegreeSequence degrees;
    DegreeSequence canon;
    long long ordinal = 0;
    std::vector<int> combo;
};

// One shard of the scan: ordinals congruent to shard (mod jobs). Collapses by
// degree key so each distinct key is evaluated exactly once.
template <typename Enumerator>
void scan_shard(const ObjectiveSpec& F, int n, int k, int m, const EnumerationCaps& caps,
                int jobs, int shard, ShardBest& best) {
    Enumerator en(n, k, m, caps);
    std::unordered_set<std::vector<int>, VecHash> seen;
    DegreeSequence deg(n), canon(n);
    long long ordinal = -1;
    while (!en.done()) {
        ordinal += 1;
        if (ordinal % jobs != shard) {
            en.skip();
            continue;
        }
        const std::vector<int>& combo = en.current();
        std::fill(deg.begin(), deg.end(), 0);
        for (int idx : combo) {
            for (int v : en.universe()[idx]) deg[v - 1] += 1;
        }
        canon = deg;
        std::sort(canon.begin(), canon.end(), std::greater<int>());
        const std::vector<int>& key = F.kind == ObjectiveKind::identical ? canon : deg;
        if (seen.insert(key).second) {
            Rational value = evaluate(F, deg);
            bool better = !best.found || value > best.value ||
                          (value == best.value && canon > best.canon);
            if (better) {
                best.found = true;
                best.value = std::move(value);
                best.degrees = deg;
                best.canon = canon;
                best.ordinal = ordinal;
                best.combo = combo;
            }
        }
        en.skip();
    }
}

template <typename Enumerator>
ShardBest scan_all(const ObjectiveSpec& F, int n, int k, int m, const EnumerationCaps& caps,
                   int jobs) {
    std::vector<ShardBest> bests(jobs);
    if (jobs == 1) {
        scan_shard<Enumerator>(F, n, k, m, caps, 1, 0, bests[0]);
    } else {
        std::vector<std::thread> threads;
        std::vector<std::exception_ptr> errors(jobs);
        for (int s = 0; s < jobs; ++s) {
            threads.emplace_back([&, s] {
                try {
                    scan_shard<Enumerator>(F, n, k, m, caps, jobs, s, bests[s]);
                } catch (...) {
                    errors[s] = std::current_exception();
                }
            });
        }
        for (auto& t : threads) t.join();
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }
    ShardBest merged;
    for (auto& b : bests) {
        if (!b.found) continue;
        bool better = !merged.found || b.value > merged.value ||
                      (b.value == merged.value && b.canon > merged.canon) ||
                      (b.value == merged.value && b.canon == merged.canon &&
                       b.ordinal < merged.ordinal);
        if (better) merged = std::move(b);
    }
    return merged;
}

} // namespace

DpSolution brute_opt(const ObjectiveSpec& F, int n, int k, int m, StructureMode mode,
                     const EnumerationCaps& caps, int jobs) {
    check_shape(n, k, m);
    validate(F);
    if (F.kind == ObjectiveKind::per_vertex &&
        static_cast<int>(F.tables.size()) != n) {
        throw DomainError("per-vertex objective must have one table per vertex");
    }
    if (jobs < 1) throw DomainError("jobs must be at least 1");

    ShardBest best;
    if (mode == StructureMode::hyper) {
        best = scan_all<HypergraphEnumerator>(F, n, k, m, caps, jobs);
    } else {
        best = scan_all<MultihypergraphEnumerator>(F, n, k, m, caps, jobs);
    }
    if (!best.found) {
        throw InfeasibleCountError("no structure with the requested shape exists");
    }

    DpSolution out;
    out.value = best.value;
    out.degrees = F.kind == ObjectiveKind::identical ? best.canon : best.degrees;
    std::vector<Edge> universe = build_universe(n, k);
    if (mode == StructureMode::hyper) {
        std::vector<Edge> edges;
        edges.reserve(best.combo.size());
        for (int idx : best.combo) edges.push_back(universe[idx]);
        out.witness = make_hypergraph(n, k, edges);
    } else {
        std::vector<std::pair<Edge, int>> edges;
        for (std::size_t i = 0; i < best.combo.size();) {
            std::size_t j = i;
            while (j < best.combo.size() && best.combo[j] == best.combo[i]) ++j;
            edges.emplace_back(universe[best.combo[i]], static_cast<int>(j - i));
            i = j;
        }
        out.witness = make_multihypergraph(n, k, edges);
    }
    return out;
}

std::optional<Hypergraph> decide_degree_sequence(const DegreeSequence& d, int k,
                                                 const EnumerationCaps& caps) {
    if (k < 1) throw DomainError("edge size must be at least 1");
    int n = static_cast<int>(d.size());
    if (n > caps.max_backtrack_n) {
        throw EnumerationCapError("sequence too long for backtracking decision");
    }
    if (!all_nonnegative(d)) return std::nullopt;
    long long sum = degree_sum(d);
    if (sum % k != 0) return std::nullopt;
    int m = static_cast<int>(sum / k);
    if (m == 0) return Hypergraph{n, k, {}};

    std::vector<Edge> universe = build_universe(n, k);
    int u = static_cast<int>(universe.size());
    // incident[v]: universe indices of edges containing vertex v+1, in lex order
    std::vector<std::vector<int>> incident(n);
    for (int idx = 0; idx < u; ++idx) {
        for (int v : universe[idx]) incident[v - 1].push_back(idx);
    }

    std::vector<int> resid(d.begin(), d.end());
    std::vector<int> avail(n); // non-banned edges incident to each vertex
    for (int v = 0; v < n; ++v) avail[v] = static_cast<int>(incident[v].size());
    std::vector<char> banned(u, 0);
    std::vector<int> chosen;
    long long budget = caps.max_enumerations;

    auto ban = [&](int idx) {
        banned[idx] = 1;
        for (int v : universe[idx]) avail[v - 1] -= 1;
    };
    auto unban = [&](int idx) {
        banned[idx] = 0;
        for (int v : universe[idx]) avail[v - 1] += 1;
    };

    // Branch on the lexicographically smallest chosen edge covering the
    // highest-residual vertex; banning each tried edge for its own subtree and
    // for later siblings makes the branches disjoint and exhaustive.
    auto search = [&](auto&& self, int m_rem) -> bool {
        if (budget-- <= 0) throw EnumerationCapError("backtracking node budget exhausted");
        int pivot = -1, positive = 0;
        for (int v = 0; v < n; ++v) {
            if (resid[v] > 0) {
                positive += 1;
                if (pivot < 0 || resid[v] > resid[pivot]) pivot = v;
            }
        }
        if (m_rem == 0) return positive == 0;
        if (positive < k) return false;
        for (int v = 0; v < n; ++v) {
            if (resid[v] > m_rem || resid[v] > avail[v]) return false;
        }
        std::vector<int> tried;
        bool ok = false;
        for (int idx : incident[pivot]) {
            if (banned[idx]) continue;
            bool usable = true;
            for (int v : universe[idx]) {
                if (resid[v - 1] == 0) {
                    usable = false;
                    break;
                }
            }
            if (!usable) continue;
            ban(idx);
            tried.push_back(idx);
            for (int v : universe[idx]) resid[v - 1] -= 1;
            chosen.push_back(idx);
            if (self(self, m_rem - 1)) {
                ok = true;
                break;
            }
            chosen.pop_back();
            for (int v : universe[idx]) resid[v - 1] += 1;
        }
        if (!ok) {
            for (int idx : tried) unban(idx);
        }
        return ok;
    };

    if (!search(search, m)) return std::nullopt;
    std::vector<Edge> edges;
    edges.reserve(chosen.size());
    for (int idx : chosen) edges.push_back(universe[idx]);
    return make_hypergraph(n, k, edges);
}

} // namespace degseq
