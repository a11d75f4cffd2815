#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "degseq/errors.hpp"
#include "degseq/optimize.hpp"
#include "degseq/realize.hpp"
#include "scaled.hpp"

namespace degseq {

namespace {

constexpr long long kInt64CellCap = 50'000'000;
constexpr long long kRationalCellCap = 2'000'000;
constexpr std::size_t kMemoCap = 1'000'000;

// State after stage i: positions 1..i hold the nonincreasing prefix (sum p,
// last value d), positions beta+1..n hold the already fixed suffix (sum s),
// and positions i+1..beta are still open. A transition to stage i+1 picks the
// next prefix value d' and moves the boundary to beta', giving value i+1 to
// the beta-beta' positions it passes. Feasibility of a transition:
//   i+1 <= d' <= d               (prefix stays nonincreasing, position bound)
//   d' <= m                      (a vertex meets at most m edges)
//   p + d' + s + (i+1)(beta-beta') <= 2m
//   p + d' - (i+1)i <= s + (i+1)(beta-i-1)
// The last line is the Erdos-Gallai inequality at index i+1: open positions
// contribute min(i+1, d_t) = i+1 and fixed suffix positions contribute their
// full value, so it does not depend on beta'. Paths reaching i = beta with
// p + s = 2m generate exactly the graphical sequences with m edges.
template <typename V>
struct GraphCore {
    int n, m;
    const std::vector<V>* frow;

    int T = 0;          // 2m, the degree-sum budget
    long long tri = 0;  // pairs (p,s) with p+s <= T
    std::vector<long long> tri_off;
    long long stage_size = 0;

    std::vector<std::vector<V>> g;        // best completion value per state
    std::vector<std::vector<char>> gok;
    std::vector<std::vector<char>> reach; // forward reachable per stage

    std::unordered_map<long long, std::vector<int>> memo;
    bool memo_full = false;

    GraphCore(int n_, int m_, const std::vector<V>* frow_) : n(n_), m(m_), frow(frow_) {
        T = 2 * m;
        tri_off.resize(T + 2);
        long long acc = 0;
        for (int p = 0; p <= T + 1; ++p) {
            tri_off[p] = acc;
            acc += T - p + 1;
        }
        tri = tri_off[T] + 1;
        stage_size = static_cast<long long>(n + 1) * (n + 1) * tri;
    }

    V f(int t) const { return (*frow)[t]; }

    long long sidx(int d, int b, int p, int s) const {
        return (static_cast<long long>(d) * (n + 1) + b) * tri + tri_off[p] + s;
    }

    template <class Fn>
    void each_transition(int i, int d, int b, int p, int s, Fn&& fn) const {
        int rem = T - p - s;
        long long c4 = static_cast<long long>(s) +
                       static_cast<long long>(i + 1) * (b - i - 1) +
                       static_cast<long long>(i + 1) * i - p;
        long long hi = std::min<long long>(std::min<long long>(d, n - 1),
                                           std::min<long long>(m, std::min<long long>(rem, c4)));
        for (int dn = i + 1; dn <= hi; ++dn) {
            int bmin = std::max(i + 1, b - (rem - dn) / (i + 1));
            for (int bn = bmin; bn <= b; ++bn) {
                fn(dn, bn, b - bn);
            }
        }
    }

    V reward(int i, int dn, int count) const { return f(dn) + V(count) * f(i + 1); }

    void run() {
        g.assign(n + 1, std::vector<V>(stage_size));
        gok.assign(n + 1, std::vector<char>(stage_size, 0));
        reach.assign(n + 1, std::vector<char>(stage_size, 0));
        for (int a0 = 0; a0 <= n; ++a0) reach[0][sidx(n, n - a0, 0, 0)] = 1;

        for (int i = 0; i < n; ++i) {
            const std::vector<char>& cur = reach[i];
            std::vector<char>& nxt = reach[i + 1];
            for (int d = 0; d <= n; ++d) {
                for (int b = i; b <= n; ++b) {
                    for (int p = 0; p <= T; ++p) {
                        long long base = sidx(d, b, p, 0);
                        for (int s = 0; s + p <= T; ++s) {
                            if (!cur[base + s] || b == i) continue;
                            each_transition(i, d, b, p, s, [&](int dn, int bn, int count) {
                                nxt[sidx(dn, bn, p + dn, s + (i + 1) * count)] = 1;
                            });
                        }
                    }
                }
            }
        }

        for (int i = n; i >= 0; --i) {
            for (int d = 0; d <= n; ++d) {
                for (int b = i; b <= n; ++b) {
                    for (int p = 0; p <= T; ++p) {
                        long long base = sidx(d, b, p, 0);
                        for (int s = 0; s + p <= T; ++s) {
                            long long idx = base + s;
                            if (!reach[i][idx]) continue;
                            if (b == i) {
                                if (p + s == T) {
                                    g[i][idx] = V(0);
                                    gok[i][idx] = 1;
                                }
                                continue;
                            }
                            bool any = false;
                            V best{};
                            each_transition(i, d, b, p, s, [&](int dn, int bn, int count) {
                                long long ni = sidx(dn, bn, p + dn, s + (i + 1) * count);
                                if (!gok[i + 1][ni]) return;
                                V cand = reward(i, dn, count) + g[i + 1][ni];
                                if (!any || cand > best) {
                                    any = true;
                                    best = cand;
                                }
                            });
                            if (any) {
                                g[i][idx] = best;
                                gok[i][idx] = 1;
                            }
                        }
                    }
                }
            }
        }
    }

    // Values for the open positions i+1..beta along some optimal completion,
    // choosing the largest next value, then the largest boundary.
    std::vector<int> greedy_middle(int i, int d, int b, int p, int s) const {
        std::vector<int> out;
        std::vector<std::pair<int, int>> blocks; // (value, count), innermost last
        while (b > i) {
            V target = g[i][sidx(d, b, p, s)];
            int pick_d = -1, pick_b = -1;
            each_transition(i, d, b, p, s, [&](int dn, int bn, int count) {
                long long ni = sidx(dn, bn, p + dn, s + (i + 1) * count);
                if (!gok[i + 1][ni]) return;
                if (reward(i, dn, count) + g[i + 1][ni] != target) return;
                if (dn > pick_d || (dn == pick_d && bn > pick_b)) {
                    pick_d = dn;
                    pick_b = bn;
                }
            });
            if (pick_d < 0) throw std::logic_error("optimal graph path lost during walk");
            out.push_back(pick_d);
            if (pick_b < b) blocks.emplace_back(i + 1, b - pick_b);
            p += pick_d;
            s += (i + 1) * (b - pick_b);
            d = pick_d;
            b = pick_b;
            i += 1;
        }
        for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
            out.insert(out.end(), it->second, it->first);
        }
        return out;
    }

    // Lexicographically largest optimal completion of the open positions.
    // Every candidate for a state has the same length beta-i, so plain vector
    // comparison is the sequence order. Memoized over the optimal sub-DAG.
    std::vector<int> lexmax_middle(int i, int d, int b, int p, int s) {
        if (b == i) return {};
        long long key = static_cast<long long>(i) * stage_size + sidx(d, b, p, s);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        if (memo_full || memo.size() >= kMemoCap) {
            memo_full = true;
            return greedy_middle(i, d, b, p, s);
        }
        V target = g[i][sidx(d, b, p, s)];
        std::vector<int> best;
        each_transition(i, d, b, p, s, [&](int dn, int bn, int count) {
            long long ni = sidx(dn, bn, p + dn, s + (i + 1) * count);
            if (!gok[i + 1][ni]) return;
            if (reward(i, dn, count) + g[i + 1][ni] != target) return;
            std::vector<int> cand;
            cand.reserve(b - i);
            cand.push_back(dn);
            std::vector<int> mid = lexmax_middle(i + 1, dn, bn, p + dn, s + (i + 1) * count);
            cand.insert(cand.end(), mid.begin(), mid.end());
            cand.insert(cand.end(), count, i + 1);
            if (cand > best) best = std::move(cand);
        });
        if (best.empty()) throw std::logic_error("optimal graph path lost during walk");
        memo.emplace(key, best);
        return best;
    }

    // Optimal value and the lexicographically largest optimal sequence.
    std::pair<V, std::vector<int>> solve() {
        run();
        bool found = false;
        V best{};
        for (int a0 = 0; a0 <= n; ++a0) {
            long long idx = sidx(n, n - a0, 0, 0);
            if (!gok[0][idx]) continue;
            V cand = V(a0) * f(0) + g[0][idx];
            if (!found || cand > best) {
                found = true;
                best = cand;
            }
        }
        if (!found) throw std::logic_error("no graphical sequence reachable");
        std::vector<int> seq;
        for (int a0 = 0; a0 <= n; ++a0) {
            long long idx = sidx(n, n - a0, 0, 0);
            if (!gok[0][idx]) continue;
            if (V(a0) * f(0) + g[0][idx] != best) continue;
            std::vector<int> cand = lexmax_middle(0, n, n - a0, 0, 0);
            cand.insert(cand.end(), a0, 0);
            if (seq.empty() || cand > seq) seq = std::move(cand);
        }
        return {best, seq};
    }
};

} // namespace

DpSolution opt_graph_dp(const ObjectiveSpec& F, int n, int m) {
    validate(F);
    if (F.kind != ObjectiveKind::identical) {
        throw DomainError("graph optimizer requires an identical objective");
    }
    if (n < 0) throw DomainError("vertex count must be nonnegative");
    if (m < 0) throw DomainError("edge count must be nonnegative");
    if (2LL * m > static_cast<long long>(n) * (n - 1)) {
        throw InfeasibleCountError("more edges than a simple graph admits");
    }
    if (n > 0 && F.m_max < std::min(n - 1, m)) {
        throw DomainError("objective table must cover degrees up to min(n-1, m)");
    }

    long long t = 2LL * m;
    long long cells = static_cast<long long>(n + 1) * (n + 1) * (n + 1) *
                      ((t + 1) * (t + 2) / 2);

    Rational value;
    std::vector<int> seq;
    auto scaled = detail::try_scale(F, n);
    if (scaled && cells <= kInt64CellCap) {
        GraphCore<long long> core(n, m, &scaled->rows[0]);
        auto [v, s] = core.solve();
        value = detail::unscale(v, scaled->denom);
        seq = std::move(s);
    } else if (cells <= kRationalCellCap) {
        GraphCore<Rational> core(n, m, &F.tables[0]);
        auto [v, s] = core.solve();
        value = std::move(v);
        seq = std::move(s);
    } else {
        throw EnumerationCapError("graph DP state space too large");
    }

    DpSolution out;
    out.value = std::move(value);
    out.degrees = DegreeSequence(seq.begin(), seq.end());
    auto witness = havel_hakimi_realize(out.degrees);
    if (!witness) throw std::logic_error("optimal graphical degrees failed to realize");
    out.witness = std::move(*witness);
    return out;
}

} // namespace degseq
