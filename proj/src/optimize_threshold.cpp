#include <algorithm>
#include <stdexcept>
#include <utility>

#include "degseq/errors.hpp"
#include "degseq/optimize.hpp"
#include "scaled.hpp"

namespace degseq {

namespace {

constexpr long long kInt64CellCap = 10'000'000;
constexpr long long kRationalCellCap = 1'000'000;
constexpr long long kBitCap = 800'000'000;

// Vertices are decided in order; a dominating vertex v is joined to all
// later vertices, so it contributes n-v new edges and its final degree is
// known immediately: (dominating vertices before v) plus n-v, while an
// isolating vertex ends with just the dominating count before it. States
// track (edges so far, dominating count so far); a layer is the (e, delta)
// table for one stage, and decisions[v] records whether vertex v was taken
// dominating on the best path into each stage-v cell. Ties prefer isolating,
// and the final tie across delta prefers the smallest count, which keeps
// witnesses in the peeled form with isolated-style vertices late.
template <typename V>
struct ThresholdCore {
    int n, m;
    const std::vector<V>* frow;

    long long cells = 0;
    std::vector<V> cur, nxt;
    std::vector<char> curok, nxtok;
    std::vector<std::vector<bool>> decisions; // decisions[v], v = 1..n

    ThresholdCore(int n_, int m_, const std::vector<V>* frow_) : n(n_), m(m_), frow(frow_) {
        cells = static_cast<long long>(m + 1) * (n + 1);
    }

    V f(int t) const { return (*frow)[t]; }
    long long idx(int e, int dl) const { return static_cast<long long>(e) * (n + 1) + dl; }

    std::pair<V, std::vector<VertexLabel>> solve() {
        cur.assign(cells, V(0));
        nxt.assign(cells, V(0));
        curok.assign(cells, 0);
        nxtok.assign(cells, 0);
        decisions.assign(n + 1, {});
        curok[idx(0, 0)] = 1;

        for (int v = 1; v <= n; ++v) {
            int add = n - v; // new edges if vertex v dominates
            std::fill(nxtok.begin(), nxtok.end(), 0);
            decisions[v].assign(cells, false);
            for (int e = 0; e <= m; ++e) {
                for (int dl = 0; dl <= std::min(v, n); ++dl) {
                    long long here = idx(e, dl);
                    bool iso_ok = curok[here];
                    V iso{};
                    if (iso_ok) iso = cur[here] + f(dl);
                    bool dom_ok = dl >= 1 && e >= add && curok[idx(e - add, dl - 1)];
                    V dom{};
                    if (dom_ok) dom = cur[idx(e - add, dl - 1)] + f(dl - 1 + add);
                    if (!iso_ok && !dom_ok) continue;
                    if (dom_ok && (!iso_ok || dom > iso)) {
                        nxt[here] = dom;
                        decisions[v][here] = true;
                    } else {
                        nxt[here] = iso;
                    }
                    nxtok[here] = 1;
                }
            }
            std::swap(cur, nxt);
            std::swap(curok, nxtok);
        }

        bool found = false;
        V best{};
        int best_dl = -1;
        for (int dl = 0; dl <= n; ++dl) {
            long long here = idx(m, dl);
            if (!curok[here]) continue;
            if (!found || cur[here] > best) {
                found = true;
                best = cur[here];
                best_dl = dl;
            }
        }
        if (!found) throw std::logic_error("no threshold construction reaches m edges");

        std::vector<VertexLabel> labels(n, VertexLabel::isolating);
        int e = m, dl = best_dl;
        for (int v = n; v >= 1; --v) {
            if (decisions[v][idx(e, dl)]) {
                labels[v - 1] = VertexLabel::dominating;
                e -= n - v;
                dl -= 1;
            }
        }
        if (e != 0 || dl != 0) throw std::logic_error("threshold walk did not return to start");
        return {best, labels};
    }
};

} // namespace

DpSolution opt_threshold_dp(const ObjectiveSpec& F, int n, int m) {
    validate(F);
    if (F.kind != ObjectiveKind::identical) {
        throw DomainError("threshold optimizer requires an identical objective");
    }
    if (!is_convex(F)) throw NotConvexError("threshold optimizer requires a convex objective");
    if (n < 0) throw DomainError("vertex count must be nonnegative");
    if (m < 0) throw DomainError("edge count must be nonnegative");
    if (2LL * m > static_cast<long long>(n) * (n - 1)) {
        throw InfeasibleCountError("more edges than a simple graph admits");
    }
    if (n > 0 && F.m_max < std::min(n - 1, m)) {
        throw DomainError("objective table must cover degrees up to min(n-1, m)");
    }

    long long cells = static_cast<long long>(m + 1) * (n + 1);
    if (cells * (n + 1) > kBitCap) throw EnumerationCapError("threshold DP state space too large");

    Rational value;
    std::vector<VertexLabel> labels;
    auto scaled = detail::try_scale(F, n);
    if (scaled && cells <= kInt64CellCap) {
        ThresholdCore<long long> core(n, m, &scaled->rows[0]);
        auto [v, l] = core.solve();
        value = detail::unscale(v, scaled->denom);
        labels = std::move(l);
    } else if (cells <= kRationalCellCap) {
        ThresholdCore<Rational> core(n, m, &F.tables[0]);
        auto [v, l] = core.solve();
        value = std::move(v);
        labels = std::move(l);
    } else {
        throw EnumerationCapError("threshold DP state space too large");
    }

    DpSolution out;
    out.value = std::move(value);
    ThresholdGraph witness{n, std::move(labels)};
    out.degrees = degree_sequence(witness);
    std::sort(out.degrees.begin(), out.degrees.end(), std::greater<int>());
    out.witness = std::move(witness);
    return out;
}

} // namespace degseq
