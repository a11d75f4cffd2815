#include "degseq/polytope.hpp"

#include <algorithm>
#include <set>

#include "degseq/errors.hpp"
#include "degseq/oracle.hpp"
#include "degseq/simplex.hpp"

namespace degseq {

PointSet enumerate_degree_points(int n, int k, int m, const EnumerationCaps& caps) {
    HypergraphEnumerator en(n, k, m, caps);
    std::vector<std::vector<int>> pts;
    std::vector<int> deg(n);
    while (!en.done()) {
        std::fill(deg.begin(), deg.end(), 0);
        for (int idx : en.current()) {
            for (int v : en.universe()[idx]) deg[v - 1] += 1;
        }
        pts.push_back(deg);
        en.skip();
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    PointSet out;
    out.dimension = n;
    out.points = std::move(pts);
    return out;
}

bool hull_membership(const std::vector<Rational>& p, const PointSet& points,
                     const EnumerationCaps& caps) {
    if (points.points.empty()) return false;
    const int n = points.dimension;
    if (static_cast<int>(p.size()) != n) {
        throw DimensionError("query point dimension must match the point set");
    }
    if (static_cast<long long>(points.points.size()) > caps.max_hull_points) {
        throw EnumerationCapError("point set exceeds max_hull_points");
    }

    for (int i = 0; i < n; ++i) {
        int lo = points.points[0][i], hi = lo;
        for (const auto& q : points.points) {
            lo = std::min(lo, q[i]);
            hi = std::max(hi, q[i]);
        }
        if (p[i] < lo || p[i] > hi) return false;
    }

    // Convex multipliers: one column per point, coordinate rows plus a
    // normalization row forcing the multipliers to sum to one.
    const int cols = static_cast<int>(points.points.size());
    std::vector<std::vector<Rational>> a(n + 1, std::vector<Rational>(cols));
    std::vector<Rational> b(n + 1);
    for (int j = 0; j < cols; ++j) {
        for (int i = 0; i < n; ++i) a[i][j] = points.points[j][i];
        a[n][j] = 1;
    }
    for (int i = 0; i < n; ++i) b[i] = p[i];
    b[n] = 1;
    return solve_equality_feasibility(a, b).has_value();
}

namespace {

std::vector<Rational> to_rational(const std::vector<int>& v) {
    std::vector<Rational> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
    return out;
}

std::vector<std::vector<int>> orbit_of(const std::vector<int>& p) {
    std::vector<int> v = p;
    std::sort(v.begin(), v.end());
    std::vector<std::vector<int>> out;
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

} // namespace

PointSet polytope_vertices(int n, int k, int m, const EnumerationCaps& caps) {
    PointSet pts = enumerate_degree_points(n, k, m, caps);

    std::set<std::vector<int>> reps;
    for (const auto& p : pts.points) {
        std::vector<int> canon = p;
        std::sort(canon.begin(), canon.end(), std::greater<int>());
        reps.insert(canon);
    }

    std::vector<std::vector<int>> vertices;
    for (const auto& rep : reps) {
        PointSet others;
        others.dimension = n;
        others.points.reserve(pts.points.size());
        for (const auto& q : pts.points) {
            if (q != rep) others.points.push_back(q);
        }
        if (!hull_membership(to_rational(rep), others, caps)) {
            for (auto& q : orbit_of(rep)) vertices.push_back(std::move(q));
        }
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

    PointSet out;
    out.dimension = n;
    out.points = std::move(vertices);
    return out;
}

std::optional<WeightVector> find_separating_weights(const std::vector<int>& p,
                                                    const PointSet& points) {
    const int n = static_cast<int>(p.size());
    if (points.dimension != n && !points.points.empty()) {
        throw DimensionError("query point dimension must match the point set");
    }
    std::vector<const std::vector<int>*> others;
    for (const auto& q : points.points) {
        if (q != p) others.push_back(&q);
    }
    const int q = static_cast<int>(others.size());
    if (q == 0) return WeightVector(n, Rational(0));

    // Variables: w split into positives u and negatives v, plus one surplus
    // per point; row for point o reads (p - o).u - (p - o).v - s_o = 1.
    const int cols = 2 * n + q;
    std::vector<std::vector<Rational>> a(q, std::vector<Rational>(cols, Rational(0)));
    std::vector<Rational> b(q, Rational(1));
    for (int r = 0; r < q; ++r) {
        for (int i = 0; i < n; ++i) {
            int diff = p[i] - (*others[r])[i];
            a[r][i] = diff;
            a[r][n + i] = -diff;
        }
        a[r][2 * n + r] = -1;
    }
    auto x = solve_equality_feasibility(a, b);
    if (!x) return std::nullopt;
    WeightVector w(n);
    for (int i = 0; i < n; ++i) w[i] = (*x)[i] - (*x)[n + i];
    return w;
}

ThresholdVertexReport verify_threshold_vertex_theorem(int n, int m,
                                                      const EnumerationCaps& caps) {
    ThresholdVertexReport rep;
    rep.vertices = polytope_vertices(n, 2, m, caps);

    std::vector<std::vector<int>> thr;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        long long edges = 0;
        std::vector<VertexLabel> labels(n, VertexLabel::isolating);
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) {
                labels[i] = VertexLabel::dominating;
                edges += n - 1 - i;
            }
        }
        if (edges != m) continue;
        ThresholdGraph g{n, labels};
        for (auto& v : orbit_of(degree_sequence(g))) thr.push_back(std::move(v));
    }
    std::sort(thr.begin(), thr.end());
    thr.erase(std::unique(thr.begin(), thr.end()), thr.end());
    rep.threshold_degrees.dimension = n;
    rep.threshold_degrees.points = std::move(thr);

    std::set_difference(rep.vertices.points.begin(), rep.vertices.points.end(),
                        rep.threshold_degrees.points.begin(), rep.threshold_degrees.points.end(),
                        std::back_inserter(rep.only_vertices));
    std::set_difference(rep.threshold_degrees.points.begin(), rep.threshold_degrees.points.end(),
                        rep.vertices.points.begin(), rep.vertices.points.end(),
                        std::back_inserter(rep.only_threshold));
    rep.equal = rep.only_vertices.empty() && rep.only_threshold.empty();
    return rep;
}

bool dn2_membership(const std::vector<Rational>& d, const EnumerationCaps& caps) {
    const int n = static_cast<int>(d.size());
    if (n > caps.max_dn2_n) {
        throw EnumerationCapError("dimension too large for the 3^n inequality scan");
    }
    // Assign each index to S, to T, or to neither; recursion keeps running
    // sums so the whole scan is O(3^n).
    bool ok = true;
    auto walk = [&](auto&& self, int i, const Rational& sum_s, const Rational& sum_t,
                    int cnt_s, int cnt_t) -> void {
        if (!ok) return;
        if (i == n) {
            Rational rhs = static_cast<long long>(cnt_s) * (n - 1 - cnt_t);
            if (sum_s - sum_t > rhs) ok = false;
            return;
        }
        self(self, i + 1, sum_s, sum_t, cnt_s, cnt_t);
        self(self, i + 1, sum_s + d[i], sum_t, cnt_s + 1, cnt_t);
        self(self, i + 1, sum_s, sum_t + d[i], cnt_s, cnt_t + 1);
    };
    walk(walk, 0, Rational(0), Rational(0), 0, 0);
    return ok;
}

} // namespace degseq
