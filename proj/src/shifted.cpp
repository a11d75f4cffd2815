#include "degseq/shifted.hpp"

#include <algorithm>
#include <functional>

#include "degseq/errors.hpp"

namespace degseq {

void validate(const ColumnMatrix& x) {
    if (x.rows < 0 || x.cols < 0) throw DomainError("matrix shape must be nonnegative");
    if (static_cast<int>(x.a.size()) != x.rows) {
        throw DimensionError("row count does not match the entries");
    }
    for (const auto& row : x.a) {
        if (static_cast<int>(row.size()) != x.cols) {
            throw DimensionError("ragged rows");
        }
        for (int v : row) {
            if (v != 0 && v != 1) throw DomainError("entries must be 0 or 1");
        }
    }
    for (int j = 0; j < x.cols; ++j) {
        int s = 0;
        for (int i = 0; i < x.rows; ++i) s += x.a[i][j];
        if (s != x.k) throw DomainError("every column must sum to k");
    }
}

namespace {

ColumnMatrix from_edges(int n, int k, const std::vector<const Edge*>& edges) {
    ColumnMatrix x;
    x.rows = n;
    x.cols = static_cast<int>(edges.size());
    x.k = k;
    x.a.assign(n, std::vector<int>(x.cols, 0));
    for (int j = 0; j < x.cols; ++j) {
        for (int v : *edges[j]) x.a[v - 1][j] = 1;
    }
    return x;
}

} // namespace

ColumnMatrix column_matrix_from(const Hypergraph& g) {
    std::vector<const Edge*> edges;
    for (const Edge& e : g.edges) edges.push_back(&e);
    return from_edges(g.n, g.k, edges);
}

ColumnMatrix column_matrix_from(const Multihypergraph& g) {
    std::vector<const Edge*> edges;
    for (const auto& [e, count] : g.edges) {
        for (int c = 0; c < count; ++c) edges.push_back(&e);
    }
    return from_edges(g.n, g.k, edges);
}

ColumnMatrix shift(const ColumnMatrix& x) {
    ColumnMatrix out = x;
    for (auto& row : out.a) {
        std::sort(row.begin(), row.end(), std::greater<int>());
    }
    return out;
}

DegreeSequence row_sums(const ColumnMatrix& x) {
    DegreeSequence d(x.rows, 0);
    for (int i = 0; i < x.rows; ++i) {
        for (int v : x.a[i]) d[i] += v;
    }
    return d;
}

bool has_distinct_columns(const ColumnMatrix& x) {
    std::vector<std::vector<int>> cols(x.cols, std::vector<int>(x.rows));
    for (int j = 0; j < x.cols; ++j) {
        for (int i = 0; i < x.rows; ++i) cols[j][i] = x.a[i][j];
    }
    std::sort(cols.begin(), cols.end());
    return std::adjacent_find(cols.begin(), cols.end()) == cols.end();
}

CostMatrix cost_matrix(const ObjectiveSpec& F, int n, int m) {
    validate(F);
    if (n < 0 || m < 0) throw DomainError("matrix shape must be nonnegative");
    if (F.kind == ObjectiveKind::per_vertex && static_cast<int>(F.tables.size()) != n) {
        throw DomainError("per-vertex objective must have one table per vertex");
    }
    if (F.m_max < m) throw DomainError("objective tables too short for m columns");
    CostMatrix out;
    out.rows = n;
    out.cols = m;
    out.c.assign(n, std::vector<Rational>(m));
    for (int i = 0; i < n; ++i) {
        const WeightVector& f = F.row(i);
        for (int j = 1; j <= m; ++j) out.c[i][j - 1] = f[j] - f[j - 1];
    }
    return out;
}

Rational shifted_value(const CostMatrix& c, const ColumnMatrix& x) {
    if (c.rows != x.rows || c.cols != x.cols) {
        throw DimensionError("cost and column matrices must have equal shapes");
    }
    ColumnMatrix s = shift(x);
    Rational total(0);
    for (int i = 0; i < c.rows; ++i) {
        for (int j = 0; j < c.cols; ++j) {
            if (s.a[i][j] != 0) total += c.c[i][j] * s.a[i][j];
        }
    }
    return total;
}

} // namespace degseq
