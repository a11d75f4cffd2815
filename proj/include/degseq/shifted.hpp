#pragma once

#include <vector>

#include "degseq/degree_sequence.hpp"
#include "degseq/hypergraph.hpp"
#include "degseq/objective.hpp"
#include "degseq/rational.hpp"

namespace degseq {

// 0/1 matrix whose columns are edge indicator vectors: rows x cols entries,
// every column summing to k. Row sums are then the degree sequence of the
// encoded edge multiset.
struct ColumnMatrix {
    int rows = 0;
    int cols = 0;
    int k = 0;
    std::vector<std::vector<int>> a;
};

void validate(const ColumnMatrix& x);

ColumnMatrix column_matrix_from(const Hypergraph& g);
ColumnMatrix column_matrix_from(const Multihypergraph& g);

// Row-wise nonincreasing rearrangement. The output keeps the ColumnMatrix
// shape but is not validated: sorting rows independently usually breaks the
// column-sum invariant, which is the point of the operator.
ColumnMatrix shift(const ColumnMatrix& x);

DegreeSequence row_sums(const ColumnMatrix& x);

// No two columns equal; encodes the simple-hypergraph restriction.
bool has_distinct_columns(const ColumnMatrix& x);

// Per-position gains of the objective: entry (i, j-1) holds f_i(j) - f_i(j-1)
// for j = 1..m. For an identical objective every row is the same, so the row
// count n must be passed explicitly.
struct CostMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<Rational>> c;
};

CostMatrix cost_matrix(const ObjectiveSpec& F, int n, int m);

// Inner product of c with shift(x). For a 0/1 matrix x with row sums d this
// telescopes to sum_i f_i(d_i) - f_i(0) when c came from cost_matrix.
Rational shifted_value(const CostMatrix& c, const ColumnMatrix& x);

} // namespace degseq
