#pragma once

#include <vector>

#include "degseq/degree_sequence.hpp"
#include "degseq/rational.hpp"

namespace degseq {

enum class ObjectiveKind { identical, per_vertex };

// Separable objective: each vertex's contribution f_i is tabulated on the
// degree domain {0,...,m_max}. `identical` stores one shared row; `per_vertex`
// stores one row per vertex. Every row has exactly m_max+1 entries.
struct ObjectiveSpec {
    int m_max = 0;
    ObjectiveKind kind = ObjectiveKind::identical;
    std::vector<std::vector<Rational>> tables;

    // Row scoring 0-based vertex index i (the shared row for identical kind).
    const std::vector<Rational>& row(int i) const {
        return kind == ObjectiveKind::identical ? tables[0] : tables[i];
    }
};

void validate(const ObjectiveSpec& F);

ObjectiveSpec make_identical_objective(std::vector<Rational> table);
ObjectiveSpec make_per_vertex_objective(std::vector<std::vector<Rational>> rows);

// f(t) = t^2.
ObjectiveSpec squares_objective(int m_max);
// f_i(t) = -(t - centers[i])^2.
ObjectiveSpec neg_squares_objective(const std::vector<int>& centers, int m_max);
// f_i(t) = w[i] * t.
ObjectiveSpec linear_objective(const WeightVector& w, int m_max);

// Sum of f_i(d[i]). Throws DomainError if any entry is negative or exceeds
// m_max, or if a per_vertex objective has a row count different from d's size.
Rational evaluate(const ObjectiveSpec& F, const DegreeSequence& d);

// True when every row is convex, i.e. has nondecreasing increments:
// r[t+1] - r[t] <= r[t+2] - r[t+1] for all t.
bool is_convex(const ObjectiveSpec& F);

} // namespace degseq
