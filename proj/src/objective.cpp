#include "degseq/objective.hpp"

#include <string>
#include <utility>

#include "degseq/errors.hpp"

namespace degseq {

void validate(const ObjectiveSpec& F) {
    if (F.m_max < 0)
        throw DomainError("objective m_max must be >= 0");
    if (F.kind == ObjectiveKind::identical && F.tables.size() != 1)
        throw DomainError("identical objective needs exactly one table row");
    if (F.tables.empty())
        throw DomainError("objective needs at least one table row");
    for (const auto& row : F.tables)
        if ((int)row.size() != F.m_max + 1)
            throw DomainError("objective rows must have m_max+1 entries");
}

ObjectiveSpec make_identical_objective(std::vector<Rational> table) {
    ObjectiveSpec F;
    F.m_max = (int)table.size() - 1;
    F.kind = ObjectiveKind::identical;
    F.tables.push_back(std::move(table));
    validate(F);
    return F;
}

ObjectiveSpec make_per_vertex_objective(std::vector<std::vector<Rational>> rows) {
    ObjectiveSpec F;
    F.kind = ObjectiveKind::per_vertex;
    F.m_max = rows.empty() ? -1 : (int)rows[0].size() - 1;
    F.tables = std::move(rows);
    validate(F);
    return F;
}

ObjectiveSpec squares_objective(int m_max) {
    std::vector<Rational> row;
    row.reserve(m_max + 1);
    for (int t = 0; t <= m_max; ++t)
        row.emplace_back((long long)t * t);
    return make_identical_objective(std::move(row));
}

ObjectiveSpec neg_squares_objective(const std::vector<int>& centers, int m_max) {
    std::vector<std::vector<Rational>> rows;
    rows.reserve(centers.size());
    for (int c : centers) {
        std::vector<Rational> row;
        row.reserve(m_max + 1);
        for (int t = 0; t <= m_max; ++t)
            row.emplace_back(-(long long)(t - c) * (t - c));
        rows.push_back(std::move(row));
    }
    return make_per_vertex_objective(std::move(rows));
}

ObjectiveSpec linear_objective(const WeightVector& w, int m_max) {
    std::vector<std::vector<Rational>> rows;
    rows.reserve(w.size());
    for (const Rational& wi : w) {
        std::vector<Rational> row;
        row.reserve(m_max + 1);
        for (int t = 0; t <= m_max; ++t)
            row.push_back(wi * t);
        rows.push_back(std::move(row));
    }
    return make_per_vertex_objective(std::move(rows));
}

Rational evaluate(const ObjectiveSpec& F, const DegreeSequence& d) {
    validate(F);
    if (F.kind == ObjectiveKind::per_vertex && F.tables.size() != d.size())
        throw DomainError("objective has " + std::to_string(F.tables.size()) +
                          " rows but the degree sequence has " + std::to_string(d.size()));
    Rational total = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] < 0 || d[i] > F.m_max)
            throw DomainError("degree " + std::to_string(d[i]) + " outside objective domain 0.." +
                              std::to_string(F.m_max));
        total += F.row((int)i)[d[i]];
    }
    return total;
}

bool is_convex(const ObjectiveSpec& F) {
    validate(F);
    for (const auto& row : F.tables)
        for (std::size_t t = 0; t + 2 < row.size(); ++t)
            if (row[t + 1] - row[t] > row[t + 2] - row[t + 1])
                return false;
    return true;
}

} // namespace degseq
