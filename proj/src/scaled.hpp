#pragma once

#include <cstdlib>
#include <optional>
#include <vector>

#include "degseq/objective.hpp"
#include "degseq/rational.hpp"

// Internal int64 fast path for the dynamic programs: when every table entry
// fits a common denominator small enough that sums over a whole solution stay
// far from overflow, the DP runs on long long and the result is rescaled once
// at the end. Otherwise callers fall back to cpp_rational cells.

namespace degseq::detail {

struct ScaledTables {
    std::vector<std::vector<long long>> rows;
    BigInt denom;
};

// positions: the largest number of table entries ever summed along one
// solution path. Returns nullopt when int64 headroom cannot be guaranteed.
inline std::optional<ScaledTables> try_scale(const ObjectiveSpec& F, long long positions) {
    const BigInt denom_cap = BigInt(1) << 44;
    const BigInt entry_cap = BigInt(1) << 44;
    const BigInt sum_cap = BigInt(1) << 61;

    BigInt denom = 1;
    for (const auto& row : F.tables) {
        for (const Rational& q : row) {
            denom = boost::multiprecision::lcm(denom, BigInt(boost::multiprecision::denominator(q)));
            if (denom > denom_cap) return std::nullopt;
        }
    }
    ScaledTables out;
    out.denom = denom;
    out.rows.reserve(F.tables.size());
    BigInt maxabs = 0;
    for (const auto& row : F.tables) {
        std::vector<long long> scaled;
        scaled.reserve(row.size());
        for (const Rational& q : row) {
            BigInt v = BigInt(boost::multiprecision::numerator(q)) *
                       (denom / BigInt(boost::multiprecision::denominator(q)));
            BigInt a = abs(v);
            if (a > entry_cap) return std::nullopt;
            if (a > maxabs) maxabs = a;
            scaled.push_back(v.convert_to<long long>());
        }
        out.rows.push_back(std::move(scaled));
    }
    if ((positions + 1) * maxabs >= sum_cap) return std::nullopt;
    return out;
}

inline Rational unscale(long long v, const BigInt& denom) {
    return Rational(BigInt(v), denom);
}

} // namespace degseq::detail
