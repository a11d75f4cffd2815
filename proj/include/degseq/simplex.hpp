#pragma once

#include <optional>
#include <vector>

#include "degseq/rational.hpp"

namespace degseq {

// Decides feasibility of { x >= 0 : A x = b } in exact rational arithmetic and
// returns a feasible point when one exists. Phase-one simplex with one
// artificial variable per row; pivoting is deterministic (Dantzig's rule, with
// Bland's rule after an iteration threshold so degenerate systems cannot
// cycle). All rows of A must have the same length. Throws DimensionError on
// ragged input or when |b| != |A|.
std::optional<std::vector<Rational>> solve_equality_feasibility(
    const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b);

} // namespace degseq
