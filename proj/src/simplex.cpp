#include "degseq/simplex.hpp"

#include <stdexcept>

#include "degseq/errors.hpp"

namespace degseq {

std::optional<std::vector<Rational>> solve_equality_feasibility(
    const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b) {
    const int r = static_cast<int>(A.size());
    if (static_cast<int>(b.size()) != r) {
        throw DimensionError("right-hand side length must match the row count");
    }
    if (r == 0) return std::vector<Rational>{};
    const int c = static_cast<int>(A[0].size());
    for (const auto& row : A) {
        if (static_cast<int>(row.size()) != c) {
            throw DimensionError("all rows must have the same length");
        }
    }
    if (c == 0) {
        for (const Rational& v : b) {
            if (v != 0) return std::nullopt;
        }
        return std::vector<Rational>{};
    }

    // Tableau columns: [.. c original .. | .. r artificial .. | rhs], with the
    // artificial basis and rhs >= 0 after flipping negative rows.
    const int cols = c + r + 1;
    const int rhs = c + r;
    std::vector<std::vector<Rational>> t(r, std::vector<Rational>(cols, Rational(0)));
    for (int i = 0; i < r; ++i) {
        bool flip = b[i] < 0;
        for (int j = 0; j < c; ++j) t[i][j] = flip ? -A[i][j] : A[i][j];
        t[i][c + i] = 1;
        t[i][rhs] = flip ? -b[i] : b[i];
    }
    std::vector<int> basis(r);
    for (int i = 0; i < r; ++i) basis[i] = c + i;

    // Reduced costs for minimizing the artificial sum; artificial columns
    // start reduced to zero, so only the originals and the rhs need sums.
    std::vector<Rational> z(cols, Rational(0));
    for (int j = 0; j <= c; ++j) {
        Rational s(0);
        int jj = j == c ? rhs : j;
        for (int i = 0; i < r; ++i) s += t[i][jj];
        z[jj] = -s;
    }

    const long long bland_after = 3LL * (r + c) + 50;
    long long iter = 0;
    while (true) {
        int e = -1;
        if (iter < bland_after) {
            for (int j = 0; j < c + r; ++j) {
                if (z[j] < 0 && (e < 0 || z[j] < z[e])) e = j;
            }
        } else {
            for (int j = 0; j < c + r; ++j) {
                if (z[j] < 0) {
                    e = j;
                    break;
                }
            }
        }
        if (e < 0) break;

        int l = -1;
        Rational best;
        for (int i = 0; i < r; ++i) {
            if (t[i][e] <= 0) continue;
            Rational ratio = t[i][rhs] / t[i][e];
            if (l < 0 || ratio < best || (ratio == best && basis[i] < basis[l])) {
                l = i;
                best = ratio;
            }
        }
        if (l < 0) throw std::logic_error("phase-one column unbounded");

        Rational piv = t[l][e];
        for (int j = 0; j < cols; ++j) t[l][j] /= piv;
        for (int i = 0; i < r; ++i) {
            if (i == l || t[i][e] == 0) continue;
            Rational f = t[i][e];
            for (int j = 0; j < cols; ++j) t[i][j] -= f * t[l][j];
        }
        if (z[e] != 0) {
            Rational f = z[e];
            for (int j = 0; j < cols; ++j) z[j] -= f * t[l][j];
        }
        basis[l] = e;
        iter += 1;
    }

    std::vector<Rational> x(c, Rational(0));
    for (int i = 0; i < r; ++i) {
        if (basis[i] >= c) {
            if (t[i][rhs] != 0) return std::nullopt;
        } else {
            x[basis[i]] = t[i][rhs];
        }
    }
    return x;
}

} // namespace degseq
