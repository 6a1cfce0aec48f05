// Exact convex-hull membership for integer points: phase-1 simplex over GMP
// rationals with Bland's rule, so the verdict never depends on a tolerance.
#ifndef KNESER_RATIONAL_HPP
#define KNESER_RATIONAL_HPP

#include <gmpxx.h>

#include <vector>

#include "kneser/core.hpp"

namespace kneser {

// true iff target is a convex combination of the given points
inline bool in_convex_hull(const std::vector<std::vector<int>>& points,
                           const std::vector<int>& target) {
    const size_t k = points.size();
    if (k == 0) return false;
    const size_t d = target.size();
    for (const auto& p : points) {
        if (p.size() != d)
            throw input_error("hull points and target dimensions disagree");
    }

    // feasibility of { lambda >= 0, sum lambda = 1, sum lambda p_j = target }
    // via phase-1: minimize the artificial variables of each equality row
    const size_t rows = d + 1;
    const size_t cols = k + rows; // lambdas then artificials
    std::vector<std::vector<mpq_class>> tab(
        rows, std::vector<mpq_class>(cols + 1, 0));
    for (size_t i = 0; i < d; ++i) {
        for (size_t j = 0; j < k; ++j) tab[i][j] = points[j][i];
        tab[i][cols] = target[i];
    }
    for (size_t j = 0; j < k; ++j) tab[d][j] = 1;
    tab[d][cols] = 1;

    for (size_t i = 0; i < rows; ++i) {
        if (tab[i][cols] < 0) {
            for (size_t j = 0; j <= cols; ++j) tab[i][j] = -tab[i][j];
        }
        tab[i][k + i] = 1;
    }

    std::vector<size_t> basis(rows);
    for (size_t i = 0; i < rows; ++i) basis[i] = k + i;

    // objective row for min(sum of artificials), expressed over the lambdas
    std::vector<mpq_class> obj(cols + 1, 0);
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j <= cols; ++j) obj[j] -= tab[i][j];
    }
    for (size_t i = 0; i < rows; ++i) obj[k + i] = 0;

    while (true) {
        // Bland: entering column = least index with negative reduced cost
        size_t enter = cols;
        for (size_t j = 0; j < cols; ++j) {
            if (obj[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == cols) break;

        size_t leave = rows;
        mpq_class best_ratio = 0;
        for (size_t i = 0; i < rows; ++i) {
            if (tab[i][enter] <= 0) continue;
            mpq_class ratio = tab[i][cols] / tab[i][enter];
            if (leave == rows || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == rows) return false; // unbounded phase-1 cannot happen

        const mpq_class pivot = tab[leave][enter];
        for (size_t j = 0; j <= cols; ++j) tab[leave][j] /= pivot;
        for (size_t i = 0; i < rows; ++i) {
            if (i == leave || tab[i][enter] == 0) continue;
            const mpq_class factor = tab[i][enter];
            for (size_t j = 0; j <= cols; ++j)
                tab[i][j] -= factor * tab[leave][j];
        }
        const mpq_class ofactor = obj[enter];
        if (ofactor != 0) {
            for (size_t j = 0; j <= cols; ++j)
                obj[j] -= ofactor * tab[leave][j];
        }
        basis[leave] = enter;
    }

    return obj[cols] == 0; // phase-1 optimum: all artificials forced to zero
}

} // namespace kneser

#endif // KNESER_RATIONAL_HPP
