#pragma once

// Test-only oracles, kept independent of the elimination code they check.

#include <functional>
#include <vector>

#include "hecke/matrix.hpp"

namespace hecke::oracles {

/// determinant by cofactor expansion over selected rows/columns
inline Scalar det_cofactor(const ScalarMatrix& m, std::vector<int> rows, std::vector<int> cols) {
    const ScalarField* f = m.field();
    if (rows.empty()) return Scalar::one(f);
    Scalar acc = Scalar::zero(f);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const Scalar& head = m.at(rows[k], cols[0]);
        if (head.is_zero()) continue;
        std::vector<int> sub_rows;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != k) sub_rows.push_back(rows[i]);
        Scalar term =
            head * det_cofactor(m, sub_rows, std::vector<int>(cols.begin() + 1, cols.end()));
        acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

/// rank as the largest size of a nonvanishing minor
inline long rank_by_minors(const ScalarMatrix& m) {
    int n = std::min(m.rows(), m.cols());
    for (int size = n; size >= 1; --size) {
        std::vector<int> rsel(size), csel(size);
        std::function<bool(int, int)> pick_rows = [&](int start, int depth) {
            if (depth == size) {
                std::function<bool(int, int)> pick_cols = [&](int cstart, int cdepth) {
                    if (cdepth == size) return !det_cofactor(m, rsel, csel).is_zero();
                    for (int c = cstart; c < m.cols(); ++c) {
                        csel[cdepth] = c;
                        if (pick_cols(c + 1, cdepth + 1)) return true;
                    }
                    return false;
                };
                return pick_cols(0, 0);
            }
            for (int r = start; r < m.rows(); ++r) {
                rsel[depth] = r;
                if (pick_rows(r + 1, depth + 1)) return true;
            }
            return false;
        };
        if (pick_rows(0, 0)) return size;
    }
    return 0;
}

}  // namespace hecke::oracles
