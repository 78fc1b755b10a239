#pragma once

#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "autkum/curvelattice/config.hpp"

namespace autkum {

/// Rank over Q of an integer matrix by fraction-free (Bareiss) elimination.
inline size_t integer_rank(const std::vector<std::vector<i64>>& m)
{
    using big = boost::multiprecision::cpp_int;
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m.front().size();
    std::vector<std::vector<big>> a(rows, std::vector<big>(cols));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];

    size_t rank = 0;
    big prev = 1;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        for (size_t i = rank + 1; i < rows; ++i) {
            for (size_t j = col + 1; j < cols; ++j) a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

inline size_t gram_rank(const CurveConfig& cfg) { return integer_rank(cfg.gram_matrix()); }

} // namespace autkum
