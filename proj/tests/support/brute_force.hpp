#pragma once

// A deliberately naive oracle: textbook Gaussian elimination over mpq_class on
// the regular representation assembled from a bare multiplication function.
// It shares no code with the library's elimination or group-ring layers.

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Mat = std::vector<std::vector<Q>>;
using Term = std::pair<std::size_t, Q>;
using Entry = std::vector<Term>;
using Mul = std::function<std::size_t(std::size_t, std::size_t)>;

inline std::size_t rank(Mat m) {
    std::size_t r = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            const Q f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

// Matrix of x -> xA, rows (i, g) -> i*order + g; A given entrywise as term lists.
inline Mat regular(std::size_t order, const Mul& mul, const std::vector<std::vector<Entry>>& a) {
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    Mat out(m * order, std::vector<Q>(n * order));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [t, c] : a[i][j])
                for (std::size_t g = 0; g < order; ++g) out[i * order + g][j * order + mul(g, t)] += c;
    return out;
}

// dim_k ker / |G| as an exact rational.
inline Q vn_dim(std::size_t order, const Mul& mul, const std::vector<std::vector<Entry>>& a) {
    const Mat r = regular(order, mul, a);
    Q d(static_cast<long>(r.size() - rank(r)), static_cast<long>(order));
    d.canonicalize();
    return d;
}

// S3 as permutations of {0,1,2} composed left factor first, in lexicographic order.
struct S3 {
    std::vector<std::vector<int>> perms{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    std::size_t index(const std::vector<int>& p) const {
        for (std::size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == p) return i;
        return perms.size();
    }
    std::size_t mul(std::size_t a, std::size_t b) const {
        std::vector<int> c(3);
        for (int x = 0; x < 3; ++x) c[x] = perms[b][perms[a][x]];
        return index(c);
    }
};

}  // namespace oracle
