#pragma once

// Independent reference computations for the tests. Nothing here calls the library's
// lattice or walls code.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "quasiadj/resolution.hpp"

namespace oracle {

using Vec = std::vector<std::int64_t>;
using Mat = std::vector<std::vector<std::int64_t>>;

// Cofactor expansion; fine for n <= 6.
inline std::int64_t det(const Mat& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    std::int64_t s = 0;
    for (std::size_t j = 0; j < n; ++j) {
        Mat minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<std::int64_t> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[i][c]);
            minor.push_back(row);
        }
        s += (j % 2 ? -1 : 1) * m[0][j] * det(minor);
    }
    return s;
}

inline bool negative_definite(const Mat& m) {
    for (std::size_t k = 1; k <= m.size(); ++k) {
        Mat lead(k, std::vector<std::int64_t>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) lead[i][j] = -m[i][j];
        if (det(lead) <= 0) return false;
    }
    return true;
}

inline std::int64_t dot(const Mat& N, const Vec& d, std::size_t k) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < d.size(); ++j) s += d[j] * N[j][k];
    return s;
}

inline bool antinef(const Mat& N, const Vec& d) {
    for (std::size_t k = 0; k < d.size(); ++k)
        if (dot(N, d, k) > 0) return false;
    return true;
}

// Minimal antinef vector >= max(d,0) by exhaustive search of [0, hi]^n.
inline std::optional<Vec> box_minimal_antinef(const Mat& N, const Vec& d, std::int64_t hi) {
    const std::size_t n = d.size();
    Vec lo(n);
    for (std::size_t i = 0; i < n; ++i) lo[i] = std::max<std::int64_t>(d[i], 0);
    std::vector<Vec> good;
    Vec v = lo;
    for (;;) {
        if (antinef(N, v)) good.push_back(v);
        std::size_t i = 0;
        while (i < n && v[i] == hi) v[i] = lo[i], ++i;
        if (i == n) break;
        ++v[i];
    }
    if (good.empty()) return std::nullopt;
    Vec m = good.front();
    for (const auto& g : good)
        for (std::size_t i = 0; i < n; ++i) m[i] = std::min(m[i], g[i]);
    for (const auto& g : good)
        for (std::size_t i = 0; i < n; ++i)
            if (m[i] > g[i]) return std::nullopt;
    if (!antinef(N, m)) return std::nullopt;
    return m;
}

// Codimension of the valuation ideal {h : sum over monomials, a e_k(x) + b e_k(y) >= D_k for all k},
// valid when every valuation is monomial in x, y.
inline std::int64_t monomial_codim(const Vec& ex, const Vec& ey, const Vec& D) {
    std::int64_t bound = 0;
    for (auto v : D) bound = std::max(bound, v);
    std::int64_t count = 0;
    for (std::int64_t a = 0; a <= bound; ++a)
        for (std::int64_t b = 0; b <= bound; ++b) {
            bool inside = true;
            for (std::size_t k = 0; k < D.size(); ++k)
                if (a * ex[k] + b * ey[k] < D[k]) inside = false;
            if (!inside) ++count;
        }
    return count;
}

// Random tree lattice with n divisors whose intersection matrix is negative definite.
inline quasiadj::ResolutionData random_tree_lattice(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> self(1, 5);
    for (;;) {
        quasiadj::ResolutionData d;
        d.n_div = n;
        d.r = 1;
        d.adj.assign(n, {});
        for (std::size_t k = 1; k < n; ++k) {
            std::uniform_int_distribution<std::size_t> parent(0, k - 1);
            const std::size_t p = parent(rng);
            d.adj[k].push_back(p);
            d.adj[p].push_back(k);
        }
        for (auto& a : d.adj) std::sort(a.begin(), a.end());
        for (std::size_t k = 0; k < n; ++k) d.selfint.push_back(-self(rng));
        d.c.assign(n, 1);
        d.a.assign(1, Vec(n, 1));
        d.attach.assign(1, 0);
        if (negative_definite(d.intersection_matrix())) return d;
    }
}

}  // namespace oracle
