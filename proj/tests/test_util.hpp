#pragma once

// Shared fixtures and independent oracles for the test suites. The oracles
// intentionally avoid the production code paths they are used to check:
// the characteristic polynomial comes from literal cofactor expansion, walk
// counts from explicit walk enumeration, and the canonical form from a
// minimum over all vertex relabelings.

#include <algorithm>
#include <string>
#include <vector>

#include "ctrliso/ctrliso.hpp"

namespace testutil {

using namespace ctrliso;

inline Graph k1() { return Graph(1); }
inline Graph k2() { return complete_graph(2); }
inline Graph k3() { return complete_graph(3); }
inline Graph p3() { return path_graph(3); }
inline Graph c6() { return cycle_graph(6); }
inline Graph two_triangles() { return disjoint_union(complete_graph(3), complete_graph(3)); }
inline Graph c6_plus_k1() { return disjoint_union(cycle_graph(6), Graph(1)); }

// Spider S(2,2,2): three length-2 legs glued at vertex 0.
inline Graph spider222() {
    return Graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
}

// det of a polynomial matrix by first-row cofactor expansion.
inline IntPoly poly_det(const std::vector<std::vector<IntPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    IntPoly acc;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<IntPoly>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<IntPoly> row;
            row.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        IntPoly term = m[0][j] * poly_det(minor);
        if (j % 2 == 0)
            acc = acc + term;
        else
            acc = acc - term;
    }
    return acc;
}

// Characteristic polynomial oracle: expand det(tI - A) literally.
inline IntPoly charpoly_cofactor(const IntMatrix& a) {
    const int n = a.rows();
    std::vector<std::vector<IntPoly>> m(static_cast<std::size_t>(n),
                                        std::vector<IntPoly>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<Int> c{-a(i, j)};
            if (i == j) c.push_back(1);
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = IntPoly(std::move(c));
        }
    return poly_det(m);
}

// Walk-count oracle: enumerate every walk of length r from v explicitly.
inline Int walks_from_dfs(const Graph& g, int v, int r) {
    if (r == 0) return 1;
    Int total(0);
    for (int u = 0; u < g.order(); ++u)
        if (g.has_edge(v, u)) total += walks_from_dfs(g, u, r - 1);
    return total;
}

inline std::vector<Int> vertex_walks_dfs(const Graph& g, int r) {
    std::vector<Int> out;
    for (int v = 0; v < g.order(); ++v) out.push_back(walks_from_dfs(g, v, r));
    return out;
}

inline Int total_walks_dfs(const Graph& g, int r) {
    Int total(0);
    for (int v = 0; v < g.order(); ++v) total += walks_from_dfs(g, v, r);
    return total;
}

inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i;
    std::vector<Permutation> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

// Ground-truth canonical form: the least graph6 string over all relabelings.
inline std::string canonical_graph6(const Graph& g) {
    std::vector<int> img(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i) img[static_cast<std::size_t>(i)] = i;
    std::string best;
    do {
        std::string s = write_graph6(apply_permutation(g, Permutation(img)));
        if (best.empty() || s < best) best = std::move(s);
    } while (std::next_permutation(img.begin(), img.end()));
    return best;
}

inline int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
    return d;
}

}  // namespace testutil
