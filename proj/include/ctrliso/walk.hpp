#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "ctrliso/graph.hpp"
#include "ctrliso/linalg.hpp"

namespace ctrliso {

namespace detail {
// A * x for the adjacency matrix of g, without materializing A.
inline std::vector<Int> adjacency_apply(const Graph& g, const std::vector<Int>& x) {
    const int n = g.order();
    std::vector<Int> out(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        Int acc(0);
        for (int u = 0; u < n; ++u)
            if (g.has_edge(v, u)) acc += x[static_cast<std::size_t>(u)];
        out[static_cast<std::size_t>(v)] = std::move(acc);
    }
    return out;
}
}  // namespace detail

// Columns 1, A*1, ..., A^(cols-1)*1.
inline IntMatrix walk_matrix_columns(const Graph& g, int cols) {
    const int n = g.order();
    IntMatrix w(n, cols);
    std::vector<Int> col(static_cast<std::size_t>(n), Int(1));
    for (int j = 0; j < cols; ++j) {
        for (int i = 0; i < n; ++i) w(i, j) = col[static_cast<std::size_t>(i)];
        if (j + 1 < cols) col = detail::adjacency_apply(g, col);
    }
    return w;
}

inline IntMatrix walk_matrix(const Graph& g) { return walk_matrix_columns(g, g.order()); }

inline IntMatrix extended_walk_matrix(const Graph& g) {
    return walk_matrix_columns(g, g.order() + 1);
}

inline bool is_controllable(const Graph& g) { return rank(walk_matrix(g)) == g.order(); }

// Walk matrix, its one-column extension, and the invertibility verdict.
struct WalkData {
    IntMatrix walk;
    IntMatrix extended;
    bool controllable = false;
};

inline WalkData walk_data(const Graph& g) {
    WalkData d;
    d.extended = extended_walk_matrix(g);
    const int n = g.order();
    d.walk = IntMatrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d.walk(i, j) = d.extended(i, j);
    d.controllable = rank(d.walk) == n;
    return d;
}

// (A^r * 1)_v = number of length-r walks starting at v.
inline std::vector<Int> vertex_walk_counts(const Graph& g, int r) {
    if (r < 0) throw std::invalid_argument("vertex_walk_counts: negative length");
    std::vector<Int> col(static_cast<std::size_t>(g.order()), Int(1));
    for (int step = 0; step < r; ++step) col = detail::adjacency_apply(g, col);
    return col;
}

inline Int walk_count(const Graph& g, int r) {
    Int total(0);
    for (const auto& v : vertex_walk_counts(g, r)) total += v;
    return total;
}

// Total walk counts for r = 0..len-1, one adjacency sweep per step.
inline std::vector<Int> walk_count_prefix(const Graph& g, int len) {
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(len));
    std::vector<Int> col(static_cast<std::size_t>(g.order()), Int(1));
    for (int r = 0; r < len; ++r) {
        Int total(0);
        for (const auto& v : col) total += v;
        out.push_back(std::move(total));
        if (r + 1 < len) col = detail::adjacency_apply(g, col);
    }
    return out;
}

// Equal total-walk generating functions. Each count sequence satisfies a
// linear recurrence of order <= n, so agreement on the first 2*max(n_g, n_h)
// terms forces agreement everywhere.
inline bool are_walk_equivalent(const Graph& g, const Graph& h) {
    const int len = 2 * std::max(g.order(), h.order());
    return walk_count_prefix(g, len) == walk_count_prefix(h, len);
}

// 1^T (I - tA)^{-1} 1, exactly.
inline Rat walk_gen_resolvent(const Graph& g, const Rat& t) {
    const int n = g.order();
    RatMatrix m = RatMatrix::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.has_edge(i, j)) m(i, j) -= t;
    RatMatrix rhs = RatMatrix::all_ones(n, 1);
    RatMatrix x = rat_solve(m, rhs);  // SingularMatrixError when 1/t is an eigenvalue
    Rat total(0);
    for (int i = 0; i < n; ++i) total += x(i, 0);
    return total;
}

// The same value computed from the characteristic polynomials of the graph
// and of its complement alone:
//   1^T (I - tA)^{-1} 1 = (1/t) * ( p_comp(-1/t - 1) / ((-1)^n p(1/t)) - 1 ).
inline Rat walk_gen_charpoly(const Graph& g, const Rat& t) {
    if (t == 0) throw std::domain_error("walk_gen_charpoly: t must be nonzero");
    const int n = g.order();
    const RatPoly p = to_rational(char_poly(adjacency_matrix(g)));
    const RatPoly pc = to_rational(char_poly(adjacency_matrix(complement(g))));
    const Rat tinv = Rat(1) / t;
    Rat den = p(tinv);
    if (n % 2 != 0) den = -den;
    if (den == 0) throw std::domain_error("walk_gen_charpoly: vanishing denominator");
    const Rat num = pc(-tinv - 1);
    return (num / den - 1) / t;
}

inline bool are_cospectral(const Graph& g, const Graph& h) {
    if (g.order() != h.order()) return false;
    return char_poly(adjacency_matrix(g)) == char_poly(adjacency_matrix(h));
}

// Characteristic polynomial of A + sJ, exact in s.
inline RatPoly generalized_char_poly_at(const Graph& g, const Rat& s) {
    const int n = g.order();
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m(i, j) = s;
            if (g.has_edge(i, j)) m(i, j) += 1;
        }
    return char_poly(m);
}

// det(tI - sJ - A) equal for all s. Since J has rank 1 every t-coefficient is
// linear in s, so agreement at s = 0 and s = 1 decides; the Johnson-Newman
// route (cospectral graphs with cospectral complements) is computed as well
// and the two must coincide.
inline bool are_generalized_cospectral(const Graph& g, const Graph& h) {
    bool two_point = false;
    if (g.order() == h.order()) {
        IntMatrix ag = adjacency_matrix(g), ah = adjacency_matrix(h);
        IntMatrix agj = ag, ahj = ah;
        for (int i = 0; i < g.order(); ++i)
            for (int j = 0; j < g.order(); ++j) {
                agj(i, j) += 1;
                ahj(i, j) += 1;
            }
        two_point = char_poly(ag) == char_poly(ah) && char_poly(agj) == char_poly(ahj);
    }
    const bool johnson_newman =
        are_cospectral(g, h) && are_cospectral(complement(g), complement(h));
    if (two_point != johnson_newman)
        throw std::logic_error("are_generalized_cospectral: decision routes disagree");
    return two_point;
}

}  // namespace ctrliso
