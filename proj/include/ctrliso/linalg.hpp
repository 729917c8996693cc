#pragma once

#include <stdexcept>
#include <utility>

#include "ctrliso/matrix.hpp"
#include "ctrliso/poly.hpp"

namespace ctrliso {

struct SingularMatrixError : std::domain_error {
    using std::domain_error::domain_error;
};

namespace detail {
inline Int flv_div(const Int& v, long k) { return exact_div(v, Int(k)); }
inline Rat flv_div(const Rat& v, long k) { return v / Rat(k); }
}  // namespace detail

// Characteristic polynomial det(tI - m) by Faddeev-LeVerrier. Over Int the
// per-step divisions are exact, so the result stays in integers.
template <typename T>
Poly<T> char_poly(const Matrix<T>& m) {
    if (!m.is_square()) throw std::invalid_argument("char_poly: matrix must be square");
    const int n = m.rows();
    std::vector<T> c(static_cast<std::size_t>(n) + 1, T(0));
    c[static_cast<std::size_t>(n)] = T(1);
    Matrix<T> mk = Matrix<T>::identity(n);
    for (int k = 1; k <= n; ++k) {
        Matrix<T> am = m * mk;
        c[static_cast<std::size_t>(n - k)] = -detail::flv_div(am.trace(), k);
        if (k < n) {
            mk = std::move(am);
            for (int i = 0; i < n; ++i) mk(i, i) += c[static_cast<std::size_t>(n - k)];
        }
    }
    return Poly<T>(std::move(c));
}

// Rank over the rationals via fraction-free (Bareiss) elimination; pivots are
// the first nonzero entry in column scan order.
inline int rank(const IntMatrix& m) {
    IntMatrix w = m;
    const int rows = w.rows(), cols = w.cols();
    Int prev(1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (w(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        w.swap_rows(piv, r);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                w(i, j) = exact_div(w(r, c) * w(i, j) - w(i, c) * w(r, j), prev);
            w(i, c) = 0;
        }
        prev = w(r, c);
        ++r;
    }
    return r;
}

// Solves a * x = rhs exactly by Gauss-Jordan with first-nonzero pivoting.
inline RatMatrix rat_solve(const RatMatrix& a, const RatMatrix& rhs) {
    if (!a.is_square()) throw std::invalid_argument("rat_solve: coefficient matrix must be square");
    if (a.rows() != rhs.rows()) throw std::invalid_argument("rat_solve: right-hand side shape mismatch");
    const int n = a.rows(), m = rhs.cols();
    RatMatrix w = a, x = rhs;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (w(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw SingularMatrixError("rat_solve: singular matrix");
        w.swap_rows(piv, c);
        x.swap_rows(piv, c);
        const Rat inv = Rat(1) / w(c, c);
        for (int j = c; j < n; ++j) w(c, j) *= inv;
        for (int j = 0; j < m; ++j) x(c, j) *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == c || w(i, c) == 0) continue;
            const Rat f = w(i, c);
            for (int j = c; j < n; ++j) w(i, j) -= f * w(c, j);
            for (int j = 0; j < m; ++j) x(i, j) -= f * x(c, j);
        }
    }
    return x;
}

inline RatMatrix rat_inverse(const RatMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("rat_inverse: matrix must be square");
    return rat_solve(m, RatMatrix::identity(m.rows()));
}

inline bool is_doubly_stochastic(const RatMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("is_doubly_stochastic: matrix must be square");
    const int n = m.rows();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m(i, j) < 0) return false;
    for (int i = 0; i < n; ++i) {
        Rat rs(0), cs(0);
        for (int j = 0; j < n; ++j) {
            rs += m(i, j);
            cs += m(j, i);
        }
        if (rs != 1 || cs != 1) return false;
    }
    return true;
}

// p evaluated at a square matrix, exactly (Horner).
inline IntMatrix eval_at_matrix(const IntPoly& p, const IntMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("eval_at_matrix: matrix must be square");
    const int n = a.rows();
    IntMatrix acc(n, n);
    for (int k = p.degree(); k >= 0; --k) {
        acc = acc * a;
        const Int c = p.coeff(k);
        if (c != 0)
            for (int i = 0; i < n; ++i) acc(i, i) += c;
    }
    return acc;
}

}  // namespace ctrliso
