#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctrliso/graph.hpp"
#include "ctrliso/graph6.hpp"
#include "ctrliso/refine.hpp"
#include "ctrliso/walk.hpp"

namespace ctrliso {

enum class IsoKind { Isomorphic, NonIsomorphic, Inconclusive };

enum class IsoReason {
    SizeMismatch,
    RefinementDiffers,
    SpectrumDiffers,
    ComplementSpectrumDiffers,
    ControllabilityDiffers,
    WalkRowsDiffer,
    WalkRowsMatchVerified,
    BruteForce,
    NotControllable,
};

inline const char* to_string(IsoKind k) {
    switch (k) {
        case IsoKind::Isomorphic: return "Isomorphic";
        case IsoKind::NonIsomorphic: return "NonIsomorphic";
        case IsoKind::Inconclusive: return "Inconclusive";
    }
    return "?";
}

inline const char* to_string(IsoReason r) {
    switch (r) {
        case IsoReason::SizeMismatch: return "size-mismatch";
        case IsoReason::RefinementDiffers: return "refinement-differs";
        case IsoReason::SpectrumDiffers: return "spectrum-differs";
        case IsoReason::ComplementSpectrumDiffers: return "complement-spectrum-differs";
        case IsoReason::ControllabilityDiffers: return "controllability-differs";
        case IsoReason::WalkRowsDiffer: return "walkrows-differ";
        case IsoReason::WalkRowsMatchVerified: return "walkrows-match-verified";
        case IsoReason::BruteForce: return "bruteforce";
        case IsoReason::NotControllable: return "not-controllable";
    }
    return "?";
}

// Decision outcome. An Isomorphic verdict always carries a certificate that
// has been verified via apply_permutation; a NonIsomorphic verdict names the
// sound invariant that differs.
struct IsoVerdict {
    IsoKind kind;
    IsoReason reason;
    std::optional<Permutation> certificate;
};

// P with P e_j = e_{p(j)}, i.e. P[r][c] = 1 iff r = p(c). Satisfies
// P * W_g = W_h whenever row p(i) of W_h equals row i of W_g.
inline RatMatrix permutation_matrix(const Permutation& p) {
    RatMatrix m(p.size(), p.size());
    for (int c = 0; c < p.size(); ++c) m(p(c), c) = 1;
    return m;
}

namespace detail {

// Backtracking isomorphism search mapping g-vertices 0,1,... in order to
// unused h-vertices in ascending order, so the first hit is the
// lexicographically least image array. Degree pruning only.
inline bool iso_search(const Graph& g, const Graph& h, std::vector<int>& image, int depth,
                       std::vector<char>& used, const std::function<bool(const std::vector<int>&)>& on_found) {
    const int n = g.order();
    if (depth == n) return on_found(image);
    for (int v = 0; v < n; ++v) {
        if (used[static_cast<std::size_t>(v)]) continue;
        if (h.degree(v) != g.degree(depth)) continue;
        bool ok = true;
        for (int j = 0; j < depth && ok; ++j)
            ok = g.has_edge(j, depth) == h.has_edge(image[static_cast<std::size_t>(j)], v);
        if (!ok) continue;
        image[static_cast<std::size_t>(depth)] = v;
        used[static_cast<std::size_t>(v)] = 1;
        if (iso_search(g, h, image, depth + 1, used, on_found)) return true;
        used[static_cast<std::size_t>(v)] = 0;
    }
    return false;
}

}  // namespace detail

// Ground-truth search; deterministic (lexicographically least permutation).
inline std::optional<Permutation> brute_force_iso(const Graph& g, const Graph& h) {
    if (g.order() != h.order()) throw std::invalid_argument("brute_force_iso: size mismatch");
    if (g.order() > 10) throw std::invalid_argument("brute_force_iso: order above the cap of 10");
    auto dg = g.degrees(), dh = h.degrees();
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return std::nullopt;
    std::vector<int> image(static_cast<std::size_t>(g.order()));
    std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
    std::optional<Permutation> found;
    detail::iso_search(g, h, image, 0, used, [&](const std::vector<int>& img) {
        found = Permutation(img);
        return true;
    });
    return found;
}

inline bool has_trivial_automorphism_group(const Graph& g) {
    if (g.order() > 10) throw std::invalid_argument("has_trivial_automorphism_group: order above the cap of 10");
    std::vector<int> image(static_cast<std::size_t>(g.order()));
    std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
    bool nontrivial = false;
    detail::iso_search(g, g, image, 0, used, [&](const std::vector<int>& img) {
        for (std::size_t i = 0; i < img.size(); ++i)
            if (img[i] != static_cast<int>(i)) {
                nontrivial = true;
                return true;  // stop at the first non-identity automorphism
            }
        return false;  // the identity; keep searching
    });
    return !nontrivial;
}

// True iff the extended walk matrices have equal Gram matrices.
inline bool gram_screen(const Graph& g, const Graph& h) {
    if (g.order() != h.order()) throw std::invalid_argument("gram_screen: size mismatch");
    const IntMatrix wg = extended_walk_matrix(g), wh = extended_walk_matrix(h);
    return wg.transpose() * wg == wh.transpose() * wh;
}

// Q = W_h * W_g^{-1} for controllable generalized-cospectral pairs; validates
// Q*1 = 1 and Q*A_g*Q^T = A_h exactly before returning.
inline std::optional<RatMatrix> quotient_transform(const Graph& g, const Graph& h) {
    if (g.order() != h.order()) return std::nullopt;
    if (!is_controllable(g) || !is_controllable(h)) return std::nullopt;
    if (!are_generalized_cospectral(g, h)) return std::nullopt;
    const RatMatrix wg = to_rational(walk_matrix(g));
    const RatMatrix wh = to_rational(walk_matrix(h));
    const RatMatrix q = wh * rat_inverse(wg);
    const RatMatrix ones = RatMatrix::all_ones(g.order(), 1);
    if (q * ones != ones) throw std::logic_error("quotient_transform: Q*1 != 1");
    const RatMatrix ag = to_rational(adjacency_matrix(g));
    const RatMatrix ah = to_rational(adjacency_matrix(h));
    if (q * ag * q.transpose() != ah)
        throw std::logic_error("quotient_transform: Q*A*Q^T != B");
    return q;
}

// Orthogonal Q with Q*u = v when the columns of u and v have equal Gram
// matrices, built from rational reflections; absent on Gram mismatch.
inline std::optional<RatMatrix> orthogonal_aligner(const RatMatrix& u, const RatMatrix& v) {
    if (u.rows() != v.rows() || u.cols() != v.cols())
        throw std::invalid_argument("orthogonal_aligner: shape mismatch");
    if (u.transpose() * u != v.transpose() * v) return std::nullopt;
    const int n = u.rows(), m = u.cols();
    RatMatrix q = RatMatrix::identity(n);
    for (int j = 0; j < m; ++j) {
        // Current image of column j and its target.
        std::vector<Rat> x(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            Rat acc(0);
            for (int k = 0; k < n; ++k) acc += q(i, k) * u(k, j);
            x[static_cast<std::size_t>(i)] = acc;
            w[static_cast<std::size_t>(i)] = acc - v(i, j);
        }
        Rat wtw(0);
        for (const auto& wi : w) wtw += wi * wi;
        if (wtw == 0) continue;  // already aligned (covers the zero-column case)
        // Reflect across w's orthogonal complement: fixes previously aligned
        // columns (w is orthogonal to them by Gram equality) and sends x to v_j.
        RatMatrix refl = RatMatrix::identity(n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                refl(a, b) -= 2 * w[static_cast<std::size_t>(a)] * w[static_cast<std::size_t>(b)] / wtw;
        q = refl * q;
    }
    return q;
}

// The decision pipeline: sound screens in increasing cost order, then the
// walk-row matching for controllable pairs, then the brute-force fallback.
inline IsoVerdict decide_isomorphism(const Graph& g, const Graph& h, int bruteforce_max = 10) {
    if (g.order() != h.order()) return {IsoKind::NonIsomorphic, IsoReason::SizeMismatch, std::nullopt};
    if (!same_iterated_degree_sequence(g, h))
        return {IsoKind::NonIsomorphic, IsoReason::RefinementDiffers, std::nullopt};
    if (!are_cospectral(g, h)) return {IsoKind::NonIsomorphic, IsoReason::SpectrumDiffers, std::nullopt};
    if (!are_cospectral(complement(g), complement(h)))
        return {IsoKind::NonIsomorphic, IsoReason::ComplementSpectrumDiffers, std::nullopt};
    const bool cg = is_controllable(g), ch = is_controllable(h);
    if (cg != ch) return {IsoKind::NonIsomorphic, IsoReason::ControllabilityDiffers, std::nullopt};
    if (cg && ch) {
        const IntMatrix wg = extended_walk_matrix(g), wh = extended_walk_matrix(h);
        const int n = g.order();
        std::vector<std::vector<Int>> rg(static_cast<std::size_t>(n)), rh(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            rg[static_cast<std::size_t>(i)] = wg.row(i);
            rh[static_cast<std::size_t>(i)] = wh.row(i);
        }
        std::vector<int> og(static_cast<std::size_t>(n)), oh(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) og[static_cast<std::size_t>(i)] = oh[static_cast<std::size_t>(i)] = i;
        std::sort(og.begin(), og.end(), [&](int a, int b) { return rg[static_cast<std::size_t>(a)] < rg[static_cast<std::size_t>(b)]; });
        std::sort(oh.begin(), oh.end(), [&](int a, int b) { return rh[static_cast<std::size_t>(a)] < rh[static_cast<std::size_t>(b)]; });
        for (int k = 0; k < n; ++k)
            if (rg[static_cast<std::size_t>(og[static_cast<std::size_t>(k)])] !=
                rh[static_cast<std::size_t>(oh[static_cast<std::size_t>(k)])])
                return {IsoKind::NonIsomorphic, IsoReason::WalkRowsDiffer, std::nullopt};
        // Rows are pairwise distinct for controllable graphs, so the matching
        // is unique; the resulting map must be an isomorphism.
        std::vector<int> image(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k)
            image[static_cast<std::size_t>(og[static_cast<std::size_t>(k)])] = oh[static_cast<std::size_t>(k)];
        Permutation p(std::move(image));
        if (apply_permutation(g, p) != h) {
            std::ostringstream os;
            os << "decide_isomorphism: walk-row certificate failed verification; g=" << write_graph6(g)
               << " h=" << write_graph6(h);
            throw std::logic_error(os.str());
        }
        return {IsoKind::Isomorphic, IsoReason::WalkRowsMatchVerified, std::move(p)};
    }
    if (g.order() <= bruteforce_max) {
        auto p = brute_force_iso(g, h);
        if (p) return {IsoKind::Isomorphic, IsoReason::BruteForce, std::move(p)};
        return {IsoKind::NonIsomorphic, IsoReason::BruteForce, std::nullopt};
    }
    return {IsoKind::Inconclusive, IsoReason::NotControllable, std::nullopt};
}

}  // namespace ctrliso
