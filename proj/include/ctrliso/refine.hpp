#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctrliso/graph.hpp"
#include "ctrliso/linalg.hpp"
#include "ctrliso/walk.hpp"

namespace ctrliso {

// Stable color refinement of a set of graphs jointly (equivalent to refining
// their disjoint union): class ids are shared across the set, so per-class
// vertex counts are directly comparable between member graphs.
struct JointColoring {
    int num_classes = 0;
    int rounds = 0;
    std::vector<std::vector<int>> class_of;    // [graph][vertex] -> shared class id
    std::vector<std::vector<long>> class_count;  // [graph][class] -> multiplicity
};

inline JointColoring joint_refine(const std::vector<Graph>& gs) {
    if (gs.empty()) throw std::invalid_argument("joint_refine: empty graph set");
    JointColoring jc;
    jc.class_of.resize(gs.size());

    // Round 0: classes by degree, ids ranked by degree value.
    {
        std::map<int, int> dict;
        for (const auto& g : gs)
            for (int v = 0; v < g.order(); ++v) dict.emplace(g.degree(v), 0);
        int next = 0;
        for (auto& [deg, id] : dict) id = next++;
        for (std::size_t gi = 0; gi < gs.size(); ++gi) {
            jc.class_of[gi].resize(static_cast<std::size_t>(gs[gi].order()));
            for (int v = 0; v < gs[gi].order(); ++v)
                jc.class_of[gi][static_cast<std::size_t>(v)] = dict.at(gs[gi].degree(v));
        }
        jc.num_classes = next;
    }

    // Refine: split every class by the multiset of neighbor classes until the
    // global class count stops growing. Ids stay canonical (key rank order).
    for (;;) {
        std::map<std::vector<int>, int> dict;
        std::vector<std::vector<std::vector<int>>> keys(gs.size());
        for (std::size_t gi = 0; gi < gs.size(); ++gi) {
            const Graph& g = gs[gi];
            keys[gi].resize(static_cast<std::size_t>(g.order()));
            for (int v = 0; v < g.order(); ++v) {
                std::vector<int> key;
                key.push_back(jc.class_of[gi][static_cast<std::size_t>(v)]);
                for (int u : g.neighbors(v)) key.push_back(jc.class_of[gi][static_cast<std::size_t>(u)]);
                std::sort(key.begin() + 1, key.end());
                dict.emplace(key, 0);
                keys[gi][static_cast<std::size_t>(v)] = std::move(key);
            }
        }
        int next = 0;
        for (auto& [key, id] : dict) id = next++;
        ++jc.rounds;
        const bool stable = next == jc.num_classes;
        for (std::size_t gi = 0; gi < gs.size(); ++gi)
            for (int v = 0; v < gs[gi].order(); ++v)
                jc.class_of[gi][static_cast<std::size_t>(v)] = dict.at(keys[gi][static_cast<std::size_t>(v)]);
        jc.num_classes = next;
        if (stable) break;
    }

    jc.class_count.assign(gs.size(), std::vector<long>(static_cast<std::size_t>(jc.num_classes), 0));
    for (std::size_t gi = 0; gi < gs.size(); ++gi)
        for (int id : jc.class_of[gi]) ++jc.class_count[gi][static_cast<std::size_t>(id)];
    return jc;
}

// One refinement round over an existing class assignment, ids renumbered by
// key rank. Stable assignments map to the same partition.
inline std::vector<int> refine_round(const Graph& g, const std::vector<int>& cls) {
    if (static_cast<int>(cls.size()) != g.order())
        throw std::invalid_argument("refine_round: class vector length mismatch");
    std::map<std::vector<int>, int> dict;
    std::vector<std::vector<int>> keys(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) {
        std::vector<int> key;
        key.push_back(cls[static_cast<std::size_t>(v)]);
        for (int u : g.neighbors(v)) key.push_back(cls[static_cast<std::size_t>(u)]);
        std::sort(key.begin() + 1, key.end());
        dict.emplace(key, 0);
        keys[static_cast<std::size_t>(v)] = std::move(key);
    }
    int next = 0;
    for (auto& [key, id] : dict) id = next++;
    std::vector<int> out(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) out[static_cast<std::size_t>(v)] = dict.at(keys[static_cast<std::size_t>(v)]);
    return out;
}

namespace detail {

struct Hash128 {
    std::uint64_t lo = 0, hi = 0;
    bool operator==(const Hash128& o) const { return lo == o.lo && hi == o.hi; }
    bool operator<(const Hash128& o) const { return hi != o.hi ? hi < o.hi : lo < o.lo; }
};

inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline Hash128 hash_int(std::uint64_t v) {
    return {mix64(v * 0x632BE59BD9B4E019ULL + 1), mix64(v * 0xD6E8FEB86659FD93ULL + 2)};
}

inline Hash128 hash_combine(const Hash128& a, const Hash128& b) {
    Hash128 out;
    out.lo = mix64(a.lo ^ (b.lo + 0x9E3779B97F4A7C15ULL + (a.lo << 6) + (a.lo >> 2)));
    out.hi = mix64(a.hi ^ (b.hi + 0xC2B2AE3D27D4EB4FULL + (a.hi << 6) + (a.hi >> 2)));
    return out;
}

inline std::string hash_hex(const Hash128& h) {
    static const char* digits = "0123456789abcdef";
    std::string s(32, '0');
    for (int i = 0; i < 16; ++i) s[static_cast<std::size_t>(15 - i)] = digits[(h.hi >> (4 * i)) & 0xF];
    for (int i = 0; i < 16; ++i) s[static_cast<std::size_t>(31 - i)] = digits[(h.lo >> (4 * i)) & 0xF];
    return s;
}

// Structural hash of every vertex's refinement history to the given depth.
// Equal hashes across graphs correspond to equal iterated-degree positions
// (up to hash collision, which does not affect any decision path).
inline std::vector<Hash128> refinement_hashes(const Graph& g, int depth) {
    const int n = g.order();
    std::vector<Hash128> h(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) h[static_cast<std::size_t>(v)] = hash_int(static_cast<std::uint64_t>(g.degree(v)));
    for (int round = 0; round < depth; ++round) {
        std::vector<Hash128> next(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<Hash128> nb;
            for (int u : g.neighbors(v)) nb.push_back(h[static_cast<std::size_t>(u)]);
            std::sort(nb.begin(), nb.end());
            Hash128 acc = hash_combine(hash_int(0xFEEDULL), h[static_cast<std::size_t>(v)]);
            for (const auto& x : nb) acc = hash_combine(acc, x);
            next[static_cast<std::size_t>(v)] = acc;
        }
        h = std::move(next);
    }
    return h;
}

}  // namespace detail

// Stable coloring of one graph. Signatures are depth-2n structural hashes of
// the refinement history: equal signatures across two graphs of the same
// order certify matching iterated-degree classes. Class ids are ordered by
// signature, so they are reproducible.
struct Coloring {
    std::vector<int> class_of;            // vertex -> class id
    std::vector<std::string> signatures;  // class id -> signature
    std::vector<long> class_sizes;        // class id -> size
    int rounds = 0;

    int num_classes() const { return static_cast<int>(signatures.size()); }
};

inline Coloring color_refine(const Graph& g) {
    const JointColoring jc = joint_refine({g});
    const auto hashes = detail::refinement_hashes(g, 2 * g.order());

    // Hashes are constant on stable classes; distinct classes get distinct
    // hashes at this depth (collisions would be flagged here).
    std::vector<detail::Hash128> class_hash(static_cast<std::size_t>(jc.num_classes));
    std::vector<bool> seen(static_cast<std::size_t>(jc.num_classes), false);
    for (int v = 0; v < g.order(); ++v) {
        const int c = jc.class_of[0][static_cast<std::size_t>(v)];
        if (!seen[static_cast<std::size_t>(c)]) {
            class_hash[static_cast<std::size_t>(c)] = hashes[static_cast<std::size_t>(v)];
            seen[static_cast<std::size_t>(c)] = true;
        } else if (!(class_hash[static_cast<std::size_t>(c)] == hashes[static_cast<std::size_t>(v)])) {
            throw std::logic_error("color_refine: signature not constant on a stable class");
        }
    }
    std::vector<int> order(static_cast<std::size_t>(jc.num_classes));
    for (int i = 0; i < jc.num_classes; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return class_hash[static_cast<std::size_t>(a)] < class_hash[static_cast<std::size_t>(b)];
    });
    std::vector<int> remap(static_cast<std::size_t>(jc.num_classes));
    for (int pos = 0; pos < jc.num_classes; ++pos)
        remap[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] = pos;

    Coloring col;
    col.rounds = jc.rounds;
    col.class_of.resize(static_cast<std::size_t>(g.order()));
    col.signatures.resize(static_cast<std::size_t>(jc.num_classes));
    col.class_sizes.assign(static_cast<std::size_t>(jc.num_classes), 0);
    for (int v = 0; v < g.order(); ++v) {
        const int c = remap[static_cast<std::size_t>(jc.class_of[0][static_cast<std::size_t>(v)])];
        col.class_of[static_cast<std::size_t>(v)] = c;
        ++col.class_sizes[static_cast<std::size_t>(c)];
    }
    for (int i = 0; i < jc.num_classes; ++i)
        col.signatures[static_cast<std::size_t>(remap[static_cast<std::size_t>(i)])] =
            detail::hash_hex(class_hash[static_cast<std::size_t>(i)]);
    return col;
}

// Equal iterated degree sequences, decided by refining the disjoint union and
// comparing per-class counts. This is the module's C^2-equivalence decision.
inline bool same_iterated_degree_sequence(const Graph& g, const Graph& h) {
    const JointColoring jc = joint_refine({g, h});
    return jc.class_count[0] == jc.class_count[1];
}

// Doubly stochastic S with S * A_g = A_h * S (rows indexed by h, columns by
// g): block-uniform 1/|C| on matched refinement classes. Verified exactly
// before returning.
inline std::optional<RatMatrix> fractional_iso_witness(const Graph& g, const Graph& h) {
    if (g.order() != h.order()) throw std::invalid_argument("fractional_iso_witness: size mismatch");
    const JointColoring jc = joint_refine({g, h});
    if (jc.class_count[0] != jc.class_count[1]) return std::nullopt;
    const int n = g.order();
    RatMatrix s(n, n);
    for (int i = 0; i < n; ++i) {
        const int ci = jc.class_of[1][static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j)
            if (jc.class_of[0][static_cast<std::size_t>(j)] == ci)
                s(i, j) = make_rat(Int(1), Int(jc.class_count[0][static_cast<std::size_t>(ci)]));
    }
    const RatMatrix ag = to_rational(adjacency_matrix(g));
    const RatMatrix ah = to_rational(adjacency_matrix(h));
    if (!(s * ag == ah * s) || !is_doubly_stochastic(s))
        throw std::logic_error("fractional_iso_witness: verification failed");
    return s;
}

// Permutation p with row p(i) of W_h equal to row i of W_g, when the row
// multisets coincide; ties broken by ascending index on both sides.
inline std::optional<Permutation> walk_row_permutation(const Graph& g, const Graph& h) {
    if (g.order() != h.order()) throw std::invalid_argument("walk_row_permutation: size mismatch");
    const int n = g.order();
    const IntMatrix wg = walk_matrix(g), wh = walk_matrix(h);
    std::vector<std::vector<Int>> rg(static_cast<std::size_t>(n)), rh(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        rg[static_cast<std::size_t>(i)] = wg.row(i);
        rh[static_cast<std::size_t>(i)] = wh.row(i);
    }
    std::vector<int> og(static_cast<std::size_t>(n)), oh(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) og[static_cast<std::size_t>(i)] = oh[static_cast<std::size_t>(i)] = i;
    auto by_row = [](const std::vector<std::vector<Int>>& rows) {
        return [&rows](int a, int b) {
            return rows[static_cast<std::size_t>(a)] < rows[static_cast<std::size_t>(b)];
        };
    };
    std::stable_sort(og.begin(), og.end(), by_row(rg));
    std::stable_sort(oh.begin(), oh.end(), by_row(rh));
    for (int k = 0; k < n; ++k)
        if (rg[static_cast<std::size_t>(og[static_cast<std::size_t>(k)])] !=
            rh[static_cast<std::size_t>(oh[static_cast<std::size_t>(k)])])
            return std::nullopt;
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        image[static_cast<std::size_t>(og[static_cast<std::size_t>(k)])] = oh[static_cast<std::size_t>(k)];
    return Permutation(std::move(image));
}

}  // namespace ctrliso
