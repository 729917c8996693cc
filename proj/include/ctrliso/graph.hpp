#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ctrliso {

// Simple undirected graph on dense vertex labels 0..n-1. No self-loops, no
// parallel edges. Values are immutable by convention once built and safe to
// share across threads.
class Graph {
public:
    explicit Graph(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("Graph: order must be at least 1");
        adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    }

    Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
        for (const auto& [u, v] : edges) add_edge(u, v);
    }

    int order() const { return n_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[idx(u, v)] != 0;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: self-loops are not allowed");
        adj_[idx(u, v)] = 1;
        adj_[idx(v, u)] = 1;
    }

    int degree(int v) const {
        check_vertex(v);
        int d = 0;
        for (int u = 0; u < n_; ++u) d += adj_[idx(v, u)];
        return d;
    }

    std::vector<int> degrees() const {
        std::vector<int> out(n_);
        for (int v = 0; v < n_; ++v) out[v] = degree(v);
        return out;
    }

    std::vector<int> neighbors(int v) const {
        check_vertex(v);
        std::vector<int> out;
        for (int u = 0; u < n_; ++u)
            if (adj_[idx(v, u)]) out.push_back(u);
        return out;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (adj_[idx(u, v)]) out.emplace_back(u, v);
        return out;
    }

    std::size_t edge_count() const {
        std::size_t m = 0;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v) m += adj_[idx(u, v)];
        return m;
    }

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    std::size_t idx(int u, int v) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    }
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex index out of range");
    }

    int n_;
    std::vector<std::uint8_t> adj_;
};

// Bijection on {0..n-1}, stored as image[old index] = new index.
struct Permutation {
    std::vector<int> image;

    Permutation() = default;
    explicit Permutation(std::vector<int> img) : image(std::move(img)) { validate(); }

    static Permutation identity(int n) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        return Permutation(std::move(img));
    }

    int size() const { return static_cast<int>(image.size()); }
    int operator()(int v) const { return image.at(static_cast<std::size_t>(v)); }

    bool is_identity() const {
        for (int i = 0; i < size(); ++i)
            if (image[i] != i) return false;
        return true;
    }

    Permutation inverse() const {
        std::vector<int> inv(image.size());
        for (int i = 0; i < size(); ++i) inv[image[i]] = i;
        return Permutation(std::move(inv));
    }

    bool operator==(const Permutation& other) const { return image == other.image; }
    bool operator!=(const Permutation& other) const { return image != other.image; }

private:
    void validate() const {
        std::vector<char> seen(image.size(), 0);
        for (int v : image) {
            if (v < 0 || v >= static_cast<int>(image.size()) || seen[v])
                throw std::invalid_argument("Permutation: image is not a bijection");
            seen[v] = 1;
        }
    }
};

inline Graph complement(const Graph& g) {
    Graph out(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

inline Graph apply_permutation(const Graph& g, const Permutation& p) {
    if (p.size() != g.order()) throw std::invalid_argument("apply_permutation: length mismatch");
    Graph out(g.order());
    for (const auto& [u, v] : g.edges()) out.add_edge(p(u), p(v));
    return out;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph out(a.order() + b.order());
    for (const auto& [u, v] : a.edges()) out.add_edge(u, v);
    for (const auto& [u, v] : b.edges()) out.add_edge(a.order() + u, a.order() + v);
    return out;
}

// Upper-triangle pair order shared by the graph6 format, random_graph and the
// exhaustive enumerator: columns j = 1..n-1, within a column rows i = 0..j-1.
inline std::vector<std::pair<int, int>> vertex_pairs(int n) {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) out.emplace_back(i, j);
    return out;
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(0, n - 1);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

}  // namespace ctrliso
