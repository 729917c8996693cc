#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "ctrliso/graph.hpp"

namespace ctrliso {

// Streams all 2^(n(n-1)/2) labeled graphs on n vertices exactly once, in mask
// order over the vertex_pairs list. Refuses n > 8 unless explicitly overridden.
class GraphEnumerator {
public:
    explicit GraphEnumerator(int n, bool allow_large = false)
        : n_(n), pairs_(vertex_pairs(n)) {
        if (n < 1) throw std::invalid_argument("GraphEnumerator: order must be at least 1");
        if (n > 8 && !allow_large)
            throw std::invalid_argument("GraphEnumerator: n > 8 refused; pass allow_large to override");
        if (pairs_.size() >= 63)
            throw std::invalid_argument("GraphEnumerator: pair count exceeds the 64-bit mask");
        total_ = std::uint64_t(1) << pairs_.size();
    }

    // Writes the next graph into out; false once the stream is exhausted.
    bool next(Graph& out) {
        if (done_) return false;
        Graph g(n_);
        for (std::size_t b = 0; b < pairs_.size(); ++b)
            if ((mask_ >> b) & 1ULL) g.add_edge(pairs_[b].first, pairs_[b].second);
        out = g;
        if (++mask_ == total_) done_ = true;
        return true;
    }

    std::uint64_t total() const { return total_; }

private:
    int n_;
    std::vector<std::pair<int, int>> pairs_;
    std::uint64_t mask_ = 0;
    std::uint64_t total_ = 0;
    bool done_ = false;
};

inline void for_each_graph(int n, const std::function<void(const Graph&)>& fn, bool allow_large = false) {
    GraphEnumerator en(n, allow_large);
    Graph g(1);
    while (en.next(g)) fn(g);
}

inline std::vector<Graph> all_graphs(int n) {
    std::vector<Graph> out;
    for_each_graph(n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

}  // namespace ctrliso
