#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ctrliso/graph.hpp"

namespace ctrliso {

// splitmix64: the fixed PRNG behind every seeded generator here, so seeded
// outputs are bit-reproducible across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

// G(n, 1/2): the pair with index k (vertex_pairs order) takes bit k mod 64 of
// the (k/64 + 1)-th splitmix64 output from the seed.
inline Graph random_graph(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_graph: order must be at least 1");
    Graph g(n);
    SplitMix64 rng(seed);
    std::uint64_t word = 0;
    std::size_t k = 0;
    for (const auto& [i, j] : vertex_pairs(n)) {
        if (k % 64 == 0) word = rng.next();
        if ((word >> (k % 64)) & 1ULL) g.add_edge(i, j);
        ++k;
    }
    return g;
}

// Seeded Fisher-Yates over the splitmix64 stream. Deterministic; the exact
// stream layout is internal to this library.
inline Permutation random_permutation(int n, std::uint64_t seed) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    SplitMix64 rng(seed);
    for (int i = n - 1; i > 0; --i) {
        const int j = static_cast<int>(rng.next() % static_cast<std::uint64_t>(i + 1));
        std::swap(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(j)]);
    }
    return Permutation(std::move(img));
}

}  // namespace ctrliso
