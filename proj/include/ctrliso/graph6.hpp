#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "ctrliso/graph.hpp"

namespace ctrliso {

// Parse or serialization failure, with the byte offset of the offending input.
struct Graph6Error : std::runtime_error {
    Graph6Error(const std::string& msg, std::size_t byte_offset)
        : std::runtime_error(msg + " (byte offset " + std::to_string(byte_offset) + ")"),
          offset(byte_offset) {}
    std::size_t offset;
};

// graph6, single-byte size header only (1 <= n <= 62). Byte 0 is n+63; the
// upper-triangle bits in vertex_pairs order follow, packed big-endian into
// 6-bit groups, each stored as group+63.
inline Graph parse_graph6(const std::string& text) {
    if (text.empty()) throw Graph6Error("graph6: empty input", 0);
    const unsigned char header = static_cast<unsigned char>(text[0]);
    if (header == 126) throw Graph6Error("graph6: multi-byte size headers are not supported", 0);
    if (header < 63 || header > 125) throw Graph6Error("graph6: malformed size header", 0);
    const int n = static_cast<int>(header) - 63;
    if (n < 1) throw Graph6Error("graph6: vertex count 0 is not supported", 0);

    const auto pairs = vertex_pairs(n);
    const std::size_t nbits = pairs.size();
    const std::size_t nbytes = (nbits + 5) / 6;
    if (text.size() < 1 + nbytes)
        throw Graph6Error("graph6: truncated body, expected " + std::to_string(1 + nbytes) + " bytes",
                          text.size());
    if (text.size() > 1 + nbytes)
        throw Graph6Error("graph6: trailing bytes after body", 1 + nbytes);

    Graph g(n);
    for (std::size_t b = 0; b < nbytes; ++b) {
        const std::size_t off = 1 + b;
        const unsigned char c = static_cast<unsigned char>(text[off]);
        if (c < 63 || c > 126) throw Graph6Error("graph6: body byte out of range", off);
        const unsigned group = static_cast<unsigned>(c) - 63;
        for (int bit = 0; bit < 6; ++bit) {
            const std::size_t k = b * 6 + static_cast<std::size_t>(bit);
            const bool set = (group >> (5 - bit)) & 1u;
            if (k < nbits) {
                if (set) g.add_edge(pairs[k].first, pairs[k].second);
            } else if (set) {
                throw Graph6Error("graph6: nonzero padding bits", off);
            }
        }
    }
    return g;
}

inline std::string write_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62) throw Graph6Error("graph6: graphs with more than 62 vertices are not supported", 0);
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    const auto pairs = vertex_pairs(n);
    unsigned group = 0;
    int filled = 0;
    for (const auto& [i, j] : pairs) {
        group = (group << 1) | (g.has_edge(i, j) ? 1u : 0u);
        if (++filled == 6) {
            out.push_back(static_cast<char>(group + 63));
            group = 0;
            filled = 0;
        }
    }
    if (filled > 0) {
        group <<= (6 - filled);
        out.push_back(static_cast<char>(group + 63));
    }
    return out;
}

}  // namespace ctrliso
