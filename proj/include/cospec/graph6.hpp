#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cospec/graph.hpp"

namespace cospec {

struct Graph6Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Short-form graph6: byte 0 is n+63; the upper triangle of the adjacency
// matrix is read column by column (x01, x02, x12, x03, ...), packed into
// 6-bit groups MSB first, zero padded, each group offset by 63.
inline std::string to_graph6(const Graph& g) {
    const int n = g.order();
    if (n > Graph::kMaxOrder)
        throw Graph6Error("to_graph6: order " + std::to_string(n) + " exceeds short-form limit 62");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0, nbits = 0;
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph from_graph6(const std::string& line) {
    if (line.empty()) throw Graph6Error("graph6: empty line");
    const int c0 = static_cast<unsigned char>(line[0]);
    if (c0 == 126) throw Graph6Error("graph6: long form (n > 62) not supported, byte 0");
    if (c0 < 63 || c0 > 126)
        throw Graph6Error("graph6: byte 0 value " + std::to_string(c0) + " outside 63..126");
    const int n = c0 - 63;
    const int nbits = n * (n - 1) / 2;
    const size_t want = 1 + static_cast<size_t>((nbits + 5) / 6);
    if (line.size() != want)
        throw Graph6Error("graph6: expected " + std::to_string(want) + " bytes for n=" +
                          std::to_string(n) + ", got " + std::to_string(line.size()));
    Graph g(n);
    int bit = 0;
    for (size_t k = 1; k < line.size(); ++k) {
        const int c = static_cast<unsigned char>(line[k]);
        if (c < 63 || c > 126)
            throw Graph6Error("graph6: byte " + std::to_string(k) + " value " + std::to_string(c) +
                              " outside 63..126");
        const int group = c - 63;
        for (int i = 5; i >= 0; --i, ++bit) {
            const int b = (group >> i) & 1;
            if (bit >= nbits) {
                if (b)
                    throw Graph6Error("graph6: nonzero padding bit in byte " + std::to_string(k));
                continue;
            }
            if (b) {
                // bit index -> column v, row u of the upper triangle
                int v = 1;
                int rem = bit;
                while (rem >= v) rem -= v, ++v;
                g.add_edge(rem, v);
            }
        }
    }
    return g;
}

// One graph per line, newline terminated, no header.
inline std::vector<std::string> read_graph6_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Graph6Error("cannot open file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        lines.push_back(line);
    }
    return lines;
}

inline void write_graph6_lines(const std::string& path, const std::vector<std::string>& lines) {
    std::ofstream out(path);
    if (!out) throw Graph6Error("cannot open file for writing: " + path);
    for (const auto& l : lines) out << l << '\n';
}

}  // namespace cospec
