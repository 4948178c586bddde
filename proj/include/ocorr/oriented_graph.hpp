#ifndef OCORR_ORIENTED_GRAPH_HPP
#define OCORR_ORIENTED_GRAPH_HPP

#include <cstdint>
#include <vector>

#include "ocorr/error.hpp"

namespace ocorr {

/// Directed graph on n labeled vertices from orienting a simple graph:
/// no self-loops, at most one directed edge per unordered pair.
/// Adjacency is one bitset row per vertex; reachability runs by
/// word-parallel frontier expansion (n <= 64 is one word per row).
class OrientedGraph {
public:
    explicit OrientedGraph(int n) : n_(n), words_((n + 63) / 64), out_(n_ * words_, 0) {
        if (n < 1 || n > kMaxN) throw DomainError("OrientedGraph: n out of range");
    }

    int n() const { return n_; }

    void clear() { std::fill(out_.begin(), out_.end(), 0); }

    void add_edge(int u, int v) { out_[u * words_ + (v >> 6)] |= uint64_t(1) << (v & 63); }

    bool has_edge(int u, int v) const {
        return out_[u * words_ + (v >> 6)] >> (v & 63) & 1;
    }

    /// True iff a directed path u -> v exists (u reaches itself).
    bool reaches(int u, int v) const {
        if (u == v) return true;
        uint64_t visited[kMaxWords] = {0}, frontier[kMaxWords] = {0};
        visited[u >> 6] = frontier[u >> 6] = uint64_t(1) << (u & 63);
        const uint64_t vbit = uint64_t(1) << (v & 63);
        const int vw = v >> 6;
        for (;;) {
            uint64_t next[kMaxWords] = {0};
            for (int w = 0; w < words_; ++w) {
                uint64_t fw = frontier[w];
                while (fw) {
                    int x = w * 64 + __builtin_ctzll(fw);
                    fw &= fw - 1;
                    const uint64_t* row = &out_[x * words_];
                    for (int w2 = 0; w2 < words_; ++w2) next[w2] |= row[w2];
                }
            }
            bool any = false;
            for (int w = 0; w < words_; ++w) {
                next[w] &= ~visited[w];
                visited[w] |= next[w];
                frontier[w] = next[w];
                any |= next[w] != 0;
            }
            if (visited[vw] & vbit) return true;
            if (!any) return false;
        }
    }

    static constexpr int kMaxN = 512;

private:
    static constexpr int kMaxWords = (kMaxN + 63) / 64;
    int n_, words_;
    std::vector<uint64_t> out_;
};

}  // namespace ocorr

#endif
