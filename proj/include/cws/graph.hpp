#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cws/rng.hpp"

namespace cws {

constexpr int kMaxNodes = 16;

// Simple undirected graph on up to 16 nodes, no self-loops, stored as one
// 16-bit adjacency mask per node.  Nodes are integers 0..n-1; bit j of
// adj[i] is set iff {i,j} is an edge.  Invariants: adj symmetric, diagonal
// clear, bits >= n clear.
struct Graph {
    int n = 0;
    std::array<uint16_t, 16> adj{};

    bool has_edge(int i, int j) const { return (adj[i] >> j) & 1u; }

    void add_edge(int i, int j) {
        adj[i] |= uint16_t(1u << j);
        adj[j] |= uint16_t(1u << i);
    }

    void toggle_edge(int i, int j) {
        adj[i] ^= uint16_t(1u << j);
        adj[j] ^= uint16_t(1u << i);
    }

    int degree(int i) const { return __builtin_popcount(adj[i]); }

    uint16_t neighbors(int i) const { return adj[i]; }

    int edge_count() const {
        int total = 0;
        for (int i = 0; i < n; ++i) total += degree(i);
        return total / 2;
    }

    bool operator==(const Graph& other) const {
        return n == other.n && adj == other.adj;
    }
};

// Throws std::invalid_argument if the adjacency structure breaks a Graph
// invariant (asymmetry, self-loop, out-of-range bits, n outside 1..16).
void validate(const Graph& g);

// --- construction helpers ----------------------------------------------

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);    // edges {i, i+1}
Graph cycle_graph(int n);   // path plus {n-1, 0}; n >= 3
Graph random_graph(int n, Rng& rng); // each pair an edge with probability 1/2

// Relabels nodes: node i of the input becomes node perm[i] of the output.
Graph permute(const Graph& g, const std::array<int, 16>& perm);

// --- packing -------------------------------------------------------------
//
// The upper triangle is serialized in column order: (0,1), (0,2), (1,2),
// (0,3), (1,3), (2,3), ...  This matches the graph6 bit order, and it is the
// order used for canonical forms and for indexing the full graph family
// during enumeration.

int pair_bits(int n); // n*(n-1)/2

// Column-order upper-triangle bits, bit k of the result = k-th pair.
// Requires pair_bits(n) <= 64, i.e. n <= 11.
uint64_t pack_index(const Graph& g);
Graph unpack_index(uint64_t idx, int n);

// 128-bit key for hashing graphs up to n = 16 (120 pair bits).
struct GraphKey {
    uint64_t lo = 0, hi = 0;
    bool operator==(const GraphKey& o) const { return lo == o.lo && hi == o.hi; }
};
GraphKey graph_key(const Graph& g);

struct GraphKeyHash {
    size_t operator()(const GraphKey& k) const {
        uint64_t z = k.lo ^ (k.hi * 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        return (size_t)(z ^ (z >> 31));
    }
};

// --- graph6 ----------------------------------------------------------------
//
// Header-less graph6 (the nauty byte format): one size byte n+63, then the
// column-order upper triangle packed into 6-bit groups, each group + 63,
// zero padding in the final group.  Only 1 <= n <= 16 is accepted here.

std::string to_graph6(const Graph& g);
// Throws std::invalid_argument naming the first bad byte offset on any
// malformed input (bad size byte, byte out of range, truncation, trailing
// bytes, nonzero padding).
Graph from_graph6(const std::string& s);

// --- local complementation and orbits -------------------------------------

// Complements the subgraph induced by the neighborhood of v.  Involution.
Graph local_complement(const Graph& g, int v);

// All labeled graphs reachable by local complementations, as a sorted list
// of packed indices' graphs.  Gate: n <= 12.
std::vector<Graph> lc_orbit(const Graph& g);

// --- isomorphism ----------------------------------------------------------

struct CanonicalForm {
    uint64_t canon_bits = 0; // lexicographically minimal packed triangle,
                             // first pair in the most significant position
    uint64_t aut_size = 0;   // |Aut(g)|
};

// Brute-force canonical form over all relabelings, with prefix pruning.
// Two graphs are isomorphic iff their canon_bits agree.  Gate: n <= 10.
CanonicalForm canonical_form(const Graph& g);

// Number of labeled graphs isomorphic to g: n! / |Aut(g)|.
uint64_t orbit_size(const Graph& g);

// --- class enumeration ------------------------------------------------------

enum class Relation { isomorphism, lc_isomorphism };

struct GraphClass {
    Graph representative;  // member with the smallest packed index
    uint64_t size = 0;     // number of labeled graphs in the class
};

struct Classification {
    std::vector<GraphClass> classes;
    // class_of[pack_index(g)] = index into classes; filled only on request.
    std::vector<int32_t> class_of;
};

// Partitions all 2^(n(n-1)/2) labeled graphs on n nodes into classes of the
// given relation by closing each unvisited graph under adjacent-transposition
// relabelings (plus local complementations for lc_isomorphism).  Class sizes
// always sum to 2^(n(n-1)/2).
//
// The sweep touches every labeled graph, so cost grows as 2^(n(n-1)/2); the
// default gate refuses n > 7 (n = 7 is ~2M graphs, well under a second; n= 8
// is 268M graphs, about a minute and 32MB of bitset).  Callers that want
// n = 8 must raise max_n explicitly.
Classification classify(int n, Relation rel, bool with_ids = false,
                        int max_n = 7);

uint64_t factorial(int n);

} // namespace cws
