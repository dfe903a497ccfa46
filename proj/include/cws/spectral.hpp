#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cws/graph.hpp"
#include "cws/rng.hpp"

namespace cws {

// Dense symmetric eigendecomposition by cyclic Jacobi rotations, iterated
// until every off-diagonal magnitude is below 1e-12.  Deterministic: fixed
// sweep order, no pivot randomization.  values come back sorted ascending
// (ties keep the rotation output's column order), vectors[k] matches
// values[k] and has unit length.
struct EigenDecomposition {
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;
};
EigenDecomposition jacobi_eigen(std::vector<std::vector<double>> a);

// Graph Laplacian L = D - A as integers.
std::vector<std::vector<int>> laplacian(const Graph& g);

// Second-smallest Laplacian eigenpair.  The eigenvector's global sign is
// fixed so that its first component larger than 1e-9 in magnitude (by node
// index) is positive.  Requires n >= 2.
struct FiedlerResult {
    double lambda2 = 0;
    std::vector<double> vec;
};
FiedlerResult fiedler(const Graph& g);

// Splits nodes into the floor(n/2) smallest Fiedler components (part1) and
// the rest (part2); equal components are ordered by ascending node index.
struct Bisection {
    uint16_t part1 = 0;
    uint16_t part2 = 0;
    int cut_size = 0; // edges crossing the parts
};
Bisection spectral_bisection(const Graph& g);

// A connected piece extracted from a larger graph: `sub` is re-indexed
// 0..k-1, node_map[i] gives the original label of sub-node i (ascending).
struct Fragment {
    Graph sub;
    std::vector<int> node_map;
};

// Randomized two-fragment split: pick an edge {vi,vj} uniformly, then
// repeatedly sever one uniformly chosen edge on the current shortest vi-vj
// path (deterministic BFS path, ties to the smallest node index) until the
// endpoints disconnect.  Fragment 1 is the component of vi; fragment 2 is
// the subgraph induced by all remaining nodes.  Requires at least one edge.
std::pair<Fragment, Fragment> globus_split(const Graph& g, uint64_t seed);

} // namespace cws
