#include "cws/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cws {

EigenDecomposition jacobi_eigen(std::vector<std::vector<double>> a) {
    const int n = (int)a.size();
    std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) v[i][i] = 1.0;

    const double tol = 1e-12;
    const int max_sweeps = 128;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::fabs(a[p][q]));
        if (off < tol) break;

        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = a[p][q];
                if (std::fabs(apq) < tol * 1e-3) continue;
                double tau = (a[q][q] - a[p][p]) / (2.0 * apq);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;

                for (int k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return a[x][x] < a[y][y]; });

    EigenDecomposition out;
    out.values.resize(n);
    out.vectors.assign(n, std::vector<double>(n));
    for (int k = 0; k < n; ++k) {
        int col = order[k];
        out.values[k] = a[col][col];
        for (int i = 0; i < n; ++i) out.vectors[k][i] = v[i][col];
    }
    return out;
}

std::vector<std::vector<int>> laplacian(const Graph& g) {
    std::vector<std::vector<int>> lap(g.n, std::vector<int>(g.n, 0));
    for (int i = 0; i < g.n; ++i) {
        lap[i][i] = g.degree(i);
        for (int j = 0; j < g.n; ++j)
            if (g.has_edge(i, j)) lap[i][j] = -1;
    }
    return lap;
}

FiedlerResult fiedler(const Graph& g) {
    if (g.n < 2) throw std::invalid_argument("fiedler: need at least 2 nodes");
    auto lap = laplacian(g);
    std::vector<std::vector<double>> a(g.n, std::vector<double>(g.n));
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) a[i][j] = (double)lap[i][j];
    EigenDecomposition eig = jacobi_eigen(std::move(a));

    FiedlerResult result;
    result.lambda2 = eig.values[1];
    result.vec = eig.vectors[1];
    for (double c : result.vec) {
        if (std::fabs(c) > 1e-9) {
            if (c < 0)
                for (double& x : result.vec) x = -x;
            break;
        }
    }
    return result;
}

Bisection spectral_bisection(const Graph& g) {
    FiedlerResult f = fiedler(g);
    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (f.vec[x] != f.vec[y]) return f.vec[x] < f.vec[y];
        return x < y;
    });

    Bisection b;
    int half = g.n / 2;
    for (int k = 0; k < half; ++k) b.part1 |= uint16_t(1u << order[k]);
    uint16_t all = uint16_t((g.n == 16) ? 0xffffu : ((1u << g.n) - 1));
    b.part2 = uint16_t(all & ~b.part1);
    for (int i = 0; i < g.n; ++i)
        if ((b.part1 >> i) & 1u)
            b.cut_size += __builtin_popcount(g.adj[i] & b.part2);
    return b;
}

namespace {

// BFS parents with neighbors expanded in ascending index order, so shortest
// paths (followed by parent pointers) are reproducible.
std::vector<int> bfs_parents(const Graph& g, int src) {
    std::vector<int> parent(g.n, -1);
    std::vector<int> queue{src};
    std::vector<char> seen(g.n, 0);
    seen[src] = 1;
    for (size_t h = 0; h < queue.size(); ++h) {
        int u = queue[h];
        for (int w = 0; w < g.n; ++w)
            if (g.has_edge(u, w) && !seen[w]) {
                seen[w] = 1;
                parent[w] = u;
                queue.push_back(w);
            }
    }
    return parent;
}

// Fragments are induced from the original graph on the component's node
// set, so the union of the two fragments is exactly the parent minus its
// cross-fragment edges.
Fragment induced_fragment(const Graph& g, uint16_t nodes) {
    Fragment frag;
    for (int i = 0; i < g.n; ++i)
        if ((nodes >> i) & 1u) frag.node_map.push_back(i);
    frag.sub = empty_graph((int)frag.node_map.size());
    for (size_t a = 0; a < frag.node_map.size(); ++a)
        for (size_t b = a + 1; b < frag.node_map.size(); ++b)
            if (g.has_edge(frag.node_map[a], frag.node_map[b]))
                frag.sub.add_edge((int)a, (int)b);
    return frag;
}

} // namespace

std::pair<Fragment, Fragment> globus_split(const Graph& g, uint64_t seed) {
    validate(g);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (g.has_edge(i, j)) edges.push_back({i, j});
    if (edges.empty()) throw std::invalid_argument("globus_split: graph has no edges");

    Rng rng(seed);
    auto [vi, vj] = edges[rng.below(edges.size())];

    Graph work = g;
    while (true) {
        std::vector<int> parent = bfs_parents(work, vi);
        if (parent[vj] < 0 && vj != vi) break;
        // walk the path vj -> vi, collect its edges
        std::vector<std::pair<int, int>> path;
        for (int cur = vj; cur != vi; cur = parent[cur]) path.push_back({parent[cur], cur});
        auto [a, b] = path[rng.below(path.size())];
        work.toggle_edge(a, b);
    }

    // component of vi in the severed graph
    std::vector<int> parent = bfs_parents(work, vi);
    uint16_t comp = uint16_t(1u << vi);
    for (int w = 0; w < work.n; ++w)
        if (parent[w] >= 0 || w == vi) comp |= uint16_t(1u << w);
    uint16_t all = uint16_t((g.n == 16) ? 0xffffu : ((1u << g.n) - 1));
    return {induced_fragment(g, comp), induced_fragment(g, uint16_t(all & ~comp))};
}

} // namespace cws
