#include "cws/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace cws {

void validate(const Graph& g) {
    if (g.n < 1 || g.n > kMaxNodes)
        throw std::invalid_argument("graph node count out of range 1..16: " +
                                    std::to_string(g.n));
    uint16_t allowed = uint16_t((g.n == 16) ? 0xffffu : ((1u << g.n) - 1));
    for (int i = 0; i < kMaxNodes; ++i) {
        if (i >= g.n) {
            if (g.adj[i]) throw std::invalid_argument("adjacency row beyond n is nonzero");
            continue;
        }
        if (g.adj[i] & ~allowed)
            throw std::invalid_argument("adjacency bits beyond n in row " + std::to_string(i));
        if ((g.adj[i] >> i) & 1u)
            throw std::invalid_argument("self-loop at node " + std::to_string(i));
        for (int j = 0; j < g.n; ++j)
            if (g.has_edge(i, j) != g.has_edge(j, i))
                throw std::invalid_argument("asymmetric adjacency at {" +
                                            std::to_string(i) + "," + std::to_string(j) + "}");
    }
}

Graph empty_graph(int n) {
    if (n < 1 || n > kMaxNodes)
        throw std::invalid_argument("graph node count out of range 1..16: " + std::to_string(n));
    Graph g;
    g.n = n;
    return g;
}

Graph complete_graph(int n) {
    Graph g = empty_graph(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph path_graph(int n) {
    Graph g = empty_graph(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 nodes");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph random_graph(int n, Rng& rng) {
    Graph g = empty_graph(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (rng.below(2)) g.add_edge(i, j);
    return g;
}

Graph permute(const Graph& g, const std::array<int, 16>& perm) {
    Graph out = empty_graph(g.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (g.has_edge(i, j)) out.add_edge(perm[i], perm[j]);
    return out;
}

int pair_bits(int n) { return n * (n - 1) / 2; }

uint64_t pack_index(const Graph& g) {
    uint64_t bits = 0;
    int k = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (g.has_edge(i, j)) bits |= 1ull << k;
    return bits;
}

Graph unpack_index(uint64_t idx, int n) {
    Graph g = empty_graph(n);
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if ((idx >> k) & 1ull) g.add_edge(i, j);
    return g;
}

GraphKey graph_key(const Graph& g) {
    GraphKey key;
    int k = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (g.has_edge(i, j)) {
                if (k < 64) key.lo |= 1ull << k;
                else key.hi |= 1ull << (k - 64);
            }
    key.hi = (key.hi << 8) | (uint64_t)g.n; // n distinguishes padded graphs
    return key;
}

std::string to_graph6(const Graph& g) {
    validate(g);
    std::string out;
    out.push_back(char(63 + g.n));
    int group = 0, filled = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(char(63 + group));
                group = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(char(63 + (group << (6 - filled))));
    return out;
}

Graph from_graph6(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("graph6: empty string");
    int c0 = (unsigned char)s[0];
    if (c0 < 63 || c0 > 126)
        throw std::invalid_argument("graph6: bad size byte at offset 0");
    int n = c0 - 63;
    if (n < 1 || n > kMaxNodes)
        throw std::invalid_argument("graph6: node count " + std::to_string(n) +
                                    " out of supported range 1..16 (offset 0)");
    int bits = pair_bits(n);
    size_t body = (size_t)((bits + 5) / 6);
    if (s.size() < 1 + body)
        throw std::invalid_argument("graph6: truncated at offset " + std::to_string(s.size()));
    if (s.size() > 1 + body)
        throw std::invalid_argument("graph6: trailing bytes at offset " + std::to_string(1 + body));

    Graph g = empty_graph(n);
    int k = 0;
    for (size_t b = 0; b < body; ++b) {
        int c = (unsigned char)s[1 + b];
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: byte out of range at offset " + std::to_string(1 + b));
        int group = c - 63;
        for (int t = 5; t >= 0; --t, ++k) {
            int bit = (group >> t) & 1;
            if (k >= bits) {
                if (bit)
                    throw std::invalid_argument("graph6: nonzero padding at offset " + std::to_string(1 + b));
                continue;
            }
            if (bit) {
                // invert k -> (i, j), walking columns in order
                int kk = k, j = 1;
                while (kk >= j) { kk -= j; ++j; }
                g.add_edge(kk, j);
            }
        }
    }
    return g;
}

Graph local_complement(const Graph& g, int v) {
    if (v < 0 || v >= g.n) throw std::invalid_argument("local complement: node out of range");
    Graph out = g;
    uint16_t nv = g.adj[v];
    for (int a = 0; a < g.n; ++a)
        if ((nv >> a) & 1u) out.adj[a] ^= uint16_t(nv & ~(1u << a));
    return out;
}

std::vector<Graph> lc_orbit(const Graph& g) {
    validate(g);
    if (g.n > 12)
        throw std::invalid_argument("lc_orbit: gated at n <= 12 (orbit can be explored "
                                    "but the visited set grows too large beyond that)");
    std::unordered_set<GraphKey, GraphKeyHash> seen;
    std::vector<Graph> queue{g}, orbit;
    seen.insert(graph_key(g));
    while (!queue.empty()) {
        Graph cur = queue.back();
        queue.pop_back();
        orbit.push_back(cur);
        for (int v = 0; v < g.n; ++v) {
            if (!cur.adj[v]) continue; // isolated node: no-op
            Graph next = local_complement(cur, v);
            if (seen.insert(graph_key(next)).second) queue.push_back(next);
        }
    }
    std::sort(orbit.begin(), orbit.end(), [](const Graph& a, const Graph& b) {
        return pack_index(a) < pack_index(b);
    });
    return orbit;
}

namespace {

// Shared state for the two canonical-form recursions.  Both walk
// permutations slot by slot; assigning original node sigma[j] to new label j
// fixes the pair bits {(i,j) : i < j}, which are contiguous in the packed
// column order, so prefixes can be compared (and pruned) as they grow.
struct CanonSearch {
    const Graph* g;
    int n, bits;
    std::array<int, 16> sigma;
    uint32_t used;
    uint64_t best;

    uint64_t own; // packed bits of g itself, MSB-first
    uint64_t aut;

    uint64_t slot_bits(int j) const {
        uint64_t b = 0;
        for (int i = 0; i < j; ++i)
            b = (b << 1) | (g->has_edge(sigma[i], sigma[j]) ? 1u : 0u);
        return b;
    }

    void minimize(int j, uint64_t partial, int partial_len) {
        if (j == n) {
            if (partial < best) best = partial;
            return;
        }
        for (int cand = 0; cand < n; ++cand) {
            if ((used >> cand) & 1u) continue;
            sigma[j] = cand;
            uint64_t next = (partial << j) | slot_bits(j);
            int len = partial_len + j;
            if (next > (best >> (bits - len))) continue; // this prefix can never win
            used |= 1u << cand;
            minimize(j + 1, next, len);
            used &= ~(1u << cand);
        }
    }

    void count_automorphisms(int j, int partial_len) {
        if (j == n) {
            ++aut;
            return;
        }
        int deg_j = g->degree(j);
        for (int cand = 0; cand < n; ++cand) {
            if ((used >> cand) & 1u) continue;
            if (g->degree(cand) != deg_j) continue;
            sigma[j] = cand;
            int len = partial_len + j;
            uint64_t want = (own >> (bits - len)) & ((j == 0) ? 0 : ((1ull << j) - 1));
            if (slot_bits(j) != want) continue;
            used |= 1u << cand;
            count_automorphisms(j + 1, len);
            used &= ~(1u << cand);
        }
    }
};

uint64_t pack_msb_first(const Graph& g) {
    int bits = pair_bits(g.n);
    uint64_t v = 0;
    int k = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (g.has_edge(i, j)) v |= 1ull << (bits - 1 - k);
    return v;
}

} // namespace

CanonicalForm canonical_form(const Graph& g) {
    validate(g);
    if (g.n > 10)
        throw std::invalid_argument("canonical_form: brute-force relabeling search is "
                                    "gated at n <= 10");
    CanonSearch search;
    search.g = &g;
    search.n = g.n;
    search.bits = pair_bits(g.n);
    search.used = 0;
    search.best = (search.bits >= 64) ? ~0ull : ((1ull << search.bits) - 1);
    search.own = pack_msb_first(g);
    search.aut = 0;
    if (g.n == 1) return {0, 1};
    search.minimize(0, 0, 0);
    uint64_t canon = search.best;
    search.used = 0;
    search.count_automorphisms(0, 0);
    return {canon, search.aut};
}

uint64_t factorial(int n) {
    uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= (uint64_t)i;
    return f;
}

uint64_t orbit_size(const Graph& g) {
    CanonicalForm cf = canonical_form(g);
    return factorial(g.n) / cf.aut_size;
}

namespace {

// Relabels by swapping nodes a and b in place: swap the two rows, then swap
// the two column bits in every row.
void swap_nodes(Graph& g, int a, int b) {
    std::swap(g.adj[a], g.adj[b]);
    for (int r = 0; r < g.n; ++r) {
        uint16_t row = g.adj[r];
        uint16_t x = uint16_t(((row >> a) ^ (row >> b)) & 1u);
        g.adj[r] = uint16_t(row ^ ((x << a) | (x << b)));
    }
}

} // namespace

Classification classify(int n, Relation rel, bool with_ids, int max_n) {
    if (n < 1 || n > kMaxNodes)
        throw std::invalid_argument("classify: node count out of range 1..16");
    if (n > max_n) {
        int bits = pair_bits(n);
        throw std::invalid_argument(
            "classify: n = " + std::to_string(n) + " sweeps 2^" + std::to_string(bits) +
            " labeled graphs (" + std::to_string((bits >= 33) ? 0 : (1ll << bits)) +
            "); raise max_n explicitly to accept the cost");
    }
    int bits = pair_bits(n);
    uint64_t total = 1ull << bits;

    std::vector<uint64_t> visited((total + 63) / 64, 0);
    auto test = [&](uint64_t i) { return (visited[i >> 6] >> (i & 63)) & 1ull; };
    auto set = [&](uint64_t i) { visited[i >> 6] |= 1ull << (i & 63); };

    Classification result;
    if (with_ids) result.class_of.assign(total, -1);

    std::vector<uint32_t> queue;
    for (uint64_t start = 0; start < total; ++start) {
        if (test(start)) continue;
        int32_t cls = (int32_t)result.classes.size();
        uint64_t size = 0;
        queue.clear();
        queue.push_back((uint32_t)start);
        set(start);
        size_t head = 0;
        while (head < queue.size()) {
            uint64_t idx = queue[head++];
            ++size;
            if (with_ids) result.class_of[idx] = cls;
            Graph g = unpack_index(idx, n);
            for (int a = 0; a + 1 < n; ++a) {
                Graph h = g;
                swap_nodes(h, a, a + 1);
                uint64_t hi = pack_index(h);
                if (!test(hi)) { set(hi); queue.push_back((uint32_t)hi); }
            }
            if (rel == Relation::lc_isomorphism) {
                for (int v = 0; v < n; ++v) {
                    if (!g.adj[v]) continue;
                    Graph h = local_complement(g, v);
                    uint64_t hi = pack_index(h);
                    if (!test(hi)) { set(hi); queue.push_back((uint32_t)hi); }
                }
            }
        }
        result.classes.push_back({unpack_index(start, n), size});
    }
    return result;
}

} // namespace cws
