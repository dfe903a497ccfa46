#include "cws/clique.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cws/rng.hpp"

namespace cws {

BitsetView::BitsetView(size_t m)
    : m_(m), rows_(m, std::vector<uint64_t>((m + 63) / 64, 0)) {}

void BitsetView::add_edge(uint32_t a, uint32_t b) {
    if (a == b || a >= m_ || b >= m_) throw std::invalid_argument("bad edge");
    rows_[a][b >> 6] |= 1ull << (b & 63);
    rows_[b][a >> 6] |= 1ull << (a & 63);
}

BitsetView from_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    size_t m = 0;
    bool have_header = false;
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        char tag;
        ls >> tag;
        if (tag == 'p') {
            std::string kind;
            size_t edge_count;
            if (!(ls >> kind >> m >> edge_count) || kind != "edge")
                throw std::invalid_argument("dimacs: bad problem line " + std::to_string(lineno));
            have_header = true;
        } else if (tag == 'e') {
            uint32_t a, b;
            if (!(ls >> a >> b) || a < 1 || b < 1)
                throw std::invalid_argument("dimacs: bad edge line " + std::to_string(lineno));
            edges.push_back({a - 1, b - 1});
        } else {
            throw std::invalid_argument("dimacs: unknown record on line " + std::to_string(lineno));
        }
    }
    if (!have_header) throw std::invalid_argument("dimacs: missing problem line");
    BitsetView view(m);
    for (auto [a, b] : edges) view.add_edge(a, b);
    return view;
}

namespace {

struct Bits {
    std::vector<uint64_t> w;
    explicit Bits(size_t words = 0) : w(words, 0) {}
    bool test(uint32_t i) const { return (w[i >> 6] >> (i & 63)) & 1ull; }
    void set(uint32_t i) { w[i >> 6] |= 1ull << (i & 63); }
    void clear(uint32_t i) { w[i >> 6] &= ~(1ull << (i & 63)); }
    bool any() const {
        for (uint64_t x : w)
            if (x) return true;
        return false;
    }
    int first() const {
        for (size_t k = 0; k < w.size(); ++k)
            if (w[k]) return (int)(k * 64 + __builtin_ctzll(w[k]));
        return -1;
    }
};

struct ExactSolver {
    size_t m, words;
    std::vector<Bits> adj;      // reordered index space
    std::vector<uint32_t> back; // reordered -> caller index
    std::vector<uint32_t> best;
    std::vector<uint32_t> current;

    void seed_greedy() {
        size_t starts = std::min<size_t>(m, 64);
        for (size_t s = 0; s < starts; ++s) {
            std::vector<uint32_t> clique{(uint32_t)s};
            Bits p = adj[s];
            while (p.any()) {
                uint32_t v = (uint32_t)p.first(); // lowest index = highest degree
                clique.push_back(v);
                for (size_t k = 0; k < words; ++k) p.w[k] &= adj[v].w[k];
            }
            if (clique.size() > best.size()) best = clique;
        }
    }

    void expand(Bits& p, size_t depth) {
        // greedy sequential coloring of p; color = bound on clique size in
        // the first k vertices of the coloring order
        std::vector<uint32_t> order;
        std::vector<int> color;
        Bits uncolored = p;
        int c = 0;
        while (uncolored.any()) {
            ++c;
            Bits q = uncolored;
            while (q.any()) {
                uint32_t v = (uint32_t)q.first();
                q.clear(v);
                uncolored.clear(v);
                for (size_t k = 0; k < words; ++k) q.w[k] &= ~adj[v].w[k];
                order.push_back(v);
                color.push_back(c);
            }
        }

        for (int k = (int)order.size() - 1; k >= 0; --k) {
            if (current.size() + (size_t)color[k] <= best.size()) return;
            uint32_t v = order[k];
            Bits next(words);
            bool nonempty = false;
            for (size_t t = 0; t < words; ++t) {
                next.w[t] = p.w[t] & adj[v].w[t];
                nonempty |= next.w[t] != 0;
            }
            current.push_back(v);
            if (!nonempty) {
                if (current.size() > best.size()) best = current;
            } else {
                expand(next, depth + 1);
            }
            current.pop_back();
            p.clear(v);
        }
    }
};

} // namespace

std::vector<uint32_t> max_clique_exact_indices(const CliqueView& view, size_t guard) {
    size_t m = view.size();
    if (m == 0) return {};
    if (m > guard)
        throw std::invalid_argument("max_clique_exact: instance has " + std::to_string(m) +
                                    " nodes, over the guard of " + std::to_string(guard) +
                                    "; raise the guard to accept the quadratic cost");

    // order by descending degree (ties by index) before building bitsets
    std::vector<int> deg(m, 0);
    for (uint32_t a = 0; a < m; ++a)
        for (uint32_t b = a + 1; b < m; ++b)
            if (view.adjacent(a, b)) {
                ++deg[a];
                ++deg[b];
            }
    std::vector<uint32_t> reorder(m);
    std::iota(reorder.begin(), reorder.end(), 0);
    std::sort(reorder.begin(), reorder.end(), [&](uint32_t x, uint32_t y) {
        if (deg[x] != deg[y]) return deg[x] > deg[y];
        return x < y;
    });

    ExactSolver solver;
    solver.m = m;
    solver.words = (m + 63) / 64;
    solver.back = reorder;
    solver.adj.assign(m, Bits(solver.words));
    for (uint32_t i = 0; i < m; ++i)
        for (uint32_t j = i + 1; j < m; ++j)
            if (view.adjacent(reorder[i], reorder[j])) {
                solver.adj[i].set(j);
                solver.adj[j].set(i);
            }

    solver.seed_greedy();
    Bits all(solver.words);
    for (uint32_t i = 0; i < m; ++i) all.set(i);
    solver.expand(all, 0);

    std::vector<uint32_t> result;
    result.reserve(solver.best.size());
    for (uint32_t v : solver.best) result.push_back(solver.back[v]);
    std::sort(result.begin(), result.end());
    return result;
}

namespace {

// One PLS attempt; returns the best clique it saw (caller indices).
std::vector<uint32_t> pls_attempt(const CliqueView& view, int max_selections, uint64_t seed) {
    const size_t m = view.size();
    Rng rng(seed);

    // missing[w] = |{c in clique, c != w : not adjacent(c, w)}|
    std::vector<int> missing(m, 0);
    std::vector<char> member(m, 0);
    std::vector<uint32_t> clique;
    std::vector<int> penalty(m, 0);

    auto add = [&](uint32_t v) {
        member[v] = 1;
        clique.push_back(v);
        for (uint32_t w = 0; w < m; ++w)
            if (w != v && !view.adjacent(w, v)) ++missing[w];
    };
    auto remove = [&](uint32_t v) {
        member[v] = 0;
        clique.erase(std::find(clique.begin(), clique.end(), v));
        for (uint32_t w = 0; w < m; ++w)
            if (w != v && !view.adjacent(w, v)) --missing[w];
    };
    auto restart = [&]() {
        for (uint32_t v : std::vector<uint32_t>(clique)) remove(v);
        add((uint32_t)rng.below(m));
    };

    add((uint32_t)rng.below(m));
    std::vector<uint32_t> best = clique;

    int penalty_updates = 0;
    int since_improved = 0;
    const int stagnation_limit = 50;

    std::vector<uint32_t> n0, n1, pool;
    for (int s = 0; s < max_selections; ++s) {
        n0.clear();
        n1.clear();
        for (uint32_t v = 0; v < m; ++v) {
            if (member[v]) continue;
            if (missing[v] == 0) n0.push_back(v);
            else if (missing[v] == 1) n1.push_back(v);
        }

        bool stuck = n0.empty() && n1.empty();
        if (!stuck) {
            uint32_t v;
            switch (s % 3) {
                case 0:
                case 1:
                    // random and greedy phases: every growth candidate has
                    // adjacency |C| to the clique and every swap candidate
                    // |C|-1, so "max adjacency, ties random" and "uniform
                    // random" both reduce to a uniform pick that prefers
                    // growth moves
                    v = !n0.empty() ? n0[rng.below(n0.size())] : n1[rng.below(n1.size())];
                    break;
                default: { // least penalized over both move kinds
                    pool.clear();
                    pool.insert(pool.end(), n0.begin(), n0.end());
                    pool.insert(pool.end(), n1.begin(), n1.end());
                    int lowest = penalty[pool[0]];
                    for (uint32_t w : pool) lowest = std::min(lowest, penalty[w]);
                    size_t count = 0;
                    for (uint32_t w : pool)
                        if (penalty[w] == lowest) ++count;
                    uint64_t pick = rng.below(count);
                    v = pool[0];
                    for (uint32_t w : pool)
                        if (penalty[w] == lowest && pick-- == 0) {
                            v = w;
                            break;
                        }
                    break;
                }
            }
            if (missing[v] == 1) {
                // swap: drop the single member v misses
                for (uint32_t c : clique)
                    if (!view.adjacent(c, v)) {
                        remove(c);
                        break;
                    }
            }
            add(v);
            if (clique.size() > best.size()) {
                best = clique;
                since_improved = 0;
            } else {
                ++since_improved;
            }
        }

        if (stuck || since_improved >= stagnation_limit) {
            // stagnation: penalize the current clique, occasionally decay,
            // and restart from a fresh random vertex (penalties persist)
            for (uint32_t c : clique) ++penalty[c];
            if (++penalty_updates % 10 == 0)
                for (int& x : penalty)
                    if (x > 0) --x;
            restart();
            since_improved = 0;
        }
    }
    return best;
}

} // namespace

std::vector<uint32_t> pls_indices(const CliqueView& view, const PlsParams& params) {
    if (view.size() == 0) return {};
    std::vector<std::vector<uint32_t>> results(params.attempts);
    int jobs = std::max(1, params.jobs);
    if (jobs == 1) {
        for (int a = 0; a < params.attempts; ++a)
            results[a] = pls_attempt(view, params.max_selections, derive_seed(params.seed, a));
    } else {
        std::vector<std::thread> workers;
        std::atomic<int> next{0};
        for (int t = 0; t < jobs; ++t)
            workers.emplace_back([&]() {
                while (true) {
                    int a = next.fetch_add(1);
                    if (a >= params.attempts) break;
                    results[a] = pls_attempt(view, params.max_selections, derive_seed(params.seed, a));
                }
            });
        for (auto& w : workers) w.join();
    }
    // best size wins; ties go to the earliest attempt
    size_t winner = 0;
    for (size_t a = 1; a < results.size(); ++a)
        if (results[a].size() > results[winner].size()) winner = a;
    std::vector<uint32_t> out = results[winner];
    std::sort(out.begin(), out.end());
    return out;
}

Clique max_clique_exact(const CliqueInstance& inst, size_t guard) {
    InstanceView view(inst);
    std::vector<uint32_t> idx = max_clique_exact_indices(view, guard);
    Clique c;
    for (uint32_t i : idx) c.members.push_back(inst.nodes[i]);
    std::sort(c.members.begin(), c.members.end());
    return c;
}

Clique pls_clique(const CliqueInstance& inst, const PlsParams& params) {
    InstanceView view(inst);
    std::vector<uint32_t> idx = pls_indices(view, params);
    Clique c;
    for (uint32_t i : idx) c.members.push_back(inst.nodes[i]);
    std::sort(c.members.begin(), c.members.end());
    return c;
}

bool is_clique(const CliqueInstance& inst, const std::vector<uint32_t>& members) {
    for (size_t a = 0; a < members.size(); ++a) {
        if (!std::binary_search(inst.nodes.begin(), inst.nodes.end(), members[a])) return false;
        for (size_t b = a + 1; b < members.size(); ++b) {
            if (members[a] == members[b]) return false;
            if (!inst.adjacent(members[a], members[b])) return false;
        }
    }
    return true;
}

} // namespace cws
