#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cws/cwsmap.hpp"

namespace cws {

// Abstract adjacency view the solvers run on: nodes are indices 0..size-1.
class CliqueView {
public:
    virtual ~CliqueView() = default;
    virtual size_t size() const = 0;
    virtual bool adjacent(uint32_t a, uint32_t b) const = 0;
};

// View over a CliqueInstance: adjacency is one bitset probe on the XOR of
// the two node vectors, so the quadratic edge set is never materialized.
class InstanceView final : public CliqueView {
public:
    explicit InstanceView(const CliqueInstance& inst) : inst_(&inst) {}
    size_t size() const override { return inst_->nodes.size(); }
    bool adjacent(uint32_t a, uint32_t b) const override {
        return inst_->adjacent(inst_->nodes[a], inst_->nodes[b]);
    }

private:
    const CliqueInstance* inst_;
};

// Explicit bitset adjacency; used for DIMACS instances.
class BitsetView final : public CliqueView {
public:
    explicit BitsetView(size_t m);
    void add_edge(uint32_t a, uint32_t b);
    size_t size() const override { return m_; }
    bool adjacent(uint32_t a, uint32_t b) const override {
        return (rows_[a][b >> 6] >> (b & 63)) & 1ull;
    }

private:
    size_t m_;
    std::vector<std::vector<uint64_t>> rows_;
};

// Parses a DIMACS clique file ("p edge n m" + "e a b" lines, 1-based).
BitsetView from_dimacs(const std::string& text);

// Exact maximum clique: branch and bound over bitsets with a greedy
// sequential-coloring bound, vertices preordered by descending degree, and
// greedy warm starts for the initial incumbent.  Deterministic.  Refuses
// views larger than `guard` nodes (the adjacency matrix it materializes is
// quadratic); raise the guard explicitly to accept bigger instances.
std::vector<uint32_t> max_clique_exact_indices(const CliqueView& view, size_t guard = 4096);

struct PlsParams {
    int attempts = 100;        // independent restarts
    int max_selections = 1000; // vertex selections per attempt
    uint64_t seed = 0;         // attempt i uses derive_seed(seed, i)
    int jobs = 1;              // attempts may run in parallel; the result
                               // is reduced deterministically regardless
};

// Phased local search: always returns a clique, never guaranteed maximum.
// Each attempt grows/swaps a clique for max_selections steps, cycling a
// random, a greedy, and a penalty-guided selection rule; swaps move to a
// vertex adjacent to all but one member.  Best attempt wins, ties to the
// lowest attempt index.
std::vector<uint32_t> pls_indices(const CliqueView& view, const PlsParams& params);

struct Clique {
    std::vector<uint32_t> members; // node vectors, ascending
};

// Instance-level wrappers returning node vectors instead of indices.
Clique max_clique_exact(const CliqueInstance& inst, size_t guard = 4096);
Clique pls_clique(const CliqueInstance& inst, const PlsParams& params);

// True iff members are distinct instance nodes and pairwise adjacent.
bool is_clique(const CliqueInstance& inst, const std::vector<uint32_t>& members);

} // namespace cws
