#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cws/graph.hpp"
#include "cws/pauli.hpp"

namespace cws {

// Classical image of a Pauli error on a graph: Cl(X^u Z^v) = v XOR the XOR
// of the adjacency rows selected by u.  An error acts on the associated
// graph state exactly like Z^{Cl(E)} does, up to sign, which is what lets
// the whole code search run on bit vectors.
uint32_t cl_map(const Graph& g, const PauliOp& op);

// 2^n-bit set over codeword space, packed in 64-bit words.
struct BitSet {
    int n = 0;
    std::vector<uint64_t> words;

    explicit BitSet(int n_ = 0) : n(n_), words(((size_t(1) << n_) + 63) / 64, 0) {}
    bool test(uint32_t x) const { return (words[x >> 6] >> (x & 63)) & 1ull; }
    void set(uint32_t x) { words[x >> 6] |= 1ull << (x & 63); }
    uint64_t count() const;
};

// Everything the classical search needs to know about a (graph, error set)
// pair:
//   cl_bits        the image set Cl(errors)
//   degenerate_ops errors with u != 0 mapping to 0 (they are, up to phase,
//                  stabilizer elements of the graph state)
//   ann_dim        r = dim of the annihilator {x : x.u = 0 for all
//                  degenerate u}; codewords must stay inside the
//                  annihilator, so 2^r bounds the code size
//   excluded_bits  complement of the annihilator (vectors no code may use)
struct ClassicalErrorData {
    BitSet cl_bits;
    std::vector<PauliOp> degenerate_ops;
    int ann_dim = 0;
    BitSet excluded_bits;

    bool pure() const { return degenerate_ops.empty(); }
};

ClassicalErrorData classical_error_data(const Graph& g, const ErrorSet& e);

// Clique-search form: nodes are the usable codeword vectors (never includes
// 0 -- the zero word is implicit in every code), and two nodes are adjacent
// iff their XOR is not a nonzero element of Cl(errors).  A clique of size w
// plus the zero word is a detecting code of size K = w + 1.
struct CliqueInstance {
    int n = 0;
    std::vector<uint32_t> nodes;      // ascending
    BitSet forbidden;                 // Cl(errors) \ {0}

    bool adjacent(uint32_t a, uint32_t b) const { return !forbidden.test(a ^ b); }
};

CliqueInstance clique_instance(const Graph& g, const ErrorSet& e);

// Node count of the clique instance (and r), without materializing it.
struct CliqueOrder {
    int64_t order = 0;
    int ann_dim = 0;
};
CliqueOrder clique_graph_order(const Graph& g, const ErrorSet& e);

// A candidate codeword-stabilized code over a graph: binary codewords,
// always containing 0.
struct CwsCode {
    int n = 0;
    std::vector<uint32_t> words;
};

struct Violation {
    enum Kind { pair_collision, undetected_degenerate } kind;
    PauliOp op;
    uint32_t xi = 0, xj = 0;
};

struct VerifyResult {
    bool ok = false;
    bool pure = false; // no degenerate errors at all
    std::optional<Violation> violation;
};

// Checks the classical detection conditions directly against the
// definition, one error at a time (no clique machinery):
//   (1) x_i XOR Cl(E) != x_j for all pairs of distinct codewords,
//   (2) Cl(E) != 0, or
//   (3) x.u = 0 for every codeword x.
// Every E must satisfy (1) and at least one of (2)/(3).  The zero-only code
// {0} passes for every graph and error set.
VerifyResult verify_code(const Graph& g, const ErrorSet& e, const CwsCode& code);

// Stabilizer generators and word operators in letter form: generator i is
// X on node i and Z on its neighbors; word operator k is Z on the support
// of codeword k.
struct StandardForm {
    std::vector<std::string> generators;
    std::vector<std::string> word_ops;
};
StandardForm export_standard_form(const Graph& g, const CwsCode& code);

// --- file formats -----------------------------------------------------------

// Code file: one header line
//   n=<n> graph6=<g6> errorset=<hash> K=<K> errorspec=<descriptor>
// followed by one codeword per line as an n-char binary string (node 0 =
// first character), zero word first.  errorspec echoes the descriptor so a
// verifier can rebuild the set; the hash is still checked against it.
struct CodeFile {
    int n = 0;
    std::string graph6;
    std::string errorset_hash;
    std::string errorspec;
    std::vector<uint32_t> words;
};

std::string write_code_file(const Graph& g, const ErrorSet& e, const CwsCode& code);
CodeFile parse_code_file(const std::string& text);

// DIMACS export of a clique instance (p edge / e lines, 1-based).
std::string to_dimacs(const CliqueInstance& inst);

std::string word_string(uint32_t w, int n);
uint32_t word_from_string(const std::string& s);

} // namespace cws
