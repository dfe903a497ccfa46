#include "cws/cwsmap.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace cws {

uint32_t cl_map(const Graph& g, const PauliOp& op) {
    uint32_t out = op.v;
    uint16_t u = op.u;
    while (u) {
        int i = __builtin_ctz(u);
        u &= uint16_t(u - 1);
        out ^= g.adj[i];
    }
    return out;
}

uint64_t BitSet::count() const {
    uint64_t total = 0;
    for (uint64_t w : words) total += (uint64_t)__builtin_popcountll(w);
    return total;
}

namespace {

// GF(2) row basis of the u-masks of the degenerate operators.  Returns the
// reduced basis; the annihilator {x : x.u = 0 for all u} has dimension
// n - basis.size().
std::vector<uint16_t> u_basis(const std::vector<PauliOp>& degenerate) {
    std::vector<uint16_t> basis;
    for (const PauliOp& p : degenerate) {
        uint16_t row = p.u;
        for (uint16_t b : basis) row = std::min<uint16_t>(row, uint16_t(row ^ b));
        if (row) basis.push_back(row);
    }
    return basis;
}

bool in_annihilator(uint32_t x, const std::vector<uint16_t>& basis) {
    for (uint16_t b : basis)
        if (__builtin_popcount(x & b) & 1) return false;
    return true;
}

} // namespace

ClassicalErrorData classical_error_data(const Graph& g, const ErrorSet& e) {
    if (g.n != e.n) throw std::invalid_argument("classical_error_data: graph/error-set size mismatch");
    ClassicalErrorData data;
    data.cl_bits = BitSet(g.n);
    for (const PauliOp& p : e.ops) {
        uint32_t image = cl_map(g, p);
        data.cl_bits.set(image);
        if (image == 0 && p.u != 0) data.degenerate_ops.push_back(p);
    }
    std::vector<uint16_t> basis = u_basis(data.degenerate_ops);
    data.ann_dim = g.n - (int)basis.size();
    data.excluded_bits = BitSet(g.n);
    for (uint32_t x = 0; x < (1u << g.n); ++x)
        if (!in_annihilator(x, basis)) data.excluded_bits.set(x);
    return data;
}

CliqueInstance clique_instance(const Graph& g, const ErrorSet& e) {
    ClassicalErrorData data = classical_error_data(g, e);
    CliqueInstance inst;
    inst.n = g.n;
    inst.forbidden = data.cl_bits;
    inst.forbidden.words[0] &= ~1ull; // the zero difference is never forbidden
    for (uint32_t x = 1; x < (1u << g.n); ++x)
        if (!data.cl_bits.test(x) && !data.excluded_bits.test(x)) inst.nodes.push_back(x);
    return inst;
}

CliqueOrder clique_graph_order(const Graph& g, const ErrorSet& e) {
    if (g.n != e.n) throw std::invalid_argument("clique_graph_order: graph/error-set size mismatch");
    BitSet cl(g.n);
    std::vector<PauliOp> degenerate;
    for (const PauliOp& p : e.ops) {
        uint32_t image = cl_map(g, p);
        cl.set(image);
        if (image == 0 && p.u != 0) degenerate.push_back(p);
    }
    std::vector<uint16_t> basis = u_basis(degenerate);
    int r = g.n - (int)basis.size();

    // count annihilator elements not hit by cl (0 is in both, so the zero
    // exclusion is automatic)
    int64_t order = 0;
    if (basis.empty()) {
        uint64_t total = uint64_t(1) << g.n;
        order = (int64_t)(total - cl.count());
    } else {
        // enumerate the annihilator subspace via its own basis: collect r
        // independent annihilator vectors greedily, then walk all combos
        std::vector<uint16_t> ann;
        ann.reserve(r);
        std::vector<uint16_t> have;
        for (uint32_t x = 1; x < (1u << g.n) && (int)ann.size() < r; ++x) {
            if (!in_annihilator(x, basis)) continue;
            uint16_t reduced = (uint16_t)x;
            for (uint16_t b : have) reduced = std::min<uint16_t>(reduced, uint16_t(reduced ^ b));
            if (reduced) {
                have.push_back(reduced);
                ann.push_back((uint16_t)x);
            }
        }
        uint64_t combos = uint64_t(1) << ann.size();
        for (uint64_t c = 0; c < combos; ++c) {
            uint32_t x = 0;
            uint64_t bits = c;
            while (bits) {
                int k = __builtin_ctzll(bits);
                bits &= bits - 1;
                x ^= ann[k];
            }
            if (!cl.test(x)) ++order;
        }
    }
    return {order, r};
}

VerifyResult verify_code(const Graph& g, const ErrorSet& e, const CwsCode& code) {
    if (g.n != e.n || g.n != code.n)
        throw std::invalid_argument("verify_code: size mismatch between graph, errors, code");
    if (code.words.empty() || code.words[0] != 0)
        throw std::invalid_argument("verify_code: codewords must start with the zero word");
    std::unordered_set<uint32_t> wordset(code.words.begin(), code.words.end());
    if (wordset.size() != code.words.size())
        throw std::invalid_argument("verify_code: duplicate codewords");

    VerifyResult result;
    result.pure = true;
    for (const PauliOp& p : e.ops) {
        uint32_t image = cl_map(g, p);
        if (image != 0) {
            // distinct codewords may not collide under the error's image
            for (uint32_t x : code.words)
                if (wordset.count(x ^ image)) {
                    result.violation = Violation{Violation::pair_collision, p, x, x ^ image};
                    return result;
                }
        } else if (p.u != 0) {
            result.pure = false;
            // degenerate error: every codeword must commute with it
            for (uint32_t x : code.words)
                if (__builtin_popcount(x & p.u) & 1) {
                    result.violation = Violation{Violation::undetected_degenerate, p, x, x};
                    return result;
                }
        }
    }
    result.ok = true;
    return result;
}

StandardForm export_standard_form(const Graph& g, const CwsCode& code) {
    StandardForm sf;
    for (int i = 0; i < g.n; ++i) {
        std::string gen(g.n, 'I');
        gen[i] = 'X';
        for (int j = 0; j < g.n; ++j)
            if (g.has_edge(i, j)) gen[j] = 'Z';
        sf.generators.push_back(std::move(gen));
    }
    for (uint32_t w : code.words) {
        std::string op(g.n, 'I');
        for (int j = 0; j < g.n; ++j)
            if ((w >> j) & 1u) op[j] = 'Z';
        sf.word_ops.push_back(std::move(op));
    }
    return sf;
}

std::string word_string(uint32_t w, int n) {
    std::string s(n, '0');
    for (int i = 0; i < n; ++i)
        if ((w >> i) & 1u) s[i] = '1';
    return s;
}

uint32_t word_from_string(const std::string& s) {
    if (s.size() > 16) throw std::invalid_argument("codeword string longer than 16 bits");
    uint32_t w = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') w |= 1u << i;
        else if (s[i] != '0')
            throw std::invalid_argument("codeword string: bad char at position " + std::to_string(i));
    }
    return w;
}

std::string write_code_file(const Graph& g, const ErrorSet& e, const CwsCode& code) {
    if (code.words.empty() || code.words[0] != 0)
        throw std::invalid_argument("write_code_file: zero word must come first");
    std::ostringstream out;
    out << "n=" << g.n << " graph6=" << to_graph6(g) << " errorset=" << content_hash(e)
        << " K=" << code.words.size() << " errorspec=" << e.descriptor << "\n";
    for (uint32_t w : code.words) out << word_string(w, g.n) << "\n";
    return out.str();
}

CodeFile parse_code_file(const std::string& text) {
    std::istringstream in(text);
    std::string header;
    if (!std::getline(in, header)) throw std::invalid_argument("code file: empty");

    CodeFile file;
    size_t declared_k = 0;
    std::istringstream hs(header);
    std::string token;
    while (hs >> token) {
        auto eq = token.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("code file: malformed header token '" + token + "'");
        std::string key = token.substr(0, eq), value = token.substr(eq + 1);
        if (key == "n") file.n = std::stoi(value);
        else if (key == "graph6") file.graph6 = value;
        else if (key == "errorset") file.errorset_hash = value;
        else if (key == "K") declared_k = (size_t)std::stoul(value);
        else if (key == "errorspec") file.errorspec = value;
        else throw std::invalid_argument("code file: unknown header key '" + key + "'");
    }
    if (file.n < 1 || file.graph6.empty() || file.errorset_hash.empty() || declared_k == 0)
        throw std::invalid_argument("code file: header missing n/graph6/errorset/K");

    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if ((int)line.size() != file.n)
            throw std::invalid_argument("code file: codeword '" + line + "' is not " +
                                        std::to_string(file.n) + " bits");
        file.words.push_back(word_from_string(line));
    }
    if (file.words.size() != declared_k)
        throw std::invalid_argument("code file: K=" + std::to_string(declared_k) + " but " +
                                    std::to_string(file.words.size()) + " codewords listed");
    if (file.words.empty() || file.words[0] != 0)
        throw std::invalid_argument("code file: zero word must come first");
    return file;
}

std::string to_dimacs(const CliqueInstance& inst) {
    std::ostringstream out;
    size_t m = inst.nodes.size();
    std::vector<std::pair<size_t, size_t>> edges;
    for (size_t a = 0; a < m; ++a)
        for (size_t b = a + 1; b < m; ++b)
            if (inst.adjacent(inst.nodes[a], inst.nodes[b])) edges.push_back({a + 1, b + 1});
    out << "p edge " << m << " " << edges.size() << "\n";
    for (auto [a, b] : edges) out << "e " << a << " " << b << "\n";
    return out.str();
}

} // namespace cws
