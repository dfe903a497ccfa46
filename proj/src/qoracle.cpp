#include "cws/qoracle.hpp"

#include <stdexcept>

namespace cws {

StateVector graph_state(const Graph& g) {
    validate(g);
    if (g.n > 12)
        throw std::invalid_argument("graph_state: statevector oracle gated at n <= 12");
    StateVector s;
    s.n = g.n;
    size_t dim = size_t(1) << g.n;
    s.amps.resize(dim);
    for (uint32_t x = 0; x < dim; ++x) {
        int edges_inside = 0;
        for (int i = 0; i < g.n; ++i)
            if ((x >> i) & 1u)
                edges_inside += __builtin_popcount(g.adj[i] & x & ~((2u << i) - 1));
        s.amps[x] = {(edges_inside & 1) ? -1 : 1, 0};
    }
    return s;
}

StateVector apply_pauli(const StateVector& s, const std::string& letters) {
    if ((int)letters.size() != s.n)
        throw std::invalid_argument("apply_pauli: letter count does not match qubit count");
    uint32_t flip = 0;
    for (int i = 0; i < s.n; ++i)
        if (letters[i] == 'X' || letters[i] == 'Y') flip |= 1u << i;

    StateVector out;
    out.n = s.n;
    out.amps.assign(s.amps.size(), {0, 0});
    for (uint32_t x = 0; x < s.amps.size(); ++x) {
        // phase acquired on basis state |x>: Z_i gives (-1)^{x_i},
        // Y_i gives i * (-1)^{x_i}
        GaussInt phase{1, 0};
        for (int i = 0; i < s.n; ++i) {
            char c = letters[i];
            if (c == 'I' || c == 'X') continue;
            if (c == 'Z') {
                if ((x >> i) & 1u) phase = phase * GaussInt{-1, 0};
            } else if (c == 'Y') {
                phase = phase * (((x >> i) & 1u) ? GaussInt{0, -1} : GaussInt{0, 1});
            } else {
                throw std::invalid_argument(std::string("apply_pauli: bad letter '") + c + "'");
            }
        }
        out.amps[x ^ flip] = phase * s.amps[x];
    }
    return out;
}

GaussInt inner(const StateVector& a, const StateVector& b) {
    if (a.n != b.n) throw std::invalid_argument("inner: qubit count mismatch");
    GaussInt total{0, 0};
    for (size_t x = 0; x < a.amps.size(); ++x) total = total + a.amps[x].conj() * b.amps[x];
    return total;
}

bool stabilizer_fixes(const Graph& g, const StateVector& s) {
    for (int i = 0; i < g.n; ++i) {
        std::string gen(g.n, 'I');
        gen[i] = 'X';
        for (int j = 0; j < g.n; ++j)
            if (g.has_edge(i, j)) gen[j] = 'Z';
        StateVector t = apply_pauli(s, gen);
        if (t.amps != s.amps) return false;
    }
    return true;
}

DetectionCheck detection_check(const Graph& g, const ErrorSet& e, const CwsCode& code) {
    if (g.n != e.n || g.n != code.n)
        throw std::invalid_argument("detection_check: size mismatch");
    if (code.words.empty() || code.words[0] != 0)
        throw std::invalid_argument("detection_check: codewords must start with 0");

    StateVector base = graph_state(g);
    std::vector<StateVector> basis;
    basis.reserve(code.words.size());
    for (uint32_t w : code.words) {
        std::string zs(g.n, 'I');
        for (int i = 0; i < g.n; ++i)
            if ((w >> i) & 1u) zs[i] = 'Z';
        basis.push_back(apply_pauli(base, zs));
    }

    DetectionCheck check;
    const size_t K = basis.size();
    for (const PauliOp& op : e.ops) {
        std::string letters = op_letters(op, g.n);
        GaussInt c_e{0, 0};
        bool have_c = false;
        for (size_t j = 0; j < K; ++j) {
            StateVector ej = apply_pauli(basis[j], letters);
            for (size_t i = 0; i < K; ++i) {
                GaussInt ip = inner(basis[i], ej);
                if (i == j) {
                    if (!have_c) {
                        c_e = ip;
                        have_c = true;
                    } else if (!(ip == c_e)) {
                        check.violation = DetectionCheck::Violation{op, i, j};
                        return check;
                    }
                } else if (!ip.zero()) {
                    check.violation = DetectionCheck::Violation{op, i, j};
                    return check;
                }
            }
        }
        check.c_table.push_back(c_e);
    }
    check.ok = true;
    return check;
}

} // namespace cws
