#include "cws/pauli.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace cws {

int weight(const PauliOp& p) { return __builtin_popcount(p.u | p.v); }

PauliOp product(const PauliOp& a, const PauliOp& b) {
    return {uint16_t(a.u ^ b.u), uint16_t(a.v ^ b.v)};
}

bool commutes(const PauliOp& a, const PauliOp& b) {
    int cross = __builtin_popcount(a.u & b.v) + __builtin_popcount(a.v & b.u);
    return (cross & 1) == 0;
}

std::string op_letters(const PauliOp& p, int n) {
    std::string s(n, 'I');
    for (int i = 0; i < n; ++i) {
        bool x = (p.u >> i) & 1u, z = (p.v >> i) & 1u;
        if (x && z) s[i] = 'Y';
        else if (x) s[i] = 'X';
        else if (z) s[i] = 'Z';
    }
    return s;
}

PauliOp op_from_letters(const std::string& letters) {
    if (letters.size() > 16) throw std::invalid_argument("operator letters: more than 16 qubits");
    PauliOp p;
    for (size_t i = 0; i < letters.size(); ++i) {
        switch (letters[i]) {
            case 'I': break;
            case 'X': p.u |= uint16_t(1u << i); break;
            case 'Y': p.u |= uint16_t(1u << i); p.v |= uint16_t(1u << i); break;
            case 'Z': p.v |= uint16_t(1u << i); break;
            default:
                throw std::invalid_argument(std::string("operator letters: bad char '") +
                                            letters[i] + "' at qubit " + std::to_string(i));
        }
    }
    return p;
}

PauliOp apply_letter_perm(const PauliOp& p, const LetterPerm& perm) {
    PauliOp out;
    for (int i = 0; i < 16; ++i) {
        bool x = (p.u >> i) & 1u, z = (p.v >> i) & 1u;
        if (!x && !z) continue;
        char letter = x ? (z ? 'Y' : 'X') : 'Z';
        char image = perm.to[letter == 'X' ? 0 : (letter == 'Y' ? 1 : 2)];
        if (image == 'X' || image == 'Y') out.u |= uint16_t(1u << i);
        if (image == 'Z' || image == 'Y') out.v |= uint16_t(1u << i);
    }
    return out;
}

namespace {

uint32_t op_key(const PauliOp& p) { return (uint32_t(p.u) << 16) | p.v; }

// Sort by letter string (qubit 0 most significant); 'I' < 'X' < 'Y' < 'Z'
// already holds in ASCII, so compare per-qubit letter ranks directly.
void sort_ops(std::vector<PauliOp>& ops, int n) {
    auto rank = [](bool x, bool z) { return x ? (z ? 2 : 1) : (z ? 3 : 0); };
    std::sort(ops.begin(), ops.end(), [&](const PauliOp& a, const PauliOp& b) {
        for (int i = 0; i < n; ++i) {
            int ra = rank((a.u >> i) & 1u, (a.v >> i) & 1u);
            int rb = rank((b.u >> i) & 1u, (b.v >> i) & 1u);
            if (ra != rb) return ra < rb;
        }
        return false;
    });
}

ErrorSet finish(int n, std::string descriptor, std::vector<PauliOp> ops) {
    std::unordered_set<uint32_t> seen;
    std::vector<PauliOp> unique;
    unique.reserve(ops.size());
    for (const PauliOp& p : ops)
        if (seen.insert(op_key(p)).second) unique.push_back(p);
    sort_ops(unique, n);
    ErrorSet e{n, std::move(descriptor), std::move(unique)};
    validate(e);
    return e;
}

} // namespace

ErrorSet symmetric_error_set(int n, int d) {
    if (n < 1 || n > 16) throw std::invalid_argument("symmetric_error_set: n out of range 1..16");
    if (d < 1 || d > n + 1) throw std::invalid_argument("symmetric_error_set: need 1 <= d <= n+1");
    int r = d - 1;
    std::vector<PauliOp> ops;
    for (uint32_t support = 0; support < (1u << n); ++support) {
        if (__builtin_popcount(support) > r) continue;
        // all letter assignments over the support bits
        std::vector<int> qubits;
        for (int i = 0; i < n; ++i)
            if ((support >> i) & 1u) qubits.push_back(i);
        size_t assignments = 1;
        for (size_t k = 0; k < qubits.size(); ++k) assignments *= 3;
        for (size_t code = 0; code < assignments; ++code) {
            PauliOp p;
            size_t c = code;
            for (int q : qubits) {
                switch (c % 3) {
                    case 0: p.u |= uint16_t(1u << q); break;                          // X
                    case 1: p.u |= uint16_t(1u << q); p.v |= uint16_t(1u << q); break; // Y
                    case 2: p.v |= uint16_t(1u << q); break;                          // Z
                }
                c /= 3;
            }
            ops.push_back(p);
        }
    }
    return finish(n, "symmetric:d=" + std::to_string(d), std::move(ops));
}

ErrorSet amp_damp_error_set(int n, int t, const LetterPerm& perm) {
    if (n < 2 || n > 16) throw std::invalid_argument("amp_damp_error_set: n out of range 2..16");
    if (t < 1) throw std::invalid_argument("amp_damp_error_set: t must be >= 1");

    std::vector<PauliOp> base;
    base.push_back({0, 0});
    for (int i = 0; i < n; ++i) {
        base.push_back({uint16_t(1u << i), 0});                    // X_i
        base.push_back({uint16_t(1u << i), uint16_t(1u << i)});    // Y_i
        base.push_back({0, uint16_t(1u << i)});                    // Z_i
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            uint16_t m = uint16_t((1u << i) | (1u << j));
            base.push_back({m, 0}); // X_i X_j
            base.push_back({m, m}); // Y_i Y_j
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            base.push_back({uint16_t((1u << i) | (1u << j)), uint16_t(1u << j)}); // X_i Y_j
        }

    // t-fold phase-free products; identity is in the base set, so each level
    // contains the previous one.
    std::vector<PauliOp> current = base;
    for (int level = 2; level <= t; ++level) {
        std::unordered_set<uint32_t> seen;
        std::vector<PauliOp> next;
        for (const PauliOp& a : current)
            for (const PauliOp& b : base) {
                PauliOp p = product(a, b);
                if (seen.insert(op_key(p)).second) next.push_back(p);
            }
        current = std::move(next);
    }

    std::string suffix = perm.is_identity() ? "id"
                        : (perm.to[0] == 'Z' && perm.to[2] == 'X') ? "xz"
                        : (perm.to[1] == 'Z' && perm.to[2] == 'Y') ? "yz"
                        : std::string(1, perm.to[0]) + perm.to[1] + perm.to[2];
    for (PauliOp& p : current) p = apply_letter_perm(p, perm);
    return finish(n, "ad:t=" + std::to_string(t) + ":" + suffix, std::move(current));
}

ErrorSet apply_qubit_permutations(const ErrorSet& e, const std::vector<LetterPerm>& perms) {
    if ((int)perms.size() != e.n)
        throw std::invalid_argument("apply_qubit_permutations: need one permutation per qubit");
    std::vector<PauliOp> ops;
    ops.reserve(e.ops.size());
    for (const PauliOp& p : e.ops) {
        PauliOp out;
        for (int i = 0; i < e.n; ++i) {
            bool x = (p.u >> i) & 1u, z = (p.v >> i) & 1u;
            if (!x && !z) continue;
            char letter = x ? (z ? 'Y' : 'X') : 'Z';
            char image = perms[i].to[letter == 'X' ? 0 : (letter == 'Y' ? 1 : 2)];
            if (image == 'X' || image == 'Y') out.u |= uint16_t(1u << i);
            if (image == 'Z' || image == 'Y') out.v |= uint16_t(1u << i);
        }
        ops.push_back(out);
    }
    return finish(e.n, e.descriptor + ":permuted", std::move(ops));
}

std::string serialize(const ErrorSet& e) {
    std::string out;
    out.reserve(e.ops.size() * (e.n + 1));
    for (const PauliOp& p : e.ops) {
        out += op_letters(p, e.n);
        out += '\n';
    }
    return out;
}

std::string content_hash(const ErrorSet& e) {
    std::string text = serialize(e);
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

void validate(const ErrorSet& e) {
    if (e.n < 1 || e.n > 16) throw std::invalid_argument("error set: n out of range 1..16");
    uint16_t allowed = uint16_t((e.n == 16) ? 0xffffu : ((1u << e.n) - 1));
    bool has_identity = false;
    std::unordered_set<uint32_t> seen;
    std::string prev;
    for (const PauliOp& p : e.ops) {
        if ((p.u & ~allowed) || (p.v & ~allowed))
            throw std::invalid_argument("error set: operator acts beyond qubit n-1");
        if (!seen.insert((uint32_t(p.u) << 16) | p.v).second)
            throw std::invalid_argument("error set: duplicate operator " + op_letters(p, e.n));
        std::string cur = op_letters(p, e.n);
        if (!prev.empty() && cur < prev)
            throw std::invalid_argument("error set: operators not sorted");
        prev = std::move(cur);
        if (p.identity()) has_identity = true;
    }
    if (!has_identity) throw std::invalid_argument("error set: identity missing");
}

} // namespace cws
