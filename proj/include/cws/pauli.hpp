#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace cws {

// n-qubit Pauli operator modulo phase, in symplectic form: bit i of u set
// means an X factor on qubit i, bit i of v a Z factor; both set is Y.
struct PauliOp {
    uint16_t u = 0;
    uint16_t v = 0;

    bool operator==(const PauliOp& o) const { return u == o.u && v == o.v; }
    bool identity() const { return u == 0 && v == 0; }
};

// Number of qubits acted on non-trivially.
int weight(const PauliOp& p);

// Phase-free product (componentwise XOR).
PauliOp product(const PauliOp& a, const PauliOp& b);

// True iff the operators commute (symplectic form vanishes).
bool commutes(const PauliOp& a, const PauliOp& b);

// Letter string, one char per qubit from {I,X,Y,Z}, qubit 0 first.
std::string op_letters(const PauliOp& p, int n);
PauliOp op_from_letters(const std::string& letters);

// A permutation of the non-identity letters {X,Y,Z}, applied per qubit.
// to[0], to[1], to[2] are the images of X, Y, Z.
struct LetterPerm {
    std::array<char, 3> to{{'X', 'Y', 'Z'}};

    static LetterPerm identity() { return {}; }
    static LetterPerm swap_xz() { return {{{'Z', 'Y', 'X'}}}; }
    static LetterPerm swap_yz() { return {{{'X', 'Z', 'Y'}}}; }
    static LetterPerm swap_xy() { return {{{'Y', 'X', 'Z'}}}; }

    bool is_identity() const { return to[0] == 'X' && to[1] == 'Y' && to[2] == 'Z'; }
};

PauliOp apply_letter_perm(const PauliOp& p, const LetterPerm& perm);

// Error set: a deduplicated, letter-lexicographically sorted list of
// phase-free Pauli operators, always containing the identity.
struct ErrorSet {
    int n = 0;
    std::string descriptor; // e.g. "symmetric:d=2", "ad:t=1:xz"
    std::vector<PauliOp> ops;
};

// All operators of weight <= d-1 (the set whose detection gives distance d).
// Size is sum_{k<=d-1} C(n,k) 3^k.  Requires 1 <= d <= n+1.
ErrorSet symmetric_error_set(int n, int d);

// Amplitude-damping error set.  For t = 1 this is
//   {I} u {X_i, Y_i, Z_i} u {X_i X_j, Y_i Y_j : i<j} u {X_i Y_j : i != j},
// and for t > 1 all t-fold phase-free products of t = 1 elements,
// deduplicated.  The letter permutation (identity / X<->Z / Y<->Z) is
// applied to every operator afterwards.
ErrorSet amp_damp_error_set(int n, int t, const LetterPerm& perm = LetterPerm::identity());

// Applies a (possibly different) letter permutation on each qubit to every
// operator of the set.  Sizes are preserved (letter permutations are
// bijections on operators).
ErrorSet apply_qubit_permutations(const ErrorSet& e, const std::vector<LetterPerm>& perms);

// Canonical text form: one operator per line as its letter string, sorted.
std::string serialize(const ErrorSet& e);

// 64-bit FNV-1a over the canonical text, as 16 hex digits.  Stable across
// runs and platforms; used to key caches and code files.
std::string content_hash(const ErrorSet& e);

// Cheap structural checks (sorted, deduplicated, identity present, ops fit
// in n bits); throws std::invalid_argument on violation.
void validate(const ErrorSet& e);

} // namespace cws
