#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cws/cwsmap.hpp"
#include "cws/graph.hpp"
#include "cws/pauli.hpp"

namespace cws {

// Exact statevector arithmetic over Gaussian integers.  Pauli strings map
// computational basis states to single basis states with a unit phase, so
// graph-state amplitudes and all the inner products this module needs stay
// in Z[i] -- no floating point, no tolerance.
struct GaussInt {
    int64_t re = 0, im = 0;

    bool operator==(const GaussInt& o) const { return re == o.re && im == o.im; }
    GaussInt operator+(const GaussInt& o) const { return {re + o.re, im + o.im}; }
    GaussInt operator*(const GaussInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussInt conj() const { return {re, -im}; }
    bool zero() const { return re == 0 && im == 0; }
};

// Unnormalized statevector: true amplitudes are amps[x] / 2^(n/2).
struct StateVector {
    int n = 0;
    std::vector<GaussInt> amps;
};

// Graph state: amplitude of basis state x is (-1)^(edges inside support x).
// Gate: n <= 12 (4096 amplitudes).
StateVector graph_state(const Graph& g);

// Applies an exact Pauli string given by letters (qubit 0 = first char).
// The phase convention is Y = i X Z, i.e. Y|0> = i|1>, Y|1> = -i|0>; a
// phase-free (u,v) operator lifts to the letter string with X applied
// before Z on each qubit.
StateVector apply_pauli(const StateVector& s, const std::string& letters);

// <a|b> without normalization (divide by 2^n for unit-state inner products).
GaussInt inner(const StateVector& a, const StateVector& b);

// True iff every stabilizer generator X_i Z_{N(i)} fixes the state.
bool stabilizer_fixes(const Graph& g, const StateVector& s);

// Direct check of the detection criterion on the actual state space:
// basis states |W_k> = Z^{x_k}|G>, and every error E must satisfy
// <W_i|E|W_j> = C_E * delta_ij with C_E independent of i.  Phase-free
// errors are lifted canonically (see apply_pauli).  This is the
// independent ground truth the classical verifier is tested against.
struct DetectionCheck {
    bool ok = false;
    std::vector<GaussInt> c_table; // C_E per error, in error-set order
    struct Violation {
        PauliOp op;
        size_t i = 0, j = 0; // codeword indices
    };
    std::optional<Violation> violation;
};
DetectionCheck detection_check(const Graph& g, const ErrorSet& e, const CwsCode& code);

} // namespace cws
