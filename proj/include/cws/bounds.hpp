#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace cws {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Quantum Singleton bound on code size: 2^(n - 2(d-1)), or 0 when the
// exponent goes negative (no code of that distance on so few qubits).
BigInt singleton_bound(int n, int d);

// Linear-programming feasibility of an ((n,K,d)) code, decided in exact
// rational arithmetic.  A weight distribution A_0..A_n (A_0 = 1, A_i >= 0)
// must exist whose shadow transforms stay admissible:
//   B(x,y) = K A((x+3y)/2, (x-y)/2)   componentwise  B_j >= A_j,
//                                     with equality for j < d,
//   S(x,y) = K A((x+3y)/2, (y-x)/2)   componentwise  S_j >= 0.
// `pure` additionally forces A_j = 0 for 1 <= j < d.  The transforms are
// expanded into explicit rational matrices via binomial sums, and
// feasibility is decided by a phase-1 simplex with Bland's rule (exact, no
// cycling, no tolerances).
bool lp_feasible(int n, int d, const Rational& K, bool pure = false);

// Largest admissible K for given (n, d): the largest feasible integer, plus
// the supremum over rational K located by bisection to within 2^-20.
// best_integer = 0 means even K = 1 is ruled out.
struct LpBound {
    BigInt best_integer;
    Rational sup; // largest known-feasible rational (within 2^-20 of the sup)
};
LpBound lp_max_K(int n, int d, bool pure = false);

// Closed-form distance-2 bound for odd n: K <= 2^(n-2) (1 - 1/(n-1)).
// Returns the exact rational and its floor.
struct OddBound {
    Rational exact;
    BigInt floor_value;
};
OddBound odd_n_d2_bound(int n);

// Sizes of two known distance-2 code families:
//   rains:  n = 2a+1 odd, a >= 2          -> K = 3 * 2^(2a-3)
//   smolin: n = 4a+2b+3, b in {0,1}, a>=1 -> K = sum_{i=0..a} C(n, 2i+b)
enum class KnownFamily { rains, smolin };
BigInt known_family_size(KnownFamily family, int n);

BigInt binomial(int n, int k);

} // namespace cws
