#pragma once

#include <optional>

#include "sandpile/bigint.hpp"
#include "sandpile/linalg.hpp"
#include "sandpile/poly.hpp"

namespace sandpile {

// F_0 = 0, F_1 = 1, F_n = F_{n-1} + F_{n-2}
Int fib(int n);

// Fibonacci-like polynomials: F_0(y) = 0, F_1(y) = 1,
// F_n(y) = F_{n-1}(y) + F_{n-2}(y) for n even,
// F_n(y) = F_{n-1}(y) + y F_{n-2}(y) for n odd.
// fib_poly(2n) is T(1, y) of the cone over the n-vertex path.
UniPoly fib_poly(int n);

// S_1(y) = 1, S_n(y) = (y+1) S_{n-1}(y) + 2^{n-2}.
// star_poly(n) is T(1, y) of the cone over the n-vertex star.
UniPoly star_poly(int n);

// m_{p,s} = (s-2) F_{2p-1} + 2 F_{2p+1} = s F_{2p-1} + 2 F_{2p};
// both expressions are computed and asserted equal.
Int m_ps(int p, int s);

// Closed-form data for the cone over a named tree family.
struct FamilyPrediction {
    Int tau;
    AbelianGroup group;
    std::optional<UniPoly> t1y;  // present when a closed form exists
};

// Cone over the coconut tree CT(p, s): tau = 2^{s-1} m_{p,s}; the group is
// Z_2^{s-1} + Z_m when s = 1 or p = 2 mod 3, and Z_2^{s-2} + Z_{2m}
// otherwise, normalized into invariant-factor form. The single-edge tree
// (p = s = 1) is resolved by direct Smith form of its cone.
FamilyPrediction coconut_prediction(int p, int s);

FamilyPrediction path_prediction(int n);  // tau = F_{2n}, cyclic group
FamilyPrediction star_prediction(int n);  // tau = 2^{n-2}(n+1), Z_2^{n-3} + Z_{2(n+1)} for n >= 3

// Spanning trees of the cone over CT(p, s) with the edge to the far path
// end doubled: 2^{s-1} (2 F_{2p+2} + (s-2) F_{2p}).
Int doubled_cone_coconut_tau(int p, int s);

// n-th root of the exact spanning-tree count of the cone over the coconut
// tree CT(floor(alpha n), n - floor(alpha n)), where alpha is chosen so
// that 2 (phi^2/2)^alpha = beta. Requires 2 <= beta <= phi^2; the root is
// taken in the log domain, everything else is exact.
double asymptotic_ratio(double beta, int n);

}  // namespace sandpile
