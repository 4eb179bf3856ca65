#pragma once

#include "knot.hpp"

namespace instcone {

// The bent complex A(s): the generators in the congruence class of s, with
// the differential acting by d_plus strictly above s, by d_plus + d_minus at
// s, and by d_minus strictly below s. The parameter is the doubled grading
// s2; the class is alex2 == s2 (mod 2q).
struct BentComplex {
    long long s2 = 0;
    Complex complex;
};

enum class HalfKind { Bplus, Bminus, BplusGeq, BminusLeq };

// B+(s), B-(s): the whole congruence class with only d_plus (resp. d_minus).
// B+(>=s): gradings >= s in the class with d_plus; B-(<=s) dually.
struct HalfComplex {
    HalfKind kind = HalfKind::Bplus;
    long long s2 = 0;
    Complex complex;
};

BentComplex build_A(const KnotComplexData& k, long long s2);
HalfComplex build_B(const KnotComplexData& k, HalfKind kind, long long s2);

// Projections on homology.
//
// The displayed piecewise formulas for these maps are only usable once one
// convention question is settled: the projection to the d_plus side must keep
// the grading-s summand (so the d_plus-component of the bent differential at
// s survives), and the projection to the d_minus side must keep gradings
// <= s. This is the unique choice for which both projections are chain maps
// A(s) -> B+-(s); any other split fails d-compatibility at grading s.
enum class Sign { Plus, Minus };
HomologyMap pi_map(const KnotComplexData& k, Sign sign, long long s2);

// The factorizations pi+(s) = I+(s) o pi+'(s) through B+(>=s), and dually.
HomologyMap pi_prime_map(const KnotComplexData& k, Sign sign, long long s2);
HomologyMap inclusion_map(const KnotComplexData& k, HalfKind kind, long long s2);

// tau, doubled. Computed as minus the least threshold at which the
// inclusion-induced map H(B-(<= i)) -> H(B-) becomes nonzero, and
// cross-checked against the greatest i with H(B+(>= i)) -> H(B+) nonzero.
// The two agree on any input arising from actual knot data; a mismatch
// raises ConventionMismatch rather than guessing. Requires q == 1.
long long tau2(const KnotComplexData& k);

// nu, doubled: tau2 + 2 when pi+(tau2) is nonzero on homology, tau2
// otherwise; cross-checked against 2 + max{s2 : pi+(s2) != 0}.
long long nu2(const KnotComplexData& k);

} // namespace instcone
