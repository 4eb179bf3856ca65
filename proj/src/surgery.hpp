#pragma once

#include <functional>
#include <optional>

#include "bent.hpp"

namespace instcone {

// One summand's scalars in the truncated cone: the coefficient on the
// pi-minus block and on the identified pi-plus block. Defaults to (1, 1);
// rescaling by any nonzero values must not change any reported dimension,
// which the property suite checks.
struct BlockScalars {
    Rational c_minus = Rational(1);
    Rational c_plus = Rational(1);
};
using ScalarAssignment = std::function<BlockScalars(long long s)>;

// Finite truncation of the surgery mapping cone for internal parameter m
// (user-facing slope n = -m): sources H(A(s)) for s in [-S, S], targets
// H(B-(t)) for t in [-S+m, S], with blocks pi-(s) into t = s and the
// basis-identified pi+(s) into t = s + m. Outside this window every summand
// cancels against an isomorphic partner, which is why enlarging S cannot
// change the answer; integer_surgery_dim re-checks that at runtime.
struct ConeAssembly {
    long long m = 0;
    long long window = 0;  // halfwidth S, in grading units (s2 = 2s)
    std::vector<long long> sources;       // s values
    std::vector<std::size_t> source_dims; // dim H(A(s))
    std::vector<QMatrix> pi_minus_blocks; // hdim x dim, per source
    std::vector<QMatrix> pi_plus_blocks;  // hdim x dim, per source
    std::vector<long long> targets;       // t values
    std::size_t hdim = 1;                 // dim H(B+-) (1 for valid input)

    std::size_t source_total() const;
    std::size_t target_total() const { return targets.size() * hdim; }
    QMatrix assemble(const ScalarAssignment& scalars) const;
    std::size_t cone_dim(const ScalarAssignment& scalars) const;
};

ConeAssembly build_assembly(const KnotComplexData& k, long long m, long long window);

// dim I#(S^3_n(K)) for n != 0, q = 1. Computed at the default window and
// re-verified at window + 3; a disagreement raises WindowUnstable.
std::size_t integer_surgery_dim(const KnotComplexData& k, long long n);
std::size_t integer_surgery_dim(const KnotComplexData& k, long long n,
                                const ScalarAssignment& scalars, long long extra_window = 0);

// Zero surgery, graded by the capped-off surface. The grading-zero summand
// is computed only when the input pins it down (tau != 0, after mirroring if
// tau > 0, or tau = nu = 0 with both projections verified zero); otherwise
// it is reported indeterminate rather than guessed.
struct ZeroSurgeryEntry {
    long long s = 0;  // grading (integer for q = 1)
    bool determinate = false;
    std::size_t dim = 0;
    std::string note;
};
struct ZeroSurgeryReport {
    long long tau2 = 0;
    long long nu2 = 0;
    std::vector<ZeroSurgeryEntry> entries;  // sorted by s

    bool has_indeterminate() const {
        for (const auto& e : entries)
            if (!e.determinate) return true;
        return false;
    }
};
ZeroSurgeryReport zero_surgery_dims(const KnotComplexData& k);
ZeroSurgeryReport zero_surgery_dims(const KnotComplexData& k, const ScalarAssignment& scalars);

// nu-sharp = 2 nu - 1 and r0 = dim at slope 2 nu - 1; defined here only when
// tau != 0 (TauZero otherwise).
long long nu_sharp(const KnotComplexData& k);
std::size_t r0(const KnotComplexData& k);

// q_slope * r0 + |p - q_slope * nu_sharp| for a reduced fraction p/q_slope.
std::size_t rational_surgery_dim(const KnotComplexData& k, long long p, long long q_slope);

// Dimension of the grading-j2 summand of the dual-knot homology after
// -m-framed filling: the cone of (I-(j-), I+(j+)) with j+- shifted by the
// grading-bound offsets. Works for any q >= 1.
std::size_t dual_knot_dim(const KnotComplexData& k, long long m, long long j2);

struct DualKnotTable {
    long long m = 0;
    long long jmax2 = 0;  // gradings run over [-jmax2, jmax2] step 2
    std::vector<std::pair<long long, std::size_t>> dims;  // (j2, dim)
    std::size_t total = 0;
};
DualKnotTable dual_knot_table(const KnotComplexData& k, long long m);

// Closed-form surgery dimensions from the four threshold cases; agrees with
// integer_surgery_dim(k, -m) wherever defined. Mirrors internally (flipping
// m) when tau > 0; TauZero when tau = 0.
std::size_t closed_form_case_dims(const KnotComplexData& k, long long m);

// dim H(A(s)) for s in [-g, g]; every |s| > g contributes 1.
struct LargeSurgeryTable {
    std::vector<std::pair<long long, std::size_t>> dims;  // (s, dim)
    std::size_t sum = 0;
};
LargeSurgeryTable large_surgery_table(const KnotComplexData& k);

struct InvariantReport {
    std::string name;
    long long tau2 = 0;
    long long nu2 = 0;
    std::optional<long long> nu_sharp;  // absent when tau = 0
    std::optional<std::size_t> r0;
};
InvariantReport invariants(const KnotComplexData& k);

} // namespace instcone
