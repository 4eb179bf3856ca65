#include "surgery.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "errors.hpp"

namespace instcone {

namespace {

void require_meridian_surgery(const KnotComplexData& k, const char* what) {
    if (k.q != 1)
        fail(ErrorKind::Precondition,
             std::string(what) + " requires q = 1 data (got q = " + std::to_string(k.q) + ")");
}

const ScalarAssignment kUnitScalars = [](long long) { return BlockScalars{}; };

} // namespace

std::size_t ConeAssembly::source_total() const {
    return std::accumulate(source_dims.begin(), source_dims.end(), std::size_t{0});
}

QMatrix ConeAssembly::assemble(const ScalarAssignment& scalars) const {
    QMatrix m_out(target_total(), source_total());
    std::size_t col = 0;
    for (std::size_t i = 0; i < sources.size(); ++i) {
        long long s = sources[i];
        BlockScalars cs = scalars(s);
        if (is_zero(cs.c_minus) || is_zero(cs.c_plus))
            fail(ErrorKind::MissingScalar, "assembly scalars must be nonzero");
        auto target_row = [&](long long t) -> std::optional<std::size_t> {
            auto it = std::find(targets.begin(), targets.end(), t);
            if (it == targets.end()) return std::nullopt;
            return static_cast<std::size_t>(it - targets.begin()) * hdim;
        };
        if (auto row = target_row(s)) {
            const QMatrix& b = pi_minus_blocks[i];
            for (std::size_t r = 0; r < hdim; ++r)
                for (std::size_t c = 0; c < source_dims[i]; ++c)
                    m_out.at(*row + r, col + c) = cs.c_minus * b.at(r, c);
        }
        if (auto row = target_row(s + m)) {
            const QMatrix& b = pi_plus_blocks[i];
            for (std::size_t r = 0; r < hdim; ++r)
                for (std::size_t c = 0; c < source_dims[i]; ++c)
                    m_out.at(*row + r, col + c) = cs.c_plus * b.at(r, c);
        }
        col += source_dims[i];
    }
    return m_out;
}

std::size_t ConeAssembly::cone_dim(const ScalarAssignment& scalars) const {
    QMatrix m_out = assemble(scalars);
    std::size_t r = m_out.rank();
    return (source_total() - r) + (target_total() - r);
}

ConeAssembly build_assembly(const KnotComplexData& k, long long m, long long window) {
    ConeAssembly a;
    a.m = m;
    a.window = window;

    // For q = 1 every B+-(s) is the same complex; compute the two homology
    // bases once and reuse them for every block.
    HomologyBasis bminus = homology_basis(build_B(k, HalfKind::Bminus, 0).complex);
    HomologyBasis bplus = homology_basis(build_B(k, HalfKind::Bplus, 0).complex);
    if (bminus.dim() != bplus.dim())
        fail(ErrorKind::Internal, "H(B+) and H(B-) dimensions differ on validated data");
    a.hdim = bminus.dim();

    for (long long s = -window; s <= window; ++s) {
        BentComplex as = build_A(k, 2 * s);
        HomologyBasis ah = homology_basis(as.complex);
        // Chain-level projections out of A(s).
        std::vector<MapEntry> keep_le, keep_ge;
        for (const auto& g : as.complex.space.generators()) {
            if (g.grading.alex2 <= 2 * s) keep_le.push_back({g.label, g.label, Rational(1)});
            if (g.grading.alex2 >= 2 * s) keep_ge.push_back({g.label, g.label, Rational(1)});
        }
        GradedMap proj_minus(as.complex.space, bminus.complex.space, keep_le);
        GradedMap proj_plus(as.complex.space, bplus.complex.space, keep_ge);
        a.sources.push_back(s);
        a.source_dims.push_back(ah.dim());
        a.pi_minus_blocks.push_back(induced_map(ah, bminus, proj_minus).matrix);
        // The identification of H(B+) with H(B-(s+m)) is the identity in the
        // pivot-cycle bases, so the plus block lands in row group s + m as is.
        a.pi_plus_blocks.push_back(induced_map(ah, bplus, proj_plus).matrix);
    }
    for (long long t = -window + m; t <= window; ++t) a.targets.push_back(t);
    return a;
}

std::size_t integer_surgery_dim(const KnotComplexData& k, long long n) {
    return integer_surgery_dim(k, n, kUnitScalars);
}

std::size_t integer_surgery_dim(const KnotComplexData& k, long long n,
                                const ScalarAssignment& scalars, long long extra_window) {
    require_meridian_surgery(k, "integer surgery");
    if (n == 0)
        fail(ErrorKind::Precondition, "slope 0 has per-grading semantics; use the 0-surgery path");
    require_valid(k);
    const long long m = -n;
    const long long base = k.genus + std::llabs(m) + 2 + extra_window;
    std::size_t d0 = build_assembly(k, m, base).cone_dim(scalars);
    std::size_t d1 = build_assembly(k, m, base + 3).cone_dim(scalars);
    if (d0 != d1)
        fail(ErrorKind::WindowUnstable,
             "surgery dimension changed when enlarging the truncation window (" +
                 std::to_string(d0) + " vs " + std::to_string(d1) + ")");
    return d0;
}

namespace {

// Per-grading zero-surgery dimension for data with tau <= 0, where at every
// grading at least one projection vanishes and the cone dimension is
// independent of all scalar choices.
ZeroSurgeryReport zero_surgery_nonpositive_tau(const KnotComplexData& k, long long t2,
                                               long long n2, const ScalarAssignment& scalars) {
    ZeroSurgeryReport rep;
    rep.tau2 = t2;
    rep.nu2 = n2;

    HomologyBasis bminus = homology_basis(build_B(k, HalfKind::Bminus, 0).complex);
    HomologyBasis bplus = homology_basis(build_B(k, HalfKind::Bplus, 0).complex);

    long long lo = std::min<long long>(1 - k.genus, 0);
    long long hi = std::max<long long>(k.genus - 1, 0);
    for (long long s = lo; s <= hi; ++s) {
        BentComplex as = build_A(k, 2 * s);
        HomologyBasis ah = homology_basis(as.complex);
        std::vector<MapEntry> keep_le, keep_ge;
        for (const auto& g : as.complex.space.generators()) {
            if (g.grading.alex2 <= 2 * s) keep_le.push_back({g.label, g.label, Rational(1)});
            if (g.grading.alex2 >= 2 * s) keep_ge.push_back({g.label, g.label, Rational(1)});
        }
        QMatrix pm = induced_map(ah, bminus, GradedMap(as.complex.space, bminus.complex.space, keep_le)).matrix;
        QMatrix pp = induced_map(ah, bplus, GradedMap(as.complex.space, bplus.complex.space, keep_ge)).matrix;

        ZeroSurgeryEntry entry;
        entry.s = s;

        bool pm_zero = pm.is_zero();
        bool pp_zero = pp.is_zero();
        bool pinned = pm_zero || pp_zero;
        if (s == 0 && t2 == 0) {
            // Only the nu = 0 case pins the grading-zero summand, and then
            // both projections are required to vanish.
            pinned = (n2 == 0) && pm_zero && pp_zero;
            if (!pinned) {
                entry.determinate = false;
                entry.note = n2 == 0 ? "projections at grading 0 do not both vanish"
                                     : "scalar-ambiguous: tau = 0 and nu = 1";
                rep.entries.push_back(entry);
                continue;
            }
        }
        if (!pinned)
            fail(ErrorKind::Internal,
                 "both projections nonzero at grading " + std::to_string(s) +
                     " although tau <= 0; thresholds are inconsistent");

        BlockScalars cs = scalars(s);
        if (is_zero(cs.c_minus) || is_zero(cs.c_plus))
            fail(ErrorKind::MissingScalar, "assembly scalars must be nonzero");
        QMatrix sum = pm.scale(cs.c_minus).add(pp.scale(cs.c_plus));
        std::size_t r = sum.rank();
        entry.determinate = true;
        entry.dim = (ah.dim() - r) + (bminus.dim() - r);
        rep.entries.push_back(entry);
    }
    return rep;
}

} // namespace

ZeroSurgeryReport zero_surgery_dims(const KnotComplexData& k) {
    return zero_surgery_dims(k, kUnitScalars);
}

ZeroSurgeryReport zero_surgery_dims(const KnotComplexData& k, const ScalarAssignment& scalars) {
    require_meridian_surgery(k, "0-surgery");
    require_valid(k);
    long long t2 = tau2(k);
    long long n2v = nu2(k);
    if (t2 > 0) {
        // Dimensions are mirror-symmetric with the grading negated, and the
        // mirror has tau < 0, where every summand is pinned.
        KnotComplexData km = mirror(k);
        ZeroSurgeryReport rep = zero_surgery_nonpositive_tau(km, tau2(km), nu2(km), scalars);
        for (auto& e : rep.entries) e.s = -e.s;
        std::sort(rep.entries.begin(), rep.entries.end(),
                  [](const ZeroSurgeryEntry& a, const ZeroSurgeryEntry& b) { return a.s < b.s; });
        rep.tau2 = t2;
        rep.nu2 = n2v;
        return rep;
    }
    return zero_surgery_nonpositive_tau(k, t2, n2v, scalars);
}

long long nu_sharp(const KnotComplexData& k) {
    long long t2 = tau2(k);
    if (t2 == 0)
        fail(ErrorKind::TauZero, "nu-sharp is determined by this data only when tau != 0");
    return nu2(k) - 1;
}

std::size_t r0(const KnotComplexData& k) {
    long long t2 = tau2(k);
    if (t2 == 0) fail(ErrorKind::TauZero, "r0 is determined by this data only when tau != 0");
    return integer_surgery_dim(k, nu2(k) - 1);
}

std::size_t rational_surgery_dim(const KnotComplexData& k, long long p, long long q_slope) {
    if (q_slope < 1) fail(ErrorKind::Precondition, "slope denominator must be >= 1");
    if (std::gcd(p, q_slope) != 1)
        fail(ErrorKind::Precondition, "slope fraction must be reduced");
    long long ns = nu_sharp(k);
    std::size_t r = r0(k);
    return static_cast<std::size_t>(q_slope) * r +
           static_cast<std::size_t>(std::llabs(p - q_slope * ns));
}

std::size_t dual_knot_dim(const KnotComplexData& k, long long m, long long j2) {
    require_valid(k);
    auto [hm2, lm2] = grading_bounds2(k, m);
    auto [hmu2, lmu2] = grading_bounds_mu2(k);
    long long jp2 = j2 - hm2 + hmu2;
    long long jm2 = j2 - lm2 + lmu2;

    HomologyBasis below = homology_basis(build_B(k, HalfKind::BminusLeq, jm2).complex);
    HomologyBasis above = homology_basis(build_B(k, HalfKind::BplusGeq, jp2).complex);
    HomologyBasis target = homology_basis(build_B(k, HalfKind::Bminus, jm2).complex);
    HomologyBasis plus_full = homology_basis(build_B(k, HalfKind::Bplus, jp2).complex);

    auto inclusion = [](const HomologyBasis& sub, const HomologyBasis& whole) {
        std::vector<MapEntry> entries;
        for (const auto& g : sub.complex.space.generators())
            entries.push_back({g.label, g.label, Rational(1)});
        return induced_map(sub, whole,
                           GradedMap(sub.complex.space, whole.complex.space, entries))
            .matrix;
    };
    QMatrix col_minus = inclusion(below, target);
    QMatrix col_plus_raw = inclusion(above, plus_full);
    // Identify H(B+(j+)) with H(B-(j-)) basis-to-basis when the dimensions
    // agree (always the case for q = 1 data); otherwise the plus column
    // contributes nothing.
    QMatrix col_plus(target.dim(), above.dim());
    if (plus_full.dim() == target.dim()) col_plus = col_plus_raw;

    QMatrix total = col_minus.hcat(col_plus);
    std::size_t r = total.rank();
    return (below.dim() + above.dim() - r) + (target.dim() - r);
}

DualKnotTable dual_knot_table(const KnotComplexData& k, long long m) {
    DualKnotTable t;
    t.m = m;
    auto [hm2, lm2] = grading_bounds2(k, m);
    t.jmax2 = hm2;
    for (long long j2 = lm2; j2 <= hm2; j2 += 2) {
        std::size_t d = dual_knot_dim(k, m, j2);
        t.dims.emplace_back(j2, d);
        t.total += d;
    }
    return t;
}

std::size_t closed_form_case_dims(const KnotComplexData& k, long long m) {
    require_meridian_surgery(k, "closed-form surgery dimensions");
    if (m == 0) fail(ErrorKind::Precondition, "closed-form dimensions need m != 0");
    long long t2 = tau2(k);
    if (t2 == 0)
        fail(ErrorKind::TauZero, "closed-form dimensions are stated only for tau != 0");
    if (t2 > 0) return closed_form_case_dims(mirror(k), -m);

    const long long tau = t2 / 2;  // negative
    const long long g = k.genus;
    long long sigma = 0;
    for (long long i = -(g - 1); i <= g - 1; ++i)
        sigma += static_cast<long long>(homology_basis(build_A(k, 2 * i).complex).dim());
    if (g == 0) sigma = 0;

    const bool nu_above = (nu2(k) == t2 + 2);
    long long dim = 0;
    if (m > 0) {
        if (nu_above) {
            dim = (m <= -2 * tau - 1) ? sigma - 2 * g - 4 * tau - 1 - m : sigma - 2 * g + 1 + m;
        } else {
            dim = (m <= -2 * tau + 1) ? sigma - 2 * g - 4 * tau + 3 - m : sigma - 2 * g + 1 + m;
        }
    } else {
        dim = nu_above ? sigma - 2 * g - 4 * tau - 1 - m : sigma - 2 * g - 4 * tau + 3 - m;
    }
    if (dim < 0)
        fail(ErrorKind::Internal, "closed-form dimension came out negative; inconsistent input");
    return static_cast<std::size_t>(dim);
}

LargeSurgeryTable large_surgery_table(const KnotComplexData& k) {
    require_meridian_surgery(k, "large-surgery table");
    require_valid(k);
    LargeSurgeryTable t;
    for (long long s = -k.genus; s <= k.genus; ++s) {
        std::size_t d = homology_basis(build_A(k, 2 * s).complex).dim();
        t.dims.emplace_back(s, d);
        t.sum += d;
    }
    return t;
}

InvariantReport invariants(const KnotComplexData& k) {
    InvariantReport rep;
    rep.name = k.name;
    rep.tau2 = tau2(k);
    rep.nu2 = nu2(k);
    if (rep.tau2 != 0) {
        rep.nu_sharp = nu_sharp(k);
        rep.r0 = r0(k);
    }
    return rep;
}

} // namespace instcone
