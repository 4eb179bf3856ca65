#include "bent.hpp"

#include <algorithm>
#include <functional>

#include "errors.hpp"

namespace instcone {

namespace {

long long mod2q(long long a, long long q) {
    long long m = 2 * q;
    long long r = a % m;
    return r < 0 ? r + m : r;
}

// Generators of the congruence class alex2 == s2 (mod 2q), in input order.
std::vector<std::size_t> class_indices(const KnotComplexData& k, long long s2) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < k.space.size(); ++i)
        if (mod2q(k.space.grading(i).alex2, k.q) == mod2q(s2, k.q)) idx.push_back(i);
    return idx;
}

GradedSpace subspace(const KnotComplexData& k, const std::vector<std::size_t>& idx) {
    std::vector<Generator> gens;
    gens.reserve(idx.size());
    for (std::size_t i : idx) gens.push_back(k.space.generator(i));
    return GradedSpace(std::move(gens));
}

// Restricts entries of d to the generators of `space`, keeping only entries
// whose source satisfies `keep_source`. Entries leaving the subspace from a
// kept source would make the restriction ill-defined; the grading direction
// of d_plus / d_minus rules that out for every subset used here.
GradedMap restrict_map(const GradedMap& d, const GradedSpace& space,
                       const std::function<bool(const Grading&)>& keep_source) {
    std::vector<MapEntry> entries;
    for (const auto& e : d.entries()) {
        auto from = space.find(e.from);
        if (!from || !keep_source(space.grading(*from))) continue;
        auto to = space.find(e.to);
        if (!to)
            fail(ErrorKind::Internal,
                 "restricted differential escapes the subcomplex at " + e.from + " -> " + e.to);
        entries.push_back(e);
    }
    return GradedMap(space, space, std::move(entries));
}

} // namespace

BentComplex build_A(const KnotComplexData& k, long long s2) {
    GradedSpace space = subspace(k, class_indices(k, s2));
    std::vector<MapEntry> entries;
    for (const auto& e : k.d_plus.entries()) {
        auto from = space.find(e.from);
        if (from && space.grading(*from).alex2 >= s2) entries.push_back(e);
    }
    for (const auto& e : k.d_minus.entries()) {
        auto from = space.find(e.from);
        if (from && space.grading(*from).alex2 <= s2) entries.push_back(e);
    }
    BentComplex a;
    a.s2 = s2;
    a.complex = make_complex(space, GradedMap(space, space, std::move(entries)));
    return a;
}

HalfComplex build_B(const KnotComplexData& k, HalfKind kind, long long s2) {
    std::vector<std::size_t> idx = class_indices(k, s2);
    if (kind == HalfKind::BplusGeq)
        std::erase_if(idx, [&](std::size_t i) { return k.space.grading(i).alex2 < s2; });
    if (kind == HalfKind::BminusLeq)
        std::erase_if(idx, [&](std::size_t i) { return k.space.grading(i).alex2 > s2; });
    GradedSpace space = subspace(k, idx);
    const GradedMap& d =
        (kind == HalfKind::Bplus || kind == HalfKind::BplusGeq) ? k.d_plus : k.d_minus;
    HalfComplex b;
    b.kind = kind;
    b.s2 = s2;
    b.complex = make_complex(space, restrict_map(d, space, [](const Grading&) { return true; }));
    return b;
}

namespace {

// Chain-level projection A(s) -> B+-(s): identity on the kept gradings,
// zero on the rest.
GradedMap projection_chain_map(const BentComplex& a, const HalfComplex& b, Sign sign) {
    std::vector<MapEntry> entries;
    for (const auto& g : a.complex.space.generators()) {
        bool keep = sign == Sign::Plus ? g.grading.alex2 >= a.s2 : g.grading.alex2 <= a.s2;
        if (keep) entries.push_back({g.label, g.label, Rational(1)});
    }
    return GradedMap(a.complex.space, b.complex.space, std::move(entries));
}

} // namespace

HomologyMap pi_map(const KnotComplexData& k, Sign sign, long long s2) {
    BentComplex a = build_A(k, s2);
    HalfComplex b = build_B(k, sign == Sign::Plus ? HalfKind::Bplus : HalfKind::Bminus, s2);
    GradedMap proj = projection_chain_map(a, b, sign);
    return induced_map(homology_basis(a.complex), homology_basis(b.complex), proj);
}

HomologyMap pi_prime_map(const KnotComplexData& k, Sign sign, long long s2) {
    BentComplex a = build_A(k, s2);
    HalfComplex half =
        build_B(k, sign == Sign::Plus ? HalfKind::BplusGeq : HalfKind::BminusLeq, s2);
    std::vector<MapEntry> entries;
    for (const auto& g : half.complex.space.generators())
        entries.push_back({g.label, g.label, Rational(1)});
    GradedMap proj(a.complex.space, half.complex.space, std::move(entries));
    return induced_map(homology_basis(a.complex), homology_basis(half.complex), proj);
}

HomologyMap inclusion_map(const KnotComplexData& k, HalfKind kind, long long s2) {
    if (kind != HalfKind::BplusGeq && kind != HalfKind::BminusLeq)
        fail(ErrorKind::Internal, "inclusion_map expects a half-bounded complex");
    HalfComplex half = build_B(k, kind, s2);
    HalfComplex full =
        build_B(k, kind == HalfKind::BplusGeq ? HalfKind::Bplus : HalfKind::Bminus, s2);
    std::vector<MapEntry> entries;
    for (const auto& g : half.complex.space.generators())
        entries.push_back({g.label, g.label, Rational(1)});
    GradedMap incl(half.complex.space, full.complex.space, std::move(entries));
    return induced_map(homology_basis(half.complex), homology_basis(full.complex), incl);
}

namespace {

void require_meridian(const KnotComplexData& k, const char* what) {
    if (k.q != 1)
        fail(ErrorKind::Precondition,
             std::string(what) + " requires q = 1 data (got q = " + std::to_string(k.q) + ")");
}

} // namespace

long long tau2(const KnotComplexData& k) {
    require_meridian(k, "tau");
    require_valid(k);
    auto [hi, lo] = grading_bounds_mu2(k);

    // Threshold on the d_minus side: least i with a nonzero inclusion-induced
    // map into H(B-). The rank is monotone in i and reaches 1 at the top.
    long long minus_threshold = hi + 2;
    HomologyBasis bminus = homology_basis(build_B(k, HalfKind::Bminus, 0).complex);
    for (long long i = lo; i <= hi; i += 2) {
        HalfComplex below = build_B(k, HalfKind::BminusLeq, i);
        std::vector<MapEntry> entries;
        for (const auto& g : below.complex.space.generators())
            entries.push_back({g.label, g.label, Rational(1)});
        GradedMap incl(below.complex.space, bminus.complex.space, std::move(entries));
        HomologyMap m = induced_map(homology_basis(below.complex), bminus, incl);
        if (!m.is_zero()) {
            minus_threshold = i;
            break;
        }
    }
    if (minus_threshold > hi)
        fail(ErrorKind::ConventionMismatch,
             "inclusion into H(B-) never becomes nonzero; is dim H(d_minus) = 1?");

    long long plus_threshold = lo - 2;
    HomologyBasis bplus = homology_basis(build_B(k, HalfKind::Bplus, 0).complex);
    for (long long i = hi; i >= lo; i -= 2) {
        HalfComplex above = build_B(k, HalfKind::BplusGeq, i);
        std::vector<MapEntry> entries;
        for (const auto& g : above.complex.space.generators())
            entries.push_back({g.label, g.label, Rational(1)});
        GradedMap incl(above.complex.space, bplus.complex.space, std::move(entries));
        HomologyMap m = induced_map(homology_basis(above.complex), bplus, incl);
        if (!m.is_zero()) {
            plus_threshold = i;
            break;
        }
    }
    if (plus_threshold < lo)
        fail(ErrorKind::ConventionMismatch,
             "inclusion into H(B+) never becomes nonzero; is dim H(d_plus) = 1?");

    if (-minus_threshold != plus_threshold)
        fail(ErrorKind::ConventionMismatch,
             "tau thresholds disagree: -min over B- gives " + std::to_string(-minus_threshold) +
                 "/2 while max over B+ gives " + std::to_string(plus_threshold) +
                 "/2; input data is not consistent knot data");
    return plus_threshold;
}

long long nu2(const KnotComplexData& k) {
    long long t2 = tau2(k);
    bool at_tau = !pi_map(k, Sign::Plus, t2).is_zero();
    long long direct = at_tau ? t2 + 2 : t2;

    // Cross-check: 2 + the greatest s2 with pi+(s2) nonzero. Below the
    // grading range pi+ is an isomorphism, so the sweep terminates.
    auto [hi, lo] = grading_bounds_mu2(k);
    long long best = lo - 2;
    for (long long s2 = hi; s2 >= lo - 2; s2 -= 2) {
        if (!pi_map(k, Sign::Plus, s2).is_zero()) {
            best = s2;
            break;
        }
    }
    long long crossed = best + 2;
    if (crossed != direct)
        fail(ErrorKind::ConventionMismatch,
             "nu cross-check failed: direct rule gives " + std::to_string(direct) +
                 "/2, threshold rule gives " + std::to_string(crossed) + "/2");
    return direct;
}

} // namespace instcone
