#include <doctest.h>

#include "bent.hpp"
#include "errors.hpp"

using namespace instcone;

TEST_CASE("bent complex of the unknot is one generator with zero differential") {
    KnotComplexData u = catalog_knot("unknot");
    for (long long s2 : {-4LL, 0LL, 6LL}) {
        BentComplex a = build_A(u, s2);
        CHECK(a.complex.space.size() == 1);
        CHECK(a.complex.differential.is_zero());
        CHECK(homology_dims(a.complex).total == 1);
    }
}

TEST_CASE("bent differential of trefoil-neg at s = 0 sends x2 to x1 + x3") {
    KnotComplexData k = catalog_knot("trefoil-neg");
    BentComplex a = build_A(k, 0);
    QMatrix d = a.complex.differential.to_matrix();
    std::size_t ix1 = a.complex.space.index_of("x1");
    std::size_t ix2 = a.complex.space.index_of("x2");
    std::size_t ix3 = a.complex.space.index_of("x3");
    CHECK(d.at(ix1, ix2) == Rational(1));
    CHECK(d.at(ix3, ix2) == Rational(1));
    CHECK(homology_dims(a.complex).total == 1);
}

TEST_CASE("bent complex of box at s = 0 has one class, led by u") {
    KnotComplexData k = catalog_knot("box");
    HomologyBasis hb = homology_basis(build_A(k, 0).complex);
    REQUIRE(hb.dim() == 1);
    CHECK(build_A(k, 0).complex.space.generator(hb.class_pivots[0]).label == "u");
}

TEST_CASE("half complexes restrict gradings and differentials") {
    KnotComplexData u = catalog_knot("unknot");
    CHECK(build_B(u, HalfKind::BminusLeq, -2).complex.space.size() == 0);
    CHECK(homology_dims(build_B(u, HalfKind::BminusLeq, -2).complex).total == 0);

    KnotComplexData k = catalog_knot("trefoil-neg");
    for (long long s2 : {-2LL, 0LL, 2LL}) {
        HomologyDims dims = homology_dims(build_B(k, HalfKind::Bplus, s2).complex);
        CHECK(dims.total == 1);
        CHECK(dims.by_grading.at({-2, 0}) == 1);
    }
    // Gradings {0, 2} with the raising arrow kill each other.
    CHECK(homology_dims(build_B(k, HalfKind::BplusGeq, 0).complex).total == 0);
}

TEST_CASE("beyond the grading range the bent complex is a half complex") {
    KnotComplexData k = catalog_knot("trefoil-neg");
    long long hi = grading_bounds_mu2(k).first;
    BentComplex a_high = build_A(k, hi + 2);
    HalfComplex b_high = build_B(k, HalfKind::Bminus, hi + 2);
    CHECK(a_high.complex.space == b_high.complex.space);
    CHECK(a_high.complex.differential == b_high.complex.differential);
    BentComplex a_low = build_A(k, -hi - 2);
    HalfComplex b_low = build_B(k, HalfKind::Bplus, -hi - 2);
    CHECK(a_low.complex.differential == b_low.complex.differential);
}

TEST_CASE("projection maps on homology match the worked examples") {
    KnotComplexData u = catalog_knot("unknot");
    CHECK(pi_map(u, Sign::Plus, 0).rank() == 1);

    KnotComplexData k = catalog_knot("trefoil-neg");
    CHECK(pi_map(k, Sign::Plus, 0).is_zero());
    CHECK(pi_map(k, Sign::Minus, 2).rank() == 1);
    CHECK(pi_map(k, Sign::Plus, -2).rank() == 1);
    CHECK(pi_map(k, Sign::Minus, 0).is_zero());
}

TEST_CASE("projections factor through the bounded inclusions") {
    for (const auto& k : catalog()) {
        CAPTURE(k.name);
        for (long long s2 = -2 * k.genus - 2; s2 <= 2 * k.genus + 2; s2 += 2) {
            for (Sign sign : {Sign::Plus, Sign::Minus}) {
                HomologyMap whole = pi_map(k, sign, s2);
                HomologyMap prime = pi_prime_map(k, sign, s2);
                HomologyMap incl = inclusion_map(
                    k, sign == Sign::Plus ? HalfKind::BplusGeq : HalfKind::BminusLeq, s2);
                CHECK(incl.matrix.multiply(prime.matrix) == whole.matrix);
            }
        }
    }
}

TEST_CASE("tau of the catalog models") {
    CHECK(tau2(catalog_knot("unknot")) == 0);
    CHECK(tau2(catalog_knot("trefoil-neg")) == -2);
    CHECK(tau2(catalog_knot("trefoil-pos")) == 2);
    CHECK(tau2(catalog_knot("box")) == 0);
}

TEST_CASE("nu of the catalog models") {
    CHECK(nu2(catalog_knot("unknot")) == 2);       // nu = 1
    CHECK(nu2(catalog_knot("trefoil-neg")) == 0);  // nu = 0
    CHECK(nu2(catalog_knot("trefoil-pos")) == 2);  // nu = 1
    CHECK(nu2(catalog_knot("box")) == 2);          // nu = 1
}

TEST_CASE("mirror negates tau and reverse preserves it") {
    for (const auto& k : catalog()) {
        CAPTURE(k.name);
        CHECK(tau2(mirror(k)) == -tau2(k));
        CHECK(tau2(reverse(k)) == tau2(k));
    }
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        KnotComplexData k = random_knot(seed);
        CAPTURE(seed);
        CHECK(tau2(mirror(k)) == -tau2(k));
        CHECK(tau2(reverse(k)) == tau2(k));
    }
}

TEST_CASE("valid data with skewed thresholds trips the convention check") {
    // d_plus jumps two levels and d_minus one, placing the two surviving
    // classes asymmetrically; the data passes every validation invariant but
    // cannot come from consistent knot data.
    KnotComplexData k = knot_from_json(
        R"({"name": "skew", "genus": 1,
            "generators": [{"id": "a", "alex2": -2, "z2": 1},
                            {"id": "b", "alex2": 0, "z2": 0},
                            {"id": "c", "alex2": 2, "z2": 0}],
            "d_plus": [{"from": "a", "to": "c", "coeff": "1"}],
            "d_minus": [{"from": "b", "to": "a", "coeff": "1"}]})");
    try {
        tau2(k);
        FAIL("expected ConventionMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ConventionMismatch);
    }
}

TEST_CASE("tau requires q = 1 data") {
    KnotComplexData k;
    k.name = "framed";
    k.genus = 1;
    k.q = 2;
    k.space = GradedSpace({{"u", {1, 0}}});
    k.d_plus = GradedMap::zero(k.space, k.space);
    k.d_minus = GradedMap::zero(k.space, k.space);
    REQUIRE(validate(k).ok());
    CHECK_THROWS_AS(tau2(k), Error);
}

TEST_CASE("inclusion thresholds are monotone") {
    for (const auto& k : catalog()) {
        auto [hi, lo] = grading_bounds_mu2(k);
        HomologyBasis full = homology_basis(build_B(k, HalfKind::Bminus, 0).complex);
        std::size_t prev = 0;
        for (long long i2 = lo - 2; i2 <= hi; i2 += 2) {
            HalfComplex below = build_B(k, HalfKind::BminusLeq, i2);
            std::vector<MapEntry> entries;
            for (const auto& g : below.complex.space.generators())
                entries.push_back({g.label, g.label, Rational(1)});
            std::size_t rank =
                induced_map(homology_basis(below.complex), full,
                            GradedMap(below.complex.space, full.complex.space, entries))
                    .rank();
            CHECK(rank >= prev);
            CHECK(rank <= 1);
            prev = rank;
        }
        CHECK(prev == 1);
    }
}
