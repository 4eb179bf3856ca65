#include <doctest.h>

#include <cstdlib>
#include <map>
#include <memory>

#include "errors.hpp"
#include "rng.hpp"
#include "surgery.hpp"

using namespace instcone;

TEST_CASE("unknot surgeries have dimension |n|") {
    KnotComplexData u = catalog_knot("unknot");
    for (long long n = -8; n <= 8; ++n) {
        if (n == 0) continue;
        CAPTURE(n);
        CHECK(integer_surgery_dim(u, n) == static_cast<std::size_t>(std::llabs(n)));
    }
}

TEST_CASE("trefoil-neg surgery dimensions at the worked slopes") {
    KnotComplexData k = catalog_knot("trefoil-neg");
    CHECK(integer_surgery_dim(k, -1) == 1);
    CHECK(integer_surgery_dim(k, -2) == 2);
    CHECK(integer_surgery_dim(k, 1) == 3);
}

TEST_CASE("slope zero is rejected by the integer path") {
    CHECK_THROWS_AS(integer_surgery_dim(catalog_knot("unknot"), 0), Error);
}

TEST_CASE("zero surgery of trefoil-neg is 2 at grading 0") {
    ZeroSurgeryReport rep = zero_surgery_dims(catalog_knot("trefoil-neg"));
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.entries[0].s == 0);
    CHECK(rep.entries[0].determinate);
    CHECK(rep.entries[0].dim == 2);
    CHECK_FALSE(rep.has_indeterminate());
}

TEST_CASE("zero surgery of trefoil-pos matches through the internal mirror") {
    ZeroSurgeryReport rep = zero_surgery_dims(catalog_knot("trefoil-pos"));
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.entries[0].determinate);
    CHECK(rep.entries[0].dim == 2);
}

TEST_CASE("zero surgery guards the scalar-ambiguous grading") {
    ZeroSurgeryReport box = zero_surgery_dims(catalog_knot("box"));
    REQUIRE(box.entries.size() == 1);
    CHECK(box.entries[0].s == 0);
    CHECK_FALSE(box.entries[0].determinate);
    CHECK(box.has_indeterminate());

    ZeroSurgeryReport u = zero_surgery_dims(catalog_knot("unknot"));
    REQUIRE(u.entries.size() == 1);
    CHECK_FALSE(u.entries[0].determinate);
}

TEST_CASE("nu_sharp and r0 for the trefoils, guarded for tau = 0") {
    KnotComplexData neg = catalog_knot("trefoil-neg");
    CHECK(nu_sharp(neg) == -1);
    CHECK(r0(neg) == 1);
    KnotComplexData pos = catalog_knot("trefoil-pos");
    CHECK(nu_sharp(pos) == 1);
    CHECK(r0(pos) == 1);
    try {
        nu_sharp(catalog_knot("unknot"));
        FAIL("expected TauZero");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TauZero);
    }
}

TEST_CASE("rational surgery formula evaluates and cross-checks") {
    KnotComplexData k = catalog_knot("trefoil-neg");
    CHECK(rational_surgery_dim(k, 1, 1) == 3);
    CHECK(rational_surgery_dim(k, 1, 2) == 5);
    CHECK(rational_surgery_dim(k, -1, 1) == 1);
    CHECK(rational_surgery_dim(k, 0, 1) == 2);  // r0 + |nu_sharp|
    CHECK_THROWS_AS(rational_surgery_dim(k, 2, 4), Error);
    for (long long n = -8; n <= 8; ++n) {
        if (n == 0) continue;
        CHECK(rational_surgery_dim(k, n, 1) == integer_surgery_dim(k, n));
    }
}

TEST_CASE("affine surgery law on the trefoils") {
    for (const char* name : {"trefoil-neg", "trefoil-pos"}) {
        KnotComplexData k = catalog_knot(name);
        long long ns = nu_sharp(k);
        std::size_t base = r0(k);
        for (long long n = -8; n <= 8; ++n) {
            if (n == 0) continue;
            CAPTURE(name);
            CAPTURE(n);
            CHECK(integer_surgery_dim(k, n) ==
                  base + static_cast<std::size_t>(std::llabs(n - ns)));
        }
    }
}

TEST_CASE("dual-knot dimensions for the unknot at m = 5") {
    KnotComplexData u = catalog_knot("unknot");
    std::size_t total = 0;
    for (long long j2 = -4; j2 <= 4; j2 += 2) {
        CHECK(dual_knot_dim(u, 5, j2) == 1);
        total += dual_knot_dim(u, 5, j2);
    }
    CHECK(total == 5);
    CHECK(dual_knot_dim(u, 5, 6) == 0);
    CHECK(dual_knot_dim(u, 5, -6) == 0);
    DualKnotTable table = dual_knot_table(u, 5);
    CHECK(table.total == 5);
    CHECK(table.dims.size() == 5);
}

TEST_CASE("dual-knot middle band has dimension one") {
    KnotComplexData k = catalog_knot("trefoil-neg");
    CHECK(dual_knot_dim(k, 7, 0) == 1);
    for (const auto& knot : catalog()) {
        long long m = 2 * knot.genus + 1;
        long long band2 = m - 1 - 2 * knot.genus;
        for (long long j2 = -band2; j2 <= band2; j2 += 2) {
            CAPTURE(knot.name);
            CAPTURE(j2);
            CHECK(dual_knot_dim(knot, m, j2) == 1);
        }
    }
}

TEST_CASE("dual-knot formula agrees with the bounded subcomplexes") {
    for (const auto& k : catalog()) {
        auto [hmu2, lmu2] = grading_bounds_mu2(k);
        for (long long n = 1; n <= 3; ++n) {
            auto [hn2, ln2] = grading_bounds2(k, n);
            for (long long i2 = lmu2 - 2; i2 < lmu2 + 2 * n; i2 += 2) {
                CAPTURE(k.name);
                CAPTURE(n);
                CAPTURE(i2);
                std::size_t lhs = dual_knot_dim(k, n, i2 + ln2 - lmu2);
                std::size_t rhs =
                    homology_dims(build_B(k, HalfKind::BminusLeq, i2).complex).total;
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("closed-form case dimensions match the cone") {
    KnotComplexData k = catalog_knot("trefoil-neg");
    CHECK(closed_form_case_dims(k, 1) == 1);
    CHECK(closed_form_case_dims(k, 3) == 3);
    for (const char* name : {"trefoil-neg", "trefoil-pos"}) {
        KnotComplexData knot = catalog_knot(name);
        for (long long m = -8; m <= 8; ++m) {
            if (m == 0) continue;
            CAPTURE(name);
            CAPTURE(m);
            CHECK(closed_form_case_dims(knot, m) == integer_surgery_dim(knot, -m));
        }
    }
    CHECK_THROWS_AS(closed_form_case_dims(catalog_knot("unknot"), 1), Error);
}

TEST_CASE("large-surgery table of the catalog models") {
    LargeSurgeryTable u = large_surgery_table(catalog_knot("unknot"));
    REQUIRE(u.dims.size() == 1);
    CHECK(u.dims[0] == std::pair<long long, std::size_t>{0, 1});

    LargeSurgeryTable t = large_surgery_table(catalog_knot("trefoil-neg"));
    REQUIRE(t.dims.size() == 3);
    for (const auto& [s, dim] : t.dims) CHECK(dim == 1);

    LargeSurgeryTable b = large_surgery_table(catalog_knot("box"));
    REQUIRE(b.dims.size() == 3);
    for (const auto& [s, dim] : b.dims) CHECK(dim >= 1);
    CHECK(b.dims[1] == std::pair<long long, std::size_t>{0, 1});
}

TEST_CASE("surgery dimensions are stable under window enlargement") {
    for (const auto& k : catalog()) {
        for (long long n : {-5LL, -1LL, 2LL}) {
            std::size_t base = integer_surgery_dim(k, n);
            for (long long extra : {3LL, 5LL}) {
                CAPTURE(k.name);
                CAPTURE(n);
                CHECK(integer_surgery_dim(k, n, [](long long) { return BlockScalars{}; },
                                          extra) == base);
            }
        }
    }
}

TEST_CASE("surgery dimensions are invariant under block rescaling") {
    Rng rng(404);
    for (const auto& k : catalog()) {
        for (long long n : {-3LL, -1LL, 1LL, 4LL}) {
            std::size_t base = integer_surgery_dim(k, n);
            for (int trial = 0; trial < 5; ++trial) {
                auto scal = std::make_shared<std::map<long long, BlockScalars>>();
                std::uint64_t seed = rng.next();
                auto gen = std::make_shared<Rng>(seed);
                ScalarAssignment assign = [scal, gen](long long s) {
                    auto it = scal->find(s);
                    if (it == scal->end())
                        it = scal->emplace(s, BlockScalars{gen->nonzero_rational(),
                                                           gen->nonzero_rational()})
                                 .first;
                    return it->second;
                };
                CAPTURE(k.name);
                CAPTURE(n);
                CAPTURE(seed);
                CHECK(integer_surgery_dim(k, n, assign) == base);
            }
        }
    }
}

TEST_CASE("mirror duality of surgery dimensions") {
    for (const auto& k : catalog()) {
        KnotComplexData m = mirror(k);
        for (long long n = -4; n <= 4; ++n) {
            if (n == 0) continue;
            CAPTURE(k.name);
            CAPTURE(n);
            CHECK(integer_surgery_dim(k, n) == integer_surgery_dim(m, -n));
        }
    }
}

TEST_CASE("zero-surgery gradings are symmetric where determinate") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        KnotComplexData k = random_knot(seed);
        ZeroSurgeryReport rep = zero_surgery_dims(k);
        std::map<long long, ZeroSurgeryEntry> by_s;
        for (const auto& e : rep.entries) by_s[e.s] = e;
        for (const auto& [s, e] : by_s) {
            auto other = by_s.find(-s);
            if (other == by_s.end()) continue;
            if (e.determinate && other->second.determinate) {
                CAPTURE(seed);
                CAPTURE(s);
                CHECK(e.dim == other->second.dim);
            }
        }
    }
}

TEST_CASE("invariant report bundles the four numbers") {
    InvariantReport rep = invariants(catalog_knot("trefoil-neg"));
    CHECK(rep.tau2 == -2);
    CHECK(rep.nu2 == 0);
    REQUIRE(rep.nu_sharp.has_value());
    CHECK(*rep.nu_sharp == -1);
    REQUIRE(rep.r0.has_value());
    CHECK(*rep.r0 == 1);

    InvariantReport box = invariants(catalog_knot("box"));
    CHECK(box.tau2 == 0);
    CHECK(box.nu2 == 2);
    CHECK_FALSE(box.nu_sharp.has_value());
    CHECK_FALSE(box.r0.has_value());
}
