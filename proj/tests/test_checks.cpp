#include <doctest.h>

#include "checks.hpp"
#include "errors.hpp"

using namespace instcone;

TEST_CASE("projectivity check passes across seeds") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        CheckResult r = check_projectivity(seed);
        CAPTURE(seed);
        CAPTURE(r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("replacing-maps check passes across seeds") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        CheckResult r = check_replacing_maps(seed);
        CAPTURE(seed);
        CAPTURE(r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("check results are deterministic in the seed") {
    CheckResult a = check_projectivity(42);
    CheckResult b = check_projectivity(42);
    CHECK(a.instance == b.instance);
    CHECK(a.pass == b.pass);
    CheckResult c = check_replacing_maps(42);
    CheckResult d = check_replacing_maps(42);
    CHECK(c.instance == d.instance);
}

TEST_CASE("the suite passes on every catalog model") {
    for (const auto& k : catalog()) {
        auto results = check_suite(k, 7);
        for (const auto& r : results) {
            CAPTURE(k.name);
            CAPTURE(r.name);
            CAPTURE(r.detail);
            CHECK(r.pass);
        }
        CHECK(std::is_sorted(results.begin(), results.end(),
                             [](const CheckResult& a, const CheckResult& b) {
                                 return a.name < b.name;
                             }));
    }
}

TEST_CASE("the suite notes skipped items on tau = 0 models") {
    auto results = check_suite(catalog_knot("unknot"), 7);
    bool affine_skipped = false;
    bool zero_noted = false;
    for (const auto& r : results) {
        if (r.name == "affine-law" && r.pass && r.detail.find("skipped") != std::string::npos)
            affine_skipped = true;
        if (r.name == "zero-surgery-symmetry" &&
            r.detail.find("indeterminate") != std::string::npos)
            zero_noted = true;
    }
    CHECK(affine_skipped);
    CHECK(zero_noted);
}

TEST_CASE("the suite refuses invalid data") {
    KnotComplexData bad = knot_from_json(
        R"({"name": "bad", "genus": 1,
            "generators": [{"id": "a", "alex2": 2, "z2": 0}, {"id": "b", "alex2": 0, "z2": 1}],
            "d_plus": [{"from": "a", "to": "b", "coeff": "1"}]})",
        /*validated=*/false);
    try {
        check_suite(bad, 7);
        FAIL("expected ValidationError");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Validation);
    }
}

TEST_CASE("the suite passes on random models") {
    for (std::uint64_t seed : {3ULL, 8ULL, 21ULL}) {
        KnotComplexData k = random_knot(seed);
        for (const auto& r : check_suite(k, seed)) {
            CAPTURE(seed);
            CAPTURE(r.name);
            CAPTURE(r.detail);
            CHECK(r.pass);
        }
    }
}
