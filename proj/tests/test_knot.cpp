#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "errors.hpp"
#include "knot.hpp"

using namespace instcone;

namespace {

const char* kUnknotJson = R"({
  "name": "unknot",
  "genus": 0,
  "generators": [{"id": "u", "alex2": 0, "z2": 0}]
})";

std::string error_message(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("catalog models all validate") {
    for (const auto& k : catalog()) {
        CAPTURE(k.name);
        CHECK(validate(k).ok());
    }
}

TEST_CASE("unknot loads from JSON with default q and q0") {
    KnotComplexData k = knot_from_json(kUnknotJson);
    CHECK(k.q == 1);
    CHECK(k.q0 == 0);
    CHECK(k.space.size() == 1);
    CHECK(validate(k).ok());
}

TEST_CASE("load then save round-trips") {
    for (const auto& k : catalog()) {
        std::string path = std::string("roundtrip_") + k.name + ".json";
        save_knot(k, path);
        KnotComplexData back = load_knot(path);
        CHECK(back == k);
        std::remove(path.c_str());
    }
}

TEST_CASE("schema errors carry a JSON pointer") {
    std::string msg = error_message([] {
        knot_from_json(R"({"name": "x", "genus": 0, "generators": [{"id": "u", "z2": 0}]})");
    });
    CHECK(msg.find("/generators/0") != std::string::npos);

    msg = error_message([] {
        knot_from_json(
            R"({"name": "x", "genus": 0,
                "generators": [{"id": "u", "alex2": 0, "z2": 0}],
                "d_plus": [{"from": "u", "to": "u", "coeff": "0.5"}]})");
    });
    CHECK(msg.find("/d_plus/0/coeff") != std::string::npos);
}

TEST_CASE("malformed JSON is a parse error") {
    try {
        knot_from_json("{not json");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Parse);
    }
}

TEST_CASE("a d_plus entry that lowers the grading is named in the report") {
    KnotComplexData k = knot_from_json(
        R"({"name": "bad", "genus": 1,
            "generators": [{"id": "a", "alex2": 2, "z2": 0}, {"id": "b", "alex2": 0, "z2": 1}],
            "d_plus": [{"from": "a", "to": "b", "coeff": "1"}]})",
        /*validated=*/false);
    ValidationReport rep = validate(k);
    CHECK_FALSE(rep.ok());
    bool found = false;
    for (const auto& item : rep.items)
        if (!item.pass && item.offenders.find("a->b") != std::string::npos) found = true;
    CHECK(found);

    try {
        knot_from_json(
            R"({"name": "bad", "genus": 1,
                "generators": [{"id": "a", "alex2": 2, "z2": 0}, {"id": "b", "alex2": 0, "z2": 1}],
                "d_plus": [{"from": "a", "to": "b", "coeff": "1"}]})");
        FAIL("expected a validation error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Validation);
    }
}

TEST_CASE("two-dimensional d_plus homology fails the unit invariant") {
    KnotComplexData k = knot_from_json(
        R"({"name": "wide", "genus": 1,
            "generators": [{"id": "a", "alex2": 2, "z2": 0}, {"id": "b", "alex2": -2, "z2": 0}]})",
        /*validated=*/false);
    ValidationReport rep = validate(k);
    bool failed_unit = false;
    for (const auto& item : rep.items)
        if (item.invariant == "unit d_plus-homology" && !item.pass) failed_unit = true;
    CHECK(failed_unit);
}

TEST_CASE("every violated invariant is reported, not just the first") {
    KnotComplexData k = knot_from_json(
        R"({"name": "doubly-bad", "genus": 0,
            "generators": [{"id": "a", "alex2": 4, "z2": 0}, {"id": "b", "alex2": 6, "z2": 0}],
            "d_plus": [{"from": "a", "to": "b", "coeff": "1"}]})",
        /*validated=*/false);
    ValidationReport rep = validate(k);
    std::size_t failures = 0;
    for (const auto& item : rep.items)
        if (!item.pass) ++failures;
    CHECK(failures >= 2);  // bounds violation, h flip, unit homologies
}

TEST_CASE("mirror of the unknot is the unknot") {
    KnotComplexData u = catalog_knot("unknot");
    KnotComplexData m = mirror(u);
    CHECK(m.space == u.space);
    CHECK(m.d_plus.entries().empty());
    CHECK(m.d_minus.entries().empty());
}

TEST_CASE("mirror and reverse are involutions preserving validity") {
    for (const auto& k : catalog()) {
        CAPTURE(k.name);
        KnotComplexData m = mirror(k);
        CHECK(validate(m).ok());
        KnotComplexData mm = mirror(m);
        CHECK(mm.space == k.space);
        CHECK(mm.d_plus.entries() == k.d_plus.entries());
        CHECK(mm.d_minus.entries() == k.d_minus.entries());

        KnotComplexData r = reverse(k);
        CHECK(validate(r).ok());
        KnotComplexData rr = reverse(r);
        CHECK(rr.space == k.space);
        CHECK(rr.d_plus.entries() == k.d_plus.entries());
        CHECK(rr.d_minus.entries() == k.d_minus.entries());
    }
}

TEST_CASE("grading bound formulas") {
    KnotComplexData k;
    k.q = 1;
    k.q0 = 0;
    k.genus = 2;
    CHECK(grading_bounds2(k, 1).first == 4);  // (|0-1|-1)/2 + 2, doubled

    k.genus = 0;
    for (long long m = 1; m <= 6; ++m) CHECK(grading_bounds2(k, m).first == m - 1);

    k.q = 2;
    k.genus = 1;
    CHECK(grading_bounds_mu2(k).first == 3);  // 3/2 doubled
}

TEST_CASE("random knots validate across seeds") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        KnotComplexData k = random_knot(seed);
        CAPTURE(seed);
        CHECK(validate(k).ok());
        CHECK(k.space.size() <= 12);
    }
}

TEST_CASE("open_knot resolves catalog and random specs") {
    CHECK(open_knot("catalog:box").name == "box");
    CHECK(open_knot("catalog:random-5") == random_knot(5));
    CHECK_THROWS_AS(open_knot("catalog:nonesuch"), Error);
    CHECK_THROWS_AS(open_knot("no/such/file.json"), Error);
}
