#include <doctest.h>

#include "errors.hpp"
#include "homology.hpp"
#include "rng.hpp"

using namespace instcone;

namespace {

GradedSpace space_of(std::vector<Generator> gens) { return GradedSpace(std::move(gens)); }

Complex trivial(const GradedSpace& s) { return make_complex(s, GradedMap::zero(s, s)); }

} // namespace

TEST_CASE("trivial differential gives one class per generator") {
    GradedSpace s = space_of({{"a", {0, 0}}, {"b", {2, 1}}, {"c", {-4, 0}}});
    HomologyDims dims = homology_dims(trivial(s));
    CHECK(dims.total == 3);
    CHECK(dims.by_grading.at({0, 0}) == 1);
    CHECK(dims.by_grading.at({2, 1}) == 1);
    CHECK(dims.by_grading.at({-4, 0}) == 1);
}

TEST_CASE("an acyclic pair has no homology") {
    GradedSpace s = space_of({{"a", {0, 0}}, {"b", {2, 1}}});
    Complex c = make_complex(s, GradedMap(s, s, {{"a", "b", Rational(1)}}));
    CHECK(homology_dims(c).total == 0);
}

TEST_CASE("three-generator chain with one arrow") {
    // x2 -> x1 under the raising differential; the surviving class sits at
    // the bottom generator.
    GradedSpace s = space_of({{"x1", {2, 0}}, {"x2", {0, 1}}, {"x3", {-2, 0}}});
    Complex c = make_complex(s, GradedMap(s, s, {{"x2", "x1", Rational(1)}}));
    HomologyDims dims = homology_dims(c);
    CHECK(dims.total == 1);
    CHECK(dims.by_grading.at({-2, 0}) == 1);
}

TEST_CASE("non-squaring differential is rejected") {
    GradedSpace s = space_of({{"a", {0, 0}}, {"b", {2, 1}}, {"c", {4, 0}}});
    CHECK_THROWS_AS(
        make_complex(s, GradedMap(s, s, {{"a", "b", Rational(1)}, {"b", "c", Rational(1)}})),
        Error);
}

TEST_CASE("differential must flip the homological grading") {
    GradedSpace s = space_of({{"a", {0, 0}}, {"b", {2, 0}}});
    CHECK_THROWS_AS(make_complex(s, GradedMap(s, s, {{"a", "b", Rational(1)}})), Error);
}

TEST_CASE("cone of the zero map stacks both homologies") {
    GradedSpace sc = space_of({{"a", {0, 0}}, {"b", {2, 1}}});
    GradedSpace sd = space_of({{"p", {0, 0}}});
    Complex cone = mapping_cone(trivial(sc), trivial(sd), GradedMap::zero(sc, sd));
    CHECK(homology_dims(cone).total == 3);
}

TEST_CASE("cone of an isomorphism is acyclic") {
    GradedSpace s = space_of({{"a", {0, 0}}, {"b", {2, 1}}});
    Complex cone = mapping_cone(trivial(s), trivial(s), GradedMap::identity(s));
    CHECK(homology_dims(cone).total == 0);
}

TEST_CASE("cone of a rank-one map counts kernel plus cokernel") {
    GradedSpace sc = space_of({{"a", {0, 0}}, {"b", {0, 0}}});
    GradedSpace sd = space_of({{"p", {0, 0}}});
    GradedMap f(sc, sd, {{"a", "p", Rational(1)}, {"b", "p", Rational(2)}});
    CHECK(homology_dims(mapping_cone(trivial(sc), trivial(sd), f)).total == 1);
}

TEST_CASE("cone rejects non-chain maps") {
    GradedSpace sc = space_of({{"a", {0, 0}}, {"b", {2, 1}}});
    Complex c = make_complex(sc, GradedMap(sc, sc, {{"a", "b", Rational(1)}}));
    GradedSpace sd = space_of({{"p", {2, 1}}});
    // p is in the image parity but f kills the differential relation.
    GradedMap f(sc, sd, {{"b", "p", Rational(1)}});
    CHECK_THROWS_AS(mapping_cone(c, trivial(sd), f), Error);
}

TEST_CASE("cone homology satisfies the rank accounting of the exact sequence") {
    Rng rng(101);
    for (int trial = 0; trial < 25; ++trial) {
        // Trivial differentials: dim H(cone) must be ker + cok of f itself.
        std::size_t nc = static_cast<std::size_t>(rng.range(1, 5));
        std::size_t nd = static_cast<std::size_t>(rng.range(1, 5));
        std::vector<Generator> gc, gd;
        for (std::size_t i = 0; i < nc; ++i)
            gc.push_back({"c" + std::to_string(i), {rng.range(-2, 2), 0}});
        for (std::size_t i = 0; i < nd; ++i)
            gd.push_back({"d" + std::to_string(i), {rng.range(-2, 2), 0}});
        GradedSpace sc(gc), sd(gd);
        QMatrix fm(nd, nc);
        for (std::size_t r = 0; r < nd; ++r)
            for (std::size_t c = 0; c < nc; ++c)
                if (rng.chance(1, 2)) fm.at(r, c) = rng.rational(3);
        GradedMap f = GradedMap::from_matrix(sc, sd, fm);
        std::size_t rank = fm.rank();
        std::size_t expected = (nc - rank) + (nd - rank);
        CHECK(homology_dims(mapping_cone(trivial(sc), trivial(sd), f)).total == expected);
    }
}

TEST_CASE("rescaling by the unit scalar leaves a map unchanged") {
    GradedSpace s = space_of({{"a", {0, 0}}, {"b", {2, 1}}});
    GradedMap f(s, s, {{"a", "b", Rational(3)}});
    std::map<Grading, Rational> ones{{{0, 0}, Rational(1)}, {{2, 1}, Rational(1)}};
    CHECK(rescale_by_grading(f, ones) == f);
}

TEST_CASE("rescaling multiplies the coefficient of each source grading") {
    GradedSpace s = space_of({{"a", {0, 0}}, {"b", {2, 1}}});
    GradedMap f(s, s, {{"a", "b", Rational(3)}});
    std::map<Grading, Rational> two{{{0, 0}, Rational(2)}, {{2, 1}, Rational(5)}};
    GradedMap g = rescale_by_grading(f, two);
    CHECK(g.entries().at(0).coeff == Rational(6));
}

TEST_CASE("rescaling without a scalar for a used grading fails") {
    GradedSpace s = space_of({{"a", {0, 0}}, {"b", {2, 1}}});
    GradedMap f(s, s, {{"a", "b", Rational(3)}});
    std::map<Grading, Rational> missing{{{2, 1}, Rational(1)}};
    CHECK_THROWS_AS(rescale_by_grading(f, missing), Error);
}

TEST_CASE("cone dimension is invariant under grading-wise rescaling of split-shift maps") {
    // f raises alex2 by 0 and g by 2; their sum rescaled grading-by-grading
    // is a sum c1 f + c2 g on each grading, and the cone homology dimension
    // must not move.
    Rng rng(55);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Generator> gens;
        for (int i = 0; i < 5; ++i)
            gens.push_back({"v" + std::to_string(i), {2 * rng.range(-2, 2), 0}});
        GradedSpace src(gens);
        std::vector<Generator> tgens;
        for (int i = 0; i < 4; ++i)
            tgens.push_back({"w" + std::to_string(i), {2 * rng.range(-2, 2), 0}});
        GradedSpace tgt(tgens);

        QMatrix fm(tgt.size(), src.size()), gm(tgt.size(), src.size());
        for (std::size_t r = 0; r < tgt.size(); ++r)
            for (std::size_t c = 0; c < src.size(); ++c) {
                long long delta = tgt.grading(r).alex2 - src.grading(c).alex2;
                if (delta == 0 && rng.chance(1, 2)) fm.at(r, c) = rng.rational(3);
                if (delta == 2 && rng.chance(1, 2)) gm.at(r, c) = rng.rational(3);
            }
        GradedMap sum = GradedMap::from_matrix(src, tgt, fm.add(gm));
        std::size_t base = homology_dims(mapping_cone(trivial(src), trivial(tgt), sum)).total;

        std::map<Grading, Rational> scalars;
        for (const auto& g : src.generators())
            if (!scalars.count(g.grading)) scalars[g.grading] = rng.nonzero_rational();
        // Scaling source gradings multiplies each homogeneous piece by a
        // pattern realizable as c1 f + c2 g grading by grading; recompute
        // directly.
        GradedMap scaled = rescale_by_grading(sum, scalars);
        std::size_t after = homology_dims(mapping_cone(trivial(src), trivial(tgt), scaled)).total;
        CHECK(after == base);
    }
}
