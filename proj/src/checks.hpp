#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "surgery.hpp"

namespace instcone {

struct CheckResult {
    std::string name;
    std::string instance;  // knot name / seed, enough to reproduce
    bool pass = true;
    std::string detail;    // counterexample payload or skip note
    std::uint64_t seed = 0;
};

// Cone-dimension invariance under rescaling the two homogeneous summands of
// a map by arbitrary nonzero constants, on randomized homogeneous pairs with
// distinct shifts. 20 scalar pairs per instance.
CheckResult check_projectivity(std::uint64_t seed);

// Randomized instance of the rank-transfer setup: two exact rows sharing a
// space, a map satisfying both commuting squares and a two-homogeneous-piece
// replacement satisfying the left one, with the small squares holding up to
// scalars. Instances are generated backwards from chosen kernels and images
// so the hypotheses hold by construction, then re-verified numerically.
// Asserts dim H(cone(phi)) == dim H(cone(phi')).
CheckResult check_replacing_maps(std::uint64_t seed);

// Runs every structural property against one knot's data. Results are
// ordered by check name; checks that do not apply (tau = 0 cases) report a
// skip note instead of failing.
std::vector<CheckResult> check_suite(const KnotComplexData& k, std::uint64_t seed);

} // namespace instcone
