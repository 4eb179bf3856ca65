#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homology.hpp"
#include "rng.hpp"

namespace instcone {

// Input data for one knot: the knot homology group as a graded space
// together with the two lifted differentials. d_plus raises the doubled
// Alexander grading by positive multiples of 2q, d_minus lowers it, both
// flip the homological grading, both square to zero, and each has
// one-dimensional homology.
struct KnotComplexData {
    std::string name;
    long long genus = 0;   // g(K) >= 0
    long long q = 1;       // framing parameter, q >= 1
    long long q0 = 0;      // companion longitude parameter
    GradedSpace space;
    GradedMap d_plus;
    GradedMap d_minus;

    bool operator==(const KnotComplexData&) const = default;
};

struct ValidationItem {
    std::string invariant;
    bool pass = true;
    std::string offenders;  // empty when the invariant holds
};

// Every invariant is checked and reported, not just the first failure.
struct ValidationReport {
    std::vector<ValidationItem> items;

    bool ok() const {
        for (const auto& i : items)
            if (!i.pass) return false;
        return true;
    }
    std::string summary() const;
};

ValidationReport validate(const KnotComplexData& k);

// Throws ValidationError (with the full report in the message) unless valid.
void require_valid(const KnotComplexData& k);

// Doubled grading bounds of the knot's own grading lattice:
// max = q - 1 + 2g, min = -(q - 1) - 2g.
std::pair<long long, long long> grading_bounds_mu2(const KnotComplexData& k);

// Doubled grading bounds for framing parameter n:
// max = |q0 - n q| - 1 + 2g, min the negative.
std::pair<long long, long long> grading_bounds2(const KnotComplexData& k, long long n);

// Dual data: gradings negated and both differentials transposed. The
// transpose of the raising map still raises after negation, so names are
// kept; tau changes sign under this involution.
KnotComplexData mirror(const KnotComplexData& k);

// Orientation reversal: gradings negated and the two differentials swapped
// (no transpose). tau is unchanged.
KnotComplexData reverse(const KnotComplexData& k);

// JSON (de)serialization. See README for the schema. load() validates and
// throws ParseError / SchemaError (with a JSON pointer) / ValidationError;
// pass validated = false to obtain structurally well-formed but possibly
// invalid data (used to produce validation reports for bad inputs).
KnotComplexData knot_from_json(const std::string& text, bool validated = true);
std::string knot_to_json(const KnotComplexData& k);
KnotComplexData load_knot(const std::string& path, bool validated = true);
void save_knot(const KnotComplexData& k, const std::string& path);

// Built-in models. These are synthetic fixtures shaped like the usual small
// knot complexes; all expected values in the tests are derived from the
// fixture data itself.
std::vector<KnotComplexData> catalog();
KnotComplexData catalog_knot(const std::string& name);

// Seeded generator of random valid inputs: one survivor block (which pins
// tau and nu), acyclic staircase and box blocks, then a random
// grading-preserving change of basis applied to both differentials.
KnotComplexData random_knot(std::uint64_t seed);

// Resolves "catalog:NAME", "catalog:random-SEED", or a filesystem path.
KnotComplexData open_knot(const std::string& spec);

} // namespace instcone
