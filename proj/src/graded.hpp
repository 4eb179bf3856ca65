#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "matrix.hpp"
#include "rational.hpp"

namespace instcone {

// Alexander gradings are stored doubled (alex2) so the half-integer lattice
// that shows up for even framing parameters stays in plain integers.
// h is the mod-2 homological grading.
struct Grading {
    long long alex2 = 0;
    int h = 0;

    auto operator<=>(const Grading&) const = default;
};

std::string grading_to_string(const Grading& g);

struct Generator {
    std::string label;
    Grading grading;

    bool operator==(const Generator&) const = default;
};

// Ordered list of labelled generators; labels are unique, and the order is
// part of the data (it fixes every deterministic basis choice downstream).
class GradedSpace {
public:
    GradedSpace() = default;
    explicit GradedSpace(std::vector<Generator> gens);

    std::size_t size() const { return gens_.size(); }
    const std::vector<Generator>& generators() const { return gens_; }
    const Generator& generator(std::size_t i) const { return gens_[i]; }
    const Grading& grading(std::size_t i) const { return gens_[i].grading; }

    std::optional<std::size_t> find(const std::string& label) const;
    std::size_t index_of(const std::string& label) const;

    bool operator==(const GradedSpace&) const;

private:
    std::vector<Generator> gens_;
    std::unordered_map<std::string, std::size_t> index_;
};

struct MapEntry {
    std::string from;
    std::string to;
    Rational coeff;

    bool operator==(const MapEntry&) const = default;
};

// A linear map recorded as sorted triplets between two graded spaces.
class GradedMap {
public:
    GradedMap() = default;
    GradedMap(GradedSpace source, GradedSpace target, std::vector<MapEntry> entries);

    static GradedMap zero(GradedSpace source, GradedSpace target);
    static GradedMap identity(const GradedSpace& space);
    static GradedMap from_matrix(const GradedSpace& source, const GradedSpace& target,
                                 const QMatrix& m);

    const GradedSpace& source() const { return source_; }
    const GradedSpace& target() const { return target_; }
    const std::vector<MapEntry>& entries() const { return entries_; }

    QMatrix to_matrix() const;
    bool is_zero() const { return entries_.empty(); }

    // True when every entry satisfies target.alex2 - source.alex2 == a and
    // target.h - source.h == h (mod 2). Zero maps are homogeneous of any
    // shift.
    bool is_homogeneous(long long alex2_shift, int h_shift) const;

    // The common (alex2, h) shift of all entries, when one exists.
    std::optional<std::pair<long long, int>> homogeneous_shift() const;

    GradedMap transpose() const;
    GradedMap scale(const Rational& c) const;
    GradedMap add(const GradedMap& other) const;

    bool operator==(const GradedMap&) const = default;

private:
    GradedSpace source_;
    GradedSpace target_;
    std::vector<MapEntry> entries_;
};

// Entry coefficients rescaled by a nonzero scalar attached to the grading of
// the entry's source generator. Fails with MissingScalar when an entry's
// source grading has no scalar assigned.
GradedMap rescale_by_grading(const GradedMap& f, const std::map<Grading, Rational>& scalars);

} // namespace instcone
