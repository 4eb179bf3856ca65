#pragma once

#include <map>
#include <string>
#include <vector>

#include "graded.hpp"

namespace instcone {

// A finite mod-2-graded chain complex: one graded space with an endomorphism
// that squares to zero and flips the homological grading. The alex2 grading
// is carried along but the differential need not be homogeneous in it.
struct Complex {
    GradedSpace space;
    GradedMap differential;

    // Throws InvalidComplex when d*d != 0 or some entry fails to flip h.
    void validate() const;
};

Complex make_complex(GradedSpace space, GradedMap differential);

// Mapping cone of a chain map f : C -> D, built on D (+) C with the
// homological grading of the C part shifted by one and differential blocks
// (d_D, -f; 0, -d_C). Source labels get a "s:" prefix, target labels "t:".
// Throws NotChainMap when f fails f*d_C == d_D*f or is not h-preserving.
Complex mapping_cone(const Complex& source, const Complex& target, const GradedMap& f);

struct HomologyDims {
    std::size_t total = 0;
    std::map<Grading, std::size_t> by_grading;
};

// Per-class gradings come from the pivot generator of the deterministic
// cycle basis (see HomologyBasis below).
HomologyDims homology_dims(const Complex& c);

// Deterministic homology data extracted from the left-to-right column
// reduction of the boundary matrix: boundary columns are the nonzero reduced
// columns, and the class representatives are the pivot cycles, one for each
// generator index that is neither paired as a pivot row nor as a nonzero
// column.
struct HomologyBasis {
    Complex complex;
    // n x r: column i is the cycle representing class i.
    QMatrix classes;
    // n x b: an independent spanning set of the boundary space.
    QMatrix boundaries;
    // Pivot generator index and grading for each class.
    std::vector<std::size_t> class_pivots;
    std::vector<Grading> class_gradings;

    std::size_t dim() const { return class_pivots.size(); }
};

HomologyBasis homology_basis(const Complex& c);

// Map induced on homology by a chain map, expressed in the pivot-cycle bases
// of the two ends. Construction re-checks well-definedness by mapping the
// source boundary basis into the target boundary space.
struct HomologyMap {
    QMatrix matrix;           // target.dim() x source.dim()
    HomologyBasis source;
    HomologyBasis target;

    bool is_zero() const { return matrix.is_zero(); }
    std::size_t rank() const { return matrix.rank(); }
};

HomologyMap induced_map(const HomologyBasis& source, const HomologyBasis& target,
                        const GradedMap& f);
HomologyMap induced_map(const HomologyBasis& source, const HomologyBasis& target,
                        const QMatrix& f);

} // namespace instcone
