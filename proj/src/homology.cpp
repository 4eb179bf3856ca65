#include "homology.hpp"

#include "errors.hpp"

namespace instcone {

namespace {

void check_h_flip(const GradedMap& d, const char* what) {
    for (const auto& e : d.entries()) {
        int hs = d.source().grading(d.source().index_of(e.from)).h;
        int ht = d.target().grading(d.target().index_of(e.to)).h;
        if (((ht - hs) % 2 + 2) % 2 != 1)
            fail(ErrorKind::InvalidComplex,
                 std::string(what) + " entry " + e.from + " -> " + e.to +
                     " does not flip the homological grading");
    }
}

} // namespace

void Complex::validate() const {
    if (!(differential.source() == space) || !(differential.target() == space))
        fail(ErrorKind::InvalidComplex, "differential is not an endomorphism of the space");
    check_h_flip(differential, "differential");
    QMatrix d = differential.to_matrix();
    if (!d.multiply(d).is_zero())
        fail(ErrorKind::InvalidComplex, "differential does not square to zero");
}

Complex make_complex(GradedSpace space, GradedMap differential) {
    Complex c{std::move(space), std::move(differential)};
    c.validate();
    return c;
}

Complex mapping_cone(const Complex& source, const Complex& target, const GradedMap& f) {
    if (!(f.source() == source.space) || !(f.target() == target.space))
        fail(ErrorKind::NotChainMap, "map endpoints do not match the given complexes");
    // alex2 shifts are unconstrained; only the h behaviour matters here.
    for (const auto& e : f.entries()) {
        int hs = f.source().grading(f.source().index_of(e.from)).h;
        int ht = f.target().grading(f.target().index_of(e.to)).h;
        if (((ht - hs) % 2 + 2) % 2 != 0)
            fail(ErrorKind::NotChainMap, "chain map must preserve the homological grading");
    }
    QMatrix fd = f.to_matrix().multiply(source.differential.to_matrix());
    QMatrix df = target.differential.to_matrix().multiply(f.to_matrix());
    if (!(fd == df)) fail(ErrorKind::NotChainMap, "map does not commute with the differentials");

    std::vector<Generator> gens;
    gens.reserve(target.space.size() + source.space.size());
    for (const auto& g : target.space.generators()) gens.push_back({"t:" + g.label, g.grading});
    for (const auto& g : source.space.generators())
        gens.push_back({"s:" + g.label, Grading{g.grading.alex2, (g.grading.h + 1) % 2}});
    GradedSpace space(std::move(gens));

    std::vector<MapEntry> entries;
    for (const auto& e : target.differential.entries())
        entries.push_back({"t:" + e.from, "t:" + e.to, e.coeff});
    for (const auto& e : f.entries()) entries.push_back({"s:" + e.from, "t:" + e.to, -e.coeff});
    for (const auto& e : source.differential.entries())
        entries.push_back({"s:" + e.from, "s:" + e.to, -e.coeff});

    return make_complex(space, GradedMap(space, space, std::move(entries)));
}

HomologyBasis homology_basis(const Complex& c) {
    // Re-validate cheaply; callers sometimes assemble complexes by hand.
    QMatrix d = c.differential.to_matrix();
    if (!d.multiply(d).is_zero())
        fail(ErrorKind::InvalidComplex, "differential does not square to zero");

    ColumnReduction red = column_reduce(d);
    const std::size_t n = c.space.size();

    std::vector<bool> is_pivot_row(n, false);
    std::vector<std::size_t> boundary_cols;
    for (std::size_t j = 0; j < n; ++j)
        if (red.low[j] != ColumnReduction::npos) {
            is_pivot_row[red.low[j]] = true;
            boundary_cols.push_back(j);
        }

    HomologyBasis hb;
    hb.complex = c;
    std::vector<std::size_t> class_cols;
    for (std::size_t j = 0; j < n; ++j)
        if (red.low[j] == ColumnReduction::npos && !is_pivot_row[j]) class_cols.push_back(j);

    hb.classes = red.transform.columns(class_cols);
    hb.boundaries = red.reduced.columns(boundary_cols);
    hb.class_pivots = class_cols;
    for (std::size_t j : class_cols) hb.class_gradings.push_back(c.space.grading(j));
    return hb;
}

HomologyDims homology_dims(const Complex& c) {
    HomologyBasis hb = homology_basis(c);
    HomologyDims out;
    out.total = hb.dim();
    for (const auto& g : hb.class_gradings) out.by_grading[g] += 1;
    return out;
}

HomologyMap induced_map(const HomologyBasis& source, const HomologyBasis& target,
                        const QMatrix& f) {
    if (f.rows() != target.complex.space.size() || f.cols() != source.complex.space.size())
        fail(ErrorKind::Internal, "induced_map shape mismatch");

    // Well-definedness: boundaries must land in the boundary space.
    if (source.boundaries.cols() > 0) {
        QMatrix image = f.multiply(source.boundaries);
        if (!image.is_zero()) {
            auto sol = target.boundaries.solve(image);
            if (!sol)
                fail(ErrorKind::NotChainMap,
                     "map does not send boundaries to boundaries; induced map undefined");
        }
    }

    HomologyMap out;
    out.source = source;
    out.target = target;
    out.matrix = QMatrix(target.dim(), source.dim());
    if (source.dim() == 0) return out;

    QMatrix images = f.multiply(source.classes);
    QMatrix system = target.classes.hcat(target.boundaries);
    auto sol = system.solve(images);
    if (!sol)
        fail(ErrorKind::NotChainMap, "image of a cycle is not a cycle; induced map undefined");
    for (std::size_t i = 0; i < target.dim(); ++i)
        for (std::size_t j = 0; j < source.dim(); ++j) out.matrix.at(i, j) = sol->at(i, j);
    return out;
}

HomologyMap induced_map(const HomologyBasis& source, const HomologyBasis& target,
                        const GradedMap& f) {
    return induced_map(source, target, f.to_matrix());
}

} // namespace instcone
