#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rational.hpp"

namespace instcone {

// Dense matrix over exact rationals. The spaces in this project stay tiny
// (a few dozen generators at most), so dense storage with exact elimination
// is the right tradeoff; determinism matters more than speed here.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

    bool is_zero() const;

    QMatrix transpose() const;
    QMatrix multiply(const QMatrix& rhs) const;
    QMatrix add(const QMatrix& rhs) const;
    QMatrix scale(const Rational& c) const;

    QMatrix column(std::size_t c) const;
    QMatrix columns(const std::vector<std::size_t>& idx) const;
    void set_column(std::size_t c, const QMatrix& col);

    // [this | rhs] side by side.
    QMatrix hcat(const QMatrix& rhs) const;

    // Exact rank by fraction-free (Bareiss) elimination on a denominator-
    // cleared integer copy. Pivot: largest |entry|, ties broken by the
    // lowest row index.
    std::size_t rank() const;

    struct Rref;
    // Reduced row echelon form by exact rational elimination. Pivot choice:
    // largest |numerator * denominator| in the column, ties broken by the
    // lowest row index.
    Rref reduced_row_echelon() const;

    // Columns form a basis of the null space.
    QMatrix kernel_basis() const;

    // Solves this * X = rhs exactly; nullopt when inconsistent.
    std::optional<QMatrix> solve(const QMatrix& rhs) const;

    bool operator==(const QMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> a_;
};

struct QMatrix::Rref {
    QMatrix mat;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank() const { return pivot_cols.size(); }
};

// Left-to-right column reduction in the style of boundary-matrix reduction:
// columns are combined only with earlier columns sharing the same lowest
// nonzero row. `reduced = d * transform`, transform invertible upper
// triangular with unit diagonal.
struct ColumnReduction {
    QMatrix reduced;
    QMatrix transform;
    // low[j] = lowest (largest-index) nonzero row of reduced column j, or
    // npos when the column vanished.
    std::vector<std::size_t> low;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

ColumnReduction column_reduce(const QMatrix& d);

} // namespace instcone
