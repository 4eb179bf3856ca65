#include <doctest.h>

#include "matrix.hpp"
#include "rng.hpp"

using namespace instcone;

namespace {

QMatrix from_rows(std::vector<std::vector<long>> rows) {
    QMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rational_of(rows[r][c]);
    return m;
}

} // namespace

TEST_CASE("rank of the zero map is zero") {
    CHECK(QMatrix(4, 3).rank() == 0);
    CHECK(QMatrix(0, 0).rank() == 0);
}

TEST_CASE("rank of the identity is the size") { CHECK(QMatrix::identity(3).rank() == 3); }

TEST_CASE("rank of a dependent 2x2 matrix") {
    CHECK(from_rows({{1, 2}, {2, 4}}).rank() == 1);
}

TEST_CASE("rank handles rational entries exactly") {
    QMatrix m(2, 2);
    m.at(0, 0) = rational_of(1, 3);
    m.at(0, 1) = rational_of(1, 6);
    m.at(1, 0) = rational_of(2, 7);
    m.at(1, 1) = rational_of(1, 7);
    CHECK(m.rank() == 1);
}

TEST_CASE("bareiss rank agrees with rref rank on random matrices") {
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = static_cast<std::size_t>(rng.range(1, 7));
        std::size_t cols = static_cast<std::size_t>(rng.range(1, 7));
        QMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (rng.chance(2, 3)) m.at(r, c) = rng.rational(6);
        CHECK(m.rank() == m.reduced_row_echelon().rank());
    }
}

TEST_CASE("kernel basis spans the null space") {
    Rng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t rows = static_cast<std::size_t>(rng.range(1, 6));
        std::size_t cols = static_cast<std::size_t>(rng.range(1, 6));
        QMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (rng.chance(1, 2)) m.at(r, c) = rng.rational(4);
        QMatrix k = m.kernel_basis();
        CHECK(k.cols() == cols - m.rank());
        if (k.cols() > 0) {
            CHECK(m.multiply(k).is_zero());
            CHECK(k.rank() == k.cols());
        }
    }
}

TEST_CASE("solve returns exact solutions and detects inconsistency") {
    QMatrix a = from_rows({{1, 2}, {3, 4}});
    QMatrix b(2, 1);
    b.at(0, 0) = rational_of(5);
    b.at(1, 0) = rational_of(6);
    auto x = a.solve(b);
    REQUIRE(x.has_value());
    CHECK(a.multiply(*x) == b);

    QMatrix singular = from_rows({{1, 2}, {2, 4}});
    QMatrix rhs(2, 1);
    rhs.at(0, 0) = rational_of(1);
    rhs.at(1, 0) = rational_of(0);
    CHECK_FALSE(singular.solve(rhs).has_value());
}

TEST_CASE("column reduction factors the boundary matrix") {
    Rng rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.range(1, 7));
        QMatrix d(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (rng.chance(1, 3)) d.at(r, c) = rng.rational(3);
        ColumnReduction red = column_reduce(d);
        CHECK(d.multiply(red.transform) == red.reduced);
        CHECK(red.transform.rank() == n);
        // Nonzero reduced columns have pairwise distinct lows.
        std::vector<std::size_t> lows;
        for (std::size_t j = 0; j < n; ++j)
            if (red.low[j] != ColumnReduction::npos) lows.push_back(red.low[j]);
        std::sort(lows.begin(), lows.end());
        CHECK(std::adjacent_find(lows.begin(), lows.end()) == lows.end());
    }
}
