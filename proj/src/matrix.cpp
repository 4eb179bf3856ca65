#include "matrix.hpp"

#include "errors.hpp"

namespace instcone {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool QMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!instcone::is_zero(x)) return false;
    return true;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

QMatrix QMatrix::multiply(const QMatrix& rhs) const {
    if (cols_ != rhs.rows_) fail(ErrorKind::Internal, "matrix product shape mismatch");
    QMatrix p(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& x = at(r, k);
            if (instcone::is_zero(x)) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) p.at(r, c) += x * rhs.at(k, c);
        }
    return p;
}

QMatrix QMatrix::add(const QMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        fail(ErrorKind::Internal, "matrix sum shape mismatch");
    QMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] + rhs.a_[i];
    return s;
}

QMatrix QMatrix::scale(const Rational& c) const {
    QMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] * c;
    return s;
}

QMatrix QMatrix::column(std::size_t c) const {
    QMatrix v(rows_, 1);
    for (std::size_t r = 0; r < rows_; ++r) v.at(r, 0) = at(r, c);
    return v;
}

QMatrix QMatrix::columns(const std::vector<std::size_t>& idx) const {
    QMatrix m(rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
        for (std::size_t r = 0; r < rows_; ++r) m.at(r, j) = at(r, idx[j]);
    return m;
}

void QMatrix::set_column(std::size_t c, const QMatrix& col) {
    if (col.rows() != rows_ || col.cols() != 1)
        fail(ErrorKind::Internal, "set_column shape mismatch");
    for (std::size_t r = 0; r < rows_; ++r) at(r, c) = col.at(r, 0);
}

QMatrix QMatrix::hcat(const QMatrix& rhs) const {
    if (rows_ != rhs.rows_) fail(ErrorKind::Internal, "hcat shape mismatch");
    QMatrix m(rows_, cols_ + rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
        for (std::size_t c = 0; c < rhs.cols_; ++c) m.at(r, cols_ + c) = rhs.at(r, c);
    }
    return m;
}

std::size_t QMatrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;

    // Clear denominators row by row; row scaling does not change the rank.
    std::vector<Integer> m(rows_ * cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < cols_; ++c) l = lcm(l, at(r, c).get_den());
        for (std::size_t c = 0; c < cols_; ++c) {
            const Rational& q = at(r, c);
            m[r * cols_ + c] = q.get_num() * (l / q.get_den());
        }
    }

    std::size_t rank = 0;
    Integer prev = 1;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t pivot = static_cast<std::size_t>(-1);
        Integer best = 0;
        for (std::size_t r = rank; r < rows_; ++r) {
            Integer w = abs(m[r * cols_ + col]);
            if (sgn(w) != 0 && (pivot == static_cast<std::size_t>(-1) || w > best)) {
                pivot = r;
                best = w;
            }
        }
        if (pivot == static_cast<std::size_t>(-1)) continue;
        if (pivot != rank)
            for (std::size_t c = 0; c < cols_; ++c)
                std::swap(m[pivot * cols_ + c], m[rank * cols_ + c]);
        const Integer piv = m[rank * cols_ + col];
        for (std::size_t r = rank + 1; r < rows_; ++r) {
            Integer lead = m[r * cols_ + col];
            for (std::size_t c = col; c < cols_; ++c) {
                Integer v = piv * m[r * cols_ + c] - lead * m[rank * cols_ + c];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[r * cols_ + c] = v;
            }
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

QMatrix::Rref QMatrix::reduced_row_echelon() const {
    Rref out;
    out.mat = *this;
    QMatrix& m = out.mat;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t pivot = static_cast<std::size_t>(-1);
        Integer best = 0;
        for (std::size_t r = row; r < rows_; ++r) {
            if (instcone::is_zero(m.at(r, col))) continue;
            Integer w = pivot_weight(m.at(r, col));
            if (pivot == static_cast<std::size_t>(-1) || w > best) {
                pivot = r;
                best = w;
            }
        }
        if (pivot == static_cast<std::size_t>(-1)) continue;
        if (pivot != row)
            for (std::size_t c = 0; c < cols_; ++c) std::swap(m.at(pivot, c), m.at(row, c));
        Rational inv = 1 / m.at(row, col);
        for (std::size_t c = col; c < cols_; ++c) m.at(row, c) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || instcone::is_zero(m.at(r, col))) continue;
            Rational f = m.at(r, col);
            for (std::size_t c = col; c < cols_; ++c) m.at(r, c) -= f * m.at(row, c);
        }
        out.pivot_cols.push_back(col);
        ++row;
    }
    return out;
}

QMatrix QMatrix::kernel_basis() const {
    Rref rr = reduced_row_echelon();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    QMatrix basis(cols_, free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        std::size_t fc = free_cols[j];
        basis.at(fc, j) = 1;
        for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
            basis.at(rr.pivot_cols[i], j) = -rr.mat.at(i, fc);
    }
    return basis;
}

std::optional<QMatrix> QMatrix::solve(const QMatrix& rhs) const {
    if (rhs.rows() != rows_) fail(ErrorKind::Internal, "solve shape mismatch");
    Rref rr = hcat(rhs).reduced_row_echelon();
    // Any pivot landing in the rhs block means inconsistency.
    for (std::size_t c : rr.pivot_cols)
        if (c >= cols_) return std::nullopt;
    QMatrix x(cols_, rhs.cols());
    for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
        for (std::size_t c = 0; c < rhs.cols(); ++c)
            x.at(rr.pivot_cols[i], c) = rr.mat.at(i, cols_ + c);
    return x;
}

ColumnReduction column_reduce(const QMatrix& d) {
    ColumnReduction out;
    out.reduced = d;
    out.transform = QMatrix::identity(d.cols());
    out.low.assign(d.cols(), ColumnReduction::npos);

    auto low_of = [&](std::size_t j) -> std::size_t {
        for (std::size_t r = d.rows(); r-- > 0;)
            if (!is_zero(out.reduced.at(r, j))) return r;
        return ColumnReduction::npos;
    };

    // pivot_owner[r] = column whose reduced low is r.
    std::vector<std::size_t> pivot_owner(d.rows(), ColumnReduction::npos);
    for (std::size_t j = 0; j < d.cols(); ++j) {
        std::size_t l = low_of(j);
        while (l != ColumnReduction::npos && pivot_owner[l] != ColumnReduction::npos) {
            std::size_t k = pivot_owner[l];
            Rational f = out.reduced.at(l, j) / out.reduced.at(l, k);
            for (std::size_t r = 0; r <= l; ++r)
                out.reduced.at(r, j) -= f * out.reduced.at(r, k);
            for (std::size_t r = 0; r < d.cols(); ++r)
                out.transform.at(r, j) -= f * out.transform.at(r, k);
            l = low_of(j);
        }
        out.low[j] = l;
        if (l != ColumnReduction::npos) pivot_owner[l] = j;
    }
    return out;
}

} // namespace instcone
