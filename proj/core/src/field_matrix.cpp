#include "vnlab/field_matrix.hpp"

#include "vnlab/error.hpp"

#include <algorithm>

namespace vnlab {

FieldMatrix::FieldMatrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(&field), rows_(rows), cols_(cols), data_(rows * cols, CycloScalar(field)) {}

FieldMatrix FieldMatrix::identity(const FieldSpec& field, std::size_t n) {
    FieldMatrix out(field, n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = CycloScalar(field, 1);
    return out;
}

FieldMatrix FieldMatrix::from_rows(const FieldSpec& field, const std::vector<std::vector<Rational>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    FieldMatrix out(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw MismatchError("from_rows: ragged rows");
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = CycloScalar(field, rows[i][j]);
    }
    return out;
}

bool FieldMatrix::is_rational() const {
    return std::all_of(data_.begin(), data_.end(), [](const CycloScalar& c) { return c.is_rational(); });
}

bool FieldMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const CycloScalar& c) { return c.is_zero(); });
}

FieldMatrix FieldMatrix::transpose() const {
    FieldMatrix out(*field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

FieldMatrix FieldMatrix::conj_transpose() const {
    FieldMatrix out(*field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j).conj();
    return out;
}

FieldMatrix FieldMatrix::row_block(std::size_t first, std::size_t count) const {
    if (first + count > rows_) throw MismatchError("row_block out of range");
    FieldMatrix out(*field_, count, cols_);
    std::copy(data_.begin() + static_cast<std::ptrdiff_t>(first * cols_),
              data_.begin() + static_cast<std::ptrdiff_t>((first + count) * cols_), out.data_.begin());
    return out;
}

FieldMatrix FieldMatrix::stack(const FieldMatrix& below) const {
    if (below.field_ != field_ || below.cols_ != cols_) throw MismatchError("stack: incompatible matrices");
    FieldMatrix out(*field_, rows_ + below.rows_, cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return out;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.field_ != b.field_) throw MismatchError("matrix product over different fields");
    if (a.cols_ != b.rows_) throw MismatchError("matrix product: shape mismatch");
    FieldMatrix out(*a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const auto& y = b(k, j);
                if (!y.is_zero()) out(i, j) += x * y;
            }
        }
    return out;
}

FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.field_ != b.field_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) throw MismatchError("matrix sum: shape mismatch");
    FieldMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
}

FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.field_ != b.field_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) throw MismatchError("matrix difference: shape mismatch");
    FieldMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
}

bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

CycloScalar FieldMatrix::trace() const {
    if (rows_ != cols_) throw MismatchError("trace of a non-square matrix");
    CycloScalar out(*field_);
    for (std::size_t i = 0; i < rows_; ++i) out += (*this)(i, i);
    return out;
}

namespace {

using IntRows = std::vector<std::vector<Integer>>;

// Clears denominators row by row; the row space is unchanged.
IntRows to_integer_rows(const FieldMatrix& m) {
    IntRows rows(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer scale = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& c = m(i, j).as_rational();
            if (c != 0) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& c = m(i, j).as_rational();
            if (c != 0) rows[i][j] = c.get_num() * (scale / c.get_den());
        }
    }
    return rows;
}

// Fraction-free forward elimination; returns the pivot columns. Rows below rank end up zero.
std::vector<std::size_t> bareiss_forward(IntRows& a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        const Integer& piv = a[r][c];
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            const Integer lead = a[i][c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer v = piv * a[i][j];
                if (lead != 0) v -= lead * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

EchelonForm rref_bareiss(const FieldMatrix& m) {
    IntRows a = to_integer_rows(m);
    const auto pivots = bareiss_forward(a, m.cols());
    const FieldSpec& f = m.field();
    // Back substitution in rationals on the (short) list of pivot rows.
    std::vector<std::vector<Rational>> rows(pivots.size(), std::vector<Rational>(m.cols()));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        const Integer& piv = a[r][pivots[r]];
        for (std::size_t j = pivots[r]; j < m.cols(); ++j) {
            if (a[r][j] != 0) {
                rows[r][j] = Rational(a[r][j], piv);
                rows[r][j].canonicalize();
            }
        }
    }
    for (std::size_t r = pivots.size(); r-- > 0;) {
        for (std::size_t i = 0; i < r; ++i) {
            const Rational factor = rows[i][pivots[r]];
            if (factor == 0) continue;
            for (std::size_t j = pivots[r]; j < m.cols(); ++j) {
                if (rows[r][j] != 0) rows[i][j] -= factor * rows[r][j];
            }
        }
    }
    EchelonForm out{FieldMatrix(f, m.rows(), m.cols()), pivots};
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (rows[r][j] != 0) out.rref(r, j) = CycloScalar(f, rows[r][j]);
    return out;
}

EchelonForm rref_gauss_jordan(const FieldMatrix& m) {
    FieldMatrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != r) {
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        }
        const CycloScalar inv = a(r, c).inverse();
        for (std::size_t j = c; j < a.cols(); ++j) {
            if (!a(r, j).is_zero()) a(r, j) *= inv;
        }
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            const CycloScalar factor = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) {
                if (!a(r, j).is_zero()) a(i, j) -= factor * a(r, j);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

Elimination choose(const FieldMatrix& m, Elimination route) {
    if (route == Elimination::automatic) return m.is_rational() ? Elimination::bareiss : Elimination::gauss_jordan;
    if (route == Elimination::bareiss && !m.is_rational()) throw DomainError("fraction-free elimination needs a rational matrix");
    return route;
}

}  // namespace

EchelonForm reduced_row_echelon(const FieldMatrix& m, Elimination route) {
    return choose(m, route) == Elimination::bareiss ? rref_bareiss(m) : rref_gauss_jordan(m);
}

std::size_t rank(const FieldMatrix& m, Elimination route) {
    if (choose(m, route) == Elimination::bareiss) {
        IntRows a = to_integer_rows(m);
        return bareiss_forward(a, m.cols()).size();
    }
    return rref_gauss_jordan(m).rank();
}

FieldMatrix row_space_basis(const FieldMatrix& m, Elimination route) {
    auto e = reduced_row_echelon(m, route);
    return e.rref.row_block(0, e.rank());
}

FieldMatrix kernel_basis(const FieldMatrix& m, Elimination route) {
    // x M = 0  <=>  M^T x^T = 0
    const auto e = reduced_row_echelon(m.transpose(), route);
    const std::size_t n = m.rows();
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    FieldMatrix basis(m.field(), n - e.rank(), n);
    std::size_t row = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        basis(row, f) = CycloScalar(m.field(), 1);
        for (std::size_t i = 0; i < e.rank(); ++i) basis(row, e.pivots[i]) = -e.rref(i, f);
        ++row;
    }
    if (basis.rows() == 0) return basis;
    return row_space_basis(basis, route);
}

FieldMatrix inverse(const FieldMatrix& m) {
    if (m.rows() != m.cols()) throw MismatchError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    FieldMatrix aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = CycloScalar(m.field(), 1);
    }
    auto e = rref_gauss_jordan(aug);
    if (e.rank() < n || e.pivots[n - 1] != n - 1) throw DomainError("matrix is singular");
    FieldMatrix out(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = e.rref(i, n + j);
    return out;
}

FieldMatrix orthogonal_projection(const FieldMatrix& basis, std::size_t ambient_dim) {
    if (basis.rows() == 0) return FieldMatrix(basis.field(), ambient_dim, ambient_dim);
    if (basis.cols() != ambient_dim) throw MismatchError("projection basis has the wrong width");
    const FieldMatrix bh = basis.conj_transpose();
    return bh * inverse(basis * bh) * basis;
}

bool row_space_contained(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.rows() == 0) return true;
    return rank(b.stack(a)) == rank(b);
}

}  // namespace vnlab
