#pragma once

// Dense matrices over a cyclotomic field and exact elimination.
//
// Two elimination routes produce the same reduced row echelon form:
//   - fraction-free (Bareiss) integer elimination, for rational matrices;
//   - Gauss-Jordan over CycloScalar, for any conductor.
// Pivots are always the first nonzero entry in column order.

#include "vnlab/scalar.hpp"

#include <cstddef>
#include <vector>

namespace vnlab {

class FieldMatrix {
public:
    FieldMatrix(const FieldSpec& field, std::size_t rows, std::size_t cols);
    static FieldMatrix identity(const FieldSpec& field, std::size_t n);
    static FieldMatrix from_rows(const FieldSpec& field, const std::vector<std::vector<Rational>>& rows);

    const FieldSpec& field() const noexcept { return *field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    const CycloScalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    CycloScalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    bool is_rational() const;
    bool is_zero() const;

    FieldMatrix transpose() const;
    FieldMatrix conj_transpose() const;
    FieldMatrix row_block(std::size_t first, std::size_t count) const;
    // Rows of `this` followed by rows of `below`.
    FieldMatrix stack(const FieldMatrix& below) const;

    friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
    friend FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b);
    friend FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b);
    friend bool operator==(const FieldMatrix& a, const FieldMatrix& b);
    friend bool operator!=(const FieldMatrix& a, const FieldMatrix& b) { return !(a == b); }

    CycloScalar trace() const;

private:
    const FieldSpec* field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<CycloScalar> data_;
};

enum class Elimination { automatic, bareiss, gauss_jordan };

struct EchelonForm {
    FieldMatrix rref;                  // all rows, zero rows last
    std::vector<std::size_t> pivots;   // pivot column of each nonzero row
    std::size_t rank() const noexcept { return pivots.size(); }
};

EchelonForm reduced_row_echelon(const FieldMatrix& m, Elimination route = Elimination::automatic);
std::size_t rank(const FieldMatrix& m, Elimination route = Elimination::automatic);

// Rows form a basis of {x : xM = 0}, in reduced row echelon form.
FieldMatrix kernel_basis(const FieldMatrix& m, Elimination route = Elimination::automatic);
// Nonzero rows of the reduced row echelon form.
FieldMatrix row_space_basis(const FieldMatrix& m, Elimination route = Elimination::automatic);
// Throws DomainError when singular.
FieldMatrix inverse(const FieldMatrix& m);
// Orthogonal projection (x -> xP) onto the row space of `basis`, whose rows must be independent:
// P = B^H (B B^H)^-1 B.
FieldMatrix orthogonal_projection(const FieldMatrix& basis, std::size_t ambient_dim);
// Row space of a is contained in the row space of b.
bool row_space_contained(const FieldMatrix& a, const FieldMatrix& b);

}  // namespace vnlab
