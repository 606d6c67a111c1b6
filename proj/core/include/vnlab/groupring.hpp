#pragma once

// The group algebra kG over a cyclotomic field k, with matrices over it.
//
// Matrices act on row vectors from the right: x -> xA. Kernels, images and
// projections elsewhere in the library all refer to this action.

#include "vnlab/groups.hpp"
#include "vnlab/scalar.hpp"

#include <map>
#include <utility>
#include <vector>

namespace vnlab {

class RingElement {
public:
    using Terms = std::map<Elem, CycloScalar>;

    RingElement(GroupPtr group, const FieldSpec& field = FieldSpec::rationals());

    static RingElement zero(GroupPtr group, const FieldSpec& field = FieldSpec::rationals());
    static RingElement one(GroupPtr group, const FieldSpec& field = FieldSpec::rationals());
    static RingElement basis(GroupPtr group, Elem g, const FieldSpec& field = FieldSpec::rationals());
    static RingElement from_terms(GroupPtr group, const FieldSpec& field, const std::vector<std::pair<Elem, CycloScalar>>& terms);
    static RingElement from_rational_terms(GroupPtr group, const std::vector<std::pair<Elem, Rational>>& terms);

    const GroupPtr& group_ptr() const noexcept { return group_; }
    const GroupTable& group() const noexcept { return *group_; }
    const FieldSpec& field() const noexcept { return *field_; }
    const Terms& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    CycloScalar coefficient(Elem g) const;
    // Adds c to the coefficient of g, dropping the term if it cancels.
    void add_term(Elem g, const CycloScalar& c);
    bool supported_in(const Subgroup& u) const;

    // x* = sum conj(c_g) g^-1
    RingElement involution() const;

    RingElement& operator+=(const RingElement& other);
    RingElement& operator-=(const RingElement& other);
    RingElement& operator*=(const CycloScalar& c);
    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    friend RingElement operator*(RingElement a, const CycloScalar& c) { return a *= c; }
    friend RingElement operator*(const CycloScalar& c, RingElement a) { return a *= c; }
    RingElement operator-() const;

    friend bool operator==(const RingElement& a, const RingElement& b);
    friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

    std::string to_string() const;

private:
    void check_compatible(const RingElement& other) const;

    GroupPtr group_;
    const FieldSpec* field_;
    Terms terms_;
};

RingElement ring_mul(const RingElement& x, const RingElement& y);
RingElement involution(const RingElement& x);

// N_V = (1/|V|) sum_{g in V} g
RingElement averaging_idempotent(const Subgroup& v, const FieldSpec& field = FieldSpec::rationals());

class RingMatrix {
public:
    RingMatrix(GroupPtr group, const FieldSpec& field, std::size_t rows, std::size_t cols);
    // Every entry must share the group and field; rows must have equal length.
    explicit RingMatrix(const std::vector<std::vector<RingElement>>& entries);

    static RingMatrix zero(GroupPtr group, const FieldSpec& field, std::size_t rows, std::size_t cols);
    static RingMatrix identity(GroupPtr group, const FieldSpec& field, std::size_t size);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const GroupPtr& group_ptr() const noexcept { return group_; }
    const GroupTable& group() const noexcept { return *group_; }
    const FieldSpec& field() const noexcept { return *field_; }

    const RingElement& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, RingElement value);

    bool supported_in(const Subgroup& u) const;

    friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b);
    friend bool operator==(const RingMatrix& a, const RingMatrix& b);
    friend bool operator!=(const RingMatrix& a, const RingMatrix& b) { return !(a == b); }

private:
    GroupPtr group_;
    const FieldSpec* field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<RingElement> entries_;
};

// m x m matrix with x on the diagonal.
RingMatrix diag_lift(const RingElement& x, std::size_t m);
// (A | diag(x)), an m x (n+m) matrix.
RingMatrix augment(const RingMatrix& a, const RingElement& x);

}  // namespace vnlab
