#include "vnlab/groupring.hpp"

#include "vnlab/error.hpp"

namespace vnlab {

RingElement::RingElement(GroupPtr group, const FieldSpec& field) : group_(std::move(group)), field_(&field) {
    if (!group_) throw MismatchError("ring element without a group");
}

RingElement RingElement::zero(GroupPtr group, const FieldSpec& field) { return RingElement(std::move(group), field); }

RingElement RingElement::one(GroupPtr group, const FieldSpec& field) { return basis(std::move(group), 0, field); }

RingElement RingElement::basis(GroupPtr group, Elem g, const FieldSpec& field) {
    RingElement x(std::move(group), field);
    if (g >= x.group().order()) throw DomainError("group element out of range");
    x.terms_.emplace(g, CycloScalar(field, 1));
    return x;
}

RingElement RingElement::from_terms(GroupPtr group, const FieldSpec& field,
                                    const std::vector<std::pair<Elem, CycloScalar>>& terms) {
    RingElement x(std::move(group), field);
    for (const auto& [g, c] : terms) {
        if (g >= x.group().order()) throw DomainError("group element out of range");
        x.add_term(g, c);
    }
    return x;
}

RingElement RingElement::from_rational_terms(GroupPtr group, const std::vector<std::pair<Elem, Rational>>& terms) {
    RingElement x(std::move(group));
    for (const auto& [g, c] : terms) {
        if (g >= x.group().order()) throw DomainError("group element out of range");
        x.add_term(g, CycloScalar(FieldSpec::rationals(), c));
    }
    return x;
}

CycloScalar RingElement::coefficient(Elem g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? CycloScalar(*field_) : it->second;
}

void RingElement::add_term(Elem g, const CycloScalar& c) {
    if (&c.field() != field_) throw MismatchError("ring element: coefficient from a different field");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(g, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool RingElement::supported_in(const Subgroup& u) const {
    if (u.parent() != group_) throw MismatchError("supported_in: subgroup of a different group");
    for (const auto& [g, c] : terms_) {
        if (!u.contains(g)) return false;
    }
    return true;
}

RingElement RingElement::involution() const {
    RingElement out(group_, *field_);
    for (const auto& [g, c] : terms_) out.terms_.emplace(group_->inv(g), c.conj());
    return out;
}

void RingElement::check_compatible(const RingElement& other) const {
    if (group_ != other.group_) throw MismatchError("ring elements over different groups");
    if (field_ != other.field_) throw MismatchError("ring elements over different fields");
}

RingElement& RingElement::operator+=(const RingElement& other) {
    check_compatible(other);
    for (const auto& [g, c] : other.terms_) add_term(g, c);
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
    check_compatible(other);
    for (const auto& [g, c] : other.terms_) add_term(g, -c);
    return *this;
}

RingElement& RingElement::operator*=(const CycloScalar& c) {
    if (&c.field() != field_) throw MismatchError("ring element: scalar from a different field");
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [g, v] : terms_) v *= c;
    return *this;
}

RingElement RingElement::operator-() const {
    RingElement out(*this);
    for (auto& [g, v] : out.terms_) v = -v;
    return out;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
    a.check_compatible(b);
    RingElement out(a.group_, *a.field_);
    const auto& g = *a.group_;
    for (const auto& [x, cx] : a.terms_) {
        for (const auto& [y, cy] : b.terms_) out.add_term(g.mul(x, y), cx * cy);
    }
    return out;
}

bool operator==(const RingElement& a, const RingElement& b) {
    return a.group_ == b.group_ && a.field_ == b.field_ && a.terms_ == b.terms_;
}

std::string RingElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    const auto& names = group_->element_names();
    for (const auto& [g, c] : terms_) {
        if (!out.empty()) out += " + ";
        const std::string name = names.empty() ? "g" + std::to_string(g) : names[g];
        out += "(" + c.to_string() + ")*" + name;
    }
    return out;
}

RingElement ring_mul(const RingElement& x, const RingElement& y) { return x * y; }

RingElement involution(const RingElement& x) { return x.involution(); }

RingElement averaging_idempotent(const Subgroup& v, const FieldSpec& field) {
    RingElement out(v.parent(), field);
    const CycloScalar weight(field, Rational(1, static_cast<unsigned long>(v.size())));
    for (Elem g : v.members()) out.add_term(g, weight);
    return out;
}

// ---------------------------------------------------------------- RingMatrix

RingMatrix::RingMatrix(GroupPtr group, const FieldSpec& field, std::size_t rows, std::size_t cols)
    : group_(std::move(group)), field_(&field), rows_(rows), cols_(cols), entries_(rows * cols, RingElement(group_, field)) {}

RingMatrix::RingMatrix(const std::vector<std::vector<RingElement>>& entries)
    : group_(entries.empty() || entries[0].empty() ? nullptr : entries[0][0].group_ptr()),
      field_(entries.empty() || entries[0].empty() ? nullptr : &entries[0][0].field()),
      rows_(entries.size()),
      cols_(entries.empty() ? 0 : entries[0].size()) {
    if (!group_) throw MismatchError("ring matrix needs at least one entry");
    entries_.reserve(rows_ * cols_);
    for (const auto& row : entries) {
        if (row.size() != cols_) throw MismatchError("ring matrix rows have different lengths");
        for (const auto& x : row) {
            if (x.group_ptr() != group_ || &x.field() != field_) throw MismatchError("ring matrix entries over different groups or fields");
            entries_.push_back(x);
        }
    }
}

RingMatrix RingMatrix::zero(GroupPtr group, const FieldSpec& field, std::size_t rows, std::size_t cols) {
    return RingMatrix(std::move(group), field, rows, cols);
}

RingMatrix RingMatrix::identity(GroupPtr group, const FieldSpec& field, std::size_t size) {
    return diag_lift(RingElement::one(std::move(group), field), size);
}

void RingMatrix::set(std::size_t i, std::size_t j, RingElement value) {
    if (i >= rows_ || j >= cols_) throw DomainError("ring matrix index out of range");
    if (value.group_ptr() != group_ || &value.field() != field_) throw MismatchError("ring matrix entry over a different group or field");
    entries_[i * cols_ + j] = std::move(value);
}

bool RingMatrix::supported_in(const Subgroup& u) const {
    for (const auto& x : entries_) {
        if (!x.supported_in(u)) return false;
    }
    return true;
}

RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
    if (a.group_ != b.group_ || a.field_ != b.field_) throw MismatchError("ring matrices over different groups or fields");
    if (a.cols_ != b.rows_) throw MismatchError("ring matrix shapes do not compose");
    RingMatrix out(a.group_, *a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& x = a.at(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out.entries_[i * b.cols_ + j] += x * b.at(k, j);
        }
    return out;
}

bool operator==(const RingMatrix& a, const RingMatrix& b) {
    return a.group_ == b.group_ && a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

RingMatrix diag_lift(const RingElement& x, std::size_t m) {
    if (m == 0) throw DomainError("diag_lift: size must be >= 1");
    RingMatrix out(x.group_ptr(), x.field(), m, m);
    for (std::size_t i = 0; i < m; ++i) out.set(i, i, x);
    return out;
}

RingMatrix augment(const RingMatrix& a, const RingElement& x) {
    if (x.group_ptr() != a.group_ptr() || &x.field() != &a.field()) throw MismatchError("augment: element over a different group or field");
    const std::size_t m = a.rows(), n = a.cols();
    RingMatrix out(a.group_ptr(), a.field(), m, n + m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) out.set(i, j, a.at(i, j));
        out.set(i, n + i, x);
    }
    return out;
}

}  // namespace vnlab
