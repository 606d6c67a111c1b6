#pragma once

// Quotients by finite normal subgroups, the transfer maps between their group
// rings, and restriction of matrices to subgroups of finite index.

#include "vnlab/groupring.hpp"

#include <optional>
#include <vector>

namespace vnlab {

struct QuotientMap {
    GroupPtr source;
    Subgroup kernel;
    GroupPtr target;
    std::vector<Elem> projection;            // g -> p(g)
    std::vector<std::vector<Elem>> fibers;   // q -> p^-1(q), ascending
    std::optional<std::vector<Elem>> section;  // q -> s(q), a splitting homomorphism

    bool has_section() const noexcept { return section.has_value(); }
    // s(Q) as a subgroup of the source; throws DomainError without a section.
    Subgroup section_image() const;
};

// Q is the table of cosets gK, each labelled by its smallest element index and
// ordered by that label. When `search_section` is set, a complement to K is
// looked for among lifts of a generating set of Q (bounded search).
QuotientMap quotient_map(const Subgroup& kernel, bool search_section = true);

// Installs s(q) = the unique element of `complement` over q. Throws DomainError
// unless `complement` meets every fiber exactly once.
QuotientMap with_section(QuotientMap p, const Subgroup& complement);

RingElement pushforward(const QuotientMap& p, const RingElement& x);
RingElement pullback(const QuotientMap& p, const RingElement& y);

enum class Transfer { push, pull };
RingMatrix matrix_map(const QuotientMap& p, const RingMatrix& a, Transfer direction);

// The subgroup as a group in its own right: element i is u.members()[i].
GroupPtr subgroup_as_group(const Subgroup& u);

// res(A) over kU for right cosets U*t_a: block (i, j) of size [G:U] has entry (a, b)
// equal to the part of t_a * A_ij * t_b^-1 supported on U. Rows are indexed i*[G:U] + a.
RingMatrix restrict_matrix(const RingMatrix& a, const Transversal& transversal, const GroupPtr& u_group);
RingMatrix restrict_matrix(const RingMatrix& a, const Transversal& transversal);

// <x, y> = sum_g conj(x_g) y_g
CycloScalar inner_product(const RingElement& x, const RingElement& y);

}  // namespace vnlab
