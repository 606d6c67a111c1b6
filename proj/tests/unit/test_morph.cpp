#include "vnlab/error.hpp"
#include "vnlab/morph.hpp"
#include "vnlab/verify.hpp"

#include <doctest.h>

using namespace vnlab;

TEST_CASE("quotients") {
    auto z4 = cyclic(4);
    const auto p = quotient_map(Subgroup(z4, {0, 2}));
    CHECK(p.target->order() == 2);
    CHECK(p.projection == std::vector<Elem>{0, 1, 0, 1});
    CHECK(p.fibers[1] == std::vector<Elem>{1, 3});
    CHECK_FALSE(p.has_section());  // Z/4 does not split over Z/2

    auto s3 = symmetric(3);
    const auto a3 = Subgroup::closure(s3, std::vector<Elem>{*s3->generator("c")});
    const auto q = quotient_map(a3);
    CHECK(q.target->order() == 2);
    REQUIRE(q.has_section());
    CHECK(q.section_image().size() == 2);
    const auto u = Subgroup::closure(s3, std::vector<Elem>{*s3->find_element("(1,2)")});
    const auto q12 = with_section(q, u);
    CHECK(q12.section_image() == u);
    CHECK_THROWS_AS(with_section(q, a3), DomainError);

    auto g = direct_product(cyclic(2), cyclic(3));
    const auto r = quotient_map(Subgroup(g, {0, 3}));
    CHECK(r.target->order() == 3);
    REQUIRE(r.has_section());
    CHECK(r.section_image().members() == std::vector<Elem>{0, 1, 2});

    CHECK_THROWS_AS(quotient_map(u), DomainError);
}

TEST_CASE("transfer maps") {
    auto z4 = cyclic(4);
    const auto p = quotient_map(Subgroup(z4, {0, 2}));
    const auto e = RingElement::one(z4), g = RingElement::basis(z4, 1), g2 = RingElement::basis(z4, 2);
    const auto qe = RingElement::one(p.target), qq = RingElement::basis(p.target, 1);
    CHECK(pushforward(p, e + g) == qe + qq);
    CHECK(pushforward(p, e - g2).is_zero());
    CHECK(pushforward(p, RingElement(z4)).is_zero());
    const Rational h(1, 2);
    CHECK(pullback(p, qq) == RingElement::from_rational_terms(z4, {{1, h}, {3, h}}));
    CHECK(pullback(p, qe) == averaging_idempotent(p.kernel));
    CHECK(pullback(p, RingElement(p.target)).is_zero());
    CHECK_THROWS_AS(pushforward(p, qe), MismatchError);
    CHECK_THROWS_AS(pullback(p, e), MismatchError);

    const RingMatrix a({{qe + qq}});
    const auto pulled = matrix_map(p, a, Transfer::pull);
    CHECK(pulled.at(0, 0) == RingElement::from_rational_terms(z4, {{0, h}, {1, h}, {2, h}, {3, h}}));
    CHECK(matrix_map(p, pulled, Transfer::push) == a);
    CHECK(matrix_map(p, RingMatrix::zero(p.target, FieldSpec::rationals(), 1, 1), Transfer::pull) ==
          RingMatrix::zero(z4, FieldSpec::rationals(), 1, 1));
}

TEST_CASE("restriction to a subgroup") {
    const auto& q = FieldSpec::rationals();
    auto z2 = cyclic(2);
    const RingMatrix a({{RingElement::one(z2) + RingElement::basis(z2, 1)}});
    const auto [index, tr] = index_and_transversal(Subgroup::trivial(z2));
    const auto res = restrict_matrix(a, tr);
    REQUIRE(res.rows() == 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(res.at(i, j) == RingElement::one(res.group_ptr()));
    CHECK(vn_dim_kernel(res).vn_dim == 1);

    // U = G gives back A
    auto s3 = symmetric(3);
    std::mt19937_64 rng(4);
    const auto whole = Subgroup::whole(s3);
    const auto [i1, t1] = index_and_transversal(whole);
    const auto b = random_matrix(s3, q, rng);
    const auto rb = restrict_matrix(b, t1);
    CHECK(i1 == 1);
    CHECK(rb.rows() == b.rows());
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) CHECK(rb.at(i, j).terms().size() == b.at(i, j).terms().size());

    // identity restricts to the identity
    const auto a3 = Subgroup::closure(s3, std::vector<Elem>{*s3->generator("c")});
    const auto [i2, t2] = index_and_transversal(a3);
    const auto rid = restrict_matrix(RingMatrix::identity(s3, q, 2), t2);
    CHECK(rid == RingMatrix::identity(rid.group_ptr(), q, 4));
}

TEST_CASE("restriction dimension relation holds for several transversals") {
    std::mt19937_64 rng(8);
    auto s3 = symmetric(3);
    for (const auto& u : {Subgroup::closure(s3, std::vector<Elem>{*s3->generator("c")}),
                          Subgroup::closure(s3, std::vector<Elem>{*s3->find_element("(1,2)")}), Subgroup::trivial(s3)}) {
        const auto ug = subgroup_as_group(u);
        const auto [index, minimal] = index_and_transversal(u);
        const auto other = alternate_transversal(u);
        if (u.size() > 1) CHECK(other.reps() != minimal.reps());
        for (int t = 0; t < 5; ++t) {
            const auto a = random_matrix(s3, FieldSpec::rationals(), rng);
            const Rational dg = vn_dim_kernel(a).vn_dim;
            CHECK(vn_dim_kernel(restrict_matrix(a, minimal, ug)).vn_dim == Rational(static_cast<long>(index)) * dg);
            CHECK(vn_dim_kernel(restrict_matrix(a, other, ug)).vn_dim == Rational(static_cast<long>(index)) * dg);
        }
    }
}

TEST_CASE("inner product is conjugate-linear in the first slot") {
    const auto& f4 = FieldSpec::get(4);
    auto z2 = cyclic(2);
    const auto i = CycloScalar::zeta_power(f4, 1);
    const auto x = RingElement::from_terms(z2, f4, {{0, i}});
    const auto y = RingElement::one(z2, f4);
    CHECK(inner_product(x, y) == -i);
    CHECK(inner_product(y, x) == i);
}

TEST_CASE("subgroup as a group") {
    auto s3 = symmetric(3);
    const auto a3 = Subgroup::closure(s3, std::vector<Elem>{*s3->generator("c")});
    const auto g = subgroup_as_group(a3);
    CHECK(g->order() == 3);
    CHECK(g->is_abelian());
    CHECK(g->element_names().size() == 3);
}
