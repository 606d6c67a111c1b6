#include "vnlab/approx.hpp"
#include "vnlab/error.hpp"

#include <doctest.h>

using namespace vnlab;

TEST_CASE("euler phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(97) == 96);
    CHECK(euler_phi(1024) == 512);
    for (unsigned k = 1; k < 200; ++k) CHECK(euler_phi(k) == euler_totient(k));
    CHECK_THROWS_AS(euler_phi(0), DomainError);
}

TEST_CASE("lamplighter family") {
    const auto f = lamplighter_family();
    CHECK(f.instantiate(1)->order() == 2);
    CHECK(f.instantiate(2)->order() == 8);
    CHECK(f.instantiate(3)->order() == 24);
    const auto g = f.instantiate(4);
    CHECK(g->generator("a").has_value());
    CHECK(g->generator("t").has_value());
    const auto hint = f.block_hint(g);
    REQUIRE(hint);
    CHECK(hint->size() == 16);
    CHECK(hint->is_abelian());
    CHECK(hint->is_normal());
}

TEST_CASE("markov elements") {
    auto z2 = cyclic(2);
    CHECK(markov_element(z2, {1}) == RingElement::basis(z2, 1));
    auto z4 = cyclic(4);
    const Rational h(1, 2);
    CHECK(markov_element(z4, {1}) == RingElement::from_rational_terms(z4, {{1, h}, {3, h}}));
    auto l3 = lamplighter(3);
    const Elem t = *l3->generator("t"), at = l3->mul(*l3->generator("a"), t);
    const auto m = markov_element(l3, {t, at});
    CHECK(m.terms().size() == 4);
    for (const auto& [g, c] : m.terms()) CHECK(c.as_rational() == Rational(1, 4));
    CHECK(m.involution() == m);
    CHECK(lamplighter_markov_operator().evaluate(l3) == m);

    // In L_2 the shift is an involution, so t and t^-1 merge into one term of weight 1/2.
    auto l2 = lamplighter(2);
    const auto m2 = lamplighter_markov_operator().evaluate(l2);
    CHECK(m2.terms().size() == 3);
    CHECK(m2.coefficient(*l2->generator("t")).as_rational() == Rational(1, 2));
    CHECK_THROWS_AS(markov_element(z2, {}), DomainError);
}

TEST_CASE("symbolic operators") {
    const auto& q = FieldSpec::rationals();
    CHECK_THROWS_AS(SymbolicOperator(q, {}), DomainError);
    CHECK_THROWS_AS(SymbolicOperator(q, {{"t", CycloScalar(q)}}), DomainError);
    const auto op = SymbolicOperator::markov({"t*a^2"});
    REQUIRE(op.terms().size() == 2);
    CHECK(op.terms()[1].first == "a^-2*t^-1");
    auto l3 = lamplighter(3);
    CHECK(op.evaluate(l3).involution() == op.evaluate(l3));
}

TEST_CASE("approximation runs") {
    const auto f = lamplighter_family();
    const auto ident = approximation_run(f, SymbolicOperator::identity(), 1, 5);
    REQUIRE(ident.points.size() == 5);
    for (const auto& p : ident.points) CHECK(p.vn_dim == 0);
    CHECK(ident.complete);

    const auto run = approximation_run(f, lamplighter_markov_operator(), 2, 7, Rational(1, 3));
    const Rational expected[] = {Rational(1, 4), Rational(3, 8), Rational(11, 32), Rational(11, 32), Rational(21, 64), Rational(43, 128)};
    REQUIRE(run.points.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) {
        const auto& p = run.points[i];
        CHECK(p.vn_dim == expected[i]);
        CHECK(p.order == p.parameter << p.parameter);
        REQUIRE(p.error);
        CHECK(*p.error == abs(expected[i] - Rational(1, 3)));
        const Rational scaled = p.vn_dim * Rational(static_cast<long>(p.order));
        CHECK(scaled.get_den() == 1);
    }
    CHECK_THROWS_AS(approximation_run(f, lamplighter_markov_operator(), 5, 4), DomainError);
    CHECK_THROWS_AS(approximation_run(f, lamplighter_markov_operator(), 9, 11), DomainError);
}

TEST_CASE("partial failures are flagged") {
    QuotientFamily f = lamplighter_family();
    f.last = 20;
    f.instantiate = [](std::size_t n) {
        GroupLimits tiny;
        tiny.size_cap = 30;
        return lamplighter(n, tiny);
    };
    const auto run = approximation_run(f, SymbolicOperator::identity(), 2, 5);
    CHECK_FALSE(run.complete);
    CHECK(run.points.size() == 2);
    CHECK(run.failure.find("parameter 4") != std::string::npos);
}

TEST_CASE("rounded decimals") {
    CHECK(rounded_decimal(Rational(1, 9), 4) == "0.1111");
    CHECK(rounded_decimal(Rational(2, 3), 3) == "0.667");
    CHECK(rounded_decimal(Rational(1, 2), 0) == "1");
    CHECK(rounded_decimal(Rational(-1, 8), 2) == "-0.13");
    CHECK(rounded_decimal(Rational(5), 2) == "5.00");
    CHECK(rounded_decimal(Rational(1, 1000), 2) == "0.00");
}

TEST_CASE("ds02 partial sums") {
    CHECK(ds02_partial_sum(2, 4).exact == Rational(1, 9));
    CHECK(ds02_partial_sum(3, 4).exact == Rational(67, 441));
    const auto s = ds02_partial_sum(200, 10);
    CHECK(s.decimal == "0.1659457149");
    CHECK(s.tail_bound < Rational("1/10000000000"));
    CHECK(s.certified_digits == 10);
    Rational prev = 0;
    for (std::size_t k = 2; k < 40; ++k) {
        const auto p = ds02_partial_sum(k, 12);
        CHECK(p.exact > prev);
        CHECK(p.exact <= s.exact);
        CHECK(s.exact <= p.exact + p.tail_bound);
        prev = p.exact;
    }
    CHECK_THROWS_AS(ds02_partial_sum(1, 4), DomainError);
}
