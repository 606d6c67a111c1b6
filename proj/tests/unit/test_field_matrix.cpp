#include "vnlab/error.hpp"
#include "vnlab/field_matrix.hpp"
#include "vnlab/modular.hpp"

#include "brute_force.hpp"

#include <doctest.h>

#include <random>

using namespace vnlab;

namespace {

FieldMatrix random_rational(std::size_t r, std::size_t c, std::mt19937_64& rng, int density = 3) {
    std::uniform_int_distribution<int> v(-4, 4), keep(0, density);
    std::vector<std::vector<Rational>> rows(r, std::vector<Rational>(c));
    for (auto& row : rows)
        for (auto& x : row)
            if (keep(rng) == 0) x = Rational(v(rng), 1 + keep(rng));
    for (auto& row : rows)
        for (auto& x : row) x.canonicalize();
    return FieldMatrix::from_rows(FieldSpec::rationals(), rows);
}

FieldMatrix random_cyclotomic(const FieldSpec& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> v(-2, 2), z(0, 11);
    FieldMatrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (v(rng) != 0) m(i, j) = CycloScalar(f, static_cast<long>(v(rng))) * CycloScalar::zeta_power(f, z(rng));
    return m;
}

oracle::Mat to_oracle(const FieldMatrix& m) {
    oracle::Mat out(m.rows(), std::vector<oracle::Q>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).as_rational();
    return out;
}

}  // namespace

TEST_CASE("kernel basis examples") {
    const auto& q = FieldSpec::rationals();
    const auto k = kernel_basis(FieldMatrix::from_rows(q, {{1, 1}, {1, 1}}));
    REQUIRE(k.rows() == 1);
    CHECK(k == FieldMatrix::from_rows(q, {{1, -1}}));
    CHECK(kernel_basis(FieldMatrix::identity(q, 3)).rows() == 0);
    CHECK(kernel_basis(FieldMatrix(q, 2, 2)) == FieldMatrix::identity(q, 2));
}

TEST_CASE("Bareiss and Gauss-Jordan agree on the reduced echelon form") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 60; ++t) {
        const std::size_t r = 1 + t % 9, c = 1 + (t * 7) % 11;
        const auto m = random_rational(r, c, rng, t % 4);
        const auto a = reduced_row_echelon(m, Elimination::bareiss);
        const auto b = reduced_row_echelon(m, Elimination::gauss_jordan);
        CHECK(a.rref == b.rref);
        CHECK(a.pivots == b.pivots);
        CHECK(a.rank() == oracle::rank(to_oracle(m)));
    }
}

TEST_CASE("kernel rows annihilate and have the right count") {
    std::mt19937_64 rng(23);
    const auto& f5 = FieldSpec::get(5);
    for (int t = 0; t < 20; ++t) {
        const auto m = t % 2 ? random_rational(6, 4, rng) : random_cyclotomic(f5, 5, 4, rng);
        const auto k = kernel_basis(m);
        CHECK(k.rows() == m.rows() - rank(m));
        if (k.rows()) {
            CHECK((k * m).is_zero());
        }
    }
}

TEST_CASE("orthogonal projections are exact") {
    std::mt19937_64 rng(31);
    for (unsigned n : {1u, 3u, 4u}) {
        const auto& f = FieldSpec::get(n);
        for (int t = 0; t < 6; ++t) {
            const auto m = n == 1 ? random_rational(6, 3, rng) : random_cyclotomic(f, 6, 3, rng);
            const auto k = kernel_basis(m);
            const auto p = orthogonal_projection(k, m.rows());
            CHECK(p * p == p);
            CHECK(p == p.conj_transpose());
            if (k.rows()) CHECK(k * p == k);
            CHECK(p.trace() == CycloScalar(f, static_cast<long>(k.rows())));
            // rows orthogonal to the kernel are sent to zero
            const auto perp = row_space_basis(m.conj_transpose());
            if (perp.rows()) CHECK((perp * p).is_zero());
        }
    }
}

TEST_CASE("inverse and containment") {
    const auto& q = FieldSpec::rationals();
    const auto m = FieldMatrix::from_rows(q, {{2, 1}, {1, 1}});
    CHECK(m * inverse(m) == FieldMatrix::identity(q, 2));
    CHECK_THROWS_AS(inverse(FieldMatrix::from_rows(q, {{1, 2}, {2, 4}})), DomainError);
    const auto a = FieldMatrix::from_rows(q, {{1, 1, 0}});
    const auto b = FieldMatrix::from_rows(q, {{1, 0, 0}, {0, 1, 0}});
    CHECK(row_space_contained(a, b));
    CHECK_FALSE(row_space_contained(b, a));
}

TEST_CASE("modular rank is a lower bound and usually exact") {
    std::mt19937_64 rng(41);
    CHECK(is_prime_u64(2305843009213693951ULL));
    CHECK_FALSE(is_prime_u64(2305843009213693953ULL));
    std::uint64_t state = 7;
    const auto p = random_prime(state, 5);
    CHECK(p % 5 == 1);
    CHECK(p > (1ULL << 61));
    const auto& f5 = FieldSpec::get(5);
    for (int t = 0; t < 15; ++t) {
        const auto m = t % 2 ? random_rational(7, 6, rng) : random_cyclotomic(f5, 6, 6, rng);
        const auto screened = modular_rank(m, static_cast<std::uint64_t>(t));
        CHECK(screened.primes.size() == 2);
        CHECK(screened.best <= rank(m));
        CHECK(screened.best == rank(m));
    }
}
