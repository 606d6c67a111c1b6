#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// A CycloScalar is a residue modulo the n-th cyclotomic polynomial, stored as
// phi(n) rational coefficients in the power basis 1, z, ..., z^{phi(n)-1}.
// Conductor 1 is plain Q. Fields are interned: FieldSpec::get(n) always
// returns the same object, so scalars carry a raw pointer to it.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vnlab {

using Rational = mpq_class;
using Integer = mpz_class;

unsigned euler_totient(unsigned n);

// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<Integer> cyclotomic_polynomial(unsigned n);

class FieldSpec {
public:
    static const FieldSpec& get(unsigned conductor);
    static const FieldSpec& rationals() { return get(1); }

    unsigned conductor() const noexcept { return conductor_; }
    std::size_t degree() const noexcept { return modulus_.size() - 1; }

    // Order of the group of roots of unity contained in the field: lcm(2, n).
    unsigned root_order() const noexcept { return conductor_ % 2 == 0 ? conductor_ : 2 * conductor_; }

    const std::vector<Integer>& modulus() const noexcept { return modulus_; }

    // Reduction of z^k for 0 <= k < reduction_table_size().
    std::span<const Rational> power(std::size_t k) const;
    std::size_t reduction_table_size() const noexcept { return powers_.size() / degree(); }

    FieldSpec(const FieldSpec&) = delete;
    FieldSpec& operator=(const FieldSpec&) = delete;

private:
    explicit FieldSpec(unsigned conductor);
    friend struct FieldRegistry;

    unsigned conductor_;
    std::vector<Integer> modulus_;
    std::vector<Rational> powers_;  // row-major, degree() entries per power
};

class CycloScalar {
public:
    // Zero of the rationals.
    CycloScalar();
    explicit CycloScalar(const FieldSpec& field);
    CycloScalar(const FieldSpec& field, Rational value);
    CycloScalar(const FieldSpec& field, long value) : CycloScalar(field, Rational(value)) {}

    // Reduces an arbitrary-length polynomial in z modulo the cyclotomic polynomial.
    static CycloScalar from_polynomial(const FieldSpec& field, std::span<const Rational> coeffs);
    // z^k for any integer k (negative powers allowed).
    static CycloScalar zeta_power(const FieldSpec& field, long k);
    // w^k where w is the canonical primitive `order`-th root of unity; `order` must divide root_order().
    static CycloScalar root_of_unity(const FieldSpec& field, unsigned order, long k);
    // "p/q" or a polynomial in z such as "1/2 - 3*z + z^2".
    static CycloScalar parse(const FieldSpec& field, std::string_view text);

    const FieldSpec& field() const noexcept { return *field_; }
    std::span<const Rational> coefficients() const noexcept { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    // Throws DomainError unless is_rational().
    const Rational& as_rational() const;

    CycloScalar conj() const;
    CycloScalar inverse() const;

    CycloScalar& operator+=(const CycloScalar& other);
    CycloScalar& operator-=(const CycloScalar& other);
    CycloScalar& operator*=(const CycloScalar& other);
    CycloScalar& operator/=(const CycloScalar& other);

    friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
    friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
    friend CycloScalar operator*(CycloScalar a, const CycloScalar& b) { return a *= b; }
    friend CycloScalar operator/(CycloScalar a, const CycloScalar& b) { return a /= b; }
    CycloScalar operator-() const;

    CycloScalar& operator*=(const Rational& r);
    friend CycloScalar operator*(CycloScalar a, const Rational& r) { return a *= r; }
    friend CycloScalar operator*(const Rational& r, CycloScalar a) { return a *= r; }

    friend bool operator==(const CycloScalar& a, const CycloScalar& b);
    friend bool operator!=(const CycloScalar& a, const CycloScalar& b) { return !(a == b); }

    std::string to_string() const;

private:
    void check_same_field(const CycloScalar& other) const;

    const FieldSpec* field_;
    std::vector<Rational> coeffs_;
};

std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

}  // namespace vnlab
