#pragma once

// Rank screening modulo random word-size primes.
//
// rank mod p never exceeds the rank over the field, so these numbers are a
// screen, not a certificate: an acceptance-grade report must come from an
// exact path.

#include "vnlab/field_matrix.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace vnlab {

bool is_prime_u64(std::uint64_t n);

// A random prime p < 2^62 with p = 1 (mod modulus_for_roots).
std::uint64_t random_prime(std::uint64_t& rng_state, std::uint64_t modulus_for_roots = 1);

class ModularImage {
public:
    // Maps Q(zeta_n) into F_p by sending zeta_n to a root of the n-th cyclotomic polynomial.
    ModularImage(const FieldSpec& field, std::uint64_t prime);

    std::uint64_t prime() const noexcept { return p_; }
    // nullopt when a denominator vanishes mod p.
    std::optional<std::uint64_t> map(const CycloScalar& x) const;

private:
    std::uint64_t p_;
    std::vector<std::uint64_t> zeta_powers_;  // images of z^0..z^{degree-1}
};

// Rank of a dense row-major matrix over F_p (matrix is consumed).
std::size_t rank_mod_p(std::vector<std::uint64_t> entries, std::size_t rows, std::size_t cols, std::uint64_t p);

struct ModularRank {
    std::vector<std::uint64_t> primes;
    std::vector<std::size_t> ranks;
    std::size_t best = 0;  // max over primes: the tightest lower bound on the true rank
};

// Screens the rank of m modulo `count` random primes; primes that see a zero denominator are redrawn.
ModularRank modular_rank(const FieldMatrix& m, std::uint64_t seed, unsigned count = 2);

}  // namespace vnlab
