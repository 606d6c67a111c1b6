#pragma once

// von Neumann dimensions of kernels of group-ring matrices over finite groups.
//
// For finite G, l^2(G) = kG and r_A : x -> xA is the field matrix
// regular_rep(A) of size m|G| x n|G|. The von Neumann dimension of its
// kernel is dim_k(ker) / |G|, and tr_NG of an equivariant operator is the sum
// of its diagonal entries at the identity coordinate of each block.

#include "vnlab/field_matrix.hpp"
#include "vnlab/groupring.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vnlab {

enum class DimPath { dense, character_blocks, modular_screen };
std::string to_string(DimPath path);

struct Membership {
    std::uint64_t modulus;
    bool holds;  // lcm(G) * dim lies in modulus * Z
};

struct DimReport {
    std::string group;
    std::size_t order = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    Rational vn_dim;
    std::size_t kernel_dim = 0;
    Rational lcm_times_dim;
    std::vector<Membership> memberships;

    DimPath path = DimPath::dense;
    bool exact = true;               // false only for modular screening
    std::size_t blocks = 1;          // diagonal blocks eliminated
    std::size_t block_subgroup_order = 1;
    std::vector<std::uint64_t> screening_primes;

    bool lcm_times_dim_in(std::uint64_t modulus) const;
};

struct DimOptions {
    enum class Strategy { automatic, dense, character_blocks, modular_screen };
    Strategy strategy = Strategy::automatic;
    // Abelian subgroup for the character path; searched for greedily when absent.
    std::optional<Subgroup> block_subgroup;
    // The automatic strategy eliminates densely while m|G| stays at or below this.
    std::size_t dense_limit = 512;
    // Moduli d reported as "lcm(G) * dim in d*Z"; 1 (integrality) is always included.
    std::vector<std::uint64_t> moduli;
    std::uint64_t seed = 0;
};

// Matrix of x -> xA on row vectors indexed by (block i, group element g) -> i|G| + g.
FieldMatrix regular_rep(const RingMatrix& a);

DimReport vn_dim_kernel(const RingMatrix& a, const DimOptions& options = {});

// rank(regular_rep(a)) / |G|; the image of a finite-dimensional operator is closed.
Rational vn_dim_image(const RingMatrix& a, const DimOptions& options = {});

// Orthogonal projection onto ker(r_A) in k^{m|G|}, inner product conjugate-linear in the first slot.
FieldMatrix kernel_projection(const RingMatrix& a);

// Orthogonal projection onto im(r_A) in k^{n|G|}.
FieldMatrix image_projection(const RingMatrix& a);

// sum_k <P e_k, e_k> with e_k the identity coordinate of block k. Throws DomainError for
// shape mismatch or when the trace leaves Q.
Rational vn_trace(const FieldMatrix& p, std::size_t m, const GroupTable& g);

// vn_trace of the operator x -> (x diag(w)) pr_ker(A).
Rational compressed_trace(const RingMatrix& a, const RingElement& w);

// ---------------------------------------------------------------- character blocks

// True when `n` is abelian and all of its characters take values in `field`.
bool usable_block_subgroup(const Subgroup& n, const FieldSpec& field);

// Largest abelian subgroup found by greedy extension from several seeds whose
// characters are defined over `field`; nullopt when only the trivial group qualifies.
std::optional<Subgroup> find_block_subgroup(const GroupPtr& g, const FieldSpec& field);

// Characters of an abelian subgroup as exponent tables: chi(members()[i]) = w^table[chi][i]
// with w the canonical primitive exponent()-th root of unity.
std::vector<std::vector<std::uint32_t>> character_exponents(const Subgroup& n);

// The restriction of r_A to (e_chi kG)^m in the basis e_chi t_j, one block per character.
std::vector<FieldMatrix> character_blocks(const RingMatrix& a, const Subgroup& n);

}  // namespace vnlab
