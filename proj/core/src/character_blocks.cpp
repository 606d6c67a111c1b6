// Block decomposition of right multiplication along the characters of an
// abelian subgroup N.
//
// For chi in Hom(N, k^x) put e_chi = |N|^-1 sum_n chi(n)^-1 n, so e_chi n = chi(n) e_chi.
// The e_chi are orthogonal idempotents summing to 1, hence kG is the direct sum
// of the right ideals e_chi kG, each invariant under x -> xA. With right cosets
// N t_j, the elements e_chi t_j form a basis of e_chi kG and
//     e_chi t_j s = chi(u) e_chi t_j'   where t_j s = u t_j'.

#include "vnlab/error.hpp"
#include "vnlab/vnla.hpp"

#include <algorithm>

namespace vnlab {

bool usable_block_subgroup(const Subgroup& n, const FieldSpec& field) {
    return n.is_abelian() && field.root_order() % n.exponent() == 0;
}

std::optional<Subgroup> find_block_subgroup(const GroupPtr& g, const FieldSpec& field) {
    const unsigned r = field.root_order();
    std::vector<Elem> candidates;
    for (Elem x = 1; x < g->order(); ++x) {
        if (r % g->element_order(x) == 0) candidates.push_back(x);
    }
    std::optional<Subgroup> best;
    const std::size_t seeds = std::min<std::size_t>(candidates.size(), 32);
    for (std::size_t s = 0; s < seeds; ++s) {
        std::vector<Elem> gens{candidates[s]};
        Subgroup current = Subgroup::closure(g, gens);
        for (Elem x : candidates) {
            if (current.contains(x)) continue;
            const bool commutes = std::all_of(gens.begin(), gens.end(), [&](Elem y) { return g->mul(x, y) == g->mul(y, x); });
            if (!commutes) continue;
            gens.push_back(x);
            current = Subgroup::closure(g, gens);
        }
        if (!best || current.size() > best->size()) best = std::move(current);
    }
    return best;
}

std::vector<std::vector<std::uint32_t>> character_exponents(const Subgroup& n) {
    if (!n.is_abelian()) throw DomainError("character_exponents: subgroup is not abelian");
    const auto& g = n.group();
    const std::uint32_t e = static_cast<std::uint32_t>(n.exponent());

    // Grow N_0 = {1} < N_1 < ... one generator at a time, extending every character.
    std::vector<Elem> members{0};
    std::vector<std::size_t> where(g.order(), SIZE_MAX);
    where[0] = 0;
    std::vector<std::vector<std::uint32_t>> chars{{0}};
    for (Elem x : n.members()) {
        if (where[x] != SIZE_MAX) continue;
        std::size_t d = 1;
        Elem xd = x;
        while (where[xd] == SIZE_MAX) {
            xd = g.mul(xd, x);
            ++d;
        }
        const std::size_t old_size = members.size();
        // new members n * x^j, 0 <= j < d, listed j-major
        Elem xj = 0;
        for (std::size_t j = 1; j < d; ++j) {
            xj = g.mul(xj, x);
            for (std::size_t i = 0; i < old_size; ++i) {
                const Elem y = g.mul(members[i], xj);
                where[y] = members.size();
                members.push_back(y);
            }
        }
        std::vector<std::vector<std::uint32_t>> extended;
        extended.reserve(chars.size() * d);
        for (const auto& c : chars) {
            const std::uint32_t target = c[where[xd]];
            for (std::uint32_t y = 0; y < e; ++y) {
                if ((static_cast<std::uint64_t>(d) * y) % e != target) continue;
                std::vector<std::uint32_t> next(members.size());
                for (std::size_t j = 0; j < d; ++j)
                    for (std::size_t i = 0; i < old_size; ++i)
                        next[j * old_size + i] = static_cast<std::uint32_t>((c[i] + static_cast<std::uint64_t>(j) * y) % e);
                extended.push_back(std::move(next));
            }
        }
        chars = std::move(extended);
    }
    if (chars.size() != n.size()) throw DomainError("character_exponents: character count mismatch");
    // Re-index by position in n.members().
    std::vector<std::vector<std::uint32_t>> out(chars.size(), std::vector<std::uint32_t>(n.size()));
    for (std::size_t c = 0; c < chars.size(); ++c)
        for (std::size_t i = 0; i < members.size(); ++i) out[c][n.position(members[i])] = chars[c][i];
    return out;
}

std::vector<FieldMatrix> character_blocks(const RingMatrix& a, const Subgroup& n) {
    if (n.parent() != a.group_ptr()) throw MismatchError("character_blocks: subgroup of a different group");
    const FieldSpec& field = a.field();
    if (!usable_block_subgroup(n, field)) {
        throw DomainError("character_blocks: subgroup must be abelian with characters defined over Q(zeta_" +
                          std::to_string(field.conductor()) + ")");
    }
    const auto& g = a.group();
    const auto [index, transversal] = index_and_transversal(n);
    const auto chars = character_exponents(n);
    const std::uint32_t e = static_cast<std::uint32_t>(n.exponent());
    std::vector<CycloScalar> roots;
    for (std::uint32_t k = 0; k < e; ++k) roots.push_back(CycloScalar::root_of_unity(field, e, k));

    struct Move {
        std::size_t row, col, npos;
        const CycloScalar* coeff;
    };
    std::vector<Move> moves;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l)
            for (const auto& [s, c] : a.at(i, l).terms())
                for (std::size_t j = 0; j < index; ++j) {
                    const Elem x = g.mul(transversal.reps()[j], s);
                    moves.push_back({i * index + j, l * index + transversal.coset_of(x), n.position(transversal.factor(x)), &c});
                }

    std::vector<FieldMatrix> blocks;
    blocks.reserve(chars.size());
    for (const auto& chi : chars) {
        FieldMatrix b(field, a.rows() * index, a.cols() * index);
        for (const auto& mv : moves) {
            const auto& w = roots[chi[mv.npos]];
            if (w.is_one()) b(mv.row, mv.col) += *mv.coeff;
            else b(mv.row, mv.col) += *mv.coeff * w;
        }
        blocks.push_back(std::move(b));
    }
    return blocks;
}

}  // namespace vnlab
