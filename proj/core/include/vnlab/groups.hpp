#pragma once

// Finite groups as explicit multiplication tables.
//
// Elements are dense indices 0..order-1 and index 0 is always the identity.
// Constructors order elements lexicographically on their natural tuples, so
// tables (and everything computed from them) are reproducible.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vnlab {

using Elem = std::uint32_t;

struct GroupLimits {
    std::size_t size_cap = 20000;
    // Associativity is checked on all triples up to this order, sampled above it.
    std::size_t full_associativity_bound = 128;
    std::size_t associativity_samples = 20000;
};

struct NamedElement {
    std::string name;
    Elem element;
};

class GroupTable;
using GroupPtr = std::shared_ptr<const GroupTable>;

class GroupTable {
public:
    // Validates the table (Latin square, identity at 0, associativity); throws DomainError.
    GroupTable(std::string label, std::size_t order, std::vector<std::uint16_t> mul,
               std::vector<NamedElement> generators = {}, const GroupLimits& limits = {});

    std::size_t order() const noexcept { return order_; }
    Elem identity() const noexcept { return 0; }
    Elem mul(Elem a, Elem b) const noexcept { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
    Elem inv(Elem a) const noexcept { return inv_[a]; }
    Elem conjugate(Elem g, Elem by) const noexcept { return mul(mul(inv(by), g), by); }  // by^-1 g by
    Elem power(Elem g, long k) const;
    std::size_t element_order(Elem g) const;
    bool is_abelian() const;

    const std::string& label() const noexcept { return label_; }
    const std::vector<NamedElement>& generators() const noexcept { return generators_; }
    std::optional<Elem> generator(std::string_view name) const;

    // Optional human-readable element names (cycle notation for permutation groups).
    const std::vector<std::string>& element_names() const noexcept { return element_names_; }
    std::optional<Elem> find_element(std::string_view name) const;
    void set_element_names(std::vector<std::string> names);

    // Evaluates a word such as "t*a^-1*t^2" over the named generators; "e" or "1" is the identity.
    Elem evaluate_word(std::string_view word) const;

    // The multiplication table as nested rows (for serialisation).
    std::vector<std::vector<Elem>> table_rows() const;

private:
    std::string label_;
    std::size_t order_;
    std::vector<std::uint16_t> mul_;
    std::vector<Elem> inv_;
    std::vector<NamedElement> generators_;
    std::vector<std::string> element_names_;
};

// ---------------------------------------------------------------- constructors

GroupPtr make_table_group(std::string label, const std::vector<std::vector<Elem>>& rows,
                          std::vector<NamedElement> generators = {}, const GroupLimits& limits = {});
GroupPtr cyclic(std::size_t n, const GroupLimits& limits = {});
GroupPtr symmetric(std::size_t n, const GroupLimits& limits = {});
// Dihedral group of order 2n, elements r^i s^j indexed j*n + i.
GroupPtr dihedral(std::size_t n, const GroupLimits& limits = {});
GroupPtr quaternion8();
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, const GroupLimits& limits = {});
// action[h] is the automorphism of `base` by which h acts, as an image table.
// Elements are pairs (n, h) with (n1,h1)(n2,h2) = (n1 * action[h1](n2), h1 h2), indexed n*|H| + h.
GroupPtr semidirect_product(const GroupPtr& base, const GroupPtr& acting,
                            const std::vector<std::vector<Elem>>& action, const GroupLimits& limits = {});
// B^n x| Z/n with the cyclic shift moving coordinate i to i+1.
GroupPtr wreath_cyclic(const GroupPtr& base, std::size_t n, const GroupLimits& limits = {});
// (+)_{Z/n} Z/2 x| Z/n, generators "a" (lamp at position 0) and "t" (shift).
GroupPtr lamplighter(std::size_t n, const GroupLimits& limits = {});
// Closure of permutations of {0..degree-1}; composition applies the left factor first.
GroupPtr permutation_group(std::size_t degree, const std::vector<std::vector<std::size_t>>& generators,
                           const GroupLimits& limits = {});

// ---------------------------------------------------------------- subgroups

class Subgroup {
public:
    // Validates closure under multiplication and inversion.
    Subgroup(GroupPtr parent, std::vector<Elem> members);

    static Subgroup closure(GroupPtr parent, std::span<const Elem> generators);
    static Subgroup trivial(GroupPtr parent);
    static Subgroup whole(GroupPtr parent);

    const GroupPtr& parent() const noexcept { return parent_; }
    const GroupTable& group() const noexcept { return *parent_; }
    const std::vector<Elem>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool contains(Elem g) const noexcept { return mask_[g]; }
    // Position of g in members(), or size() when absent.
    std::size_t position(Elem g) const noexcept { return position_[g]; }

    Subgroup intersect(const Subgroup& other) const;
    bool is_abelian() const;
    bool is_normal() const;
    std::size_t exponent() const;

    friend bool operator==(const Subgroup& a, const Subgroup& b) {
        return a.parent_ == b.parent_ && a.members_ == b.members_;
    }

private:
    struct Trusted {};
    Subgroup(GroupPtr parent, std::vector<Elem> members, Trusted);

    GroupPtr parent_;
    std::vector<Elem> members_;
    std::vector<bool> mask_;
    std::vector<std::size_t> position_;
};

Subgroup subgroup_closure(const GroupPtr& g, std::span<const Elem> generators);

// True iff u^-1 V u = V for every u in U.
bool is_normalized_by(const Subgroup& v, const Subgroup& u);

// Representatives of the right cosets U*t; reps[0] is the identity.
class Transversal {
public:
    // Validates that the representatives hit every right coset exactly once.
    Transversal(Subgroup subgroup, std::vector<Elem> reps);

    const Subgroup& subgroup() const noexcept { return subgroup_; }
    const std::vector<Elem>& reps() const noexcept { return reps_; }
    std::size_t index() const noexcept { return reps_.size(); }
    // For g = u * reps[c]: coset_of(g) = c and factor(g) = u.
    std::size_t coset_of(Elem g) const noexcept { return coset_[g]; }
    Elem factor(Elem g) const noexcept { return factor_[g]; }

private:
    Subgroup subgroup_;
    std::vector<Elem> reps_;
    std::vector<std::size_t> coset_;
    std::vector<Elem> factor_;
};

// Index [G:U] and the transversal of minimal coset representatives, ascending.
std::pair<std::size_t, Transversal> index_and_transversal(const Subgroup& u);

// lcm of the orders of finite subgroups; |G| for a finite group.
std::size_t lcm_finite(const GroupTable& g);

}  // namespace vnlab
