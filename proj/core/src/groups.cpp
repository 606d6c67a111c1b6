#include "vnlab/groups.hpp"

#include "vnlab/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>

namespace vnlab {

namespace {

constexpr std::size_t kMaxIndexable = 65535;

void check_size(std::size_t order, const GroupLimits& limits, const std::string& what) {
    if (order > limits.size_cap || order > kMaxIndexable) {
        throw SizeCapError(what + " has order " + std::to_string(order) + ", above the size cap " +
                           std::to_string(std::min(limits.size_cap, kMaxIndexable)));
    }
}

std::string cycle_notation(const std::vector<std::size_t>& perm) {
    std::string out;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i] || perm[i] == i) continue;
        out += "(";
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out += ",";
            out += std::to_string(j + 1);
            first = false;
            j = perm[j];
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

struct RawGroup {
    std::string label;
    std::size_t order = 0;
    std::vector<std::uint16_t> mul;
    std::vector<NamedElement> generators;
    std::vector<std::string> names;
};

GroupPtr finish(RawGroup raw, const GroupLimits& limits) {
    auto g = std::make_shared<GroupTable>(std::move(raw.label), raw.order, std::move(raw.mul),
                                          std::move(raw.generators), limits);
    if (!raw.names.empty()) g->set_element_names(std::move(raw.names));
    return g;
}

// Builds the table of a group of permutations given as a sorted list.
RawGroup from_permutations(std::vector<std::vector<std::size_t>> perms, std::string label) {
    std::sort(perms.begin(), perms.end());
    std::map<std::vector<std::size_t>, Elem> index;
    for (std::size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], static_cast<Elem>(i));
    RawGroup raw;
    raw.label = std::move(label);
    raw.order = perms.size();
    raw.mul.resize(raw.order * raw.order);
    const std::size_t degree = perms.front().size();
    std::vector<std::size_t> prod(degree);
    for (std::size_t a = 0; a < raw.order; ++a) {
        for (std::size_t b = 0; b < raw.order; ++b) {
            for (std::size_t i = 0; i < degree; ++i) prod[i] = perms[b][perms[a][i]];
            raw.mul[a * raw.order + b] = static_cast<std::uint16_t>(index.at(prod));
        }
    }
    for (const auto& p : perms) raw.names.push_back(cycle_notation(p));
    return raw;
}

RawGroup raw_semidirect(const GroupTable& base, const GroupTable& acting, const std::vector<std::vector<Elem>>& action,
                        const GroupLimits& limits) {
    const std::size_t nb = base.order();
    const std::size_t nh = acting.order();
    if (action.size() != nh) throw DomainError("semidirect product: need one automorphism per acting element");
    for (std::size_t h = 0; h < nh; ++h) {
        const auto& phi = action[h];
        if (phi.size() != nb) throw DomainError("semidirect product: automorphism table has wrong length");
        std::vector<bool> hit(nb, false);
        for (Elem x : phi) {
            if (x >= nb || hit[x]) throw DomainError("semidirect product: action is not a bijection");
            hit[x] = true;
        }
        for (Elem x = 0; x < nb; ++x) {
            for (Elem y = 0; y < nb; ++y) {
                if (phi[base.mul(x, y)] != base.mul(phi[x], phi[y])) {
                    throw DomainError("semidirect product: action of element " + std::to_string(h) +
                                      " is not an automorphism");
                }
            }
        }
    }
    for (Elem h1 = 0; h1 < nh; ++h1) {
        for (Elem h2 = 0; h2 < nh; ++h2) {
            const auto& composite = action[acting.mul(h1, h2)];
            for (Elem x = 0; x < nb; ++x) {
                if (composite[x] != action[h1][action[h2][x]]) {
                    throw DomainError("semidirect product: action is not a homomorphism");
                }
            }
        }
    }
    RawGroup raw;
    raw.order = nb * nh;
    check_size(raw.order, limits, "semidirect product");
    raw.mul.resize(raw.order * raw.order);
    for (Elem n1 = 0; n1 < nb; ++n1) {
        for (Elem h1 = 0; h1 < nh; ++h1) {
            const std::size_t row = (static_cast<std::size_t>(n1) * nh + h1) * raw.order;
            const auto& phi = action[h1];
            for (Elem n2 = 0; n2 < nb; ++n2) {
                const std::size_t n = base.mul(n1, phi[n2]);
                for (Elem h2 = 0; h2 < nh; ++h2) {
                    raw.mul[row + n2 * nh + h2] = static_cast<std::uint16_t>(n * nh + acting.mul(h1, h2));
                }
            }
        }
    }
    for (const auto& g : base.generators()) raw.generators.push_back({g.name, static_cast<Elem>(g.element * nh)});
    for (const auto& g : acting.generators()) {
        std::string name = g.name;
        const bool clash = std::any_of(raw.generators.begin(), raw.generators.end(),
                                       [&](const NamedElement& e) { return e.name == name; });
        if (clash) name += "_act";
        raw.generators.push_back({name, g.element});
    }
    return raw;
}

// Base group B^n with coordinate 0 most significant, and its cyclic shift action.
std::pair<GroupPtr, std::vector<std::vector<Elem>>> power_with_shift(const GroupPtr& b, std::size_t n,
                                                                       const GroupLimits& limits) {
    std::size_t base_order = 1;
    for (std::size_t i = 0; i < n; ++i) {
        base_order *= b->order();
        check_size(base_order * n, limits, "wreath product");
    }
    const std::size_t q = b->order();
    auto digits = [&](std::size_t x) {
        std::vector<Elem> d(n);
        for (std::size_t i = n; i-- > 0;) {
            d[i] = static_cast<Elem>(x % q);
            x /= q;
        }
        return d;
    };
    auto encode = [&](const std::vector<Elem>& d) {
        std::size_t x = 0;
        for (Elem v : d) x = x * q + v;
        return static_cast<Elem>(x);
    };
    std::vector<std::vector<Elem>> coords(base_order);
    for (std::size_t x = 0; x < base_order; ++x) coords[x] = digits(x);
    RawGroup raw;
    raw.label = b->label() + "^" + std::to_string(n);
    raw.order = base_order;
    raw.mul.resize(base_order * base_order);
    std::vector<Elem> prod(n);
    for (std::size_t x = 0; x < base_order; ++x) {
        for (std::size_t y = 0; y < base_order; ++y) {
            for (std::size_t i = 0; i < n; ++i) prod[i] = b->mul(coords[x][i], coords[y][i]);
            raw.mul[x * base_order + y] = static_cast<std::uint16_t>(encode(prod));
        }
    }
    std::vector<Elem> unit(n, 0);
    for (const auto& g : b->generators()) {
        unit[0] = g.element;
        raw.generators.push_back({g.name, encode(unit)});
    }
    auto base = finish(std::move(raw), limits);

    std::vector<std::vector<Elem>> action(n, std::vector<Elem>(base_order));
    std::vector<Elem> shifted(n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t x = 0; x < base_order; ++x) {
            for (std::size_t i = 0; i < n; ++i) shifted[(i + k) % n] = coords[x][i];
            action[k][x] = encode(shifted);
        }
    }
    return {base, action};
}

}  // namespace

// ---------------------------------------------------------------- GroupTable

GroupTable::GroupTable(std::string label, std::size_t order, std::vector<std::uint16_t> table,
                       std::vector<NamedElement> generators, const GroupLimits& limits)
    : label_(std::move(label)), order_(order), mul_(std::move(table)), generators_(std::move(generators)) {
    if (order_ == 0) throw DomainError("group order must be positive");
    check_size(order_, limits, "group '" + label_ + "'");
    if (mul_.size() != order_ * order_) throw DomainError("multiplication table has wrong size");
    for (auto v : mul_) {
        if (v >= order_) throw DomainError("multiplication table entry out of range");
    }
    // Latin square
    std::vector<std::size_t> stamp(order_, 0);
    std::size_t round = 0;
    for (std::size_t a = 0; a < order_; ++a) {
        ++round;
        for (std::size_t b = 0; b < order_; ++b) {
            auto& s = stamp[mul_[a * order_ + b]];
            if (s == round) throw DomainError("multiplication table is not a Latin square (row " + std::to_string(a) + ")");
            s = round;
        }
    }
    for (std::size_t b = 0; b < order_; ++b) {
        ++round;
        for (std::size_t a = 0; a < order_; ++a) {
            auto& s = stamp[mul_[a * order_ + b]];
            if (s == round) throw DomainError("multiplication table is not a Latin square (column " + std::to_string(b) + ")");
            s = round;
        }
    }
    for (Elem x = 0; x < order_; ++x) {
        if (mul(0, x) != x || mul(x, 0) != x) throw DomainError("element 0 is not the identity");
    }
    inv_.resize(order_);
    for (Elem a = 0; a < order_; ++a) {
        for (Elem b = 0; b < order_; ++b) {
            if (mul(a, b) == 0) {
                inv_[a] = b;
                break;
            }
        }
        if (mul(inv_[a], a) != 0) throw DomainError("inverse is not two-sided");
    }
    if (order_ <= limits.full_associativity_bound) {
        for (Elem a = 0; a < order_; ++a)
            for (Elem b = 0; b < order_; ++b)
                for (Elem c = 0; c < order_; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw DomainError("multiplication is not associative");
    } else {
        std::uint64_t state = 0x9E3779B97F4A7C15ULL ^ order_;
        auto next = [&] {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            return static_cast<Elem>(state % order_);
        };
        for (std::size_t i = 0; i < limits.associativity_samples; ++i) {
            const Elem a = next(), b = next(), c = next();
            if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw DomainError("multiplication is not associative");
        }
    }
    for (const auto& g : generators_) {
        if (g.element >= order_) throw DomainError("generator '" + g.name + "' out of range");
    }
}

Elem GroupTable::power(Elem g, long k) const {
    Elem base = k < 0 ? inv(g) : g;
    unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    e %= element_order(g);
    Elem out = 0;
    while (e-- > 0) out = mul(out, base);
    return out;
}

std::size_t GroupTable::element_order(Elem g) const {
    std::size_t k = 1;
    for (Elem x = g; x != 0; x = mul(x, g)) ++k;
    return k;
}

bool GroupTable::is_abelian() const {
    for (Elem a = 0; a < order_; ++a)
        for (Elem b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::optional<Elem> GroupTable::generator(std::string_view name) const {
    for (const auto& g : generators_) {
        if (g.name == name) return g.element;
    }
    return std::nullopt;
}

std::optional<Elem> GroupTable::find_element(std::string_view name) const {
    for (std::size_t i = 0; i < element_names_.size(); ++i) {
        if (element_names_[i] == name) return static_cast<Elem>(i);
    }
    return std::nullopt;
}

void GroupTable::set_element_names(std::vector<std::string> names) {
    if (names.size() != order_) throw DomainError("element name list has wrong length");
    element_names_ = std::move(names);
}

Elem GroupTable::evaluate_word(std::string_view word) const {
    std::string s;
    for (char c : word) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw SpecError("empty word");
    Elem result = 0;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const auto star = s.find('*', pos);
        const std::string token = s.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
        if (token.empty()) throw SpecError("malformed word '" + s + "'");
        const auto caret = token.find('^');
        const std::string name = token.substr(0, caret);
        long exponent = 1;
        if (caret != std::string::npos) {
            const std::string exp = token.substr(caret + 1);
            std::size_t used = 0;
            try {
                exponent = std::stol(exp, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != exp.size()) throw SpecError("malformed exponent in word '" + s + "'");
        }
        Elem g;
        if (auto named = generator(name)) {
            g = *named;
        } else if (name == "e" || name == "1") {
            g = 0;
        } else {
            throw SpecError("unknown generator '" + name + "' in group " + label_);
        }
        result = mul(result, power(g, exponent));
        if (star == std::string::npos) break;
        pos = star + 1;
    }
    return result;
}

std::vector<std::vector<Elem>> GroupTable::table_rows() const {
    std::vector<std::vector<Elem>> rows(order_, std::vector<Elem>(order_));
    for (Elem a = 0; a < order_; ++a)
        for (Elem b = 0; b < order_; ++b) rows[a][b] = mul(a, b);
    return rows;
}

// ---------------------------------------------------------------- constructors

GroupPtr make_table_group(std::string label, const std::vector<std::vector<Elem>>& rows,
                          std::vector<NamedElement> generators, const GroupLimits& limits) {
    const std::size_t n = rows.size();
    check_size(n, limits, "table group");
    std::vector<std::uint16_t> mul(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        if (rows[a].size() != n) throw DomainError("multiplication table is not square");
        for (std::size_t b = 0; b < n; ++b) {
            if (rows[a][b] >= n) throw DomainError("multiplication table entry out of range");
            mul[a * n + b] = static_cast<std::uint16_t>(rows[a][b]);
        }
    }
    return std::make_shared<GroupTable>(std::move(label), n, std::move(mul), std::move(generators), limits);
}

GroupPtr cyclic(std::size_t n, const GroupLimits& limits) {
    if (n == 0) throw DomainError("cyclic group order must be positive");
    check_size(n, limits, "cyclic group");
    RawGroup raw;
    raw.label = "Z/" + std::to_string(n);
    raw.order = n;
    raw.mul.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) raw.mul[a * n + b] = static_cast<std::uint16_t>((a + b) % n);
    raw.generators.push_back({"g", static_cast<Elem>(n > 1 ? 1 : 0)});
    return finish(std::move(raw), limits);
}

GroupPtr symmetric(std::size_t n, const GroupLimits& limits) {
    if (n == 0) throw DomainError("symmetric group degree must be positive");
    std::size_t order = 1;
    for (std::size_t k = 2; k <= n; ++k) {
        order *= k;
        check_size(order, limits, "symmetric group");
    }
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<std::size_t>> perms;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    auto raw = from_permutations(perms, "S" + std::to_string(n));
    std::vector<std::size_t> swap(n), cycle(n);
    std::iota(swap.begin(), swap.end(), 0);
    if (n > 1) std::swap(swap[0], swap[1]);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    const auto find = [&](const std::vector<std::size_t>& q) {
        return static_cast<Elem>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    raw.generators.push_back({"t", find(swap)});
    raw.generators.push_back({"c", find(cycle)});
    return finish(std::move(raw), limits);
}

GroupPtr dihedral(std::size_t n, const GroupLimits& limits) {
    if (n == 0) throw DomainError("dihedral group parameter must be positive");
    RawGroup raw;
    raw.label = "D" + std::to_string(n);
    raw.order = 2 * n;
    check_size(raw.order, limits, "dihedral group");
    raw.mul.resize(raw.order * raw.order);
    for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < 2; ++l)
                for (std::size_t k = 0; k < n; ++k) {
                    // r^i s^j r^k s^l = r^(i + (-1)^j k) s^(j+l)
                    const std::size_t rot = j == 0 ? (i + k) % n : (i + n - k) % n;
                    raw.mul[(j * n + i) * raw.order + (l * n + k)] = static_cast<std::uint16_t>(((j + l) % 2) * n + rot);
                }
    raw.generators.push_back({"r", static_cast<Elem>(n > 1 ? 1 : 0)});
    raw.generators.push_back({"s", static_cast<Elem>(n)});
    return finish(std::move(raw), limits);
}

GroupPtr quaternion8() {
    // units 1, i, j, k with sign; element index 2*unit + (negative ? 1 : 0)
    static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int unit_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    RawGroup raw;
    raw.label = "Q8";
    raw.order = 8;
    raw.mul.resize(64);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            const int ua = a / 2, ub = b / 2;
            const int sign = unit_sign[ua][ub] * ((a % 2) ? -1 : 1) * ((b % 2) ? -1 : 1);
            raw.mul[static_cast<std::size_t>(a * 8 + b)] = static_cast<std::uint16_t>(2 * unit_mul[ua][ub] + (sign < 0 ? 1 : 0));
        }
    raw.generators = {{"i", 2}, {"j", 4}};
    raw.names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    return finish(std::move(raw), GroupLimits{});
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, const GroupLimits& limits) {
    RawGroup raw;
    raw.label = a->label() + " x " + b->label();
    const std::size_t na = a->order(), nb = b->order();
    raw.order = na * nb;
    check_size(raw.order, limits, "direct product");
    raw.mul.resize(raw.order * raw.order);
    for (Elem x1 = 0; x1 < na; ++x1)
        for (Elem y1 = 0; y1 < nb; ++y1)
            for (Elem x2 = 0; x2 < na; ++x2)
                for (Elem y2 = 0; y2 < nb; ++y2)
                    raw.mul[(x1 * nb + y1) * raw.order + (x2 * nb + y2)] =
                        static_cast<std::uint16_t>(a->mul(x1, x2) * nb + b->mul(y1, y2));
    for (const auto& g : a->generators()) raw.generators.push_back({g.name + "_1", static_cast<Elem>(g.element * nb)});
    for (const auto& g : b->generators()) raw.generators.push_back({g.name + "_2", g.element});
    return finish(std::move(raw), limits);
}

GroupPtr semidirect_product(const GroupPtr& base, const GroupPtr& acting, const std::vector<std::vector<Elem>>& action,
                            const GroupLimits& limits) {
    auto raw = raw_semidirect(*base, *acting, action, limits);
    raw.label = base->label() + " x| " + acting->label();
    return finish(std::move(raw), limits);
}

GroupPtr wreath_cyclic(const GroupPtr& base, std::size_t n, const GroupLimits& limits) {
    if (n == 0) throw DomainError("wreath product needs n >= 1");
    auto [power, action] = power_with_shift(base, n, limits);
    auto shift = cyclic(n, limits);
    auto raw = raw_semidirect(*power, *shift, action, limits);
    raw.label = base->label() + " wr Z/" + std::to_string(n);
    raw.generators.resize(power->generators().size());
    raw.generators.push_back({"t", static_cast<Elem>(n > 1 ? 1 : 0)});
    return finish(std::move(raw), limits);
}

GroupPtr lamplighter(std::size_t n, const GroupLimits& limits) {
    if (n == 0) throw DomainError("lamplighter truncation needs n >= 1");
    check_size(n << std::min<std::size_t>(n, 40), limits, "lamplighter truncation L_" + std::to_string(n));
    auto [power, action] = power_with_shift(cyclic(2), n, limits);
    auto shift = cyclic(n, limits);
    auto raw = raw_semidirect(*power, *shift, action, limits);
    raw.label = "L_" + std::to_string(n);
    const Elem lamp = static_cast<Elem>((std::size_t{1} << (n - 1)) * n);
    raw.generators = {{"a", lamp}, {"t", static_cast<Elem>(n > 1 ? 1 : 0)}};
    return finish(std::move(raw), limits);
}

GroupPtr permutation_group(std::size_t degree, const std::vector<std::vector<std::size_t>>& generators,
                           const GroupLimits& limits) {
    if (degree == 0) throw DomainError("permutation degree must be positive");
    for (const auto& g : generators) {
        if (g.size() != degree) throw DomainError("permutation has wrong degree");
        std::vector<bool> hit(degree, false);
        for (auto x : g) {
            if (x >= degree || hit[x]) throw DomainError("generator is not a permutation");
            hit[x] = true;
        }
    }
    std::vector<std::size_t> id(degree);
    std::iota(id.begin(), id.end(), 0);
    std::map<std::vector<std::size_t>, bool> seen{{id, true}};
    std::queue<std::vector<std::size_t>> todo;
    todo.push(id);
    std::vector<std::size_t> prod(degree);
    while (!todo.empty()) {
        auto p = todo.front();
        todo.pop();
        for (const auto& g : generators) {
            for (std::size_t i = 0; i < degree; ++i) prod[i] = g[p[i]];
            if (seen.emplace(prod, true).second) {
                check_size(seen.size(), limits, "permutation group");
                todo.push(prod);
            }
        }
    }
    std::vector<std::vector<std::size_t>> perms;
    for (const auto& [p, unused] : seen) perms.push_back(p);
    auto raw = from_permutations(perms, "Perm(" + std::to_string(degree) + ")");
    for (std::size_t k = 0; k < generators.size(); ++k) {
        const auto pos = std::lower_bound(perms.begin(), perms.end(), generators[k]) - perms.begin();
        raw.generators.push_back({"p" + std::to_string(k + 1), static_cast<Elem>(pos)});
    }
    return finish(std::move(raw), limits);
}

// ---------------------------------------------------------------- subgroups

Subgroup::Subgroup(GroupPtr parent, std::vector<Elem> members, Trusted) : parent_(std::move(parent)), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    mask_.assign(parent_->order(), false);
    position_.assign(parent_->order(), members_.size());
    for (std::size_t i = 0; i < members_.size(); ++i) {
        mask_[members_[i]] = true;
        position_[members_[i]] = i;
    }
}

Subgroup::Subgroup(GroupPtr parent, std::vector<Elem> members) : Subgroup(std::move(parent), std::move(members), Trusted{}) {
    if (members_.empty() || members_.front() != 0) throw DomainError("subgroup must contain the identity");
    if (members_.back() >= parent_->order()) throw DomainError("subgroup member out of range");
    for (Elem a : members_) {
        if (!mask_[parent_->inv(a)]) throw DomainError("subgroup is not closed under inversion");
        for (Elem b : members_) {
            if (!mask_[parent_->mul(a, b)]) throw DomainError("subgroup is not closed under multiplication");
        }
    }
}

Subgroup Subgroup::closure(GroupPtr parent, std::span<const Elem> generators) {
    const auto& g = *parent;
    std::vector<bool> in(g.order(), false);
    std::vector<Elem> members{0};
    in[0] = true;
    for (Elem x : generators) {
        if (x >= g.order()) throw DomainError("generator out of range");
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (Elem s : generators) {
            const Elem y = g.mul(members[i], s);
            if (!in[y]) {
                in[y] = true;
                members.push_back(y);
            }
        }
    }
    return Subgroup(std::move(parent), std::move(members), Trusted{});
}

Subgroup Subgroup::trivial(GroupPtr parent) { return Subgroup(std::move(parent), std::vector<Elem>{0}, Trusted{}); }

Subgroup Subgroup::whole(GroupPtr parent) {
    std::vector<Elem> all(parent->order());
    std::iota(all.begin(), all.end(), Elem{0});
    return Subgroup(std::move(parent), std::move(all), Trusted{});
}

Subgroup Subgroup::intersect(const Subgroup& other) const {
    if (parent_ != other.parent_) throw MismatchError("intersect: subgroups of different groups");
    std::vector<Elem> common;
    for (Elem g : members_) {
        if (other.contains(g)) common.push_back(g);
    }
    return Subgroup(parent_, std::move(common), Trusted{});
}

bool Subgroup::is_abelian() const {
    for (Elem a : members_)
        for (Elem b : members_)
            if (parent_->mul(a, b) != parent_->mul(b, a)) return false;
    return true;
}

bool Subgroup::is_normal() const { return is_normalized_by(*this, Subgroup::whole(parent_)); }

std::size_t Subgroup::exponent() const {
    std::size_t e = 1;
    for (Elem g : members_) e = std::lcm(e, parent_->element_order(g));
    return e;
}

Subgroup subgroup_closure(const GroupPtr& g, std::span<const Elem> generators) { return Subgroup::closure(g, generators); }

bool is_normalized_by(const Subgroup& v, const Subgroup& u) {
    if (v.parent() != u.parent()) throw MismatchError("is_normalized_by: subgroups of different groups");
    const auto& g = v.group();
    for (Elem x : u.members()) {
        for (Elem y : v.members()) {
            if (!v.contains(g.conjugate(y, x))) return false;
        }
    }
    return true;
}

Transversal::Transversal(Subgroup subgroup, std::vector<Elem> reps) : subgroup_(std::move(subgroup)), reps_(std::move(reps)) {
    const auto& g = subgroup_.group();
    if (reps_.empty() || subgroup_.size() * reps_.size() != g.order()) {
        throw DomainError("transversal has the wrong number of representatives");
    }
    if (reps_[0] != 0) throw DomainError("first representative must be the identity");
    coset_.assign(g.order(), reps_.size());
    factor_.assign(g.order(), 0);
    for (std::size_t c = 0; c < reps_.size(); ++c) {
        if (reps_[c] >= g.order()) throw DomainError("representative out of range");
        for (Elem u : subgroup_.members()) {
            const Elem x = g.mul(u, reps_[c]);
            if (coset_[x] != reps_.size()) throw DomainError("two representatives share a right coset");
            coset_[x] = c;
            factor_[x] = u;
        }
    }
}

std::pair<std::size_t, Transversal> index_and_transversal(const Subgroup& u) {
    const auto& g = u.group();
    std::vector<bool> covered(g.order(), false);
    std::vector<Elem> reps;
    for (Elem x = 0; x < g.order(); ++x) {
        if (covered[x]) continue;
        reps.push_back(x);
        for (Elem y : u.members()) covered[g.mul(y, x)] = true;
    }
    const std::size_t index = reps.size();
    return {index, Transversal(u, std::move(reps))};
}

std::size_t lcm_finite(const GroupTable& g) { return g.order(); }

}  // namespace vnlab
