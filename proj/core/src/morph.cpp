#include "vnlab/morph.hpp"

#include "vnlab/error.hpp"

#include <algorithm>
#include <set>

namespace vnlab {

namespace {

constexpr std::size_t max_section_candidates = 1u << 14;

void require_source(const QuotientMap& p, const GroupPtr& g, const char* what) {
    if (g != p.source) throw MismatchError(std::string(what) + ": element is not over the source group");
}

// A generating set of q: ascending elements not yet in the span of the previous ones.
std::vector<Elem> greedy_generators(const GroupPtr& q) {
    std::vector<Elem> gens;
    std::vector<bool> covered(q->order(), false);
    covered[0] = true;
    for (Elem x = 1; x < q->order(); ++x) {
        if (covered[x]) continue;
        gens.push_back(x);
        const auto span = Subgroup::closure(q, gens);
        for (Elem y : span.members()) covered[y] = true;
    }
    return gens;
}

std::optional<Subgroup> find_complement(const QuotientMap& p) {
    const auto gens = greedy_generators(p.target);
    const std::size_t k = p.kernel.size();
    std::size_t combos = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (combos > max_section_candidates / k) return std::nullopt;
        combos *= k;
    }
    std::vector<std::size_t> choice(gens.size(), 0);
    std::vector<Elem> lifts(gens.size());
    for (std::size_t c = 0; c < combos; ++c) {
        std::size_t rest = c;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            lifts[i] = p.fibers[gens[i]][rest % k];
            rest /= k;
        }
        auto h = Subgroup::closure(p.source, lifts);
        if (h.size() == p.target->order()) return h;
    }
    return std::nullopt;
}

}  // namespace

Subgroup QuotientMap::section_image() const {
    if (!section) throw DomainError("quotient map has no section");
    return Subgroup(source, *section);
}

QuotientMap quotient_map(const Subgroup& kernel, bool search_section) {
    if (!kernel.is_normal()) throw DomainError("quotient_map: subgroup is not normal");
    const GroupPtr& g = kernel.parent();
    const std::size_t n = g->order();

    std::vector<Elem> label(n, static_cast<Elem>(n));
    std::vector<Elem> reps;
    for (Elem x = 0; x < n; ++x) {
        if (label[x] != n) continue;
        const auto q = static_cast<Elem>(reps.size());
        reps.push_back(x);
        for (Elem k : kernel.members()) label[g->mul(x, k)] = q;
    }
    const std::size_t order = reps.size();
    std::vector<std::vector<Elem>> rows(order, std::vector<Elem>(order));
    for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = 0; b < order; ++b) rows[a][b] = label[g->mul(reps[a], reps[b])];

    std::vector<NamedElement> gens;
    std::set<Elem> seen;
    for (const auto& s : g->generators()) {
        const Elem q = label[s.element];
        if (q != 0 && seen.insert(q).second) gens.push_back({s.name, q});
    }

    QuotientMap p{g, kernel, nullptr, label, {}, std::nullopt};
    p.target = make_table_group(g->label() + "/K" + std::to_string(kernel.size()), rows, std::move(gens));
    p.fibers.assign(order, {});
    for (Elem x = 0; x < n; ++x) p.fibers[label[x]].push_back(x);
    if (search_section) {
        if (auto h = find_complement(p)) p = with_section(std::move(p), *h);
    }
    return p;
}

QuotientMap with_section(QuotientMap p, const Subgroup& complement) {
    if (complement.parent() != p.source) throw MismatchError("with_section: complement is not a subgroup of the source");
    std::vector<Elem> s(p.target->order(), static_cast<Elem>(p.source->order()));
    for (Elem h : complement.members()) {
        auto& slot = s[p.projection[h]];
        if (slot != p.source->order()) throw DomainError("with_section: subgroup meets a fiber twice");
        slot = h;
    }
    for (Elem x : s) {
        if (x == p.source->order()) throw DomainError("with_section: subgroup misses a fiber");
    }
    p.section = std::move(s);
    return p;
}

RingElement pushforward(const QuotientMap& p, const RingElement& x) {
    require_source(p, x.group_ptr(), "pushforward");
    RingElement out(p.target, x.field());
    for (const auto& [g, c] : x.terms()) out.add_term(p.projection[g], c);
    return out;
}

RingElement pullback(const QuotientMap& p, const RingElement& y) {
    if (y.group_ptr() != p.target) throw MismatchError("pullback: element is not over the quotient group");
    const Rational share(1, static_cast<unsigned long>(p.kernel.size()));
    RingElement out(p.source, y.field());
    for (const auto& [q, c] : y.terms()) {
        const CycloScalar part = c * share;
        for (Elem g : p.fibers[q]) out.add_term(g, part);
    }
    return out;
}

RingMatrix matrix_map(const QuotientMap& p, const RingMatrix& a, Transfer direction) {
    const bool push = direction == Transfer::push;
    if (a.group_ptr() != (push ? p.source : p.target)) throw MismatchError("matrix_map: matrix is over the wrong group");
    RingMatrix out(push ? p.target : p.source, a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, push ? pushforward(p, a.at(i, j)) : pullback(p, a.at(i, j)));
    return out;
}

GroupPtr subgroup_as_group(const Subgroup& u) {
    const auto& g = u.group();
    const auto& members = u.members();
    const std::size_t n = members.size();
    std::vector<std::uint16_t> mul(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = static_cast<std::uint16_t>(u.position(g.mul(members[a], members[b])));
    std::vector<NamedElement> gens;
    for (const auto& s : g.generators()) {
        if (s.element != 0 && u.contains(s.element)) gens.push_back({s.name, static_cast<Elem>(u.position(s.element))});
    }
    auto table = std::make_shared<GroupTable>(g.label() + "|U" + std::to_string(n), n, std::move(mul), std::move(gens));
    if (!g.element_names().empty()) {
        std::vector<std::string> names;
        names.reserve(n);
        for (Elem x : members) names.push_back(g.element_names()[x]);
        table->set_element_names(std::move(names));
    }
    return table;
}

RingMatrix restrict_matrix(const RingMatrix& a, const Transversal& transversal, const GroupPtr& u_group) {
    const Subgroup& u = transversal.subgroup();
    if (u.parent() != a.group_ptr()) throw MismatchError("restrict_matrix: transversal is for a different group");
    if (u_group->order() != u.size()) throw MismatchError("restrict_matrix: subgroup table has the wrong order");
    const auto& g = a.group();
    const auto& reps = transversal.reps();
    const std::size_t d = reps.size();
    RingMatrix out(u_group, a.field(), a.rows() * d, a.cols() * d);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const auto& entry = a.at(i, j);
            if (entry.is_zero()) continue;
            std::vector<RingElement> row_parts(d * d, RingElement(u_group, a.field()));
            for (std::size_t r = 0; r < d; ++r) {
                for (const auto& [x, c] : entry.terms()) {
                    const Elem y = g.mul(reps[r], x);
                    const std::size_t b = transversal.coset_of(y);
                    row_parts[r * d + b].add_term(static_cast<Elem>(u.position(transversal.factor(y))), c);
                }
            }
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t b = 0; b < d; ++b) out.set(i * d + r, j * d + b, std::move(row_parts[r * d + b]));
        }
    }
    return out;
}

RingMatrix restrict_matrix(const RingMatrix& a, const Transversal& transversal) {
    return restrict_matrix(a, transversal, subgroup_as_group(transversal.subgroup()));
}

CycloScalar inner_product(const RingElement& x, const RingElement& y) {
    if (x.group_ptr() != y.group_ptr() || &x.field() != &y.field()) throw MismatchError("inner_product: operands differ in group or field");
    CycloScalar sum(x.field());
    auto it = y.terms().begin();
    for (const auto& [g, c] : x.terms()) {
        it = std::lower_bound(it, y.terms().end(), g, [](const auto& kv, Elem key) { return kv.first < key; });
        if (it == y.terms().end()) break;
        if (it->first == g) sum += c.conj() * it->second;
    }
    return sum;
}

}  // namespace vnlab
