#include "vnlab/verify.hpp"

#include "vnlab/error.hpp"

#include <set>

namespace vnlab {

namespace {

Rational as_q(std::size_t n) { return Rational(static_cast<unsigned long>(n)); }

// x -> p_*(x) on k^{n|G|} -> k^{n|Q|}, row-vector convention.
FieldMatrix push_matrix(const QuotientMap& p, const FieldSpec& field, std::size_t n) {
    const std::size_t g = p.source->order();
    const std::size_t q = p.target->order();
    FieldMatrix out(field, n * g, n * q);
    for (std::size_t j = 0; j < n; ++j)
        for (Elem x = 0; x < g; ++x) out(j * g + x, j * q + p.projection[x]) = CycloScalar(field, 1L);
    return out;
}

FieldMatrix pull_matrix(const QuotientMap& p, const FieldSpec& field, std::size_t n) {
    const std::size_t g = p.source->order();
    const std::size_t q = p.target->order();
    const CycloScalar share(field, Rational(1, static_cast<unsigned long>(p.kernel.size())));
    FieldMatrix out(field, n * q, n * g);
    for (std::size_t j = 0; j < n; ++j)
        for (Elem y = 0; y < q; ++y)
            for (Elem x : p.fibers[y]) out(j * q + y, j * g + x) = share;
    return out;
}

bool same_row_space(const FieldMatrix& a, const FieldMatrix& b) {
    const bool a_zero = a.rows() == 0 || a.is_zero();
    const bool b_zero = b.rows() == 0 || b.is_zero();
    if (a_zero || b_zero) return a_zero == b_zero;
    return row_space_contained(a, b) && row_space_contained(b, a);
}

std::string quotient_label(const QuotientMap& p) {
    return p.source->label() + " -> " + p.target->label() + " (|K|=" + std::to_string(p.kernel.size()) + ")";
}

}  // namespace

SuiteReport verify_prop41(const QuotientMap& p, const RingMatrix& a) {
    if (a.group_ptr() != p.target) throw MismatchError("verify_prop41: matrix must be over the quotient");
    const FieldSpec& field = a.field();
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    const Rational k = as_q(p.kernel.size());

    SuiteReport r;
    r.suite = "prop41";
    r.instance = quotient_label(p) + " A=" + std::to_string(m) + "x" + std::to_string(n);

    const RingMatrix pulled = matrix_map(p, a, Transfer::pull);
    const FieldMatrix rep_q = regular_rep(a);
    const FieldMatrix rep_g = regular_rep(pulled);
    const FieldMatrix pull = pull_matrix(p, field, n);
    const FieldMatrix push = push_matrix(p, field, n);

    // (a) image transfer
    r.expect("(a) im r_{p*A} = p*(im r_A)", same_row_space(rep_g, row_space_basis(rep_q) * pull));

    // (b) P' = diag(p_*) then P then diag(p^*)
    const FieldMatrix proj = image_projection(a);
    const FieldMatrix p1 = push * proj * pull;
    r.expect("(b) P'^2 = P'", p1 * p1 == p1);
    r.expect("(b) P' = P'*", p1 == p1.conj_transpose());
    r.expect("(b) P' projects onto im r_{p*A}", p1 == image_projection(pulled));

    // (c) dimension relation for images
    const Rational im_q = vn_dim_image(a);
    const Rational im_g = vn_dim_image(pulled);
    r.record("dim_Q im A", im_q);
    r.record("dim_G im p*A", im_g);
    r.expect("(c) dim_Q im A = |K| * dim_G im p*A", im_q, k * im_g);

    // (d) kernels, rank-nullity over the domain
    const Rational ker_q = vn_dim_kernel(a).vn_dim;
    const Rational ker_g = vn_dim_kernel(pulled).vn_dim;
    r.record("dim_Q ker A", ker_q);
    r.record("dim_G ker p*A", ker_g);
    r.expect("(d) dim_Q ker A + dim_Q im A = m", as_q(m), ker_q + im_q);
    r.expect("(d) dim_G ker p*A + dim_G im p*A = m", as_q(m), ker_g + im_g);
    r.expect("(d) |K| * dim_G ker p*A = (|K|-1) m + dim_Q ker A", (k - 1) * as_q(m) + ker_q, k * ker_g);
    return r;
}

SuiteReport verify_prop44(const QuotientMap& p, const RingMatrix& a) {
    if (!p.has_section()) throw DomainError("verify_prop44: the quotient map needs a section");
    if (a.group_ptr() != p.source) throw MismatchError("verify_prop44: matrix must be over the source group");
    SuiteReport r;
    r.suite = "prop44";
    r.instance = quotient_label(p) + " A=" + std::to_string(a.rows()) + "x" + std::to_string(a.cols());

    const Subgroup s = p.section_image();
    const auto [index, transversal] = index_and_transversal(s);
    const Rational dim_g = vn_dim_kernel(a).vn_dim;
    const Rational dim_s = vn_dim_kernel(restrict_matrix(a, transversal)).vn_dim;
    const Rational g = as_q(p.source->order());
    const Rational q = as_q(p.target->order());
    const Rational k = as_q(p.kernel.size());
    const Rational sq = as_q(s.size());
    const Rational t1 = g * dim_g;
    const Rational t2 = q * k * dim_g;
    const Rational t3 = sq * as_q(index) * dim_g;
    const Rational t4 = sq * dim_s;
    r.record("dim_G ker A", dim_g);
    r.record("dim_s(Q) ker res(A)", dim_s);
    r.record("|G| * dim_G ker A", t1);
    r.expect("|G| dim_G = |Q| |K| dim_G", t1, t2);
    r.expect("|Q| |K| dim_G = |s(Q)| [G:s(Q)] dim_G", t2, t3);
    r.expect("|s(Q)| [G:s(Q)] dim_G = |s(Q)| dim_s(Q) ker res(A)", t3, t4);
    return r;
}

SuiteReport verify_lemma42(const QuotientMap& p) {
    SuiteReport r;
    r.suite = "lemma42";
    r.instance = quotient_label(p);
    const auto& g = *p.source;
    r.expect("|G| = |K| * |Q|", as_q(g.order()), as_q(p.kernel.size()) * as_q(p.target->order()));
    r.expect("lcm(G) = |K| * lcm(Q)", as_q(lcm_finite(g)), as_q(p.kernel.size()) * as_q(lcm_finite(*p.target)));
    for (const auto& w : sample_subgroups(p.source)) {
        std::set<Elem> wk;
        std::set<Elem> image;
        for (Elem x : w.members()) {
            image.insert(p.projection[x]);
            for (Elem y : p.kernel.members()) wk.insert(g.mul(x, y));
        }
        std::string name = "W = <";
        for (std::size_t i = 0; i < w.size() && i < 4; ++i) name += (i ? "," : "") + std::to_string(w.members()[i]);
        name += w.size() > 4 ? ",...>" : ">";
        r.expect("|W K| = |K| |p(W)| for " + name + " of order " + std::to_string(w.size()), as_q(p.kernel.size()) * as_q(image.size()),
                 as_q(wk.size()));
    }
    return r;
}

SuiteReport verify_transfer_properties(const QuotientMap& p, unsigned pairs, std::uint64_t seed) {
    const FieldSpec& field = FieldSpec::rationals();
    SuiteReport r;
    r.suite = "pstar";
    r.instance = quotient_label(p) + " pairs=" + std::to_string(pairs) + " seed=" + std::to_string(seed);
    const Rational k = as_q(p.kernel.size());
    const RingElement n_k = averaging_idempotent(p.kernel, field);
    std::mt19937_64 rng(seed);

    unsigned ok[6] = {0, 0, 0, 0, 0, 0};
    unsigned nonnegative = 0;
    for (unsigned t = 0; t < pairs; ++t) {
        const RingElement x = random_element(p.source, field, rng);
        const RingElement x2 = random_element(p.source, field, rng);
        const RingElement y = random_element(p.target, field, rng);
        const RingElement z = random_element(p.target, field, rng);
        const RingElement px = pushforward(p, x);

        if (pushforward(p, pullback(p, y)) == y) ++ok[0];
        if (pullback(p, px) == n_k * x) ++ok[1];
        if (inner_product(px, y) == inner_product(x, pullback(p, y)) * k) ++ok[2];

        const Rational gap = (inner_product(x, x) * k - inner_product(px, px)).as_rational();
        Rational deviation = 0;
        for (const auto& fiber : p.fibers) {
            CycloScalar mean(field);
            for (Elem g : fiber) mean += x.coefficient(g);
            mean *= Rational(1) / k;
            for (Elem g : fiber) {
                const CycloScalar d = x.coefficient(g) - mean;
                deviation += (d.conj() * d).as_rational();
            }
        }
        if (gap == k * deviation) ++ok[3];
        if (gap >= 0) ++nonnegative;

        if (inner_product(pullback(p, y), pullback(p, z)) * k == inner_product(y, z)) ++ok[4];
        if (pushforward(p, x * x2) == px * pushforward(p, x2)) ++ok[5];
    }
    const Rational total = as_q(pairs);
    r.expect("(1) p_* p^* y = y", total, as_q(ok[0]));
    r.expect("(2) p^* p_* x = N_K x", total, as_q(ok[1]));
    r.expect("(3) <p_* x, y> = |K| <x, p^* y>", total, as_q(ok[2]));
    r.expect("(4) |K|<x,x> - <p_* x, p_* x> = |K| * sum of squared fiber deviations", total, as_q(ok[3]));
    r.expect("(4) <p_* x, p_* x> <= |K| <x,x>", total, as_q(nonnegative));
    r.expect("(5) <p^* y, p^* z> = <y, z> / |K|", total, as_q(ok[4]));
    r.expect("p_* is multiplicative", total, as_q(ok[5]));
    return r;
}

}  // namespace vnlab
