#include "vnlab/vnla.hpp"

#include "vnlab/error.hpp"
#include "vnlab/modular.hpp"

namespace vnlab {

std::string to_string(DimPath path) {
    switch (path) {
        case DimPath::dense: return "dense";
        case DimPath::character_blocks: return "character-blocks";
        case DimPath::modular_screen: return "modular-screen";
    }
    return "unknown";
}

bool DimReport::lcm_times_dim_in(std::uint64_t modulus) const {
    if (modulus == 0) return lcm_times_dim == 0;
    if (lcm_times_dim.get_den() != 1) return false;
    return mpz_divisible_ui_p(lcm_times_dim.get_num_mpz_t(), static_cast<unsigned long>(modulus)) != 0;
}

FieldMatrix regular_rep(const RingMatrix& a) {
    const auto& g = a.group();
    const std::size_t order = g.order();
    FieldMatrix out(a.field(), a.rows() * order, a.cols() * order);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (const auto& [t, c] : a.at(i, j).terms())
                for (Elem x = 0; x < order; ++x) out(i * order + x, j * order + g.mul(x, t)) += c;
    return out;
}

namespace {

void finish_report(DimReport& r, const RingMatrix& a, const DimOptions& options) {
    const auto& g = a.group();
    r.group = g.label();
    r.order = g.order();
    r.rows = a.rows();
    r.cols = a.cols();
    r.vn_dim = Rational(static_cast<unsigned long>(r.kernel_dim), static_cast<unsigned long>(g.order()));
    r.vn_dim.canonicalize();
    r.lcm_times_dim = Rational(static_cast<unsigned long>(lcm_finite(g))) * r.vn_dim;
    r.memberships.clear();
    r.memberships.push_back({1, r.lcm_times_dim_in(1)});
    for (auto d : options.moduli) {
        if (d != 1) r.memberships.push_back({d, r.lcm_times_dim_in(d)});
    }
}

std::optional<Subgroup> block_subgroup_for(const RingMatrix& a, const DimOptions& options) {
    if (options.block_subgroup) {
        if (options.block_subgroup->parent() != a.group_ptr()) throw MismatchError("block subgroup belongs to a different group");
        return options.block_subgroup;
    }
    auto found = find_block_subgroup(a.group_ptr(), a.field());
    if (found && found->size() > 1) return found;
    return std::nullopt;
}

}  // namespace

DimReport vn_dim_kernel(const RingMatrix& a, const DimOptions& options) {
    using Strategy = DimOptions::Strategy;
    DimReport report;
    Strategy strategy = options.strategy;
    std::optional<Subgroup> blocks_over;
    if (strategy == Strategy::automatic) {
        strategy = Strategy::dense;
        if (a.rows() * a.group().order() > options.dense_limit) {
            blocks_over = block_subgroup_for(a, options);
            if (blocks_over) strategy = Strategy::character_blocks;
        }
    } else if (strategy == Strategy::character_blocks) {
        blocks_over = block_subgroup_for(a, options);
        if (!blocks_over) blocks_over = Subgroup::trivial(a.group_ptr());
    }

    switch (strategy) {
        case Strategy::dense:
        case Strategy::automatic: {
            report.path = DimPath::dense;
            report.kernel_dim = kernel_basis(regular_rep(a)).rows();
            break;
        }
        case Strategy::character_blocks: {
            report.path = DimPath::character_blocks;
            std::size_t total = 0;
            const auto blocks = character_blocks(a, *blocks_over);
            for (const auto& b : blocks) total += b.rows() - rank(b);
            report.kernel_dim = total;
            report.blocks = blocks.size();
            report.block_subgroup_order = blocks_over->size();
            break;
        }
        case Strategy::modular_screen: {
            report.path = DimPath::modular_screen;
            report.exact = false;
            const auto rep = regular_rep(a);
            const auto screened = modular_rank(rep, options.seed);
            report.kernel_dim = rep.rows() - screened.best;
            report.screening_primes = screened.primes;
            break;
        }
    }
    finish_report(report, a, options);
    return report;
}

Rational vn_dim_image(const RingMatrix& a, const DimOptions& options) {
    std::size_t r = 0;
    if (options.strategy == DimOptions::Strategy::character_blocks ||
        (options.strategy == DimOptions::Strategy::automatic && a.rows() * a.group().order() > options.dense_limit)) {
        if (auto n = block_subgroup_for(a, options)) {
            for (const auto& b : character_blocks(a, *n)) r += rank(b);
            Rational out(static_cast<unsigned long>(r), static_cast<unsigned long>(a.group().order()));
            out.canonicalize();
            return out;
        }
    }
    r = rank(regular_rep(a));
    Rational out(static_cast<unsigned long>(r), static_cast<unsigned long>(a.group().order()));
    out.canonicalize();
    return out;
}

FieldMatrix kernel_projection(const RingMatrix& a) {
    const auto rep = regular_rep(a);
    return orthogonal_projection(kernel_basis(rep), rep.rows());
}

FieldMatrix image_projection(const RingMatrix& a) {
    const auto rep = regular_rep(a);
    return orthogonal_projection(row_space_basis(rep), rep.cols());
}

Rational vn_trace(const FieldMatrix& p, std::size_t m, const GroupTable& g) {
    const std::size_t order = g.order();
    if (p.rows() != m * order || p.cols() != m * order) {
        throw MismatchError("vn_trace: expected a " + std::to_string(m * order) + "-square matrix");
    }
    CycloScalar sum(p.field());
    for (std::size_t k = 0; k < m; ++k) sum += p(k * order + g.identity(), k * order + g.identity());
    return sum.as_rational();
}

Rational compressed_trace(const RingMatrix& a, const RingElement& w) {
    if (w.group_ptr() != a.group_ptr() || &w.field() != &a.field()) throw MismatchError("compressed_trace: element over a different group or field");
    const auto weight = regular_rep(diag_lift(w, a.rows()));
    return vn_trace(weight * kernel_projection(a), a.rows(), a.group());
}

}  // namespace vnlab
