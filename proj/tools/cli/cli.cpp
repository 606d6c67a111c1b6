#include "cli.hpp"

#include "vnlab/error.hpp"
#include "vnlab/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

namespace vnlab::cli {

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_input = 2;

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw SpecError(path + ": " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw SpecError("cannot write '" + path + "'");
    out << text;
}

struct Instance {
    std::string group_file;
    std::string matrix_file;
    std::vector<Elem> u_gens;
    std::vector<Elem> v_gens;
    std::vector<Elem> kernel_gens;
    std::vector<Elem> complement_gens;
    bool have_u = false, have_v = false, have_kernel = false, have_complement = false;
    std::uint64_t pn = 3;
    std::uint64_t seed = 0;
    unsigned trials = 25;
    unsigned pairs = 100;
    unsigned conductor = 1;
    unsigned random = 0;
    int example = 0;
    bool trivial_v2 = false;
    std::string report_file;
};

Subgroup subgroup_from(const GroupPtr& g, const std::vector<Elem>& gens, const char* flag) {
    for (Elem e : gens) {
        if (e >= g->order()) throw SpecError(std::string(flag) + ": element index " + std::to_string(e) + " out of range");
    }
    return Subgroup::closure(g, gens);
}

GroupPtr group_or(const Instance& in, const std::function<GroupPtr()>& fallback) {
    return in.group_file.empty() ? fallback() : parse_group_spec(read_json(in.group_file));
}

RingMatrix matrix_or(const Instance& in, const GroupPtr& g, const std::function<RingMatrix()>& fallback) {
    return in.matrix_file.empty() ? fallback() : parse_matrix_spec(read_json(in.matrix_file), g);
}

RingMatrix one_by_one(RingElement x) { return RingMatrix({{std::move(x)}}); }

int emit_suites(const std::vector<SuiteReport>& reports, const Instance& in, std::ostream& out) {
    Json j;
    if (reports.size() == 1) {
        j = to_json(reports.front());
    } else {
        j = Json::array();
        for (const auto& r : reports) j.push_back(to_json(r));
    }
    const std::string text = j.dump(2) + "\n";
    out << text;
    if (!in.report_file.empty()) write_text(in.report_file, text);
    bool precondition = false, failed = false;
    for (const auto& r : reports) {
        precondition = precondition || r.precondition_failed;
        failed = failed || !r.pass();
    }
    if (precondition) return exit_input;
    return failed ? exit_fail : exit_pass;
}

// The S3 instance used as the default for several suites.
struct S3Defaults {
    GroupPtr g = symmetric(3);
    Elem transposition = *g->find_element("(1,2)");
    Elem three_cycle = *g->generator("c");
};

int run_verify(const std::string& suite, const Instance& in, std::ostream& out) {
    std::vector<SuiteReport> reports;
    std::mt19937_64 rng(in.seed);

    if (suite == "prop31") {
        if (in.example != 0) {
            reports.push_back(verify_prop31_footnotes(in.example, in.trivial_v2));
            return emit_suites(reports, in, out);
        }
        S3Defaults s3;
        const GroupPtr g = group_or(in, [&] { return s3.g; });
        const bool defaults = in.group_file.empty();
        if (!defaults && (!in.have_u || !in.have_v)) throw SpecError("prop31 with --group needs --U and --V");
        const Subgroup u = in.have_u ? subgroup_from(g, in.u_gens, "--U") : Subgroup::closure(g, std::vector<Elem>{s3.transposition});
        const Subgroup v = in.have_v ? subgroup_from(g, in.v_gens, "--V") : Subgroup::closure(g, std::vector<Elem>{s3.three_cycle});
        const RingMatrix a = matrix_or(in, g, [&] {
            if (!defaults) throw SpecError("prop31 with --group needs --matrix");
            return one_by_one(RingElement::one(g) + RingElement::basis(g, s3.transposition));
        });
        reports.push_back(verify_prop31(u, v, a, in.pn));
        return emit_suites(reports, in, out);
    }

    if (suite == "restriction") {
        S3Defaults s3;
        const GroupPtr g = group_or(in, [&] { return s3.g; });
        const bool defaults = in.group_file.empty();
        const Subgroup u = in.have_u ? subgroup_from(g, in.u_gens, "--U") : defaults ? Subgroup::closure(g, std::vector<Elem>{s3.three_cycle})
                                                                                   : throw SpecError("restriction with --group needs --U");
        if (in.random > 0) {
            for (unsigned i = 0; i < in.random; ++i) reports.push_back(verify_restriction(u, random_matrix(g, FieldSpec::get(in.conductor), rng)));
        } else {
            const RingMatrix a = matrix_or(in, g, [&] {
                if (!defaults) throw SpecError("restriction with --group needs --matrix or --random");
                return one_by_one(RingElement::one(g) + RingElement::basis(g, s3.transposition));
            });
            reports.push_back(verify_restriction(u, a));
        }
        return emit_suites(reports, in, out);
    }

    if (suite == "atiyah-fuzz") {
        const GroupPtr g = group_or(in, [] { return symmetric(3); });
        reports.push_back(verify_strong_atiyah_finite(g, in.trials, in.seed, in.conductor));
        return emit_suites(reports, in, out);
    }

    // Quotient suites: default instances per suite.
    GroupPtr g;
    std::optional<Subgroup> kernel;
    if (!in.group_file.empty()) {
        g = parse_group_spec(read_json(in.group_file));
        if (!in.have_kernel) throw SpecError(suite + " with --group needs --kernel");
        kernel = subgroup_from(g, in.kernel_gens, "--kernel");
    } else if (suite == "prop44") {
        g = direct_product(cyclic(2), cyclic(3));
        kernel = in.have_kernel ? subgroup_from(g, in.kernel_gens, "--kernel") : Subgroup(g, {0, 3});
    } else if (suite == "lemma42") {
        S3Defaults s3;
        g = s3.g;
        kernel = in.have_kernel ? subgroup_from(g, in.kernel_gens, "--kernel") : Subgroup::closure(g, std::vector<Elem>{s3.three_cycle});
    } else {
        g = cyclic(4);
        kernel = in.have_kernel ? subgroup_from(g, in.kernel_gens, "--kernel") : Subgroup(g, {0, 2});
    }
    QuotientMap p = quotient_map(*kernel);
    if (in.have_complement) p = with_section(std::move(p), subgroup_from(g, in.complement_gens, "--complement"));

    if (suite == "lemma42") {
        reports.push_back(verify_lemma42(p));
    } else if (suite == "pstar") {
        reports.push_back(verify_transfer_properties(p, in.pairs, in.seed));
    } else if (suite == "prop41") {
        if (in.random > 0) {
            for (unsigned i = 0; i < in.random; ++i) reports.push_back(verify_prop41(p, random_matrix(p.target, FieldSpec::get(in.conductor), rng)));
        } else {
            const RingMatrix a = matrix_or(in, p.target, [&] {
                if (!in.group_file.empty()) throw SpecError("prop41 with --group needs --matrix or --random");
                return one_by_one(RingElement::one(p.target) + RingElement::basis(p.target, 1));
            });
            reports.push_back(verify_prop41(p, a));
        }
    } else if (suite == "prop44") {
        if (!p.has_section()) throw DomainError("prop44: no section found; pass --complement");
        if (in.random > 0) {
            for (unsigned i = 0; i < in.random; ++i) reports.push_back(verify_prop44(p, random_matrix(g, FieldSpec::get(in.conductor), rng)));
        } else {
            const RingMatrix a = matrix_or(in, g, [&] {
                if (!in.group_file.empty()) throw SpecError("prop44 with --group needs --matrix or --random");
                // e + (s, g) with s generating Z/2 and g generating Z/3
                return one_by_one(RingElement::one(g) + RingElement::basis(g, 1 * 3 + 1));
            });
            reports.push_back(verify_prop44(p, a));
        }
    } else {
        throw SpecError("unknown suite '" + suite + "'");
    }
    return emit_suites(reports, in, out);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact von Neumann dimensions over finite group rings", "vnlab"};
    app.require_subcommand(1);

    // dim
    std::string group_file, matrix_file, report_file, strategy = "auto";
    std::vector<std::uint64_t> moduli;
    std::uint64_t seed = 0;
    auto* dim = app.add_subcommand("dim", "kernel dimension of a matrix over a finite group ring");
    dim->add_option("--group", group_file, "group spec (JSON)")->required();
    dim->add_option("--matrix", matrix_file, "matrix spec (JSON)")->required();
    dim->add_option("--report", report_file, "also write the report here");
    dim->add_option("--strategy", strategy, "auto, dense, blocks or modular")->check(CLI::IsMember({"auto", "dense", "blocks", "modular"}));
    dim->add_option("--modulus", moduli, "extra moduli d for lcm(G)*dim in dZ");
    dim->add_option("--seed", seed, "seed for modular screening");

    // verify
    Instance in;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->require_subcommand(1);
    const std::vector<std::pair<std::string, std::string>> suites = {
        {"prop31", "subgroup pair U, V with |V|/|U cap V| a prime power (default S3, U=<(1,2)>, V=A3)"},
        {"prop41", "image dimensions under a quotient map (default Z/4 -> Z/2)"},
        {"prop44", "split extension chain through a section (default Z/2 x Z/3 -> Z/3)"},
        {"lemma42", "order bookkeeping |G| = |K||Q| (default S3/A3)"},
        {"restriction", "dim_U res(A) = [G:U] dim_G A for two transversals (default S3, U=A3)"},
        {"pstar", "algebraic properties of the transfer maps p_* and p^* (default Z/4 -> Z/2)"},
        {"atiyah-fuzz", "random matrices: lcm(G) * dim ker A is an integer"},
    };
    for (const auto& [name, description] : suites) {
        auto* s = verify->add_subcommand(name, description);
        s->add_option("--group", in.group_file, "group spec (JSON)");
        s->add_option("--report", in.report_file, "also write the report here");
        s->add_option("--seed", in.seed, "random seed")->capture_default_str();
        if (name == "prop31" || name == "restriction" || name == "prop41" || name == "prop44") {
            s->add_option("--matrix", in.matrix_file, "matrix spec (JSON)");
        }
        if (name == "prop31" || name == "restriction") {
            s->add_option("--U", in.u_gens, "generators of U (element indices)")->delimiter(',')->each([&](const std::string&) { in.have_u = true; });
        }
        if (name == "prop31") {
            s->add_option("--V", in.v_gens, "generators of V (element indices)")->delimiter(',')->each([&](const std::string&) { in.have_v = true; });
            s->add_option("--pn", in.pn, "prime power")->capture_default_str();
            s->add_option("--example", in.example, "run the built-in case 1 or 2")->check(CLI::Range(1, 2));
            s->add_flag("--trivial-v2", in.trivial_v2, "example 2 with V2 trivial");
        }
        if (name == "prop41" || name == "prop44" || name == "lemma42" || name == "pstar") {
            s->add_option("--kernel", in.kernel_gens, "generators of the normal subgroup K")->delimiter(',')->each([&](const std::string&) {
                in.have_kernel = true;
            });
        }
        if (name == "prop44") {
            s->add_option("--complement", in.complement_gens, "generators of a complement to K")->delimiter(',')->each([&](const std::string&) {
                in.have_complement = true;
            });
        }
        if (name == "prop41" || name == "prop44" || name == "restriction") {
            s->add_option("--random", in.random, "check this many seeded random matrices instead");
        }
        if (name == "pstar") s->add_option("--pairs", in.pairs, "random element pairs")->capture_default_str();
        if (name == "atiyah-fuzz") s->add_option("--trials", in.trials, "random matrices")->capture_default_str();
        if (name == "atiyah-fuzz" || name == "restriction" || name == "prop41" || name == "prop44") {
            s->add_option("--conductor", in.conductor, "coefficient field Q(zeta_n)")->check(CLI::PositiveNumber);
        }
    }

    // approx
    std::size_t from = 2, to = 10;
    std::string target_text, csv_file, approx_report;
    auto* approx = app.add_subcommand("approx", "kernel dimensions along a family of finite quotients");
    approx->require_subcommand(1);
    auto* lamp = approx->add_subcommand("lamplighter", "Markov operator over {t, a*t} on L_n");
    lamp->add_option("--from", from, "first n")->capture_default_str();
    lamp->add_option("--to", to, "last n")->capture_default_str();
    lamp->add_option("--target", target_text, "exact target value, e.g. 1/3");
    lamp->add_option("--csv", csv_file, "write a CSV table here");
    lamp->add_option("--report", approx_report, "also write the JSON run here");

    // series
    std::size_t terms = 200;
    unsigned digits = 10;
    bool series_json = false;
    auto* series = app.add_subcommand("series", "partial sums of known series");
    series->require_subcommand(1);
    auto* ds02 = series->add_subcommand("ds02", "sum_{k>=2} phi(k)/(2^k-1)^2");
    ds02->add_option("--terms", terms, "largest k")->capture_default_str();
    ds02->add_option("--digits", digits, "decimal places")->capture_default_str()->check(CLI::Range(0u, 10000u));
    ds02->add_flag("--json", series_json, "print the full JSON record");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_pass : exit_input;
    }

    try {
        if (dim->parsed()) {
            const GroupPtr g = parse_group_spec(read_json(group_file));
            const RingMatrix a = parse_matrix_spec(read_json(matrix_file), g);
            DimOptions options;
            options.moduli = moduli;
            options.seed = seed;
            if (strategy == "dense") options.strategy = DimOptions::Strategy::dense;
            if (strategy == "blocks") options.strategy = DimOptions::Strategy::character_blocks;
            if (strategy == "modular") options.strategy = DimOptions::Strategy::modular_screen;
            const std::string text = to_json(vn_dim_kernel(a, options)).dump(2) + "\n";
            out << text;
            if (!report_file.empty()) write_text(report_file, text);
            return exit_pass;
        }
        if (verify->parsed()) {
            for (auto* s : verify->get_subcommands()) return run_verify(s->get_name(), in, out);
        }
        if (lamp->parsed()) {
            std::optional<Rational> target;
            if (!target_text.empty()) target = parse_rational(target_text);
            const ApproxRun r = approximation_run(lamplighter_family(), lamplighter_markov_operator(), from, to, target);
            const std::string text = to_json(r).dump(2) + "\n";
            out << text;
            if (!approx_report.empty()) write_text(approx_report, text);
            if (!csv_file.empty()) write_text(csv_file, to_csv(r));
            if (!r.complete) {
                err << "vnlab: " << r.failure << "\n";
                return exit_input;
            }
            return exit_pass;
        }
        if (ds02->parsed()) {
            const SeriesSum s = ds02_partial_sum(terms, digits);
            if (series_json) {
                out << to_json(s).dump(2) << "\n";
            } else {
                out << s.decimal << "\n";
                err << "tail bound " << rounded_decimal(s.tail_bound, 30) << ", certified digits " << s.certified_digits << "\n";
            }
            return exit_pass;
        }
    } catch (const Error& e) {
        err << "vnlab: " << e.what() << "\n";
        return exit_input;
    } catch (const nlohmann::json::exception& e) {
        err << "vnlab: " << e.what() << "\n";
        return exit_input;
    }
    err << "vnlab: no command\n";
    return exit_input;
}

}  // namespace vnlab::cli
