#include "vnlab/io.hpp"

#include "vnlab/error.hpp"

#include <sstream>

namespace vnlab {

namespace {

const Json& field(const Json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object()) throw SpecError(path + ": expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw SpecError(path + ": missing field \"" + key + "\"");
    return *it;
}

std::size_t count(const Json& v, const std::string& path) {
    if (!v.is_number_integer() || v.get<long long>() < 0) throw SpecError(path + ": expected a nonnegative integer");
    return v.get<std::size_t>();
}

std::vector<std::vector<Elem>> int_rows(const Json& v, const std::string& path) {
    if (!v.is_array()) throw SpecError(path + ": expected an array of arrays");
    std::vector<std::vector<Elem>> rows;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string p = path + "[" + std::to_string(i) + "]";
        if (!v[i].is_array()) throw SpecError(p + ": expected an array");
        std::vector<Elem> row;
        for (std::size_t j = 0; j < v[i].size(); ++j) row.push_back(static_cast<Elem>(count(v[i][j], p + "[" + std::to_string(j) + "]")));
        rows.push_back(std::move(row));
    }
    return rows;
}

GroupPtr parse_group_at(const Json& spec, const GroupLimits& limits, const std::string& path) {
    const Json& type_field = field(spec, "type", path);
    if (!type_field.is_string()) throw SpecError(path + ".type: expected a string");
    const std::string type = type_field.get<std::string>();
    try {
        if (type == "cyclic" || type == "symmetric" || type == "dihedral" || type == "lamplighter") {
            const std::size_t n = count(field(spec, "n", path), path + ".n");
            if (n == 0) throw SpecError(path + ".n: must be positive");
            if (type == "cyclic") return cyclic(n, limits);
            if (type == "symmetric") return symmetric(n, limits);
            if (type == "dihedral") return dihedral(n, limits);
            return lamplighter(n, limits);
        }
        if (type == "quaternion8") return quaternion8();
        if (type == "product") {
            const Json& factors = field(spec, "factors", path);
            if (!factors.is_array() || factors.empty()) throw SpecError(path + ".factors: expected a nonempty array");
            GroupPtr g = parse_group_at(factors[0], limits, path + ".factors[0]");
            for (std::size_t i = 1; i < factors.size(); ++i)
                g = direct_product(g, parse_group_at(factors[i], limits, path + ".factors[" + std::to_string(i) + "]"), limits);
            return g;
        }
        if (type == "wreath") {
            const GroupPtr base = parse_group_at(field(spec, "base", path), limits, path + ".base");
            const std::size_t n = count(field(spec, "n", path), path + ".n");
            if (n == 0) throw SpecError(path + ".n: must be positive");
            return wreath_cyclic(base, n, limits);
        }
        if (type == "semidirect") {
            const GroupPtr base = parse_group_at(field(spec, "base", path), limits, path + ".base");
            const GroupPtr acting = parse_group_at(field(spec, "acting", path), limits, path + ".acting");
            return semidirect_product(base, acting, int_rows(field(spec, "action", path), path + ".action"), limits);
        }
        if (type == "table") {
            const auto rows = int_rows(field(spec, "mul", path), path + ".mul");
            std::string label = "table(" + std::to_string(rows.size()) + ")";
            if (auto it = spec.find("label"); it != spec.end()) {
                if (!it->is_string()) throw SpecError(path + ".label: expected a string");
                label = it->get<std::string>();
            }
            std::vector<NamedElement> gens;
            if (auto it = spec.find("generators"); it != spec.end()) {
                if (!it->is_object()) throw SpecError(path + ".generators: expected an object of name: index");
                for (const auto& [name, idx] : it->items()) {
                    const std::size_t e = count(idx, path + ".generators." + name);
                    if (e >= rows.size()) throw SpecError(path + ".generators." + name + ": index out of range");
                    gens.push_back({name, static_cast<Elem>(e)});
                }
            }
            return make_table_group(label, rows, std::move(gens), limits);
        }
        if (type == "permutation") {
            const std::size_t degree = count(field(spec, "degree", path), path + ".degree");
            const auto raw = int_rows(field(spec, "generators", path), path + ".generators");
            std::vector<std::vector<std::size_t>> gens;
            for (const auto& r : raw) gens.emplace_back(r.begin(), r.end());
            return permutation_group(degree, gens, limits);
        }
    } catch (const SpecError&) {
        throw;
    } catch (const Error& e) {
        throw SpecError(path + ": " + e.what());
    }
    throw SpecError(path + ".type: unknown group type \"" + type + "\"");
}

Elem resolve_term_element(const Json& term, const GroupTable& g, const std::string& path) {
    if (auto it = term.find("word"); it != term.end()) {
        if (!it->is_string()) throw SpecError(path + ".word: expected a string");
        try {
            return g.evaluate_word(it->get<std::string>());
        } catch (const Error& e) {
            throw SpecError(path + ".word: " + e.what());
        }
    }
    const Json& el = field(term, "element", path);
    if (el.is_string()) {
        const auto name = el.get<std::string>();
        if (auto found = g.find_element(name)) return *found;
        if (auto gen = g.generator(name)) return *gen;
        if (name == "e" || name == "1") return 0;
        throw SpecError(path + ".element: unknown element name \"" + name + "\"");
    }
    const std::size_t idx = count(el, path + ".element");
    if (idx >= g.order()) throw SpecError(path + ".element: index " + std::to_string(idx) + " out of range");
    return static_cast<Elem>(idx);
}


}  // namespace

GroupPtr parse_group_spec(const Json& spec, const GroupLimits& limits) { return parse_group_at(spec, limits, "group"); }

Json group_to_table_spec(const GroupTable& g) {
    Json gens = Json::object();
    for (const auto& s : g.generators()) gens[s.name] = s.element;
    return Json{{"type", "table"}, {"label", g.label()}, {"mul", g.table_rows()}, {"generators", gens}};
}

RingMatrix parse_matrix_spec(const Json& spec, const GroupPtr& g) {
    const std::string path = "matrix";
    unsigned conductor = 1;
    if (auto it = spec.find("conductor"); it != spec.end()) {
        const std::size_t c = count(*it, path + ".conductor");
        if (c == 0) throw SpecError(path + ".conductor: must be positive");
        conductor = static_cast<unsigned>(c);
    }
    const FieldSpec& fs = FieldSpec::get(conductor);
    const Json& shape = field(spec, "shape", path);
    if (!shape.is_array() || shape.size() != 2) throw SpecError(path + ".shape: expected [m, n]");
    const std::size_t m = count(shape[0], path + ".shape[0]");
    const std::size_t n = count(shape[1], path + ".shape[1]");
    if (m == 0 || n == 0) throw SpecError(path + ".shape: dimensions must be positive");
    const Json& entries = field(spec, "entries", path);
    if (!entries.is_array() || entries.size() != m) throw SpecError(path + ".entries: expected " + std::to_string(m) + " rows");
    RingMatrix a(g, fs, m, n);
    for (std::size_t i = 0; i < m; ++i) {
        const std::string rp = path + ".entries[" + std::to_string(i) + "]";
        if (!entries[i].is_array() || entries[i].size() != n) throw SpecError(rp + ": expected " + std::to_string(n) + " entries");
        for (std::size_t j = 0; j < n; ++j) {
            const std::string ep = rp + "[" + std::to_string(j) + "]";
            const Json& terms = entries[i][j];
            if (!terms.is_array()) throw SpecError(ep + ": expected an array of terms");
            RingElement x(g, fs);
            for (std::size_t t = 0; t < terms.size(); ++t) {
                const std::string tp = ep + "[" + std::to_string(t) + "]";
                if (!terms[t].is_object()) throw SpecError(tp + ": expected an object");
                const Elem e = resolve_term_element(terms[t], *g, tp);
                CycloScalar c(fs, 1L);
                if (auto it = terms[t].find("coeff"); it != terms[t].end()) {
                    try {
                        if (it->is_string()) {
                            c = CycloScalar::parse(fs, it->get<std::string>());
                        } else if (it->is_number_integer()) {
                            c = CycloScalar(fs, Rational(it->get<long>()));
                        } else {
                            throw SpecError("expected a scalar string such as \"1/2\" or \"1 + z\"");
                        }
                    } catch (const Error& err) {
                        throw SpecError(tp + ".coeff: " + err.what());
                    }
                }
                x.add_term(e, c);
            }
            a.set(i, j, std::move(x));
        }
    }
    return a;
}

Json to_json(const DimReport& r) {
    Json memberships = Json::array();
    for (const auto& mb : r.memberships) memberships.push_back({{"modulus", mb.modulus}, {"holds", mb.holds}});
    Json j{{"group", r.group},
           {"order", r.order},
           {"shape", {r.rows, r.cols}},
           {"vn_dim", to_string(r.vn_dim)},
           {"kernel_dim", r.kernel_dim},
           {"lcm_times_dim", to_string(r.lcm_times_dim)},
           {"memberships", memberships},
           {"path", to_string(r.path)},
           {"exact", r.exact}};
    if (r.path == DimPath::character_blocks) {
        j["blocks"] = r.blocks;
        j["block_subgroup_order"] = r.block_subgroup_order;
    }
    if (!r.screening_primes.empty()) j["screening_primes"] = r.screening_primes;
    return j;
}

Json to_json(const SuiteReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back({{"label", c.label}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    Json observations = Json::array();
    for (const auto& o : r.observations) {
        Json ob{{"label", o.label}, {"lhs", o.lhs}, {"rhs", o.rhs}, {"holds", o.holds}, {"asserted", false}};
        if (!o.note.empty()) ob["note"] = o.note;
        observations.push_back(std::move(ob));
    }
    Json values = Json::object();
    for (const auto& [k, v] : r.values) values[k] = v;
    return Json{{"suite", r.suite},       {"instance", r.instance},  {"pass", r.pass()},
                {"precondition_failed", r.precondition_failed},      {"checks", checks},
                {"values", values},       {"observations", observations}, {"notes", r.notes}};
}

Json to_json(const ApproxRun& r, unsigned decimal_digits) {
    Json points = Json::array();
    for (const auto& p : r.points) {
        Json pt{{"parameter", p.parameter},
                {"order", p.order},
                {"vn_dim", to_string(p.vn_dim)},
                {"decimal", rounded_decimal(p.vn_dim, decimal_digits)},
                {"path", to_string(p.path)}};
        if (p.error) pt["error"] = to_string(*p.error);
        pt["seconds"] = p.seconds;
        points.push_back(std::move(pt));
    }
    Json j{{"family", r.family}, {"operator", r.op}};
    j["target"] = r.target ? Json(to_string(*r.target)) : Json(nullptr);
    j["points"] = points;
    j["complete"] = r.complete;
    if (!r.complete) j["failure"] = r.failure;
    return j;
}

Json to_json(const SeriesSum& s) {
    return Json{{"terms", s.terms},
                {"decimal", s.decimal},
                {"exact", to_string(s.exact)},
                {"tail_bound", to_string(s.tail_bound)},
                {"tail_bound_decimal", rounded_decimal(s.tail_bound, 30)},
                {"certified_digits", s.certified_digits}};
}

std::string to_csv(const ApproxRun& r, unsigned decimal_digits) {
    std::ostringstream out;
    out << "parameter,group_order,vn_dim,decimal,abs_error\n";
    for (const auto& p : r.points) {
        out << p.parameter << ',' << p.order << ',' << to_string(p.vn_dim) << ',' << rounded_decimal(p.vn_dim, decimal_digits) << ','
            << (p.error ? to_string(*p.error) : std::string()) << '\n';
    }
    return out.str();
}

}  // namespace vnlab
