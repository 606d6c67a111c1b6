#pragma once

// JSON and CSV encodings of specs and reports. Exact values travel as "p/q"
// strings, never as floating point.

#include "vnlab/approx.hpp"
#include "vnlab/verify.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace vnlab {

using Json = nlohmann::ordered_json;

// Group specs: {"type": "cyclic"|"symmetric"|"dihedral"|"lamplighter", "n": k}, {"type": "quaternion8"},
// {"type": "product", "factors": [spec, ...]}, {"type": "wreath", "base": spec, "n": k},
// {"type": "semidirect", "base": spec, "acting": spec, "action": [[...], ...]},
// {"type": "table", "mul": [[...], ...], "label"?, "generators"?: {name: index}},
// {"type": "permutation", "degree": d, "generators": [[...], ...]}.
// Throws SpecError naming the offending field.
GroupPtr parse_group_spec(const Json& spec, const GroupLimits& limits = {});

// {"type": "table", ...} reproducing g exactly, including generator names.
Json group_to_table_spec(const GroupTable& g);

// {"conductor"?: n, "shape": [m, n], "entries": [[[term, ...], ...], ...]} with
// term = {"element": index or element name} or {"word": "t*a^-1"}, plus "coeff"?: scalar text.
RingMatrix parse_matrix_spec(const Json& spec, const GroupPtr& g);

Json to_json(const DimReport& r);
Json to_json(const SuiteReport& r);
Json to_json(const ApproxRun& r, unsigned decimal_digits = 12);
Json to_json(const SeriesSum& s);

// Columns: parameter, group order, vn_dim, decimal, |error to target|.
std::string to_csv(const ApproxRun& r, unsigned decimal_digits = 12);

}  // namespace vnlab
