#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "tropmoment/heights.hpp"
#include "tropmoment/lattice.hpp"
#include "tropmoment/metricgraph.hpp"

namespace tropmoment::io {

// Reads and parses a JSON file. ParseError carries the file name in the path.
nlohmann::json load_json(const std::filesystem::path& file);

// Rationals are "p/q" strings (or "p"); plain JSON integers are accepted too.
// Anything else raises SchemaError at `path`.
Rational rational_from_json(const nlohmann::json& value, const std::string& path,
                            const std::string& module);

// {"rank": g, "gram": [["p/q", ...], ...]}
GramLattice lattice_from_json(const nlohmann::json& doc);

// {"vertices": n, "edges": [{"tail": i, "head": j, "length": "p/q"}, ...]}
MetricGraph graph_from_json(const nlohmann::json& doc);

// {"degree": d, "nonarch": [{"ord_delta": n, "log_nv": x}],
//  "arch": [{"tau_re": a, "tau_im": b}]}
ECPlaceData places_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const Rational& value);  // "p/q" string
nlohmann::json to_json(const RationalMatrix& m);

// Shortest decimal string that round-trips to the same double.
std::string format_double(double value);

}  // namespace tropmoment::io
