#include "tropmoment/io.hpp"

#include <charconv>
#include <fstream>

#include "tropmoment/error.hpp"

namespace tropmoment::io {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& module, const std::string& path,
                               const std::string& message) {
  throw Error(ErrorCode::SchemaError, module, message, path);
}

const json& require(const json& obj, const char* key, const std::string& path,
                    const std::string& module) {
  if (!obj.is_object()) schema_error(module, path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) {
    schema_error(module, path + "/" + key, std::string("missing field \"") + key + "\"");
  }
  return *it;
}

long integer_field(const json& value, const std::string& path, const std::string& module) {
  if (!value.is_number_integer()) schema_error(module, path, "expected an integer");
  return value.get<long>();
}

double number_field(const json& value, const std::string& path, const std::string& module) {
  if (!value.is_number()) schema_error(module, path, "expected a number");
  return value.get<double>();
}

const json& array_field(const json& value, const std::string& path,
                        const std::string& module) {
  if (!value.is_array()) schema_error(module, path, "expected an array");
  return value;
}

}  // namespace

json load_json(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) {
    throw Error(ErrorCode::ParseError, "io", "cannot open " + file.string(),
                file.string());
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "io", e.what(), file.string());
  }
}

Rational rational_from_json(const json& value, const std::string& path,
                            const std::string& module) {
  if (value.is_number_integer()) return Rational(Integer(value.dump()));
  if (!value.is_string()) {
    schema_error(module, path, "expected a rational string \"p/q\"");
  }
  try {
    return parse_rational(value.get<std::string>());
  } catch (const Error& e) {
    schema_error(module, path, e.what());
  }
}

GramLattice lattice_from_json(const json& doc) {
  const std::string module = "lattice";
  const long rank = integer_field(require(doc, "rank", "", module), "/rank", module);
  const json& rows = array_field(require(doc, "gram", "", module), "/gram", module);
  if (rank < 1) schema_error(module, "/rank", "rank must be positive");
  if (rows.size() != static_cast<std::size_t>(rank)) {
    schema_error(module, "/gram", "expected " + std::to_string(rank) + " rows");
  }
  RationalMatrix gram;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string row_path = "/gram/" + std::to_string(i);
    const json& row = array_field(rows[i], row_path, module);
    if (row.size() != static_cast<std::size_t>(rank)) {
      schema_error(module, row_path, "expected " + std::to_string(rank) + " entries");
    }
    RationalVector out;
    for (std::size_t j = 0; j < row.size(); ++j) {
      out.push_back(rational_from_json(row[j], row_path + "/" + std::to_string(j), module));
    }
    gram.push_back(std::move(out));
  }
  try {
    return GramLattice::validate(std::move(gram));
  } catch (const Error& e) {
    throw Error(e.code(), e.module(), e.what(), "/gram");
  }
}

MetricGraph graph_from_json(const json& doc) {
  const std::string module = "metricgraph";
  const long n = integer_field(require(doc, "vertices", "", module), "/vertices", module);
  if (n < 1) schema_error(module, "/vertices", "vertex count must be positive");
  const json& edges = array_field(require(doc, "edges", "", module), "/edges", module);
  std::vector<Edge> out;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string path = "/edges/" + std::to_string(k);
    const json& e = edges[k];
    const long tail = integer_field(require(e, "tail", path, module), path + "/tail", module);
    const long head = integer_field(require(e, "head", path, module), path + "/head", module);
    if (tail < 0 || head < 0 || tail >= n || head >= n) {
      schema_error(module, path, "endpoint out of range");
    }
    out.push_back({static_cast<std::size_t>(tail), static_cast<std::size_t>(head),
                   rational_from_json(require(e, "length", path, module),
                                      path + "/length", module)});
  }
  try {
    return MetricGraph::create(static_cast<std::size_t>(n), std::move(out));
  } catch (const Error& e) {
    if (!e.path().empty()) throw;
    throw Error(e.code(), e.module(), e.what(), "/edges");
  }
}

ECPlaceData places_from_json(const json& doc) {
  const std::string module = "heights";
  ECPlaceData data;
  data.degree = static_cast<int>(
      integer_field(require(doc, "degree", "", module), "/degree", module));
  if (doc.contains("nonarch")) {
    const json& places = array_field(doc["nonarch"], "/nonarch", module);
    for (std::size_t k = 0; k < places.size(); ++k) {
      const std::string path = "/nonarch/" + std::to_string(k);
      data.nonarch.push_back(
          {integer_field(require(places[k], "ord_delta", path, module),
                         path + "/ord_delta", module),
           number_field(require(places[k], "log_nv", path, module), path + "/log_nv",
                        module)});
    }
  }
  const json& arch = array_field(require(doc, "arch", "", module), "/arch", module);
  for (std::size_t k = 0; k < arch.size(); ++k) {
    const std::string path = "/arch/" + std::to_string(k);
    data.arch.push_back({UpperHalfPoint{
        number_field(require(arch[k], "tau_re", path, module), path + "/tau_re", module),
        number_field(require(arch[k], "tau_im", path, module), path + "/tau_im",
                     module)}});
  }
  validate(data);
  return data;
}

json to_json(const Rational& value) { return to_string(value); }

json to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& v : row) r.push_back(to_string(v));
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

}  // namespace tropmoment::io
