#include "tropmoment/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "tropmoment/error.hpp"
#include "tropmoment/heights.hpp"
#include "tropmoment/io.hpp"
#include "tropmoment/neron.hpp"
#include "tropmoment/polytope.hpp"
#include "tropmoment/troptheta.hpp"

namespace tropmoment::cli {

using nlohmann::json;

namespace {

json lattice_vector_json(const LatticeVector& v) {
  json out = json::array();
  for (auto c : v) out.push_back(c);
  return out;
}

json point_json(const AmbientPoint& p) {
  json out = json::array();
  for (const auto& c : p) out.push_back(to_string(c));
  return out;
}

void warn_tail(std::ostream& err, const char* what, double bound) {
  if (bound > 1e-12) {
    err << "warning: " << what << " truncation bound " << io::format_double(bound)
        << " exceeds 1e-12; increase --terms\n";
  }
}

json cmd_moment(const RunConfig& c) {
  const GramLattice lat = io::lattice_from_json(io::load_json(c.lattice_path));
  const MomentReport r = moment_report(lat);
  json out = {{"I", to_string(r.moment)},
              {"facets", r.facets},
              {"vertices", r.vertices},
              {"volume_coord", to_string(r.volume)}};
  if (c.grid_n) out["I_via_theta"] = moment_via_theta(lat, *c.grid_n);
  return out;
}

json cmd_voronoi(const RunConfig& c) {
  const GramLattice lat = io::lattice_from_json(io::load_json(c.lattice_path));
  const Polytope cell = voronoi_cell(lat);
  json facets = json::array();
  for (const auto& h : cell.halfspaces) {
    facets.push_back({{"normal", lattice_vector_json(h.normal)},
                      {"offset", to_string(h.offset)}});
  }
  json vertices = json::array();
  for (const auto& v : cell.vertices) vertices.push_back(point_json(v));
  return {{"facets", std::move(facets)},
          {"vertices", std::move(vertices)},
          {"volume_coord", to_string(volume(cell))}};
}

json cmd_theta(const RunConfig& c, std::ostream& err) {
  const GramLattice lat = io::lattice_from_json(io::load_json(c.lattice_path));
  const AmbientPoint nu = parse_rational_list(c.point);
  if (nu.size() != lat.rank()) {
    throw Error(ErrorCode::DimensionMismatch, "troptheta",
                "point has " + std::to_string(nu.size()) + " coordinates, lattice rank is " +
                    std::to_string(lat.rank()),
                "--point");
  }
  std::string name;
  Rational value;
  if (c.kappa) {
    const AmbientPoint kappa = parse_rational_list(*c.kappa);
    if (kappa.size() != lat.rank()) {
      throw Error(ErrorCode::DimensionMismatch, "troptheta",
                  "kappa dimension differs from lattice rank", "--kappa");
    }
    if (!is_two_torsion(kappa)) {
      err << "warning: kappa is not a 2-torsion point of the torus\n";
    }
    if (c.normalized) {
      name = c.subtract_origin ? "norm_psi_kappa0" : "norm_psi_kappa";
      value = c.subtract_origin ? norm_psi_kappa0(lat, kappa, nu)
                                : norm_psi_kappa(lat, kappa, nu);
    } else {
      name = c.subtract_origin ? "psi_kappa0" : "psi_kappa";
      value = c.subtract_origin ? psi_kappa0(lat, kappa, nu) : psi_kappa(lat, kappa, nu);
    }
  } else {
    name = c.normalized ? "norm_psi" : "psi";
    value = c.normalized ? norm_psi(lat, nu) : psi(lat, nu);
  }
  return {{"function", name}, {"value", to_string(value)}};
}

json cmd_graph(const RunConfig& c) {
  const MetricGraph graph = io::graph_from_json(io::load_json(c.input_path));
  const GraphReport r = graph_report(graph);
  json edges = json::array();
  for (std::size_t k = 0; k < graph.edges().size(); ++k) {
    edges.push_back({{"edge", k},
                     {"length", to_string(graph.edges()[k].length)},
                     {"tau_term", to_string(r.tau_terms[k])}});
  }
  return {{"total_length", to_string(r.total_length)},
          {"tau", to_string(r.tau)},
          {"betti", r.betti},
          {"gram", io::to_json(r.gram)},
          {"I", to_string(r.moment)},
          {"remarkable_residual", to_string(r.residual)},
          {"edges", std::move(edges)}};
}

json cmd_elliptic(const RunConfig& c, std::ostream& err) {
  const ECPlaceData data = io::places_from_json(io::load_json(c.input_path));
  for (const auto& a : data.arch) {
    if (needs_reduction_warning(a.tau)) {
      err << "warning: Im tau = " << io::format_double(a.tau.im)
          << " < 0.1; input is probably not reduced to the fundamental domain\n";
    }
  }
  const HeightReport h = theorem_a_residual_elliptic(data, c.terms);
  warn_tail(err, "Delta product", h.tail_bound);
  json terms = json::array();
  for (const auto& t : h.terms) {
    terms.push_back({{"kind", t.kind},
                     {"index", t.index},
                     {"local_invariant", t.local_invariant},
                     {"moment", t.moment},
                     {"lhs_contribution", t.lhs_contribution},
                     {"rhs_contribution", t.rhs_contribution},
                     {"tail_bound", t.tail_bound}});
  }
  return {{"lhs", h.lhs},
          {"rhs", h.rhs},
          {"residual", h.residual},
          {"tail_bound", h.tail_bound},
          {"kappa0", kappa0()},
          {"terms", std::move(terms)}};
}

json cmd_ffheight(const RunConfig& c) {
  std::vector<Rational> moments;
  if (!c.moments.empty()) moments = parse_rational_list(c.moments);
  for (std::size_t k = 0; k < moments.size(); ++k) {
    if (moments[k] < 0) {
      throw Error(ErrorCode::DomainError, "heights", "local moments are non-negative",
                  "--moments/" + std::to_string(k));
    }
  }
  const Rational h = function_field_height(c.g, parse_rational(c.hnt), moments);
  return {{"h", to_string(h)}};
}

json cmd_neron(const RunConfig& c, std::ostream& err) {
  if (c.ell || c.nu) {
    if (!c.ell || !c.nu) {
      throw Error(ErrorCode::DomainError, "neron", "tropical mode needs --ell and --nu",
                  c.ell ? "--nu" : "--ell");
    }
    const auto curve = TateCurve::valuation(parse_rational(*c.ell));
    const Rational nu = parse_rational(*c.nu);
    json out = {{"model", "valuation"}, {"lambda", to_string(trop_lambda(curve, nu))}};
    const Rational& ell = curve.ell();
    if (nu.get_den() == 1 && ell.get_den() == 1 && nu < ell &&
        ell.get_num().fits_slong_p()) {
      out["component_multiplicity"] =
          to_string(component_multiplicity(nu.get_num().get_si(), ell.get_num().get_si()));
    }
    return out;
  }
  if (!c.q_re || !c.q_im || !c.z_re || !c.z_im) {
    throw Error(ErrorCode::DomainError, "neron",
                "archimedean mode needs --q-re, --q-im, --z-re and --z-im");
  }
  const auto curve = TateCurve::archimedean({*c.q_re, *c.q_im});
  const std::complex<double> z{*c.z_re, *c.z_im};
  const SeriesValue theta = log_abs_tate_theta(curve, z, c.terms);
  const SeriesValue lambda = neron_lambda(curve, z, c.terms);
  warn_tail(err, "theta product", theta.tail_bound);
  return {{"model", "archimedean"},
          {"lambda", lambda.value},
          {"log_abs_theta", theta.value},
          {"tail_bound", theta.tail_bound},
          {"terms", theta.terms}};
}

json cmd_selftest(const RunConfig& c, bool& all_passed) {
  json checks = json::array();
  all_passed = true;
  for (const auto& r : run_selftest(c.seed)) {
    all_passed = all_passed && r.passed;
    checks.push_back({{"name", r.name},
                      {"passed", r.passed},
                      {"cases", r.cases},
                      {"detail", r.detail}});
  }
  return {{"seed", c.seed}, {"passed", all_passed}, {"checks", std::move(checks)}};
}

std::string csv_cell(const json& v) {
  std::string s;
  if (v.is_string()) {
    s = v.get<std::string>();
  } else if (v.is_number_float()) {
    s = io::format_double(v.get<double>());
  } else {
    s = v.dump();
  }
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char ch : s) {
      if (ch == '"') quoted += '"';
      quoted += ch;
    }
    return quoted + "\"";
  }
  return s;
}

void emit(const json& report, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Csv) {
    out << to_csv(report);
  } else {
    out << report.dump(2) << '\n';
  }
}

}  // namespace

std::string to_csv(const json& report) {
  std::ostringstream out;
  out << "key,value\n";
  std::vector<std::pair<std::string, const json*>> tables;
  for (const auto& [key, value] : report.items()) {
    if (value.is_array() && !value.empty() && value.front().is_object()) {
      tables.emplace_back(key, &value);
    } else {
      out << key << ',' << csv_cell(value) << '\n';
    }
  }
  for (const auto& [name, rows] : tables) {
    out << '\n' << name;
    const json& first = rows->front();
    for (const auto& [key, _] : first.items()) out << ',' << key;
    out << '\n';
    std::size_t index = 0;
    for (const auto& row : *rows) {
      out << index++;
      for (const auto& [key, _] : first.items()) {
        out << ',' << (row.contains(key) ? csv_cell(row[key]) : std::string());
      }
      out << '\n';
    }
  }
  return out.str();
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.terms < 1) {
      throw Error(ErrorCode::DomainError, "cli", "terms must be >= 1", "--terms");
    }
    if (config.grid_n && *config.grid_n < 2) {
      throw Error(ErrorCode::DomainError, "cli", "grid_n must be >= 2", "--grid-n");
    }
    const std::string& cmd = config.subcommand;
    json report;
    int status = kExitOk;
    if (cmd == "moment") {
      report = cmd_moment(config);
    } else if (cmd == "voronoi") {
      report = cmd_voronoi(config);
    } else if (cmd == "theta") {
      report = cmd_theta(config, err);
    } else if (cmd == "graph") {
      report = cmd_graph(config);
    } else if (cmd == "elliptic-height") {
      report = cmd_elliptic(config, err);
    } else if (cmd == "ffheight") {
      report = cmd_ffheight(config);
    } else if (cmd == "neron") {
      report = cmd_neron(config, err);
    } else if (cmd == "selftest") {
      bool passed = true;
      report = cmd_selftest(config, passed);
      if (!passed) status = kExitCheckFailed;
    } else {
      throw Error(ErrorCode::DomainError, "cli", "unknown subcommand \"" + cmd + "\"");
    }
    emit(report, config.format, out);
    return status;
  } catch (const Error& e) {
    const json error = {{"error",
                         {{"kind", to_string(e.code())},
                          {"module", e.module()},
                          {"path", e.path()},
                          {"message", e.what()}}}};
    emit(error, config.format, out);
    return kExitInvalid;
  }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Second moments, tropical theta functions and local height invariants"};
  app.require_subcommand(1);
  RunConfig c;
  std::optional<int> terms;
  std::string format = "json";

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  auto* moment = app.add_subcommand("moment", "Exact second moment of the Voronoi cell");
  moment->add_option("--lattice", c.lattice_path, "Lattice JSON file")->required();
  moment->add_option("--grid-n", c.grid_n, "Also report the theta quadrature estimate");
  common(moment);

  auto* voronoi = app.add_subcommand("voronoi", "Facets and vertices of the Voronoi cell");
  voronoi->add_option("--lattice", c.lattice_path, "Lattice JSON file")->required();
  common(voronoi);

  auto* theta = app.add_subcommand("theta", "Evaluate the tropical Riemann theta function");
  theta->add_option("--lattice", c.lattice_path, "Lattice JSON file")->required();
  theta->add_option("--point", c.point, "Point as \"p/q,...\" in lattice coordinates")
      ->required();
  theta->add_option("--kappa", c.kappa, "Characteristic as \"p/q,...\"");
  theta->add_flag("--normalized", c.normalized, "Modified (periodic) theta");
  theta->add_flag("--subtract-origin", c.subtract_origin,
                  "Subtract the value at the origin (with --kappa)");
  common(theta);

  auto* graph = app.add_subcommand("graph", "Metric graph invariants");
  graph->add_option("--input", c.input_path, "Graph JSON file")->required();
  common(graph);

  auto* elliptic = app.add_subcommand("elliptic-height",
                                      "Faltings height of an elliptic curve, both sides");
  elliptic->add_option("--input", c.input_path, "Places JSON file")->required();
  elliptic->add_option("--terms", terms, "Maximum number of product factors");
  common(elliptic);

  auto* ffheight = app.add_subcommand("ffheight", "Function field height assembly");
  ffheight->add_option("--g", c.g, "Dimension")->required();
  ffheight->add_option("--hnt", c.hnt, "Neron-Tate height of the theta divisor");
  ffheight->add_option("--moments", c.moments, "Local moments \"p/q,...\"");
  common(ffheight);

  auto* neron = app.add_subcommand("neron", "Tate curve local heights");
  auto* ell_opt = neron->add_option("--ell", c.ell, "ell = -log|q| (valuation model)");
  neron->add_option("--nu", c.nu, "Skeleton coordinate in [0, ell]");
  auto* q_opt = neron->add_option("--q-re", c.q_re, "Re q (archimedean model)");
  neron->add_option("--q-im", c.q_im, "Im q");
  neron->add_option("--z-re", c.z_re, "Re z");
  neron->add_option("--z-im", c.z_im, "Im z");
  neron->add_option("--terms", terms, "Maximum number of product factors");
  ell_opt->excludes(q_opt);
  common(neron);

  auto* selftest = app.add_subcommand("selftest", "Seeded cross-module identity suite");
  selftest->add_option("--seed", c.seed, "Random seed");
  common(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    const json error = {{"error",
                         {{"kind", "ParseError"},
                          {"module", "cli"},
                          {"path", ""},
                          {"message", e.what()}}}};
    out << error.dump(2) << '\n';
    return kExitInvalid;
  }

  c.subcommand = app.get_subcommands().front()->get_name();
  c.format = format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
  if (terms) {
    c.terms = *terms;
  } else if (const char* env = std::getenv("TROPMOMENT_TERMS")) {
    try {
      std::size_t used = 0;
      c.terms = std::stoi(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      RunConfig bad = c;
      bad.terms = 0;
      err << "error: TROPMOMENT_TERMS must be an integer\n";
      return run(bad, out, err);
    }
  }
  return run(c, out, err);
}

}  // namespace tropmoment::cli
