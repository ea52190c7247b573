#include "curvenorm/runner.hpp"

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "curvenorm/harmonic.hpp"
#include "curvenorm/io.hpp"
#include "curvenorm/regularity.hpp"
#include "curvenorm/seminorm.hpp"
#include "curvenorm/verify.hpp"

namespace curvenorm {

namespace {

using nlohmann::json;

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string number_str(double v) {
  json j = v;
  return j.dump();
}

Task parse_task(const std::string& name) {
  if (name == "regularity") return Task::regularity;
  if (name == "douglas") return Task::douglas;
  if (name == "spectral") return Task::spectral;
  if (name == "interior") return Task::interior;
  if (name == "exterior") return Task::exterior;
  if (name == "verify") return Task::verify;
  throw config_error("unknown task '" + name + "'");
}

CurveSpec parse_curve_spec(const json& doc) {
  CurveSpec spec;
  if (!doc.contains("name") || !doc["name"].is_string())
    throw config_error("curve spec needs a \"name\"");
  spec.name = doc["name"].get<std::string>();
  if (doc.contains("params")) {
    if (!doc["params"].is_object())
      throw config_error("curve \"params\" must be an object");
    for (const auto& [key, value] : doc["params"].items()) {
      if (!value.is_number())
        throw config_error("curve parameter '" + key + "' must be numeric");
      spec.params[key] = value.get<double>();
    }
  }
  if (doc.contains("N")) {
    if (!doc["N"].is_number_integer())
      throw config_error("curve \"N\" must be an integer");
    spec.n_nodes = doc["N"].get<int>();
  } else {
    spec.n_nodes = 0;  // defer to numeric.N
  }
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_integer())
      throw config_error("curve \"seed\" must be an integer");
    spec.seed = doc["seed"].get<long>();
  }
  return spec;
}

FunctionRef parse_function_ref(const json& doc) {
  FunctionRef ref;
  if (doc.is_string()) {
    ref.file = doc.get<std::string>();
    return ref;
  }
  if (!doc.is_object()) throw config_error("function entries must be objects or paths");
  if (doc.contains("file")) {
    if (!doc["file"].is_string())
      throw config_error("function \"file\" must be a string");
    ref.file = doc["file"].get<std::string>();
    return ref;
  }
  if (!doc.contains("name") || !doc["name"].is_string())
    throw config_error("function spec needs a \"name\"");
  ref.spec.name = doc["name"].get<std::string>();
  if (doc.contains("params")) {
    if (!doc["params"].is_object())
      throw config_error("function \"params\" must be an object");
    for (const auto& [key, value] : doc["params"].items()) {
      if (!value.is_number())
        throw config_error("function parameter '" + key + "' must be numeric");
      ref.spec.params[key] = value.get<double>();
    }
  }
  return ref;
}

std::string curve_label(const RunConfig& config) {
  if (!config.curve_file.empty()) return config.curve_file;
  std::string label = config.curve_spec.name + "(";
  bool first = true;
  for (const auto& [key, value] : config.curve_spec.params) {
    if (!first) label += ",";
    label += key + "=" + number_str(value);
    first = false;
  }
  return label + ")";
}

struct SeminormRow {
  std::string function;
  std::string scheme;
  int n = 0;
  double value_sq = 0.0;
  double diagonal_term = 0.0;
};

struct EnergyRow {
  std::string function;
  double h = 0.0;
  double tol = 0.0;
  double energy = 0.0;
  int iterations = 0;
  double residual = 0.0;
};

std::string seminorm_report(const std::string& curve,
                            const std::vector<SeminormRow>& rows,
                            const std::string& format) {
  if (format == "csv") {
    std::ostringstream out;
    out << "curve,function,scheme,N,value_sq,diagonal_term\n";
    for (const auto& r : rows)
      out << csv_escape(curve) << ',' << csv_escape(r.function) << ','
          << r.scheme << ',' << r.n << ',' << number_str(r.value_sq) << ','
          << number_str(r.diagonal_term) << '\n';
    return out.str();
  }
  json doc;
  doc["curve"] = curve;
  doc["rows"] = json::array();
  for (const auto& r : rows)
    doc["rows"].push_back({{"function", r.function},
                           {"scheme", r.scheme},
                           {"N", r.n},
                           {"value_sq", r.value_sq},
                           {"diagonal_term", r.diagonal_term}});
  return doc.dump(2) + "\n";
}

std::string energy_report(const std::string& curve,
                          const std::vector<EnergyRow>& rows,
                          const std::string& format) {
  if (format == "csv") {
    std::ostringstream out;
    out << "curve,function,h,tol,energy,iterations,residual\n";
    for (const auto& r : rows)
      out << csv_escape(curve) << ',' << csv_escape(r.function) << ','
          << number_str(r.h) << ',' << number_str(r.tol) << ','
          << number_str(r.energy) << ',' << r.iterations << ','
          << number_str(r.residual) << '\n';
    return out.str();
  }
  json doc;
  doc["curve"] = curve;
  doc["rows"] = json::array();
  for (const auto& r : rows)
    doc["rows"].push_back({{"function", r.function},
                           {"h", r.h},
                           {"tol", r.tol},
                           {"energy", r.energy},
                           {"iterations", r.iterations},
                           {"residual", r.residual}});
  return doc.dump(2) + "\n";
}

std::string regularity_report_text(const std::string& curve,
                                   const RegularityReport& r,
                                   const std::string& format) {
  if (format == "csv") {
    std::ostringstream out;
    out << "curve,chord_arc_K,ahlfors_M,slength_sup,inversion_C\n";
    out << csv_escape(curve) << ',' << number_str(r.chord_arc_k) << ','
        << number_str(r.ahlfors_m) << ',' << number_str(r.slength_sup) << ','
        << number_str(r.inversion_c) << '\n';
    return out.str();
  }
  json doc;
  doc["curve"] = curve;
  doc["chord_arc_K"] = r.chord_arc_k;
  doc["ahlfors_M"] = r.ahlfors_m;
  doc["slength_sup"] = r.slength_sup;
  doc["inversion_C"] = r.inversion_c;
  doc["witnesses"] = {
      {"chord_arc", {{"i", r.chord_arc_witness.i}, {"j", r.chord_arc_witness.j}}},
      {"ahlfors",
       {{"center", complex_json(r.ahlfors_witness.center)},
        {"radius", r.ahlfors_witness.radius}}},
      {"slength", {{"transform_index", r.slength_witness_index}}},
      {"inversion", {{"point", complex_json(r.inversion_witness)}}}};
  doc["samples"] = {{"chord_arc", r.chord_arc_samples},
                    {"ahlfors", r.ahlfors_samples},
                    {"slength", r.slength_samples},
                    {"inversion", r.inversion_samples}};
  return doc.dump(2) + "\n";
}

std::string verify_report_text(const std::string& curve, const VerifyReport& r,
                               const std::string& format) {
  if (format == "csv") {
    std::ostringstream out;
    out << "curve,check,pass,observed,bound,witness\n";
    for (const auto& c : r.checks)
      out << csv_escape(curve) << ',' << csv_escape(c.name) << ','
          << (c.pass ? "true" : "false") << ',' << number_str(c.observed) << ','
          << number_str(c.bound) << ',' << csv_escape(c.witness) << '\n';
    return out.str();
  }
  json doc;
  doc["curve"] = curve;
  doc["all_pass"] = r.all_pass;
  doc["checks"] = json::array();
  for (const auto& c : r.checks)
    doc["checks"].push_back({{"name", c.name},
                             {"pass", c.pass},
                             {"observed", c.observed},
                             {"bound", c.bound},
                             {"witness", c.witness}});
  return doc.dump(2) + "\n";
}

}  // namespace

std::string task_name(Task task) {
  switch (task) {
    case Task::regularity: return "regularity";
    case Task::douglas: return "douglas";
    case Task::spectral: return "spectral";
    case Task::interior: return "interior";
    case Task::exterior: return "exterior";
    case Task::verify: return "verify";
  }
  return "unknown";
}

RunConfig parse_run_config(const std::string& json_text) {
  json doc = json::parse(json_text, nullptr, false);
  if (doc.is_discarded()) throw config_error("config: invalid JSON");
  if (!doc.is_object()) throw config_error("config: expected an object");

  RunConfig config;

  if (!doc.contains("curve")) throw config_error("config: \"curve\" required");
  if (doc["curve"].is_string()) {
    config.curve_file = doc["curve"].get<std::string>();
  } else if (doc["curve"].is_object() && doc["curve"].contains("file")) {
    if (!doc["curve"]["file"].is_string())
      throw config_error("config: curve \"file\" must be a string");
    config.curve_file = doc["curve"]["file"].get<std::string>();
  } else if (doc["curve"].is_object()) {
    config.curve_spec = parse_curve_spec(doc["curve"]);
  } else {
    throw config_error("config: \"curve\" must be a spec object or a path");
  }

  if (doc.contains("functions")) {
    if (!doc["functions"].is_array())
      throw config_error("config: \"functions\" must be an array");
    for (const auto& item : doc["functions"])
      config.functions.push_back(parse_function_ref(item));
  }

  if (!doc.contains("tasks") || !doc["tasks"].is_array() || doc["tasks"].empty())
    throw config_error("config: non-empty \"tasks\" array required");
  for (const auto& item : doc["tasks"]) {
    if (!item.is_string()) throw config_error("config: tasks must be strings");
    const std::string name = item.get<std::string>();
    if (name == "all") {
      config.tasks = {Task::regularity, Task::douglas,  Task::spectral,
                      Task::interior,   Task::exterior, Task::verify};
      break;
    }
    config.tasks.push_back(parse_task(name));
  }

  bool numeric_n_given = false;
  if (doc.contains("numeric")) {
    const json& num = doc["numeric"];
    if (!num.is_object()) throw config_error("config: \"numeric\" must be an object");
    for (const auto& [key, value] : num.items()) {
      if (key == "N") {
        if (!value.is_number_integer())
          throw config_error("config: numeric.N must be an integer");
        config.numeric.n_nodes = value.get<int>();
        numeric_n_given = true;
      } else if (key == "h") {
        if (!value.is_number()) throw config_error("config: numeric.h must be a number");
        config.numeric.h = value.get<double>();
      } else if (key == "tol") {
        if (!value.is_number()) throw config_error("config: numeric.tol must be a number");
        config.numeric.tol = value.get<double>();
      } else if (key == "refine") {
        if (!value.is_number_integer())
          throw config_error("config: numeric.refine must be an integer");
        config.numeric.refine = value.get<int>();
      } else if (key == "slack") {
        if (!value.is_number())
          throw config_error("config: numeric.slack must be a number");
        config.numeric.slack = value.get<double>();
      } else {
        throw config_error("config: unknown numeric option '" + key + "'");
      }
    }
  }

  // Reconcile the curve resolution with the task resolution.
  if (config.curve_file.empty()) {
    if (config.curve_spec.n_nodes == 0) {
      config.curve_spec.n_nodes = config.numeric.n_nodes;
    } else if (numeric_n_given &&
               config.curve_spec.n_nodes != config.numeric.n_nodes) {
      throw config_error("config: curve.N conflicts with numeric.N");
    } else {
      config.numeric.n_nodes = config.curve_spec.n_nodes;
    }
  }

  if (doc.contains("output")) {
    const json& out = doc["output"];
    if (!out.is_object()) throw config_error("config: \"output\" must be an object");
    if (out.contains("path")) {
      if (!out["path"].is_string())
        throw config_error("config: output.path must be a string");
      config.output_dir = out["path"].get<std::string>();
    }
    if (out.contains("format")) {
      if (!out["format"].is_string())
        throw config_error("config: output.format must be a string");
      config.format = out["format"].get<std::string>();
    }
    if (out.contains("dump_field")) {
      if (!out["dump_field"].is_boolean())
        throw config_error("config: output.dump_field must be a boolean");
      config.dump_field = out["dump_field"].get<bool>();
    }
  }

  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "curve" && key != "functions" && key != "tasks" &&
        key != "numeric" && key != "output")
      throw config_error("config: unknown field '" + key + "'");
  }

  // Range validation.
  if (config.numeric.n_nodes < 8) throw config_error("config: N >= 8 required");
  if (!(config.numeric.h > 0.0)) throw config_error("config: h must be positive");
  if (!(config.numeric.tol > 0.0) || config.numeric.tol >= 1.0)
    throw config_error("config: tol must be in (0, 1)");
  if (config.numeric.refine < 1) throw config_error("config: refine >= 1");
  if (!(config.numeric.slack > -1.0) || config.numeric.slack > 10.0)
    throw config_error("config: slack must be in (-1, 10]");
  if (config.format != "json" && config.format != "csv")
    throw config_error("config: format must be json or csv");

  const bool needs_power_of_two =
      std::any_of(config.tasks.begin(), config.tasks.end(), [](Task t) {
        return t == Task::spectral || t == Task::verify;
      });
  if (needs_power_of_two && (config.numeric.n_nodes & (config.numeric.n_nodes - 1)))
    throw config_error("config: N must be a power of two for spectral/verify");

  return config;
}

int run(const RunConfig& config, std::ostream& log) {
  // Resolve every input before writing anything.
  JordanCurve curve = [&] {
    if (!config.curve_file.empty()) {
      JordanCurve loaded = load_curve_file(config.curve_file);
      if (loaded.size() == config.numeric.n_nodes && loaded.is_equispaced())
        return loaded;
      return resample_arclength(loaded, config.numeric.n_nodes);
    }
    try {
      return make_curve(config.curve_spec);
    } catch (const std::invalid_argument& e) {
      throw config_error(std::string("config: ") + e.what());
    }
  }();

  std::vector<CurveFunction> functions;
  if (config.functions.empty()) {
    for (const auto& spec : canonical_functions(curve))
      functions.push_back(make_function(spec, curve));
  } else {
    for (const auto& ref : config.functions) {
      if (!ref.file.empty()) {
        functions.push_back(load_function_file(ref.file, curve));
      } else {
        try {
          functions.push_back(make_function(ref.spec, curve));
        } catch (const std::invalid_argument& e) {
          throw config_error(std::string("config: ") + e.what());
        }
      }
    }
  }

  std::error_code ec;
  std::filesystem::create_directories(config.output_dir, ec);
  if (ec) throw io_error("cannot create output directory " + config.output_dir);

  const std::string label = curve_label(config);
  const std::string ext = config.format == "csv" ? ".csv" : ".json";
  auto out_path = [&](Task task) {
    return (std::filesystem::path(config.output_dir) / (task_name(task) + ext))
        .string();
  };
  auto enabled = [&](Task task) {
    return std::find(config.tasks.begin(), config.tasks.end(), task) !=
           config.tasks.end();
  };

  int exit_code = kExitOk;

  if (enabled(Task::regularity)) {
    RegularityOptions options;
    options.refine = config.numeric.refine;
    const RegularityReport report = regularity_report(curve, options);
    write_text_file(out_path(Task::regularity),
                    regularity_report_text(label, report, config.format));
    log << "regularity: K=" << report.chord_arc_k << " M=" << report.ahlfors_m
        << " Ks=" << report.slength_sup << " C=" << report.inversion_c << "\n";
  }

  if (enabled(Task::douglas)) {
    std::vector<SeminormRow> rows;
    for (const auto& f : functions) {
      const SeminormResult r = douglas_seminorm(curve, f);
      rows.push_back({f.label, "double-integral", r.n_samples, r.value_sq,
                      r.diagonal_term});
      log << "douglas: " << f.label << " value_sq=" << r.value_sq << "\n";
    }
    write_text_file(out_path(Task::douglas),
                    seminorm_report(label, rows, config.format));
  }

  if (enabled(Task::spectral)) {
    const JordanCurve normalized = normalize_to_length(curve);
    std::vector<SeminormRow> rows;
    for (const auto& f : functions) {
      const SeminormResult r =
          circle_seminorm_spectral(pullback_arclength(normalized, f));
      rows.push_back({f.label, "spectral", r.n_samples, r.value_sq, 0.0});
      log << "spectral: " << f.label << " value_sq=" << r.value_sq << "\n";
    }
    write_text_file(out_path(Task::spectral),
                    seminorm_report(label, rows, config.format));
  }

  if (enabled(Task::interior)) {
    std::vector<EnergyRow> rows;
    int index = 0;
    for (const auto& f : functions) {
      const HarmonicSolution sol =
          solve_interior(curve, f, config.numeric.h, config.numeric.tol);
      rows.push_back({f.label, sol.result.h, config.numeric.tol,
                      sol.result.energy, sol.result.iterations,
                      sol.result.residual});
      log << "interior: " << f.label << " energy=" << sol.result.energy << "\n";
      if (config.dump_field) {
        const std::string dump_path =
            (std::filesystem::path(config.output_dir) /
             ("field_interior_" + std::to_string(index) + ".csv"))
                .string();
        write_text_file(dump_path, field_dump_csv(sol.field));
      }
      ++index;
    }
    write_text_file(out_path(Task::interior),
                    energy_report(label, rows, config.format));
  }

  if (enabled(Task::exterior)) {
    std::vector<EnergyRow> rows;
    for (const auto& f : functions) {
      const EnergyResult r =
          exterior_energy_grid(curve, f, config.numeric.h, config.numeric.tol);
      rows.push_back({f.label, r.h, config.numeric.tol, r.energy, r.iterations,
                      r.residual});
      log << "exterior: " << f.label << " energy=" << r.energy << "\n";
    }
    write_text_file(out_path(Task::exterior),
                    energy_report(label, rows, config.format));
  }

  if (enabled(Task::verify)) {
    VerifyOptions options;
    options.slack = config.numeric.slack;
    options.refine = config.numeric.refine;
    options.tol = config.numeric.tol;
    const VerifyReport report = verify_curve(curve, options);
    write_text_file(out_path(Task::verify),
                    verify_report_text(label, report, config.format));
    for (const auto& check : report.checks) {
      if (!check.pass)
        log << "verify FAIL " << check.name << ": observed=" << check.observed
            << " bound=" << check.bound << " witness=" << check.witness << "\n";
    }
    log << "verify: " << (report.all_pass ? "all checks passed" : "FAILED")
        << " (" << report.checks.size() << " checks)\n";
    if (!report.all_pass) exit_code = kExitVerifyFailed;
  }

  return exit_code;
}

}  // namespace curvenorm
