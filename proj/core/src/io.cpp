#include "curvenorm/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace curvenorm {

namespace {

nlohmann::json parse_json(const std::string& text, const std::string& what) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw config_error(what + ": invalid JSON");
  return doc;
}

std::vector<Complex> parse_point_list(const nlohmann::json& arr,
                                      const std::string& what) {
  if (!arr.is_array()) throw config_error(what + ": expected an array");
  std::vector<Complex> pts;
  pts.reserve(arr.size());
  for (const auto& item : arr) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number() ||
        !item[1].is_number())
      throw config_error(what + ": entries must be [re, im] pairs");
    pts.push_back(Complex{item[0].get<double>(), item[1].get<double>()});
  }
  return pts;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw io_error("read failure on " + path);
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open " + path + " for writing");
  out << content;
  out.flush();
  if (!out) throw io_error("write failure on " + path);
}

JordanCurve load_curve_file(const std::string& path) {
  const nlohmann::json doc = parse_json(read_text_file(path), path);
  if (!doc.is_object() || !doc.contains("nodes"))
    throw config_error(path + ": curve file needs a \"nodes\" array");
  if (doc.contains("closed") &&
      (!doc["closed"].is_boolean() || !doc["closed"].get<bool>()))
    throw config_error(path + ": only closed curves are supported");
  const auto pts = parse_point_list(doc["nodes"], path);
  try {
    if (doc.contains("resample")) {
      if (!doc["resample"].is_number_integer())
        throw config_error(path + ": \"resample\" must be an integer");
      return resample_arclength(std::span<const Complex>(pts),
                                doc["resample"].get<int>());
    }
    return JordanCurve(pts);
  } catch (const std::invalid_argument& e) {
    throw config_error(path + ": " + e.what());
  }
}

CurveFunction load_function_file(const std::string& path,
                                 const JordanCurve& curve) {
  const nlohmann::json doc = parse_json(read_text_file(path), path);
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
    throw config_error(path + ": function file needs a \"kind\" string");
  const std::string kind = doc["kind"].get<std::string>();
  if (kind == "samples") {
    if (!doc.contains("values"))
      throw config_error(path + ": sample function needs \"values\"");
    CurveFunction f;
    f.values = parse_point_list(doc["values"], path);
    f.label = doc.value("label", std::string("samples:") + path);
    if (static_cast<int>(f.values.size()) != curve.size())
      throw config_error(path + ": sample count does not match the curve");
    return f;
  }
  if (kind == "builtin") {
    if (!doc.contains("name") || !doc["name"].is_string())
      throw config_error(path + ": builtin function needs a \"name\"");
    FunctionSpec spec;
    spec.name = doc["name"].get<std::string>();
    if (doc.contains("params")) {
      if (!doc["params"].is_object())
        throw config_error(path + ": \"params\" must be an object");
      for (const auto& [key, value] : doc["params"].items()) {
        if (!value.is_number())
          throw config_error(path + ": parameter '" + key + "' must be numeric");
        spec.params[key] = value.get<double>();
      }
    }
    try {
      return make_function(spec, curve);
    } catch (const std::invalid_argument& e) {
      throw config_error(path + ": " + e.what());
    }
  }
  throw config_error(path + ": unknown function kind '" + kind + "'");
}

std::string field_dump_csv(const HarmonicGridField& field) {
  std::ostringstream out;
  out << "x,y,mask,re,im\n";
  nlohmann::json num;  // shortest round-trip float formatting via the dump
  auto fmt = [&num](double v) {
    num = v;
    return num.dump();
  };
  for (int iy = 0; iy < field.ny; ++iy) {
    for (int ix = 0; ix < field.nx; ++ix) {
      const Complex c = field.cell_center(ix, iy);
      const Complex v = field.value(ix, iy);
      const char* kind = field.kind(ix, iy) == CellKind::exterior
                             ? "exterior"
                             : field.kind(ix, iy) == CellKind::boundary
                                   ? "boundary"
                                   : "interior";
      out << fmt(c.real()) << ',' << fmt(c.imag()) << ',' << kind << ','
          << fmt(v.real()) << ',' << fmt(v.imag()) << '\n';
    }
  }
  return out.str();
}

}  // namespace curvenorm
