#include "curvenorm/zoo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "json.hpp"

namespace curvenorm {

namespace {

double get_param(const std::map<std::string, double>& params,
                 const std::string& key, double fallback) {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

void check_keys(const std::map<std::string, double>& params,
                const std::set<std::string>& allowed,
                const std::string& family) {
  for (const auto& [key, value] : params) {
    (void)value;
    if (!allowed.count(key))
      throw std::invalid_argument("unknown parameter '" + key + "' for " + family);
  }
}

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::vector<Complex> circle_points(double radius, int n) {
  std::vector<Complex> pts(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double t = kTwoPi * k / n;
    pts[static_cast<size_t>(k)] = radius * Complex{std::cos(t), std::sin(t)};
  }
  return pts;
}

std::vector<Complex> ellipse_points(double a, double b, int n) {
  std::vector<Complex> pts(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double t = kTwoPi * k / n;
    pts[static_cast<size_t>(k)] = Complex{a * std::cos(t), b * std::sin(t)};
  }
  return pts;
}

std::vector<Complex> star_points(double eps, int lobes, int n) {
  std::vector<Complex> pts(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double t = kTwoPi * k / n;
    const double r = 1.0 + eps * std::cos(lobes * t);
    pts[static_cast<size_t>(k)] = r * Complex{std::cos(t), std::sin(t)};
  }
  return pts;
}

}  // namespace

std::vector<Complex> koch_snowflake_points(int level) {
  if (level < 0 || level > 5)
    throw std::invalid_argument("koch: level must be in 0..5");
  std::vector<Complex> pts{{0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0}};
  const double spike = std::sqrt(3.0) / 6.0;
  for (int l = 0; l < level; ++l) {
    std::vector<Complex> next;
    next.reserve(pts.size() * 4);
    const size_t n = pts.size();
    for (size_t i = 0; i < n; ++i) {
      const Complex p = pts[i];
      const Complex q = pts[(i + 1) % n];
      const Complex v = q - p;
      // Right-hand normal of the counterclockwise traversal points outward.
      const Complex outward{v.imag(), -v.real()};
      next.push_back(p);
      next.push_back(p + v / 3.0);
      next.push_back(p + 0.5 * v + spike * outward);
      next.push_back(p + 2.0 * v / 3.0);
    }
    pts = std::move(next);
  }
  return pts;
}

std::vector<Complex> barbell_points(double neck_width) {
  if (!(neck_width > 0.0) || !(neck_width < 0.5))
    throw std::invalid_argument("barbell: neck width must be in (0, 0.5)");
  const double half = 0.5 * neck_width;
  const double phi = std::asin(half);
  const double cx = 0.5 + std::sqrt(1.0 - half * half);

  std::vector<Complex> pts;
  const int edge_steps = 256;
  const int arc_steps = 2048;

  // bottom neck edge, left junction to right junction
  for (int k = 0; k < edge_steps; ++k) {
    const double t = static_cast<double>(k) / edge_steps;
    pts.push_back(Complex{-0.5 + t, -half});
  }
  // right lobe, counterclockwise from the bottom junction
  {
    const double t0 = -(kPi - phi), t1 = kPi - phi;
    for (int k = 0; k < arc_steps; ++k) {
      const double t = t0 + (t1 - t0) * k / arc_steps;
      pts.push_back(Complex{cx + std::cos(t), std::sin(t)});
    }
  }
  // top neck edge, right junction to left junction
  for (int k = 0; k < edge_steps; ++k) {
    const double t = static_cast<double>(k) / edge_steps;
    pts.push_back(Complex{0.5 - t, half});
  }
  // left lobe, counterclockwise from the top junction
  {
    const double t0 = phi, t1 = kTwoPi - phi;
    for (int k = 0; k < arc_steps; ++k) {
      const double t = t0 + (t1 - t0) * k / arc_steps;
      pts.push_back(Complex{-cx + std::cos(t), std::sin(t)});
    }
  }
  return pts;
}

JordanCurve make_curve(const CurveSpec& spec) {
  const int n = spec.n_nodes;
  if (n < 8) throw std::invalid_argument("make_curve: N >= 8 required");

  if (spec.name == "circle") {
    check_keys(spec.params, {"R"}, "circle");
    const double radius = get_param(spec.params, "R", 1.0);
    if (!(radius > 0.0)) throw std::invalid_argument("circle: R must be positive");
    return JordanCurve(circle_points(radius, n));
  }
  if (spec.name == "ellipse") {
    check_keys(spec.params, {"a", "b"}, "ellipse");
    const double a = get_param(spec.params, "a", 2.0);
    const double b = get_param(spec.params, "b", 1.0);
    if (!(a > 0.0) || !(b > 0.0))
      throw std::invalid_argument("ellipse: semi-axes must be positive");
    const int dense = std::max(16 * n, 16384);
    return resample_arclength(ellipse_points(a, b, dense), n);
  }
  if (spec.name == "star") {
    check_keys(spec.params, {"eps", "k"}, "star");
    const double eps = get_param(spec.params, "eps", 0.2);
    const int lobes = static_cast<int>(std::lround(get_param(spec.params, "k", 3.0)));
    if (!(eps >= 0.0) || lobes < 1 || eps * lobes >= 1.0)
      throw std::invalid_argument("star: need eps >= 0, k >= 1 and eps*k < 1");
    const int dense = std::max(16 * n, 16384);
    return resample_arclength(star_points(eps, lobes, dense), n);
  }
  if (spec.name == "polygon") {
    std::vector<Complex> vertices;
    for (int i = 0;; ++i) {
      const auto x = spec.params.find("x" + std::to_string(i));
      const auto y = spec.params.find("y" + std::to_string(i));
      if (x == spec.params.end() || y == spec.params.end()) break;
      vertices.push_back(Complex{x->second, y->second});
    }
    if (vertices.empty())
      vertices = {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}};
    if (vertices.size() < 3)
      throw std::invalid_argument("polygon: at least 3 vertices");
    if (spec.params.size() != 2 * vertices.size() && !spec.params.empty())
      throw std::invalid_argument("polygon: vertex list must be x0,y0,x1,y1,...");
    return resample_arclength(vertices, n);
  }
  if (spec.name == "koch") {
    check_keys(spec.params, {"level"}, "koch");
    const int level = static_cast<int>(std::lround(get_param(spec.params, "level", 3.0)));
    return resample_arclength(koch_snowflake_points(level), n);
  }
  if (spec.name == "barbell") {
    check_keys(spec.params, {"delta"}, "barbell");
    const double delta = get_param(spec.params, "delta", 0.05);
    return resample_arclength(barbell_points(delta), n);
  }
  throw std::invalid_argument("unknown curve family '" + spec.name + "'");
}

CurveFunction make_function(const FunctionSpec& spec, const JordanCurve& curve) {
  const int n = curve.size();
  CurveFunction f;
  f.values.resize(static_cast<size_t>(n));

  if (spec.name == "fourier_mode") {
    check_keys(spec.params, {"k"}, "fourier_mode");
    const int k = static_cast<int>(std::lround(get_param(spec.params, "k", 1.0)));
    const double scale = kTwoPi / curve.length();
    for (int i = 0; i < n; ++i) {
      const double theta = k * scale * curve.cumlen(i);
      f.values[static_cast<size_t>(i)] = Complex{std::cos(theta), std::sin(theta)};
    }
    f.label = "fourier_mode(k=" + std::to_string(k) + ")";
    return f;
  }
  if (spec.name == "inverse_pole") {
    check_keys(spec.params, {"w_re", "w_im"}, "inverse_pole");
    const auto re = spec.params.find("w_re");
    const auto im = spec.params.find("w_im");
    if (re == spec.params.end())
      throw std::invalid_argument("inverse_pole: w_re required");
    const Complex w{re->second, im == spec.params.end() ? 0.0 : im->second};
    if (distance_to_curve(curve, w) < 1e-3 * curve.diameter())
      throw std::invalid_argument("inverse_pole: pole too close to the curve");
    for (int i = 0; i < n; ++i)
      f.values[static_cast<size_t>(i)] = 1.0 / (curve.node(i) - w);
    f.label = "inverse_pole(w=" + format_value(w.real()) + "+" +
              format_value(w.imag()) + "i)";
    return f;
  }
  if (spec.name == "coordinate") {
    check_keys(spec.params, {}, "coordinate");
    for (int i = 0; i < n; ++i) f.values[static_cast<size_t>(i)] = curve.node(i);
    f.label = "coordinate";
    return f;
  }
  if (spec.name == "bump") {
    check_keys(spec.params, {"center", "width"}, "bump");
    const double center = get_param(spec.params, "center", 0.0);
    const double width = get_param(spec.params, "width", 0.1);
    if (!(width > 0.0)) throw std::invalid_argument("bump: width must be positive");
    for (int i = 0; i < n; ++i) {
      const double t = curve.cumlen(i) / curve.length();
      double d = std::abs(t - center);
      d = std::min(d, 1.0 - d);  // circular distance in arc-length fraction
      f.values[static_cast<size_t>(i)] = Complex{std::exp(-sq(d / width)), 0.0};
    }
    f.label = "bump(center=" + format_value(center) + ",width=" +
              format_value(width) + ")";
    return f;
  }
  throw std::invalid_argument("unknown function '" + spec.name + "'");
}

std::string zoo_listing_json() {
  nlohmann::json families = nlohmann::json::array();
  families.push_back({{"name", "circle"},
                      {"params", {{"R", {{"default", 1.0}, {"range", "(0, inf)"}}}}}});
  families.push_back({{"name", "ellipse"},
                      {"params",
                       {{"a", {{"default", 2.0}, {"range", "(0, inf)"}}},
                        {"b", {{"default", 1.0}, {"range", "(0, inf)"}}}}}});
  families.push_back({{"name", "star"},
                      {"params",
                       {{"eps", {{"default", 0.2}, {"range", "[0, 1/k)"}}},
                        {"k", {{"default", 3}, {"range", "integer >= 1, eps*k < 1"}}}}}});
  families.push_back({{"name", "polygon"},
                      {"params",
                       {{"x0,y0,x1,y1,...",
                         {{"default", "unit square"},
                          {"range", "at least 3 simple vertices"}}}}}});
  families.push_back({{"name", "koch"},
                      {"params", {{"level", {{"default", 3}, {"range", "integer 0..5"}}}}}});
  families.push_back({{"name", "barbell"},
                      {"params", {{"delta", {{"default", 0.05}, {"range", "(0, 0.5)"}}}}}});

  nlohmann::json functions = nlohmann::json::array();
  functions.push_back({{"name", "fourier_mode"},
                       {"params", {{"k", {{"default", 1}, {"range", "integer"}}}}}});
  functions.push_back({{"name", "inverse_pole"},
                       {"params",
                        {{"w_re", {{"required", true}}},
                         {"w_im", {{"default", 0.0}}}}},
                       {"constraint", "pole at distance >= 1e-3 * diameter"}});
  functions.push_back({{"name", "coordinate"}, {"params", nlohmann::json::object()}});
  functions.push_back({{"name", "bump"},
                       {"params",
                        {{"center", {{"default", 0.0}, {"range", "[0, 1)"}}},
                         {"width", {{"default", 0.1}, {"range", "(0, inf)"}}}}}});

  nlohmann::json listing;
  listing["curve_spec"] = {{"fields", {"name", "params", "N", "seed"}},
                           {"families", families}};
  listing["function_spec"] = {{"fields", {"name", "params"}},
                              {"functions", functions}};
  return listing.dump(2);
}

std::vector<CurveSpec> canonical_zoo(int n_nodes) {
  std::vector<CurveSpec> specs;
  specs.push_back({"circle", {{"R", 1.0}}, n_nodes, 0});
  specs.push_back({"ellipse", {{"a", 2.0}, {"b", 1.0}}, n_nodes, 0});
  specs.push_back({"star", {{"eps", 0.2}, {"k", 3.0}}, n_nodes, 0});
  specs.push_back({"polygon", {}, n_nodes, 0});
  specs.push_back({"koch", {{"level", 3.0}}, n_nodes, 0});
  specs.push_back({"barbell", {{"delta", 0.05}}, n_nodes, 0});
  return specs;
}

Complex exterior_pole_for(const JordanCurve& curve) {
  const Complex prev = curve.node(curve.size() - 1);
  const Complex next = curve.node(1);
  const Complex tangent = next - prev;
  const double t_len = std::abs(tangent);
  const Complex normal = t_len == 0.0
                             ? Complex{1.0, 0.0}
                             : Complex{tangent.imag() / t_len, -tangent.real() / t_len};
  const double diam = curve.diameter();
  for (double factor = 0.5; factor > 1e-3; factor *= 0.5) {
    const Complex w = curve.node(0) + factor * diam * normal;
    if (distance_to_curve(curve, w) < 1e-2 * diam) continue;
    if (!point_in_interior(curve, w)) return w;
  }
  throw numeric_error("exterior_pole_for: no admissible pole found");
}

std::vector<FunctionSpec> canonical_functions(const JordanCurve& curve) {
  std::vector<FunctionSpec> specs;
  specs.push_back({"fourier_mode", {{"k", 1.0}}});
  specs.push_back({"fourier_mode", {{"k", 2.0}}});
  specs.push_back({"fourier_mode", {{"k", 3.0}}});
  specs.push_back({"coordinate", {}});
  specs.push_back({"bump", {{"center", 0.25}, {"width", 0.2}}});
  const Complex w = exterior_pole_for(curve);
  specs.push_back({"inverse_pole", {{"w_re", w.real()}, {"w_im", w.imag()}}});
  return specs;
}

}  // namespace curvenorm
