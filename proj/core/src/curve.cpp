#include "curvenorm/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace curvenorm {

namespace {

double cross(Complex a, Complex b) {
  return a.real() * b.imag() - a.imag() * b.real();
}

double dot(Complex a, Complex b) {
  return a.real() * b.real() + a.imag() * b.imag();
}

// Strict-crossing test for segments [a,b] and [c,d]. Contacts within the
// area tolerance count as tangency, not crossing.
bool segments_cross(Complex a, Complex b, Complex c, Complex d, double tol) {
  const Complex ab = b - a;
  const Complex cd = d - c;
  const double scale_abc = std::abs(ab) * std::max(std::abs(c - a), std::abs(d - a));
  const double scale_cda = std::abs(cd) * std::max(std::abs(a - c), std::abs(b - c));
  const double eps1 = tol * std::max(scale_abc, 1e-300);
  const double eps2 = tol * std::max(scale_cda, 1e-300);

  const double d1 = cross(ab, c - a);
  const double d2 = cross(ab, d - a);
  const double d3 = cross(cd, a - c);
  const double d4 = cross(cd, b - c);

  const bool straddle1 = (d1 > eps1 && d2 < -eps1) || (d1 < -eps1 && d2 > eps1);
  const bool straddle2 = (d3 > eps2 && d4 < -eps2) || (d3 < -eps2 && d4 > eps2);
  if (straddle1 && straddle2) return true;

  // Collinear overlap longer than the tolerance is a self-contact as well.
  if (std::abs(d1) <= eps1 && std::abs(d2) <= eps1 && std::abs(d3) <= eps2 &&
      std::abs(d4) <= eps2) {
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) return false;
    double t0 = dot(c - a, ab) / len2;
    double t1 = dot(d - a, ab) / len2;
    if (t0 > t1) std::swap(t0, t1);
    const double lo = std::max(t0, 0.0);
    const double hi = std::min(t1, 1.0);
    if ((hi - lo) * std::sqrt(len2) > tol * std::max(std::sqrt(len2), 1.0))
      return true;
  }
  return false;
}

std::vector<Complex> convex_hull(std::span<const Complex> pts) {
  std::vector<Complex> p(pts.begin(), pts.end());
  std::sort(p.begin(), p.end(), [](Complex a, Complex b) {
    return a.real() < b.real() ||
           (a.real() == b.real() && a.imag() < b.imag());
  });
  p.erase(std::unique(p.begin(), p.end()), p.end());
  const size_t n = p.size();
  if (n <= 2) return p;
  std::vector<Complex> hull(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p[i] - hull[k - 2]) <= 0)
      --k;
    hull[k++] = p[i];
  }
  const size_t lower = k + 1;
  for (size_t i = n - 1; i-- > 0;) {
    while (k >= lower &&
           cross(hull[k - 1] - hull[k - 2], p[i] - hull[k - 2]) <= 0)
      --k;
    hull[k++] = p[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace

JordanCurve::JordanCurve(std::vector<Complex> nodes, Simplicity mode)
    : nodes_(std::move(nodes)) {
  const int n = size();
  if (n < 8) throw std::invalid_argument("JordanCurve: at least 8 nodes required");
  for (const Complex& z : nodes_)
    if (!is_finite(z))
      throw std::invalid_argument("JordanCurve: non-finite node coordinate");
  for (int i = 0; i < n; ++i)
    if (nodes_[static_cast<size_t>(i)] == nodes_[static_cast<size_t>((i + 1) % n)])
      throw std::invalid_argument("JordanCurve: consecutive nodes coincide");

  if (mode == Simplicity::check && !is_simple())
    throw std::invalid_argument("JordanCurve: polyline self-intersects");

  const double area = signed_area(nodes_);
  if (area == 0.0)
    throw std::invalid_argument("JordanCurve: degenerate (zero enclosed area)");
  if (area < 0.0) std::reverse(nodes_.begin() + 1, nodes_.end());

  cumlen_.resize(static_cast<size_t>(n) + 1);
  cumlen_[0] = 0.0;
  for (int i = 0; i < n; ++i) {
    cumlen_[static_cast<size_t>(i) + 1] =
        cumlen_[static_cast<size_t>(i)] +
        std::abs(nodes_[static_cast<size_t>((i + 1) % n)] - nodes_[static_cast<size_t>(i)]);
  }
  if (!(cumlen_.back() > 0.0) || !std::isfinite(cumlen_.back()))
    throw std::invalid_argument("JordanCurve: degenerate total length");
}

Complex JordanCurve::point_at(double s) const {
  const double total = length();
  double t = std::fmod(s, total);
  if (t < 0.0) t += total;
  const auto it = std::upper_bound(cumlen_.begin(), cumlen_.end(), t);
  int i = static_cast<int>(it - cumlen_.begin()) - 1;
  i = std::clamp(i, 0, size() - 1);
  const double seg = segment_length(i);
  const double frac = (t - cumlen(i)) / seg;
  const Complex a = node(i);
  const Complex b = node((i + 1) % size());
  return a + frac * (b - a);
}

double JordanCurve::diameter() const {
  if (diameter_cache_ >= 0.0) return diameter_cache_;
  const auto hull = convex_hull(nodes_);
  double best = 0.0;
  for (size_t i = 0; i < hull.size(); ++i)
    for (size_t j = i + 1; j < hull.size(); ++j)
      best = std::max(best, std::abs(hull[i] - hull[j]));
  diameter_cache_ = best;
  return best;
}

Complex JordanCurve::centroid() const {
  if (centroid_cached_) return centroid_cache_;
  const int n = size();
  double a = 0.0;
  Complex c{0.0, 0.0};
  for (int i = 0; i < n; ++i) {
    const Complex p = node(i);
    const Complex q = node((i + 1) % n);
    const double w = cross(p, q);
    a += w;
    c += w * (p + q);
  }
  centroid_cache_ = c / (3.0 * a);
  centroid_cached_ = true;
  return centroid_cache_;
}

bool JordanCurve::is_equispaced(double rel_tol) const {
  const double target = spacing();
  for (int i = 0; i < size(); ++i)
    if (std::abs(segment_length(i) - target) > rel_tol * target) return false;
  return true;
}

bool JordanCurve::is_simple(double tol) const {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    const Complex a = nodes_[static_cast<size_t>(i)];
    const Complex b = nodes_[static_cast<size_t>((i + 1) % n)];
    for (int j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent through the closing node
      const Complex c = nodes_[static_cast<size_t>(j)];
      const Complex d = nodes_[static_cast<size_t>((j + 1) % n)];
      if (segments_cross(a, b, c, d, tol)) return false;
    }
  }
  return true;
}

double signed_area(std::span<const Complex> polygon) {
  const size_t n = polygon.size();
  double twice = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const Complex p = polygon[i];
    const Complex q = polygon[(i + 1) % n];
    twice += cross(p, q);
  }
  return 0.5 * twice;
}

namespace {

struct PolylineTable {
  std::vector<double> cum;  // size n+1
  double total;
};

PolylineTable closed_arclength_table(std::span<const Complex> polygon) {
  const size_t n = polygon.size();
  if (n < 3) throw std::invalid_argument("resample: need at least 3 vertices");
  PolylineTable t;
  t.cum.resize(n + 1);
  t.cum[0] = 0.0;
  for (size_t i = 0; i < n; ++i) {
    if (!is_finite(polygon[i]))
      throw std::invalid_argument("resample: non-finite vertex");
    const double seg = std::abs(polygon[(i + 1) % n] - polygon[i]);
    if (seg == 0.0)
      throw std::invalid_argument("resample: duplicate consecutive vertices");
    t.cum[i + 1] = t.cum[i] + seg;
  }
  t.total = t.cum.back();
  if (!(t.total > 0.0) || !std::isfinite(t.total))
    throw std::invalid_argument("resample: degenerate curve");
  return t;
}

// Equispaced positions along the closed polyline, with optional sample
// interpolation. Positions within 1e-12*L of a vertex snap to it exactly.
void resample_core(std::span<const Complex> polygon,
                   std::span<const Complex> values, int n_nodes,
                   std::vector<Complex>& out_pts,
                   std::vector<Complex>& out_vals) {
  const auto table = closed_arclength_table(polygon);
  const size_t n_in = polygon.size();
  const double step = table.total / n_nodes;
  const double snap = 1e-12 * table.total;
  const bool with_values = !values.empty();
  if (with_values && values.size() != n_in)
    throw std::invalid_argument("resample: values/vertex count mismatch");

  out_pts.resize(static_cast<size_t>(n_nodes));
  if (with_values) out_vals.resize(static_cast<size_t>(n_nodes));

  size_t seg = 0;
  for (int k = 0; k < n_nodes; ++k) {
    const double s = k * step;
    while (seg + 1 < n_in && table.cum[seg + 1] <= s) ++seg;
    const Complex a = polygon[seg];
    const Complex b = polygon[(seg + 1) % n_in];
    double frac = (s - table.cum[seg]) / (table.cum[seg + 1] - table.cum[seg]);
    if (std::abs(s - table.cum[seg]) <= snap) frac = 0.0;
    if (std::abs(s - table.cum[seg + 1]) <= snap) frac = 1.0;
    out_pts[static_cast<size_t>(k)] = a + frac * (b - a);
    if (with_values) {
      const Complex va = values[seg];
      const Complex vb = values[(seg + 1) % n_in];
      out_vals[static_cast<size_t>(k)] = va + frac * (vb - va);
    }
  }
}

}  // namespace

JordanCurve resample_arclength(std::span<const Complex> polygon, int n_nodes,
                               JordanCurve::Simplicity mode) {
  if (n_nodes < 8) throw std::invalid_argument("resample: N >= 8 required");
  std::vector<Complex> pts, vals;
  resample_core(polygon, {}, n_nodes, pts, vals);
  return JordanCurve(std::move(pts), mode);
}

JordanCurve resample_arclength(const JordanCurve& curve, int n_nodes,
                               JordanCurve::Simplicity mode) {
  return resample_arclength(curve.nodes(), n_nodes, mode);
}

std::pair<JordanCurve, CurveFunction> resample_with_values(
    std::span<const Complex> polygon, std::span<const Complex> values,
    int n_nodes, const std::string& label) {
  if (n_nodes < 8) throw std::invalid_argument("resample: N >= 8 required");
  std::vector<Complex> poly(polygon.begin(), polygon.end());
  std::vector<Complex> vals(values.begin(), values.end());
  if (signed_area(poly) < 0.0) {
    // Reverse in tandem, keeping vertex 0 first, so the constructor's
    // orientation pass is a no-op and samples stay aligned with nodes.
    std::reverse(poly.begin() + 1, poly.end());
    std::reverse(vals.begin() + 1, vals.end());
  }
  std::vector<Complex> pts, out_vals;
  resample_core(poly, vals, n_nodes, pts, out_vals);
  JordanCurve curve(std::move(pts), JordanCurve::Simplicity::trust);
  return {std::move(curve), CurveFunction{std::move(out_vals), label}};
}

bool point_in_interior(const JordanCurve& curve, Complex w) {
  if (distance_to_curve(curve, w) <= 1e-12)
    throw numeric_error("on-curve query");
  const int n = curve.size();
  int winding = 0;
  for (int i = 0; i < n; ++i) {
    const Complex a = curve.node(i);
    const Complex b = curve.node((i + 1) % n);
    if (a.imag() <= w.imag()) {
      if (b.imag() > w.imag() && cross(b - a, w - a) > 0.0) ++winding;
    } else {
      if (b.imag() <= w.imag() && cross(b - a, w - a) < 0.0) --winding;
    }
  }
  return winding != 0;
}

double distance_to_segment(Complex p, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return std::abs(p - a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

double distance_to_curve(const JordanCurve& curve, Complex w) {
  const int n = curve.size();
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i)
    best = std::min(best,
                    distance_to_segment(w, curve.node(i), curve.node((i + 1) % n)));
  return best;
}

double shorter_arc_length(const JordanCurve& curve, int i, int j) {
  if (i == j) throw std::invalid_argument("shorter_arc_length: i == j");
  const double d = std::abs(curve.cumlen(j) - curve.cumlen(i));
  return std::min(d, curve.length() - d);
}

double spherical_length(const JordanCurve& curve) {
  const int n = curve.size();
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    const Complex a = curve.node(i);
    const Complex b = curve.node((i + 1) % n);
    const Complex mid = 0.5 * (a + b);
    total += std::abs(b - a) / (1.0 + std::norm(mid));
  }
  return total;
}

JordanCurve translate_and_scale(const JordanCurve& curve, Complex shift,
                                double factor) {
  if (!(factor > 0.0)) throw std::invalid_argument("translate_and_scale: factor <= 0");
  std::vector<Complex> pts(curve.nodes().begin(), curve.nodes().end());
  for (Complex& z : pts) z = factor * (z + shift);
  JordanCurve out(std::move(pts), JordanCurve::Simplicity::trust);
  // Similarities preserve the arc-length table up to the scale factor; carry
  // it over exactly instead of reaccumulating rounded segment lengths.
  for (size_t i = 0; i < out.cumlen_.size(); ++i)
    out.cumlen_[i] = curve.cumlen_[i] * factor;
  return out;
}

JordanCurve normalize_to_length(const JordanCurve& curve, double target_length) {
  return translate_and_scale(curve, Complex{0.0, 0.0},
                             target_length / curve.length());
}

double hausdorff_distance(const JordanCurve& a, const JordanCurve& b) {
  double d = 0.0;
  for (const Complex& z : a.nodes()) d = std::max(d, distance_to_curve(b, z));
  for (const Complex& z : b.nodes()) d = std::max(d, distance_to_curve(a, z));
  return d;
}

}  // namespace curvenorm
