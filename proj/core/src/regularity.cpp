#include "curvenorm/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace curvenorm {

namespace {

void require_equispaced(const JordanCurve& curve) {
  if (!curve.is_equispaced())
    throw std::invalid_argument("resample required");
}

std::vector<Segment> curve_segments(const JordanCurve& curve) {
  const int n = curve.size();
  std::vector<Segment> segs(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    segs[static_cast<size_t>(i)] = {curve.node(i), curve.node((i + 1) % n)};
  return segs;
}

double dot(Complex a, Complex b) {
  return a.real() * b.real() + a.imag() * b.imag();
}

}  // namespace

ChordArcResult chord_arc_constant(const JordanCurve& curve) {
  require_equispaced(curve);
  const int n = curve.size();
  const double total = curve.length();
  ChordArcResult result;
  result.constant = 0.0;
  for (int i = 0; i < n; ++i) {
    const Complex zi = curve.node(i);
    const double ci = curve.cumlen(i);
    for (int j = i + 1; j < n; ++j) {
      const double along = curve.cumlen(j) - ci;
      const double arc = std::min(along, total - along);
      const double chord = std::abs(curve.node(j) - zi);
      const double ratio = arc / chord;
      if (ratio > result.constant) {
        result.constant = ratio;
        result.witness = {i, j};
      }
    }
  }
  result.sample_count = static_cast<long long>(n) * (n - 1) / 2;
  return result;
}

double length_in_disk(std::span<const Segment> segments, Complex center,
                      double radius) {
  const double r2 = radius * radius;
  double total = 0.0;
  for (const Segment& s : segments) {
    const double da = std::abs(s.a - center);
    const double db = std::abs(s.b - center);
    if (da < radius && db < radius) {  // disk is convex
      total += std::abs(s.b - s.a);
      continue;
    }
    const Complex v = s.b - s.a;
    const double len = std::abs(v);
    if (std::max(da, db) - len >= radius) continue;
    const double A = std::norm(v);
    if (A == 0.0) continue;
    const double B = 2.0 * dot(v, s.a - center);
    const double C = std::norm(s.a - center) - r2;
    const double disc = B * B - 4.0 * A * C;
    if (disc <= 0.0) continue;
    const double sq = std::sqrt(disc);
    const double lo = std::max((-B - sq) / (2.0 * A), 0.0);
    const double hi = std::min((-B + sq) / (2.0 * A), 1.0);
    if (hi > lo) total += len * (hi - lo);
  }
  return total;
}

AhlforsResult ahlfors_scan(std::span<const Segment> segments,
                           std::span<const Complex> centers, double r_min,
                           double r_max, int radii_per_decade) {
  if (radii_per_decade < 1)
    throw std::invalid_argument("ahlfors: radii_per_decade >= 1");
  if (!(r_min > 0.0) || !(r_max >= r_min))
    throw std::invalid_argument("ahlfors: bad radius range");

  std::vector<double> ladder;
  const double ratio = std::pow(10.0, 1.0 / radii_per_decade);
  for (double r = r_min; r < r_max * (1.0 + 1e-12); r *= ratio)
    ladder.push_back(r);
  if (ladder.empty() || ladder.back() < r_max) ladder.push_back(r_max);

  AhlforsResult result;
  for (const Complex& z : centers) {
    // Radius that just captures every endpoint; the capture/r ratio jumps
    // there and the coarse ladder alone can miss the peak.
    double d_max = 0.0;
    for (const Segment& s : segments)
      d_max = std::max({d_max, std::abs(s.a - z), std::abs(s.b - z)});
    const double full_r = d_max * (1.0 + 1e-9);

    auto consider = [&](double r) {
      const double value = length_in_disk(segments, z, r) / r;
      if (value > result.constant) {
        result.constant = value;
        result.witness = {z, r};
      }
    };
    for (double r : ladder) consider(r);
    consider(full_r);
    result.sample_count += static_cast<long long>(ladder.size()) + 1;
  }
  return result;
}

AhlforsResult ahlfors_constant(const JordanCurve& curve, int radii_per_decade,
                               std::span<const Complex> extra_centers) {
  require_equispaced(curve);
  const auto segments = curve_segments(curve);
  std::vector<Complex> centers(curve.nodes().begin(), curve.nodes().end());
  centers.push_back(curve.centroid());
  centers.insert(centers.end(), extra_centers.begin(), extra_centers.end());
  const double r_min = 2.0 * curve.spacing();
  const double r_max = 1.5 * curve.diameter();
  return ahlfors_scan(segments, centers, r_min, std::max(r_max, r_min),
                      radii_per_decade);
}

std::vector<WitnessPoint> witness_cloud(const JordanCurve& curve,
                                        int base_nodes, int depth_count,
                                        double margin) {
  if (margin < 0.0) margin = default_pole_margin(curve);
  const int n = curve.size();
  const double diam = curve.diameter();
  std::vector<WitnessPoint> cloud;
  cloud.reserve(static_cast<size_t>(base_nodes) * depth_count * 2 + 1);

  auto add_candidate = [&](Complex w) {
    const double dist = distance_to_curve(curve, w);
    if (dist <= margin) return;
    // point_in_interior would throw only within 1e-12 of the curve.
    cloud.push_back({w, dist, point_in_interior(curve, w)});
  };

  const int stride = std::max(1, n / std::max(1, base_nodes));
  for (int i = 0; i < n; i += stride) {
    const Complex prev = curve.node((i + n - 1) % n);
    const Complex next = curve.node((i + 1) % n);
    const Complex tangent = next - prev;
    const double t_len = std::abs(tangent);
    if (t_len == 0.0) continue;
    // Right-hand normal of a counterclockwise curve points outward.
    const Complex normal{tangent.imag() / t_len, -tangent.real() / t_len};
    for (int depth = 1; depth <= depth_count; ++depth) {
      const double offset = std::ldexp(diam, -depth);  // diam * 2^-depth
      add_candidate(curve.node(i) + offset * normal);
      add_candidate(curve.node(i) - offset * normal);
    }
  }
  add_candidate(curve.centroid());
  return cloud;
}

InversionBoundResult inversion_bound_constant(
    const JordanCurve& curve, std::span<const WitnessPoint> witnesses,
    int refine) {
  const double margin = default_pole_margin(curve);
  InversionBoundResult result;
  for (const WitnessPoint& w : witnesses) {
    const double dist = distance_to_curve(curve, w.point);
    if (dist <= margin) throw numeric_error("witness on curve");
    const double image_length =
        invert_about(w.point, curve, refine, margin).length();
    const double value = image_length * dist;
    if (value > result.constant) {
      result.constant = value;
      result.witness = w.point;
    }
  }
  result.sample_count = static_cast<int>(witnesses.size());
  return result;
}

SphericalSupResult spherical_supremum(const JordanCurve& curve,
                                      std::span<const MobiusTransform> transforms,
                                      int refine) {
  SphericalSupResult result;
  for (size_t t = 0; t < transforms.size(); ++t) {
    const double value =
        spherical_length(apply_mobius(transforms[t], curve, refine));
    if (value > result.constant) {
      result.constant = value;
      result.witness_index = static_cast<int>(t);
    }
  }
  result.sample_count = static_cast<int>(transforms.size());
  return result;
}

std::vector<MobiusTransform> random_transforms(const JordanCurve& curve,
                                               int count, unsigned seed,
                                               double coeff_bound,
                                               double min_pole_distance) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(-coeff_bound, coeff_bound);
  const double margin =
      min_pole_distance < 0.0 ? default_pole_margin(curve) : min_pole_distance;
  std::vector<MobiusTransform> out;
  out.reserve(static_cast<size_t>(count));
  int attempts = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > 1000 * count)
      throw numeric_error("random_transforms: cannot place poles off the curve");
    const Complex a{uniform(rng), uniform(rng)};
    const Complex b{uniform(rng), uniform(rng)};
    const Complex c{uniform(rng), uniform(rng)};
    const Complex d{uniform(rng), uniform(rng)};
    if (std::abs(a * d - b * c) < 0.5) continue;
    MobiusTransform t(a, b, c, d);
    if (!t.is_affine() && distance_to_curve(curve, t.pole()) <= margin)
      continue;
    out.push_back(t);
  }
  return out;
}

std::vector<MobiusTransform> default_transform_set(
    const JordanCurve& curve, std::span<const WitnessPoint> cloud,
    int random_count, unsigned seed) {
  std::vector<MobiusTransform> set;
  set.reserve(1 + 2 * cloud.size() + static_cast<size_t>(random_count));
  set.push_back(MobiusTransform::identity());
  for (const WitnessPoint& w : cloud)
    set.push_back(MobiusTransform::inversion_about(w.point));
  for (const WitnessPoint& w : cloud)
    set.push_back(MobiusTransform::similarity(Complex{1.0 / w.distance, 0.0},
                                              -w.point / w.distance));
  const auto randoms = random_transforms(curve, random_count, seed);
  set.insert(set.end(), randoms.begin(), randoms.end());
  return set;
}

InvarianceReport mobius_invariance_report(const JordanCurve& curve,
                                          double ahlfors_m,
                                          std::span<const MobiusTransform> transforms,
                                          int refine, int radii_per_decade,
                                          double slack) {
  InvarianceReport report;
  report.base_constant = ahlfors_m;
  report.slack = slack;
  const double bound = 12.0 * (1.0 + slack);
  for (size_t t = 0; t < transforms.size(); ++t) {
    const JordanCurve image = apply_mobius(transforms[t], curve, refine);
    const JordanCurve image_eq = resample_arclength(
        image.nodes(), curve.size(), JordanCurve::Simplicity::trust);
    InvarianceRow row;
    row.transform_index = static_cast<int>(t);
    row.image_constant = ahlfors_constant(image_eq, radii_per_decade).constant;
    row.ratio = row.image_constant / ahlfors_m;
    row.flagged = row.ratio > bound;
    report.any_flagged = report.any_flagged || row.flagged;
    report.rows.push_back(row);
  }
  return report;
}

RegularityReport regularity_report(const JordanCurve& curve,
                                   const RegularityOptions& options) {
  RegularityReport report;

  const ChordArcResult chord = chord_arc_constant(curve);
  report.chord_arc_k = chord.constant;
  report.chord_arc_witness = chord.witness;
  report.chord_arc_samples = chord.sample_count;

  const AhlforsResult ahlfors = ahlfors_constant(curve, options.radii_per_decade);
  report.ahlfors_m = ahlfors.constant;
  report.ahlfors_witness = ahlfors.witness;
  report.ahlfors_samples = ahlfors.sample_count;

  const auto cloud =
      witness_cloud(curve, options.cloud_base_nodes, options.cloud_depths);
  const InversionBoundResult inversion =
      inversion_bound_constant(curve, cloud, options.refine);
  report.inversion_c = inversion.constant;
  report.inversion_witness = inversion.witness;
  report.inversion_samples = inversion.sample_count;

  const auto transforms = default_transform_set(
      curve, cloud, options.random_transforms, options.seed);
  const SphericalSupResult sup =
      spherical_supremum(curve, transforms, options.refine);
  report.slength_sup = sup.constant;
  report.slength_witness_index = sup.witness_index;
  report.slength_samples = sup.sample_count;

  return report;
}

}  // namespace curvenorm
