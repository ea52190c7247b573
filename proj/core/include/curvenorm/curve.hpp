#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "curvenorm/types.hpp"

namespace curvenorm {

/// Closed polyline in the plane with a cumulative arc-length table.
///
/// Nodes are stored in positive (counterclockwise) orientation; the closing
/// segment node(N-1) -> node(0) is implicit. Construction validates N >= 8,
/// finite coordinates and distinct consecutive nodes; with Simplicity::check
/// it also rejects self-intersecting input. Values are immutable afterwards
/// and safe to share across threads.
class JordanCurve {
 public:
  enum class Simplicity { check, trust };

  explicit JordanCurve(std::vector<Complex> nodes,
                       Simplicity mode = Simplicity::check);

  int size() const { return static_cast<int>(nodes_.size()); }
  Complex node(int i) const { return nodes_[static_cast<size_t>(i)]; }
  std::span<const Complex> nodes() const { return nodes_; }

  /// Arc length from node 0 to node i; cumlen(size()) is the total length.
  double cumlen(int i) const { return cumlen_[static_cast<size_t>(i)]; }
  double length() const { return cumlen_.back(); }
  double segment_length(int i) const {
    return cumlen_[static_cast<size_t>(i) + 1] - cumlen_[static_cast<size_t>(i)];
  }
  /// Mean node spacing L/N.
  double spacing() const { return length() / size(); }

  /// Position at arc length s along the polyline (s taken modulo length()).
  Complex point_at(double s) const;

  /// Largest pairwise node distance. Computed once, then cached.
  double diameter() const;

  /// Area centroid of the enclosed polygon. Computed once, then cached.
  Complex centroid() const;

  bool is_equispaced(double rel_tol = 1e-7) const;

  /// Pairwise segment sweep; strict crossings fail, tangencies within tol pass.
  bool is_simple(double tol = 1e-12) const;

 private:
  friend JordanCurve translate_and_scale(const JordanCurve&, Complex, double);

  std::vector<Complex> nodes_;
  std::vector<double> cumlen_;
  mutable double diameter_cache_ = -1.0;
  mutable bool centroid_cached_ = false;
  mutable Complex centroid_cache_{0.0, 0.0};
};

/// Complex samples aligned with the nodes of one curve.
struct CurveFunction {
  std::vector<Complex> values;
  std::string label;
};

/// Shoelace area of the closed polygon; positive for counterclockwise input.
double signed_area(std::span<const Complex> polygon);

/// N equispaced nodes along the closed polyline through `polygon`.
/// Nodes land exactly on input vertices whenever the spacing divides the
/// vertex arc lengths; otherwise they interpolate along the segments.
JordanCurve resample_arclength(std::span<const Complex> polygon, int n_nodes,
                               JordanCurve::Simplicity mode = JordanCurve::Simplicity::check);
JordanCurve resample_arclength(const JordanCurve& curve, int n_nodes,
                               JordanCurve::Simplicity mode = JordanCurve::Simplicity::check);

/// Resamples a closed polyline together with per-node samples; the samples
/// are interpolated linearly in arc length. Input orientation may be either
/// way; output is counterclockwise with values permuted consistently.
std::pair<JordanCurve, CurveFunction> resample_with_values(
    std::span<const Complex> polygon, std::span<const Complex> values,
    int n_nodes, const std::string& label);

/// True iff the winding number of the curve about w is +-1.
/// Throws numeric_error("on-curve query") when w is within 1e-12 of the
/// polyline.
bool point_in_interior(const JordanCurve& curve, Complex w);

/// Minimum Euclidean distance from w to the polyline (exact per segment).
double distance_to_curve(const JordanCurve& curve, Complex w);

/// min(|cumlen(j)-cumlen(i)|, L - |cumlen(j)-cumlen(i)|), i != j.
double shorter_arc_length(const JordanCurve& curve, int i, int j);

/// Midpoint-rule length of the curve in the metric |dz| / (1 + |z|^2).
double spherical_length(const JordanCurve& curve);

/// Affine image z -> factor * (z + shift); the arc-length table is scaled by
/// factor exactly rather than recomputed.
JordanCurve translate_and_scale(const JordanCurve& curve, Complex shift,
                                double factor);

/// Rescales so the total length equals target_length (default 2*pi).
JordanCurve normalize_to_length(const JordanCurve& curve,
                                double target_length = kTwoPi);

double distance_to_segment(Complex p, Complex a, Complex b);

/// Symmetric node-to-polyline Hausdorff distance.
double hausdorff_distance(const JordanCurve& a, const JordanCurve& b);

}  // namespace curvenorm
