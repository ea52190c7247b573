#pragma once

#include <span>
#include <vector>

#include "curvenorm/curve.hpp"
#include "curvenorm/mobius.hpp"
#include "curvenorm/types.hpp"

namespace curvenorm {

/// Every constant below is a maximum over an explicitly recorded finite
/// sample set, i.e. a lower bound for the corresponding supremum; growing
/// the sample budget can only increase it.

struct Segment {
  Complex a, b;
};

struct NodePairWitness {
  int i = 0;
  int j = 0;
};

struct ChordArcResult {
  double constant = 1.0;
  NodePairWitness witness;
  long long sample_count = 0;
};

/// Max over node pairs of shorter-arc length / chord length.
/// Requires an equispaced curve.
ChordArcResult chord_arc_constant(const JordanCurve& curve);

struct DiskWitness {
  Complex center{0.0, 0.0};
  double radius = 0.0;
};

struct AhlforsResult {
  double constant = 0.0;
  DiskWitness witness;
  long long sample_count = 0;
};

/// Total length of the segments inside the open disk D(center, radius),
/// by exact clipping of each segment.
double length_in_disk(std::span<const Segment> segments, Complex center,
                      double radius);

/// Max of length_in_disk / r over all centers and a geometric radius ladder
/// from r_min to r_max (ratio 10^(1/radii_per_decade)), augmented per center
/// with the radius that just captures every segment endpoint.
AhlforsResult ahlfors_scan(std::span<const Segment> segments,
                           std::span<const Complex> centers, double r_min,
                           double r_max, int radii_per_decade);

/// ahlfors_scan over the curve's segments with centers = all nodes, the
/// centroid and extra_centers; radii run from 2*spacing to 1.5*diameter.
AhlforsResult ahlfors_constant(const JordanCurve& curve,
                               int radii_per_decade = 8,
                               std::span<const Complex> extra_centers = {});

struct WitnessPoint {
  Complex point{0.0, 0.0};
  double distance = 0.0;  // actual distance to the curve
  bool interior = false;
};

/// Offset points at distances 2^-1..2^-depth_count times the diameter on
/// both sides of base_nodes equispaced nodes, plus the centroid. Candidates
/// within `margin` of the curve are dropped (negative margin -> default
/// pole margin); each survivor carries its measured distance and side.
std::vector<WitnessPoint> witness_cloud(const JordanCurve& curve,
                                        int base_nodes = 64,
                                        int depth_count = 8,
                                        double margin = -1.0);

struct InversionBoundResult {
  double constant = 0.0;
  Complex witness{0.0, 0.0};
  int sample_count = 0;
};

/// Max over witnesses w of length(invert_about(w, curve)) * dist(w, curve).
InversionBoundResult inversion_bound_constant(
    const JordanCurve& curve, std::span<const WitnessPoint> witnesses,
    int refine = 8);

struct SphericalSupResult {
  double constant = 0.0;
  int witness_index = 0;
  int sample_count = 0;
};

/// Max spherical length over the transform images of the curve.
SphericalSupResult spherical_supremum(const JordanCurve& curve,
                                      std::span<const MobiusTransform> transforms,
                                      int refine = 8);

/// Deterministic transforms with coefficients bounded by coeff_bound before
/// normalization; transforms whose pole falls within min_pole_distance of
/// the curve are re-drawn (negative -> default pole margin).
std::vector<MobiusTransform> random_transforms(const JordanCurve& curve,
                                               int count, unsigned seed,
                                               double coeff_bound = 10.0,
                                               double min_pole_distance = -1.0);

/// Identity, the inversions 1/(z-w) over the witness cloud, the rescaled
/// offsets z -> (z-w)/dist(w) (the maps that tie inversion image lengths to
/// spherical lengths), and `random_count` random transforms.
std::vector<MobiusTransform> default_transform_set(
    const JordanCurve& curve, std::span<const WitnessPoint> cloud,
    int random_count = 32, unsigned seed = 20260811u);

struct InvarianceRow {
  int transform_index = 0;
  double image_constant = 0.0;
  double ratio = 0.0;
  bool flagged = false;
};

struct InvarianceReport {
  double base_constant = 0.0;
  double slack = 0.05;
  std::vector<InvarianceRow> rows;
  bool any_flagged = false;
};

/// Recomputes the disk-capture constant on every transform image (mapped at
/// `refine`, re-equispaced to the input node count) and flags ratios above
/// 12 * (1 + slack).
InvarianceReport mobius_invariance_report(const JordanCurve& curve,
                                          double ahlfors_m,
                                          std::span<const MobiusTransform> transforms,
                                          int refine = 8,
                                          int radii_per_decade = 8,
                                          double slack = 0.05);

struct RegularityOptions {
  int radii_per_decade = 8;
  int cloud_base_nodes = 64;
  int cloud_depths = 8;
  int random_transforms = 32;
  int refine = 8;
  unsigned seed = 20260811u;
};

struct RegularityReport {
  double chord_arc_k = 1.0;
  NodePairWitness chord_arc_witness;
  long long chord_arc_samples = 0;

  double ahlfors_m = 0.0;
  DiskWitness ahlfors_witness;
  long long ahlfors_samples = 0;

  double slength_sup = 0.0;
  int slength_witness_index = 0;
  int slength_samples = 0;

  double inversion_c = 0.0;
  Complex inversion_witness{0.0, 0.0};
  int inversion_samples = 0;
};

RegularityReport regularity_report(const JordanCurve& curve,
                                   const RegularityOptions& options = {});

}  // namespace curvenorm
