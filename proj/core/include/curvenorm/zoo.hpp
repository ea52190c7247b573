#pragma once

#include <map>
#include <string>
#include <vector>

#include "curvenorm/curve.hpp"
#include "curvenorm/types.hpp"

namespace curvenorm {

/// Named curve family with parameters; the same spec always produces a
/// bit-identical curve.
struct CurveSpec {
  std::string name;                      // circle | ellipse | star | polygon | koch | barbell
  std::map<std::string, double> params;  // family parameters
  int n_nodes = 1024;
  long seed = 0;  // reserved for randomized families
};

/// Named boundary function: fourier_mode(k) | inverse_pole(w_re, w_im) |
/// coordinate | bump(center, width).
struct FunctionSpec {
  std::string name;
  std::map<std::string, double> params;
};

/// Equispaced positively-oriented curve of the requested family.
/// Families and parameters:
///   circle:  R (default 1)
///   ellipse: a, b semi-axes (defaults 2, 1)
///   star:    eps, k with eps*k < 1 (defaults 0.2, 3); r(t) = 1 + eps*cos(k t)
///   polygon: x0,y0,x1,y1,... vertex coordinates (default: unit square)
///   koch:    level in 0..5 (default 3); snowflake on a unit-side triangle
///   barbell: neck width delta in (0, 0.5) (default 0.05); two unit-radius
///            lobes joined by a delta-wide, length-1 neck
JordanCurve make_curve(const CurveSpec& spec);

/// Samples the named function at the curve nodes. fourier_mode uses the
/// arc-length angle 2*pi*s_i/L; inverse_pole requires the pole at distance
/// >= 1e-3 * diameter.
CurveFunction make_function(const FunctionSpec& spec, const JordanCurve& curve);

/// Raw generator polylines, exposed for exact-arithmetic checks.
std::vector<Complex> koch_snowflake_points(int level);
std::vector<Complex> barbell_points(double neck_width);

/// JSON description of the available families, functions and parameter
/// ranges.
std::string zoo_listing_json();

/// One representative instance per family, all at n_nodes.
std::vector<CurveSpec> canonical_zoo(int n_nodes);

/// Standard probe functions for a given curve: fourier modes 1..3, the
/// coordinate function, a smooth bump and an inverse pole placed outside.
std::vector<FunctionSpec> canonical_functions(const JordanCurve& curve);

/// Deterministic exterior point for inverse_pole probes: offset from node 0
/// along the outward normal, halved until it lands outside.
Complex exterior_pole_for(const JordanCurve& curve);

}  // namespace curvenorm
