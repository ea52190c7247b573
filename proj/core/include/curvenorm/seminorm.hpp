#pragma once

#include <span>
#include <string>
#include <vector>

#include "curvenorm/curve.hpp"
#include "curvenorm/types.hpp"

namespace curvenorm {

enum class SeminormScheme { double_integral, spectral };

struct SeminormResult {
  double value_sq = 0.0;     // squared seminorm
  SeminormScheme scheme = SeminormScheme::double_integral;
  int n_samples = 0;
  double diagonal_term = 0.0;  // contribution of the diagonal cells
};

/// Squared double-integral seminorm of f over the curve:
///   (1/4pi^2) sum_{i != j} |f_i - f_j|^2 / |z_i - z_j|^2 * ds^2
/// plus one forward-difference cell per diagonal entry. Requires an
/// equispaced curve (throws "resample required" otherwise) and one sample
/// per node.
SeminormResult douglas_seminorm(const JordanCurve& curve,
                                const CurveFunction& f);

/// Squared seminorm of equispaced circle samples from the discrete
/// spectrum: sum_n |n| |c_n|^2. Sample count must be a power of two.
SeminormResult circle_seminorm_spectral(const CurveFunction& samples);

/// Reinterprets samples on an equispaced curve of length 2*pi as samples on
/// the unit circle at e^{is}, s = i * 2pi/N.
CurveFunction pullback_arclength(const JordanCurve& curve,
                                 const CurveFunction& f);

struct EquivalenceRow {
  std::string function;
  double curve_value_sq = 0.0;   // double-integral seminorm on the curve
  double circle_value_sq = 0.0;  // spectral seminorm of the pullback
  double ratio = 1.0;
  bool in_bracket = true;
};

struct EquivalenceReport {
  double chord_arc_k = 1.0;
  double lower_bound = 0.0;  // 4/pi^2 * (1 - slack)
  double upper_bound = 0.0;  // K^2 * (1 + slack)
  double slack = 0.05;
  std::vector<EquivalenceRow> rows;
  bool all_in_bracket = true;
};

/// Ratio table curve-seminorm / pullback-seminorm against the bracket
/// [4/pi^2 (1-slack), K^2 (1+slack)]. The curve must be equispaced with
/// length 2*pi. Throws numeric_error when a pullback seminorm vanishes for
/// non-constant input.
EquivalenceReport equivalence_report(const JordanCurve& curve,
                                     std::span<const CurveFunction> functions,
                                     double chord_arc_k, double slack = 0.05);

}  // namespace curvenorm
