#pragma once

#include "curvenorm/curve.hpp"
#include "curvenorm/types.hpp"

namespace curvenorm {

/// z -> (a z + b) / (c z + d), stored with determinant normalized to 1.
class MobiusTransform {
 public:
  MobiusTransform() : a_(1.0), b_(0.0), c_(0.0), d_(1.0) {}
  MobiusTransform(Complex a, Complex b, Complex c, Complex d);

  static MobiusTransform identity() { return MobiusTransform(); }
  /// z -> scale * z + offset, scale != 0.
  static MobiusTransform similarity(Complex scale, Complex offset);
  /// z -> 1 / (z - w).
  static MobiusTransform inversion_about(Complex w);
  /// z -> 1 / z.
  static MobiusTransform reciprocal() { return inversion_about(Complex{0.0, 0.0}); }

  Complex a() const { return a_; }
  Complex b() const { return b_; }
  Complex c() const { return c_; }
  Complex d() const { return d_; }

  Complex operator()(Complex z) const { return (a_ * z + b_) / (c_ * z + d_); }

  MobiusTransform inverse() const { return MobiusTransform(d_, -b_, -c_, a_); }
  /// Composition this(inner(z)).
  MobiusTransform compose(const MobiusTransform& inner) const;

  bool is_affine() const { return c_ == Complex{0.0, 0.0}; }
  /// Preimage of infinity, -d/c. Requires !is_affine().
  Complex pole() const;

 private:
  Complex a_, b_, c_, d_;
};

/// Margin below which a pole counts as "on the curve": 1e-6 * diameter.
double default_pole_margin(const JordanCurve& curve);

/// Image polyline of the curve: each segment is split into `refine` pieces
/// and the resulting nodes are mapped pointwise; orientation is
/// re-normalized to positive. Throws numeric_error("pole near curve") when
/// the pole of T is within pole_margin of the polyline (pass a negative
/// margin for the default).
JordanCurve apply_mobius(const MobiusTransform& transform,
                         const JordanCurve& curve, int refine,
                         double pole_margin = -1.0);

/// apply_mobius with T(z) = 1/(z - w).
JordanCurve invert_about(Complex w, const JordanCurve& curve, int refine,
                         double pole_margin = -1.0);

}  // namespace curvenorm
