#include "curvenorm/mobius.hpp"

#include <cmath>
#include <vector>

namespace curvenorm {

MobiusTransform::MobiusTransform(Complex a, Complex b, Complex c, Complex d)
    : a_(a), b_(b), c_(c), d_(d) {
  const Complex det = a_ * d_ - b_ * c_;
  if (!(std::abs(det) > 1e-30))
    throw std::invalid_argument("MobiusTransform: singular coefficients");
  const Complex s = std::sqrt(det);
  a_ /= s;
  b_ /= s;
  c_ /= s;
  d_ /= s;
}

MobiusTransform MobiusTransform::similarity(Complex scale, Complex offset) {
  if (scale == Complex{0.0, 0.0})
    throw std::invalid_argument("similarity: zero scale");
  return MobiusTransform(scale, offset, Complex{0.0, 0.0}, Complex{1.0, 0.0});
}

MobiusTransform MobiusTransform::inversion_about(Complex w) {
  return MobiusTransform(Complex{0.0, 0.0}, Complex{1.0, 0.0},
                         Complex{1.0, 0.0}, -w);
}

MobiusTransform MobiusTransform::compose(const MobiusTransform& inner) const {
  return MobiusTransform(a_ * inner.a_ + b_ * inner.c_,
                         a_ * inner.b_ + b_ * inner.d_,
                         c_ * inner.a_ + d_ * inner.c_,
                         c_ * inner.b_ + d_ * inner.d_);
}

Complex MobiusTransform::pole() const {
  if (is_affine()) throw std::invalid_argument("pole: affine transform");
  return -d_ / c_;
}

double default_pole_margin(const JordanCurve& curve) {
  return 1e-6 * curve.diameter();
}

JordanCurve apply_mobius(const MobiusTransform& transform,
                         const JordanCurve& curve, int refine,
                         double pole_margin) {
  if (refine < 1) throw std::invalid_argument("apply_mobius: refine >= 1");
  if (!transform.is_affine()) {
    const double margin =
        pole_margin < 0.0 ? default_pole_margin(curve) : pole_margin;
    if (distance_to_curve(curve, transform.pole()) <= margin)
      throw numeric_error("pole near curve");
  }
  const int n = curve.size();
  std::vector<Complex> pts;
  pts.reserve(static_cast<size_t>(n) * refine);
  for (int i = 0; i < n; ++i) {
    const Complex a = curve.node(i);
    const Complex b = curve.node((i + 1) % n);
    for (int k = 0; k < refine; ++k) {
      const Complex z = a + (static_cast<double>(k) / refine) * (b - a);
      const Complex w = transform(z);
      // Far from the pole, distinct preimages can collapse to one double.
      if (!pts.empty() && w == pts.back()) continue;
      pts.push_back(w);
    }
  }
  while (pts.size() > 1 && pts.back() == pts.front()) pts.pop_back();
  return JordanCurve(std::move(pts), JordanCurve::Simplicity::trust);
}

JordanCurve invert_about(Complex w, const JordanCurve& curve, int refine,
                         double pole_margin) {
  return apply_mobius(MobiusTransform::inversion_about(w), curve, refine,
                      pole_margin);
}

}  // namespace curvenorm
