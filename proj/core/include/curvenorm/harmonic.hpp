#pragma once

#include <vector>

#include "curvenorm/curve.hpp"
#include "curvenorm/types.hpp"

namespace curvenorm {

enum class CellKind : unsigned char { exterior = 0, boundary = 1, interior = 2 };

/// Masked uniform grid over the curve's bounding box. Boundary cells carry
/// values fixed from the nearest curve point; interior cells hold the
/// solved field. Boundary cells form a closed layer: no interior cell is
/// 4-adjacent to an exterior cell.
struct HarmonicGridField {
  Complex origin{0.0, 0.0};  // lower-left corner of cell (0,0)
  double h = 0.0;
  int nx = 0, ny = 0;
  std::vector<CellKind> mask;    // nx*ny, row-major (iy*nx + ix)
  std::vector<Complex> values;   // aligned with mask; 0 on exterior cells

  size_t index(int ix, int iy) const {
    return static_cast<size_t>(iy) * nx + ix;
  }
  CellKind kind(int ix, int iy) const { return mask[index(ix, iy)]; }
  Complex value(int ix, int iy) const { return values[index(ix, iy)]; }
  Complex cell_center(int ix, int iy) const {
    return origin + Complex{(ix + 0.5) * h, (iy + 0.5) * h};
  }
};

struct EnergyResult {
  double energy = 0.0;  // discretized (1/2pi) integral of |grad F|^2
  double h = 0.0;
  int iterations = 0;
  double residual = 0.0;
};

struct HarmonicSolution {
  HarmonicGridField field;
  EnergyResult result;
};

/// (1/2pi) * sum over 4-adjacent non-exterior cell pairs of |V_a - V_b|^2.
double grid_energy(const HarmonicGridField& field);

/// Minimizes the discrete energy over interior cells with boundary cells
/// pinned to f at the nearest curve point, via Jacobi-preconditioned
/// conjugate gradients to relative residual tol. Complex data is solved as
/// two independent real problems. Requires h <= diameter/64 and an
/// equispaced curve. Throws numeric_error on a disconnected mask or a
/// non-convergent solve.
HarmonicSolution solve_interior(const JordanCurve& curve,
                                const CurveFunction& f, double h,
                                double tol = 1e-8);

EnergyResult interior_energy_grid(const JordanCurve& curve,
                                  const CurveFunction& f, double h,
                                  double tol = 1e-8);

/// Energy of the harmonic extension to the exterior: the curve and samples
/// are pushed through the reflection z -> 1/conj(z) (after translating the
/// centroid to the origin), re-equispaced, and solved as an interior
/// problem; h and tol apply to the reflected grid. Requires the centroid to
/// lie in the interior.
EnergyResult exterior_energy_grid(const JordanCurve& curve,
                                  const CurveFunction& f, double h,
                                  double tol = 1e-8);

/// Trapezoid quadrature of the Poisson integral of equispaced circle
/// samples at a point z with |z| <= 1 - 1e-6.
Complex poisson_extend_disk(const CurveFunction& circle_samples, Complex z);

/// Midpoint quadrature of (1/pi) * integral over the interior of
/// |z - pole|^-4; the reference value for the interior energy of
/// f(z) = 1/(z - pole). The pole must be exterior, at distance >= 4h.
double analytic_energy_oracle(const JordanCurve& curve, Complex pole,
                              double h);

}  // namespace curvenorm
