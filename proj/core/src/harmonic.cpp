#include "curvenorm/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace curvenorm {

namespace {

struct MaskBuild {
  HarmonicGridField field;
  std::vector<double> near_dist;    // distance to curve where < 2h, else inf
  std::vector<Complex> near_value;  // f at the nearest curve point
};

// Parity classification of cell centers, one sweep line per grid row.
std::vector<bool> classify_inside(const JordanCurve& curve,
                                  const HarmonicGridField& g) {
  std::vector<bool> inside(static_cast<size_t>(g.nx) * g.ny, false);
  const int n = curve.size();
  std::vector<double> xs;
  for (int iy = 0; iy < g.ny; ++iy) {
    const double y = g.origin.imag() + (iy + 0.5) * g.h;
    xs.clear();
    for (int i = 0; i < n; ++i) {
      const Complex a = curve.node(i);
      const Complex b = curve.node((i + 1) % n);
      if ((a.imag() <= y) != (b.imag() <= y))
        xs.push_back(a.real() +
                     (y - a.imag()) * (b.real() - a.real()) /
                         (b.imag() - a.imag()));
    }
    std::sort(xs.begin(), xs.end());
    for (size_t k = 0; k + 1 < xs.size(); k += 2) {
      // centers strictly between consecutive crossings are interior
      const double x0 = xs[k], x1 = xs[k + 1];
      int ix_lo = static_cast<int>(
          std::ceil((x0 - g.origin.real()) / g.h - 0.5 + 1e-12));
      int ix_hi = static_cast<int>(
          std::floor((x1 - g.origin.real()) / g.h - 0.5 - 1e-12));
      ix_lo = std::max(ix_lo, 0);
      ix_hi = std::min(ix_hi, g.nx - 1);
      for (int ix = ix_lo; ix <= ix_hi; ++ix) inside[g.index(ix, iy)] = true;
    }
  }
  return inside;
}

// Distance to the curve and the boundary value for every cell within 2h of
// some segment, by walking each segment's inflated bounding box.
void rasterize_near_curve(const JordanCurve& curve, const CurveFunction& f,
                          MaskBuild& mb) {
  HarmonicGridField& g = mb.field;
  const int n = curve.size();
  const double reach = 2.0 * g.h;
  mb.near_dist.assign(g.mask.size(), std::numeric_limits<double>::infinity());
  mb.near_value.assign(g.mask.size(), Complex{0.0, 0.0});

  for (int i = 0; i < n; ++i) {
    const Complex a = curve.node(i);
    const Complex b = curve.node((i + 1) % n);
    const Complex va = f.values[static_cast<size_t>(i)];
    const Complex vb = f.values[static_cast<size_t>((i + 1) % n)];
    const double x_lo = std::min(a.real(), b.real()) - reach;
    const double x_hi = std::max(a.real(), b.real()) + reach;
    const double y_lo = std::min(a.imag(), b.imag()) - reach;
    const double y_hi = std::max(a.imag(), b.imag()) + reach;
    const int ix_lo = std::max(0, static_cast<int>(std::floor((x_lo - g.origin.real()) / g.h - 0.5)));
    const int ix_hi = std::min(g.nx - 1, static_cast<int>(std::ceil((x_hi - g.origin.real()) / g.h - 0.5)));
    const int iy_lo = std::max(0, static_cast<int>(std::floor((y_lo - g.origin.imag()) / g.h - 0.5)));
    const int iy_hi = std::min(g.ny - 1, static_cast<int>(std::ceil((y_hi - g.origin.imag()) / g.h - 0.5)));

    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    for (int iy = iy_lo; iy <= iy_hi; ++iy) {
      for (int ix = ix_lo; ix <= ix_hi; ++ix) {
        const Complex p = g.cell_center(ix, iy);
        const double t = len2 == 0.0
                             ? 0.0
                             : std::clamp(((p - a).real() * ab.real() +
                                           (p - a).imag() * ab.imag()) /
                                              len2,
                                          0.0, 1.0);
        const Complex foot = a + t * ab;
        const double dist = std::abs(p - foot);
        if (dist > reach) continue;
        const size_t idx = g.index(ix, iy);
        if (dist < mb.near_dist[idx]) {
          mb.near_dist[idx] = dist;
          mb.near_value[idx] = va + t * (vb - va);
        }
      }
    }
  }
}

MaskBuild build_mask(const JordanCurve& curve, const CurveFunction& f,
                     double h) {
  MaskBuild mb;
  HarmonicGridField& g = mb.field;
  g.h = h;
  double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
  double y_lo = x_lo, y_hi = -x_lo;
  for (const Complex& z : curve.nodes()) {
    x_lo = std::min(x_lo, z.real());
    x_hi = std::max(x_hi, z.real());
    y_lo = std::min(y_lo, z.imag());
    y_hi = std::max(y_hi, z.imag());
  }
  g.origin = Complex{x_lo - 2.0 * h, y_lo - 2.0 * h};
  g.nx = static_cast<int>(std::ceil((x_hi - x_lo + 4.0 * h) / h)) + 1;
  g.ny = static_cast<int>(std::ceil((y_hi - y_lo + 4.0 * h) / h)) + 1;
  g.mask.assign(static_cast<size_t>(g.nx) * g.ny, CellKind::exterior);
  g.values.assign(g.mask.size(), Complex{0.0, 0.0});

  const auto inside = classify_inside(curve, g);
  rasterize_near_curve(curve, f, mb);

  for (int iy = 0; iy < g.ny; ++iy) {
    for (int ix = 0; ix < g.nx; ++ix) {
      const size_t idx = g.index(ix, iy);
      if (!inside[idx]) continue;
      if (mb.near_dist[idx] <= h) {
        g.mask[idx] = CellKind::boundary;
        g.values[idx] = mb.near_value[idx];
      } else {
        g.mask[idx] = CellKind::interior;
      }
    }
  }

  // Interior cells may not touch exterior ones; a cell straddling the gap
  // is pinned if the curve was seen nearby, otherwise the grid cannot
  // resolve the domain.
  for (int iy = 0; iy < g.ny; ++iy) {
    for (int ix = 0; ix < g.nx; ++ix) {
      const size_t idx = g.index(ix, iy);
      if (g.mask[idx] != CellKind::interior) continue;
      const bool touches_exterior =
          (ix == 0 || g.kind(ix - 1, iy) == CellKind::exterior) ||
          (ix == g.nx - 1 || g.kind(ix + 1, iy) == CellKind::exterior) ||
          (iy == 0 || g.kind(ix, iy - 1) == CellKind::exterior) ||
          (iy == g.ny - 1 || g.kind(ix, iy + 1) == CellKind::exterior);
      if (!touches_exterior) continue;
      if (std::isfinite(mb.near_dist[idx])) {
        g.mask[idx] = CellKind::boundary;
        g.values[idx] = mb.near_value[idx];
      } else {
        throw numeric_error("mask disconnected");
      }
    }
  }
  return mb;
}

struct CgOutcome {
  int iterations = 0;
  double residual = 0.0;
};

// Minimizes sum over domain pairs (V_a - V_b)^2 over the interior cells of
// one real component. The operator is the graph Laplacian of the
// interior+boundary grid graph restricted to interior cells.
CgOutcome cg_solve_component(HarmonicGridField& g,
                             const std::vector<double>& boundary,
                             std::vector<double>& solution, double tol) {
  const int nx = g.nx, ny = g.ny;
  std::vector<int> unknown_of(g.mask.size(), -1);
  std::vector<int> cells;
  for (int iy = 0; iy < ny; ++iy)
    for (int ix = 0; ix < nx; ++ix) {
      const size_t idx = g.index(ix, iy);
      if (g.mask[idx] == CellKind::interior) {
        unknown_of[idx] = static_cast<int>(cells.size());
        cells.push_back(static_cast<int>(idx));
      }
    }
  const size_t m = cells.size();
  solution.assign(g.mask.size(), 0.0);
  for (size_t idx = 0; idx < g.mask.size(); ++idx)
    if (g.mask[idx] == CellKind::boundary) solution[idx] = boundary[idx];
  if (m == 0) return {0, 0.0};

  std::vector<double> deg(m, 0.0), rhs(m, 0.0);
  const int off[4] = {1, -1, nx, -nx};
  for (size_t u = 0; u < m; ++u) {
    const int idx = cells[u];
    for (int d : off) {
      const int nb = idx + d;
      if (g.mask[static_cast<size_t>(nb)] == CellKind::exterior) continue;
      deg[u] += 1.0;
      if (g.mask[static_cast<size_t>(nb)] == CellKind::boundary)
        rhs[u] += boundary[static_cast<size_t>(nb)];
    }
  }

  auto apply = [&](const std::vector<double>& x, std::vector<double>& out) {
    for (size_t u = 0; u < m; ++u) {
      const int idx = cells[u];
      double acc = deg[u] * x[u];
      for (int d : off) {
        const int nb = idx + d;
        const int v = unknown_of[static_cast<size_t>(nb)];
        if (v >= 0) acc -= x[static_cast<size_t>(v)];
      }
      out[u] = acc;
    }
  };
  auto dot_product = [&](const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (size_t u = 0; u < m; ++u) acc += a[u] * b[u];
    return acc;
  };

  std::vector<double> x(m, 0.0), r = rhs, z(m), p(m), ap(m);
  const double b_norm = std::sqrt(dot_product(rhs, rhs));
  CgOutcome outcome;
  if (b_norm == 0.0) {
    for (size_t u = 0; u < m; ++u) solution[static_cast<size_t>(cells[u])] = 0.0;
    return outcome;
  }
  for (size_t u = 0; u < m; ++u) z[u] = r[u] / deg[u];
  p = z;
  double rz = dot_product(r, z);
  const int max_iter =
      static_cast<int>(20.0 * std::sqrt(static_cast<double>(m)) * 10.0) + 10;
  double res = 1.0;
  int k = 0;
  for (; k < max_iter; ++k) {
    apply(p, ap);
    const double alpha = rz / dot_product(p, ap);
    for (size_t u = 0; u < m; ++u) x[u] += alpha * p[u];
    for (size_t u = 0; u < m; ++u) r[u] -= alpha * ap[u];
    res = std::sqrt(dot_product(r, r)) / b_norm;
    if (res <= tol) {
      ++k;
      break;
    }
    for (size_t u = 0; u < m; ++u) z[u] = r[u] / deg[u];
    const double rz_next = dot_product(r, z);
    const double beta = rz_next / rz;
    for (size_t u = 0; u < m; ++u) p[u] = z[u] + beta * p[u];
    rz = rz_next;
  }
  if (res > tol) {
    throw numeric_error("conjugate gradient did not converge: residual " +
                        std::to_string(res) + " after " +
                        std::to_string(max_iter) + " iterations");
  }
  for (size_t u = 0; u < m; ++u) solution[static_cast<size_t>(cells[u])] = x[u];
  outcome.iterations = k;
  outcome.residual = res;
  return outcome;
}

void require_solver_inputs(const JordanCurve& curve, const CurveFunction& f,
                           double h) {
  if (!(h > 0.0)) throw std::invalid_argument("grid energy: h must be positive");
  if (h > curve.diameter() / 64.0)
    throw std::invalid_argument("grid energy: h must be at most diameter/64");
  if (!curve.is_equispaced())
    throw std::invalid_argument("resample required");
  if (static_cast<int>(f.values.size()) != curve.size())
    throw std::invalid_argument("curve/function sample count mismatch");
  for (const Complex& v : f.values)
    if (!is_finite(v)) throw std::invalid_argument("non-finite function sample");
}

}  // namespace

double grid_energy(const HarmonicGridField& g) {
  double acc = 0.0;
  for (int iy = 0; iy < g.ny; ++iy) {
    for (int ix = 0; ix < g.nx; ++ix) {
      if (g.kind(ix, iy) == CellKind::exterior) continue;
      const Complex v = g.value(ix, iy);
      if (ix + 1 < g.nx && g.kind(ix + 1, iy) != CellKind::exterior)
        acc += std::norm(g.value(ix + 1, iy) - v);
      if (iy + 1 < g.ny && g.kind(ix, iy + 1) != CellKind::exterior)
        acc += std::norm(g.value(ix, iy + 1) - v);
    }
  }
  return acc / kTwoPi;
}

HarmonicSolution solve_interior(const JordanCurve& curve,
                                const CurveFunction& f, double h, double tol) {
  require_solver_inputs(curve, f, h);
  MaskBuild mb = build_mask(curve, f, h);
  HarmonicGridField& g = mb.field;

  bool has_imag = false;
  for (const Complex& v : f.values)
    if (v.imag() != 0.0) {
      has_imag = true;
      break;
    }

  std::vector<double> boundary_re(g.mask.size(), 0.0);
  std::vector<double> boundary_im(g.mask.size(), 0.0);
  for (size_t idx = 0; idx < g.mask.size(); ++idx) {
    if (g.mask[idx] == CellKind::boundary) {
      boundary_re[idx] = g.values[idx].real();
      boundary_im[idx] = g.values[idx].imag();
    }
  }

  std::vector<double> sol_re, sol_im;
  const CgOutcome out_re = cg_solve_component(g, boundary_re, sol_re, tol);
  CgOutcome out_im;
  if (has_imag) out_im = cg_solve_component(g, boundary_im, sol_im, tol);

  for (size_t idx = 0; idx < g.mask.size(); ++idx) {
    if (g.mask[idx] == CellKind::exterior) continue;
    g.values[idx] = Complex{sol_re[idx], has_imag ? sol_im[idx] : 0.0};
  }

  HarmonicSolution solution;
  solution.result.h = h;
  solution.result.iterations = std::max(out_re.iterations, out_im.iterations);
  solution.result.residual = std::max(out_re.residual, out_im.residual);
  solution.field = std::move(mb.field);
  solution.result.energy = grid_energy(solution.field);
  return solution;
}

EnergyResult interior_energy_grid(const JordanCurve& curve,
                                  const CurveFunction& f, double h,
                                  double tol) {
  return solve_interior(curve, f, h, tol).result;
}

EnergyResult exterior_energy_grid(const JordanCurve& curve,
                                  const CurveFunction& f, double h,
                                  double tol) {
  if (static_cast<int>(f.values.size()) != curve.size())
    throw std::invalid_argument("curve/function sample count mismatch");
  const Complex c = curve.centroid();
  const JordanCurve moved = translate_and_scale(curve, -c, 1.0);
  if (!point_in_interior(moved, Complex{0.0, 0.0}))
    throw numeric_error("no interior basepoint");

  constexpr int kRefine = 8;
  const int n = moved.size();
  std::vector<Complex> pts;
  std::vector<Complex> vals;
  pts.reserve(static_cast<size_t>(n) * kRefine);
  vals.reserve(pts.capacity());
  for (int i = 0; i < n; ++i) {
    const Complex a = moved.node(i);
    const Complex b = moved.node((i + 1) % n);
    const Complex va = f.values[static_cast<size_t>(i)];
    const Complex vb = f.values[static_cast<size_t>((i + 1) % n)];
    for (int k = 0; k < kRefine; ++k) {
      const double t = static_cast<double>(k) / kRefine;
      const Complex z = a + t * (b - a);
      const Complex w = 1.0 / std::conj(z);  // reflection across the unit circle
      if (!pts.empty() && w == pts.back()) continue;
      pts.push_back(w);
      vals.push_back(va + t * (vb - va));
    }
  }
  auto [reflected, reflected_f] =
      resample_with_values(pts, vals, n, f.label.empty() ? "reflected" : f.label + ".reflected");
  return interior_energy_grid(reflected, reflected_f, h, tol);
}

Complex poisson_extend_disk(const CurveFunction& circle_samples, Complex z) {
  if (std::abs(z) > 1.0 - 1e-6) throw numeric_error("near-boundary evaluation");
  const int n = static_cast<int>(circle_samples.values.size());
  if (n < 8) throw std::invalid_argument("poisson: at least 8 samples");
  const double one_minus = 1.0 - std::norm(z);
  Complex acc{0.0, 0.0};
  for (int j = 0; j < n; ++j) {
    const double theta = kTwoPi * j / n;
    const Complex w{std::cos(theta), std::sin(theta)};
    acc += circle_samples.values[static_cast<size_t>(j)] * (one_minus / std::norm(w - z));
  }
  return acc / static_cast<double>(n);
}

double analytic_energy_oracle(const JordanCurve& curve, Complex pole,
                              double h) {
  if (!(h > 0.0)) throw std::invalid_argument("oracle: h must be positive");
  const double dist = distance_to_curve(curve, pole);
  if (dist < 4.0 * h)
    throw std::invalid_argument("oracle: pole closer than 4h to the curve");
  if (point_in_interior(curve, pole))
    throw numeric_error("oracle: pole must be exterior");

  HarmonicGridField g;
  g.h = h;
  double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
  double y_lo = x_lo, y_hi = -x_lo;
  for (const Complex& z : curve.nodes()) {
    x_lo = std::min(x_lo, z.real());
    x_hi = std::max(x_hi, z.real());
    y_lo = std::min(y_lo, z.imag());
    y_hi = std::max(y_hi, z.imag());
  }
  g.origin = Complex{x_lo - 2.0 * h, y_lo - 2.0 * h};
  g.nx = static_cast<int>(std::ceil((x_hi - x_lo + 4.0 * h) / h)) + 1;
  g.ny = static_cast<int>(std::ceil((y_hi - y_lo + 4.0 * h) / h)) + 1;
  g.mask.assign(static_cast<size_t>(g.nx) * g.ny, CellKind::exterior);

  const auto inside = classify_inside(curve, g);
  double acc = 0.0;
  for (int iy = 0; iy < g.ny; ++iy)
    for (int ix = 0; ix < g.nx; ++ix)
      if (inside[g.index(ix, iy)]) {
        const Complex d = g.cell_center(ix, iy) - pole;
        acc += 1.0 / (std::norm(d) * std::norm(d));
      }
  return acc * h * h / kPi;
}

}  // namespace curvenorm
