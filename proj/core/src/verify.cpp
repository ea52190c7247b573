#include "curvenorm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "curvenorm/fft.hpp"
#include "curvenorm/harmonic.hpp"
#include "curvenorm/mobius.hpp"
#include "curvenorm/regularity.hpp"
#include "curvenorm/seminorm.hpp"
#include "curvenorm/zoo.hpp"

namespace curvenorm {

namespace {

std::string complex_str(Complex z) {
  std::ostringstream out;
  out << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return out.str();
}

double cross(Complex a, Complex b) {
  return a.real() * b.imag() - a.imag() * b.real();
}

// Independent point-location oracle: parity of crossings along a fixed
// tilted ray, deliberately a different algorithm from the winding-number
// classifier it cross-checks.
bool crossing_parity_inside(const JordanCurve& curve, Complex w) {
  const Complex dir{0.9238795325112867, 0.3826834323650898};
  const int n = curve.size();
  int crossings = 0;
  for (int i = 0; i < n; ++i) {
    const Complex a = curve.node(i);
    const Complex b = curve.node((i + 1) % n);
    const double denom = cross(b - a, dir);
    if (denom == 0.0) continue;
    const double s = cross(w - a, dir) / denom;
    const double t = -cross(b - a, w - a) / denom;
    if (s >= 0.0 && s < 1.0 && t > 0.0) ++crossings;
  }
  return (crossings % 2) == 1;
}

struct Suite {
  VerifyReport report;

  void add(const std::string& name, bool pass, double observed, double bound,
           const std::string& witness) {
    report.checks.push_back({name, pass, observed, bound, witness});
    report.all_pass = report.all_pass && pass;
  }
};

// A far exterior point and, when one exists, a deep interior point; both at
// a healthy distance so Mobius round trips stay well conditioned.
std::vector<Complex> safe_inversion_points(const JordanCurve& curve) {
  std::vector<Complex> pts;
  const double diam = curve.diameter();
  pts.push_back(curve.centroid() + Complex{1.1, 0.9} * diam);
  const Complex c = curve.centroid();
  if (distance_to_curve(curve, c) >= 0.25 * diam) pts.push_back(c);
  return pts;
}

}  // namespace

VerifyReport verify_curve(const JordanCurve& curve,
                          const VerifyOptions& options) {
  if (!curve.is_equispaced())
    throw std::invalid_argument("verify: resample required");
  if (!is_power_of_two(curve.size()))
    throw std::invalid_argument("verify: node count must be a power of two");

  Suite suite;
  const int n = curve.size();
  const double diam = curve.diameter();
  const double slack = options.slack;

  // --- geometry ---------------------------------------------------------

  {  // shorter arc dominates the chord for every node pair
    long long violations = 0;
    std::string witness = "none";
    const int stride = n > 2048 ? n / 2048 : 1;
    for (int i = 0; i < n; i += stride) {
      for (int j = i + stride; j < n; j += stride) {
        const double arc = shorter_arc_length(curve, i, j);
        const double chord = std::abs(curve.node(j) - curve.node(i));
        if (arc < chord * (1.0 - 1e-12)) {
          if (violations == 0)
            witness = "(i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")";
          ++violations;
        }
      }
    }
    suite.add("curve.arc_dominates_chord", violations == 0,
              static_cast<double>(violations), 0.0, witness);
  }

  {  // Mobius round trip returns to the curve
    const JordanCurve base =
        n > 512 ? resample_arclength(curve, 512, JordanCurve::Simplicity::trust)
                : curve;
    std::vector<MobiusTransform> ts;
    ts.push_back(MobiusTransform::similarity(Complex{1.3, 0.2}, Complex{0.5, -1.0}));
    for (const Complex& w : safe_inversion_points(base))
      ts.push_back(MobiusTransform::inversion_about(w));
    double worst = 0.0;
    std::string witness;
    for (size_t t = 0; t < ts.size(); ++t) {
      const JordanCurve image = apply_mobius(ts[t], base, options.refine);
      const JordanCurve back = apply_mobius(ts[t].inverse(), image, options.refine);
      const double dist = hausdorff_distance(base, back);
      if (dist > worst) {
        worst = dist;
        witness = "transform " + std::to_string(t);
      }
    }
    suite.add("curve.mobius_roundtrip", worst <= 1e-6 * base.diameter(), worst,
              1e-6 * base.diameter(), witness);
  }

  {  // interior classification against the crossing-parity oracle
    std::mt19937_64 rng(options.seed);
    double x_lo = curve.node(0).real(), x_hi = x_lo;
    double y_lo = curve.node(0).imag(), y_hi = y_lo;
    for (const Complex& z : curve.nodes()) {
      x_lo = std::min(x_lo, z.real());
      x_hi = std::max(x_hi, z.real());
      y_lo = std::min(y_lo, z.imag());
      y_hi = std::max(y_hi, z.imag());
    }
    const double pad = 0.1 * diam;
    std::uniform_real_distribution<double> ux(x_lo - pad, x_hi + pad);
    std::uniform_real_distribution<double> uy(y_lo - pad, y_hi + pad);
    int disagreements = 0, tested = 0;
    std::string witness = "none";
    while (tested < 1000) {
      const Complex w{ux(rng), uy(rng)};
      if (distance_to_curve(curve, w) < 1e-9 * diam) continue;
      ++tested;
      if (point_in_interior(curve, w) != crossing_parity_inside(curve, w)) {
        if (disagreements == 0) witness = complex_str(w);
        ++disagreements;
      }
    }
    suite.add("curve.point_location_oracle", disagreements == 0,
              static_cast<double>(disagreements), 0.0, witness);
  }

  {  // spherical length is invariant under sphere isometries
    const double base_len = spherical_length(curve);
    double worst = 0.0;
    std::string witness;
    const JordanCurve rotated = apply_mobius(
        MobiusTransform::similarity(std::polar(1.0, kPi / 5.0), Complex{0, 0}),
        curve, 1);
    const double rot_err = std::abs(spherical_length(rotated) - base_len) / base_len;
    if (rot_err > worst) {
      worst = rot_err;
      witness = "rotation";
    }
    MobiusTransform sphere_rot = MobiusTransform::reciprocal();
    bool have_rot = distance_to_curve(curve, Complex{0, 0}) >= 0.05 * diam;
    if (!have_rot) {
      for (double phi : {0.3, 0.6, 1.0, 1.3}) {
        const MobiusTransform t(Complex{std::cos(phi), 0}, Complex{-std::sin(phi), 0},
                                Complex{std::sin(phi), 0}, Complex{std::cos(phi), 0});
        if (distance_to_curve(curve, t.pole()) >= 0.05 * diam) {
          sphere_rot = t;
          have_rot = true;
          break;
        }
      }
    }
    if (have_rot) {
      const double len =
          spherical_length(apply_mobius(sphere_rot, curve, options.refine));
      const double err = std::abs(len - base_len) / base_len;
      if (err > worst) {
        worst = err;
        witness = "sphere rotation";
      }
    }
    suite.add("curve.slength_isometry", worst <= 1e-3, worst, 1e-3, witness);
  }

  // --- regularity constants ----------------------------------------------

  const JordanCurve curve_2pi = normalize_to_length(curve);
  const ChordArcResult chord = chord_arc_constant(curve_2pi);
  const AhlforsResult ahlfors = ahlfors_constant(curve_2pi);
  const auto cloud = witness_cloud(curve_2pi);
  const auto transforms = default_transform_set(curve_2pi, cloud, 32, options.seed);
  const SphericalSupResult sup =
      spherical_supremum(curve_2pi, transforms, options.refine);
  const InversionBoundResult inversion =
      inversion_bound_constant(curve_2pi, cloud, options.refine);

  {  // enlarging the sample sets can only grow the estimates
    bool pass = true;
    std::string witness = "none";

    double strided = 0.0;
    for (int i = 0; i < n; i += 2)
      for (int j = i + 2; j < n; j += 2)
        strided = std::max(strided,
                           shorter_arc_length(curve_2pi, i, j) /
                               std::abs(curve_2pi.node(j) - curve_2pi.node(i)));
    if (strided > chord.constant * (1.0 + 1e-12)) {
      pass = false;
      witness = "chord_arc";
    }
    const double m_half = ahlfors_constant(curve_2pi, 4).constant;
    if (m_half > ahlfors.constant * (1.0 + 1e-12)) {
      pass = false;
      witness = "ahlfors";
    }
    const auto cloud_half = witness_cloud(curve_2pi, 64, 4);
    const double c_half =
        inversion_bound_constant(curve_2pi, cloud_half, options.refine).constant;
    if (c_half > inversion.constant * (1.0 + 1e-12)) {
      pass = false;
      witness = "inversion";
    }
    const auto transforms_half =
        default_transform_set(curve_2pi, cloud_half, 16, options.seed);
    const double k_half =
        spherical_supremum(curve_2pi, transforms_half, options.refine).constant;
    if (k_half > sup.constant * (1.0 + 1e-12)) {
      pass = false;
      witness = "slength";
    }
    suite.add("regularity.budget_monotonicity", pass, pass ? 0.0 : 1.0, 0.0,
              witness);
  }

  {  // chord-arc constant is similarity invariant
    const JordanCurve mapped = apply_mobius(
        MobiusTransform::similarity(Complex{2.0, 0.0}, Complex{0.0, 1.0}),
        curve_2pi, 1);
    const double k_mapped = chord_arc_constant(mapped).constant;
    const double err = std::abs(k_mapped - chord.constant) / chord.constant;
    suite.add("regularity.chord_arc_similarity", err <= 1e-10, err, 1e-10,
              "K=" + std::to_string(chord.constant));
  }

  {  // disk-capture constant is similarity invariant (within sampling noise)
    const JordanCurve mapped = apply_mobius(
        MobiusTransform::similarity(Complex{2.0, 0.0}, Complex{0.0, 1.0}),
        curve_2pi, 1);
    const double m_mapped = ahlfors_constant(mapped).constant;
    const double ratio = m_mapped / ahlfors.constant;
    suite.add("regularity.ahlfors_similarity_ratio",
              ratio >= 0.98 && ratio <= 1.02, ratio, 1.02, "similarity 2z+i");
  }

  {  // Mobius images stay regular with at most the 12x factor
    std::vector<MobiusTransform> sample;
    sample.push_back(MobiusTransform::identity());
    sample.push_back(MobiusTransform::similarity(Complex{2.0, 0.0}, Complex{0.0, 1.0}));
    for (const Complex& w : safe_inversion_points(curve_2pi))
      sample.push_back(MobiusTransform::inversion_about(w));
    const auto randoms = random_transforms(curve_2pi, 3, options.seed + 1, 10.0,
                                           0.05 * curve_2pi.diameter());
    sample.insert(sample.end(), randoms.begin(), randoms.end());
    const auto report = mobius_invariance_report(
        curve_2pi, ahlfors.constant, sample, options.refine, 8, slack);
    double worst = 0.0;
    int worst_index = 0;
    for (const auto& row : report.rows)
      if (row.ratio > worst) {
        worst = row.ratio;
        worst_index = row.transform_index;
      }
    suite.add("regularity.mobius_12m_bound", !report.any_flagged, worst,
              12.0 * (1.0 + slack), "transform " + std::to_string(worst_index));
  }

  {  // spherical supremum against the disk-capture constant
    const double bound = 60.0 * ahlfors.constant * (1.0 + slack);
    suite.add("regularity.slength_le_60m", sup.constant <= bound, sup.constant,
              bound, "transform " + std::to_string(sup.witness_index));
  }

  {  // inversion image lengths against the spherical supremum
    const double bound = 2.0 * sup.constant * (1.0 + slack);
    suite.add("regularity.inversion_le_2ks", inversion.constant <= bound,
              inversion.constant, bound, complex_str(inversion.witness));
  }

  // --- seminorms -----------------------------------------------------------

  const auto function_specs = canonical_functions(curve_2pi);
  std::vector<CurveFunction> functions;
  functions.reserve(function_specs.size());
  for (const auto& spec : function_specs)
    functions.push_back(make_function(spec, curve_2pi));

  {  // sine-chord bounds for the arc-length parametrization
    long long violations = 0;
    std::string witness = "none";
    const double k_inv = 2.0 / chord.constant;
    const int stride = n > 2048 ? n / 2048 : 1;
    for (int i = 0; i < n; i += stride) {
      for (int j = i + stride; j < n; j += stride) {
        const double ds = curve_2pi.cumlen(j) - curve_2pi.cumlen(i);
        const double sine = std::abs(std::sin(0.5 * ds));
        const double dist = std::abs(curve_2pi.node(j) - curve_2pi.node(i));
        const bool ok = k_inv * sine <= dist * (1.0 + 1e-9) &&
                        dist <= kPi * sine * (1.0 + 1e-9);
        if (!ok) {
          if (violations == 0)
            witness = "(i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")";
          ++violations;
        }
      }
    }
    suite.add("seminorm.arclength_sine_bounds", violations == 0,
              static_cast<double>(violations), 0.0, witness);
  }

  {  // Parseval identity of the discrete spectrum
    const CurveFunction& probe = functions.back();
    const FourierSpectrum spec = fourier_spectrum(probe.values);
    double lhs = 0.0, rhs = 0.0;
    for (const Complex& c : spec.coeff) lhs += std::norm(c);
    for (const Complex& v : probe.values) rhs += std::norm(v);
    rhs /= static_cast<double>(probe.values.size());
    const double err = std::abs(lhs - rhs) / std::max(rhs, 1e-300);
    suite.add("seminorm.parseval", err <= 1e-10, err, 1e-10, probe.label);
  }

  {  // adding a constant leaves both seminorms unchanged
    const CurveFunction& f = functions[3];  // coordinate
    CurveFunction shifted = f;
    for (Complex& v : shifted.values) v += Complex{2.5, -1.25};
    const double a = douglas_seminorm(curve_2pi, f).value_sq;
    const double b = douglas_seminorm(curve_2pi, shifted).value_sq;
    const double sa = circle_seminorm_spectral(pullback_arclength(curve_2pi, f)).value_sq;
    const double sb =
        circle_seminorm_spectral(pullback_arclength(curve_2pi, shifted)).value_sq;
    const double err =
        std::max(std::abs(a - b) / a, std::abs(sa - sb) / std::max(sa, 1e-300));
    suite.add("seminorm.shift_invariance", err <= 1e-9, err, 1e-9, f.label);
  }

  {  // scaling the samples scales the squared seminorm quadratically
    const CurveFunction& f = functions[0];
    const Complex lambda{1.5, -0.5};
    CurveFunction scaled = f;
    for (Complex& v : scaled.values) v *= lambda;
    const double a = douglas_seminorm(curve_2pi, f).value_sq;
    const double b = douglas_seminorm(curve_2pi, scaled).value_sq;
    const double err = std::abs(b - std::norm(lambda) * a) / b;
    suite.add("seminorm.scaling_quadratic", err <= 1e-12, err, 1e-12, f.label);
  }

  {  // ratio bracket between the curve seminorm and its circle pullback
    const auto eq = equivalence_report(curve_2pi, functions, chord.constant, slack);
    double worst_low = 1e300, worst_high = 0.0;
    std::string witness = "none";
    bool lower_ok = true;
    for (const auto& row : eq.rows) {
      worst_low = std::min(worst_low, row.ratio);
      worst_high = std::max(worst_high, row.ratio);
      if (!row.in_bracket && witness == "none") witness = row.function;
      if (row.ratio < eq.lower_bound) lower_ok = false;
    }
    suite.add("seminorm.ratio_bracket", eq.all_in_bracket, worst_high,
              eq.upper_bound, witness);
    suite.add("seminorm.ratio_lower_bound", lower_ok, worst_low, eq.lower_bound,
              witness);
  }

  if (n >= 4096) {  // doubling the sampling changes the value by <= 2%
    const JordanCurve coarse =
        resample_arclength(curve_2pi, n / 2, JordanCurve::Simplicity::trust);
    double worst = 0.0;
    std::string witness;
    for (size_t fi : {size_t{0}, size_t{3}, size_t{4}}) {  // Lipschitz probes
      const auto& spec = function_specs[fi];
      const CurveFunction f_fine = make_function(spec, curve_2pi);
      const CurveFunction f_coarse = make_function(spec, coarse);
      const double fine = douglas_seminorm(curve_2pi, f_fine).value_sq;
      const double coarse_v = douglas_seminorm(coarse, f_coarse).value_sq;
      const double delta = std::abs(fine - coarse_v) / fine;
      if (delta > worst) {
        worst = delta;
        witness = f_fine.label;
      }
    }
    suite.add("seminorm.refinement_2pct", worst <= 0.02, worst, 0.02, witness);
  }

  // --- grid energies -------------------------------------------------------

  if (options.energy_checks) {
    const CurveFunction mode1 = make_function({"fourier_mode", {{"k", 1.0}}}, curve);

    {  // each solved cell is a local minimum of the discrete energy
      const double h = diam / 80.0;
      const HarmonicSolution sol = solve_interior(curve, mode1, h, options.tol);
      const HarmonicGridField& g = sol.field;
      std::vector<size_t> interior_cells;
      for (size_t idx = 0; idx < g.mask.size(); ++idx)
        if (g.mask[idx] == CellKind::interior) interior_cells.push_back(idx);
      std::mt19937_64 rng(options.seed + 7);
      std::uniform_int_distribution<size_t> pick(0, interior_cells.size() - 1);
      bool pass = !interior_cells.empty();
      std::string witness = "none";
      const double eps = h * h;
      const int off[4] = {1, -1, g.nx, -g.nx};
      for (int trial = 0; trial < 100 && pass; ++trial) {
        const size_t idx = interior_cells[pick(rng)];
        double grad_re = 0.0;
        double deg = 0.0;
        for (int d : off) {
          const size_t nb = idx + static_cast<size_t>(d);
          if (g.mask[nb] == CellKind::exterior) continue;
          deg += 1.0;
          grad_re += g.values[idx].real() - g.values[nb].real();
        }
        for (double sign : {1.0, -1.0}) {
          const double delta = deg * eps * eps + 2.0 * sign * eps * grad_re;
          if (delta <= 0.0) {
            pass = false;
            witness = "cell " + std::to_string(idx);
          }
        }
      }
      suite.add("harmonic.minimality", pass, pass ? 1.0 : 0.0, 0.0, witness);
    }

    {  // energy increments shrink as the grid is refined
      const double h0 = diam / 64.0;
      const double e0 = interior_energy_grid(curve, mode1, h0, options.tol).energy;
      const double e1 = interior_energy_grid(curve, mode1, h0 / 2, options.tol).energy;
      const double e2 = interior_energy_grid(curve, mode1, h0 / 4, options.tol).energy;
      const double d1 = std::abs(e1 - e0);
      const double d2 = std::abs(e2 - e1);
      suite.add("harmonic.energy_halving", d2 <= d1, d2, d1,
                "E=" + std::to_string(e0) + "," + std::to_string(e1) + "," +
                    std::to_string(e2));
    }

    // On a circle all three quantities coincide, so compare them directly.
    double mean_r = 0.0;
    for (const Complex& z : curve.nodes()) mean_r += std::abs(z - curve.centroid());
    mean_r /= n;
    bool is_circle = true;
    for (const Complex& z : curve.nodes())
      if (std::abs(std::abs(z - curve.centroid()) - mean_r) > 1e-9 * mean_r) {
        is_circle = false;
        break;
      }
    if (is_circle) {
      const double spectral = circle_seminorm_spectral(mode1).value_sq;
      const double h = diam / 200.0;
      const double ei = interior_energy_grid(curve, mode1, h, options.tol).energy;
      const double ee = exterior_energy_grid(curve, mode1, h, options.tol).energy;
      const double err = std::max(std::abs(ei - spectral), std::abs(ee - spectral)) /
                         spectral;
      suite.add("harmonic.circle_three_norms", err <= 0.05, err, 0.05,
                "interior/exterior vs spectral");
    }
  }

  return suite.report;
}

}  // namespace curvenorm
